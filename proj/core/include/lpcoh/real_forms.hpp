#ifndef LPCOH_REAL_FORMS_HPP
#define LPCOH_REAL_FORMS_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lpcoh/root_system.hpp"

namespace lpcoh {

/// Families of non-compact simple real Lie groups, one value per
/// classification case (split exceptional and non-admissible exceptional
/// forms are enumerated individually).
enum class Family {
  SL_R,     // SL(n,R), n >= 2
  SL_H,     // SL(n,H), n >= 2
  SU,       // SU(p,q), 1 <= p <= q
  Sp_R,     // Sp(2n,R), n >= 1
  Sp_PQ,    // Sp(p,q), 1 <= p <= q
  SO,       // SO(p,q), 1 <= p <= q, non-compact, simple
  SO_Star,  // SO*(2r), r >= 4
  Complex,  // complex simple group viewed as a real group
  E6_Split,    // E6^6  (E I)
  E6_Rank2,    // E6^2  (E IV)
  E7_Split,    // E7^7  (E V)
  E7_Rank3,    // E7^3  (E VII)
  E8_Split,    // E8^8  (E VIII)
  F4_Split,    // F4^4  (F I)
  G2_Split,    // G2^2  (G)
  E6_Rank4,    // E6^4  (E II),  relative F_4, stored type-only
  E7_Rank4,    // E7^4  (E VI),  relative F_4, stored type-only
  E8_Rank4,    // E8^4  (E IX),  relative F_4, stored type-only
  E6_Outer2,   // EIII,          relative BC_2, stored type-only
  F4_Rank1,    // F4^1  (F II),  relative BC_1, stored type-only
};

/// A parsed group specification. Parameter meaning depends on the family:
/// SL_R/SL_H use p = n; SU/Sp_PQ/SO use (p,q) with p <= q; Sp_R uses
/// p = n where the group is Sp(2n,R); SO_Star uses p = r where the group
/// is SO*(2r); Complex carries the inner type instead.
struct RealFormSpec {
  Family family;
  int p = 0;
  int q = 0;
  std::optional<RootSystemType> complex_type;

  int rank() const;
  std::string render() const;  // canonical spelling, parse(render(x)) == x

  friend bool operator==(const RealFormSpec& a, const RealFormSpec& b) {
    return a.family == b.family && a.p == b.p && a.q == b.q &&
           a.complex_type == b.complex_type;
  }
  friend bool operator!=(const RealFormSpec& a, const RealFormSpec& b) { return !(a == b); }
};

/// Parses group spellings like "SL(4,R)", "SL(3,H)", "SU(2,2)",
/// "Sp(6,R)", "Sp(2,2)", "SO(3,5)", "SO*(8)", "SL(4,C)", "SO(7,C)"
/// (also "SO(3,4,C)"), "Sp(6,C)", "E6^6", "E7^3", "E6(C)", "F4^1",
/// "EIII". Parameters are normalized (p <= q). Compact forms are
/// rejected as CompactGroup, non-simple or isogeny-redirect cases as
/// NotSimple.
RealFormSpec parse_group(std::string_view text);

/// Low-rank isogeny notes for accepted groups (e.g. SO(1,2) ~ PSL(2,R)
/// up to isogeny); surfaced as warnings by the CLI.
std::vector<std::string> isogeny_notes(const RealFormSpec& g);

/// Restricted root datum of a group: relative root-system type, real
/// rank, and multiplicities keyed by squared root length. Rank-1 reduced
/// relative systems are normalized to A_1 (B_1, C_1 do not exist as
/// RootSystemType values). Non-admissible exceptional forms are stored
/// type-only (empty mult), and BC-family multiplicities from the
/// classical tables are flagged unverified.
struct RestrictedDatum {
  RootSystemType rs_type;
  int rank;
  std::map<long long, long long> mult;  // sq_length -> multiplicity
  bool mult_verified = true;

  bool has_multiplicities() const { return !mult.empty(); }
};

RestrictedDatum restricted_root_datum(const RealFormSpec& g);

/// One row of the compiled-in multiplicity database. `mult` maps class
/// names ("all", "e_i", "e_i+-e_j", "2e_i", "short", "long") to either a
/// constant or a parameter formula tag ("q-p", "2(q-p)", "4(q-p)").
struct MultRule {
  std::string key;           // unique case id, e.g. "SU p<q"
  std::string cartan_label;  // "A III", ...
  RootFamily rs_family;
  std::string rank_param;    // description: "n-1", "p", "l", ...
  std::map<std::string, std::string> mult;  // empty = type-only
  bool verified = true;
};

using MultDatabase = std::vector<MultRule>;

const MultDatabase& builtin_database();

/// Validates an external database against the builtin schema: known
/// keys, class names legal for the root family, recognizable values,
/// complete key coverage. Throws InvalidDatabase with an explanation.
void validate_database(const MultDatabase& db);

/// Installs a validated override consulted by restricted_root_datum.
/// Call before any concurrent use; pass nullptr to restore the builtin.
void set_active_database(const MultDatabase* db);
const MultDatabase& active_database();

/// Catalog entry produced by list_families. Two-parameter families with
/// a free larger parameter are emitted once per rank as a stub whose
/// representative fixes q = p+1 (q = p+2 where q > p+1 is required).
struct CatalogEntry {
  RealFormSpec rep;
  std::string cartan_label;
  int rank;
  bool parametrized_q = false;
  std::string display;  // "SO(3,q) q>3" for stubs, rep.render() otherwise
};

/// Every family instance of real rank <= max_rank, tagged with its
/// Cartan label ("A I", "BD I", "E VII", "complex", ...).
std::vector<CatalogEntry> list_families(int max_rank);

}  // namespace lpcoh

#endif
