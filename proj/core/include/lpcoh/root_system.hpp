#ifndef LPCOH_ROOT_SYSTEM_HPP
#define LPCOH_ROOT_SYSTEM_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lpcoh/error.hpp"

namespace lpcoh {

enum class RootFamily { A, B, C, D, E, F, G, BC };

std::string_view family_name(RootFamily f);

/// Type of an irreducible root system. Supported: A_l (l>=1), B_l (l>=2),
/// C_l (l>=2), D_l (l>=4), E_6..E_8, F_4, G_2 and the non-reduced BC_l
/// (l>=1). Construction rejects anything else with UnsupportedRank.
struct RootSystemType {
  RootFamily family;
  int rank;

  RootSystemType(RootFamily f, int l);

  bool reduced() const { return family != RootFamily::BC; }
  std::string name() const;  // "A3", "E7", "BC2", ...

  static RootSystemType parse(std::string_view text);

  friend bool operator==(const RootSystemType& a, const RootSystemType& b) {
    return a.family == b.family && a.rank == b.rank;
  }
  friend bool operator!=(const RootSystemType& a, const RootSystemType& b) {
    return !(a == b);
  }
};

/// A root in Bourbaki ambient coordinates, uniformly scaled by 2 so that
/// every entry is an integer (E_8 uses half-integer coordinates).
/// `simple_coeffs` are the coordinates in the simple-root basis;
/// `sq_length` is the squared norm of the *unscaled* root, which is an
/// integer for every supported normalization.
struct Root {
  std::vector<long long> ambient;
  std::vector<long long> simple_coeffs;
  long long sq_length = 0;

  long long coeff(int i) const { return simple_coeffs.at(static_cast<std::size_t>(i) - 1); }

  friend bool operator==(const Root& a, const Root& b) { return a.ambient == b.ambient; }
};

struct RootSystem {
  RootSystemType type;
  std::vector<Root> simple;    // Bourbaki numbering: simple[i-1] is alpha_i
  std::vector<Root> positive;  // sorted by height, then simple_coeffs

  int rank() const { return type.rank; }
  const Root& simple_root(int i) const;  // 1-based, throws BadIndex
};

/// Enumerates the full positive system. Reduced types go through the
/// closure algorithm over the Cartan matrix; BC is enumerated explicitly
/// in ambient coordinates with simple coefficients recovered by an exact
/// linear solve.
RootSystem build_root_system(RootSystemType t);

/// Closed-form |Phi^+|: A_l -> l(l+1)/2, B_l/C_l -> l^2, D_l -> l(l-1),
/// E_6/E_7/E_8 -> 36/63/120, F_4 -> 24, G_2 -> 6, BC_l -> l^2+l.
long long count_positive(RootSystemType t);

/// Positive roots grouped by squared length, keys in increasing order.
/// Values are indices into rs.positive. At most 2 classes for reduced
/// types, at most 3 for BC.
std::map<long long, std::vector<std::size_t>> length_classes(const RootSystem& rs);

}  // namespace lpcoh

#endif
