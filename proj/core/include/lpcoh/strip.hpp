#ifndef LPCOH_STRIP_HPP
#define LPCOH_STRIP_HPP

#include <optional>
#include <vector>

#include "lpcoh/admissibility.hpp"
#include "lpcoh/rational.hpp"
#include "lpcoh/real_forms.hpp"
#include "lpcoh/root_system.hpp"

namespace lpcoh {

/// Positive roots with nonzero coefficient along gamma (1-based index),
/// i.e. Phi^+ minus the span of the other simple roots. Returns indices
/// into rs.positive.
std::vector<std::size_t> psi(const RootSystem& rs, int gamma);

/// dim N_gamma: sum of the length-class multiplicities over psi(gamma).
/// gamma must be a good root of the relative system.
long long dim_nilradical(const RestrictedDatum& datum, int gamma);

/// dim X = rank + sum of multiplicities over all positive roots.
long long dim_symmetric_space(const RestrictedDatum& datum);

/// The possibly non-vanishing strip of a group: nilradical dimension for
/// the chosen good root (the one maximizing d-1, i.e. minimizing the
/// width; ties break to the smallest index), symmetric-space dimension,
/// width D-d+2 and vanishing proportion (d-2)/D.
struct StripReport {
  RealFormSpec group;
  int chosen_gamma = 0;
  long long psi_size = 0;
  long long d_minus_1 = 0;
  long long d = 0;
  long long D = 0;
  long long width = 0;
  Rational proportion;
  std::vector<std::pair<int, long long>> alternatives;  // (gamma, d-1) for other good roots
};

StripReport strip_report(const RealFormSpec& g, std::optional<int> gamma = std::nullopt);

/// q with 1/p + 1/q = 1; requires p > 1.
Rational conjugate_exponent(const Rational& p);

/// L^p-cohomology of a group quasi-isometric to real hyperbolic d-space:
/// vanishing, Hausdorffness and reduced vanishing in each degree.
struct HypStatus {
  bool zero = false;
  bool hausdorff = false;
  bool reduced_zero = false;
};

HypStatus hyperbolic_status(long long d, const Rational& p, long long k);

/// Both Poincare-duality partners of (p, k) on a D-manifold:
/// Hausdorffness pairs with (q, D-k+1), reduced vanishing with (q, D-k).
struct DualityImage {
  Rational q;
  long long hausdorff_degree = 0;
  long long reduced_degree = 0;
};

DualityImage duality_image(long long D, const Rational& p, long long k);

enum class Verdict { VanishesUnreduced, VanishesReducedOnly, Unknown };

enum class Reason {
  DegreeZero,
  DegreeAtLeastD,
  DegreeOneCorollary,
  LowerTail,
  UpperTail,
  ReducedBand,
  InsideStrip,
};

const char* verdict_name(Verdict v);
const char* reason_name(Reason r);

/// Per-(p,k) verdict with the clause that produced it. When the verdict
/// is Unknown and (d-1)/p is not an integer, concentration_degree holds
/// l = floor((d-1)/p) + 1, the only degree where the nilradical
/// cohomology survives.
struct CohomologyStatus {
  Verdict verdict = Verdict::Unknown;
  Reason reason = Reason::InsideStrip;
  std::optional<long long> concentration_degree;
};

/// Resolution order: degree 0 / degree >= D, then the degree-one
/// vanishing for real rank >= 2, the two strip tails, the half-open
/// reduced band, and Unknown inside the strip. Never claims
/// non-vanishing.
CohomologyStatus group_status(const RealFormSpec& g, const Rational& p, long long k);
CohomologyStatus group_status(const StripReport& report, const Rational& p, long long k);

}  // namespace lpcoh

#endif
