#include "lpcoh/strip.hpp"

namespace lpcoh {

std::vector<std::size_t> psi(const RootSystem& rs, int gamma) {
  if (gamma < 1 || gamma > rs.rank())
    fail(ErrorKind::BadIndex, "gamma = " + std::to_string(gamma) + " is not a simple-root index of " +
                                  rs.type.name());
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < rs.positive.size(); ++i)
    if (rs.positive[i].coeff(gamma) >= 1) out.push_back(i);
  return out;
}

namespace {

void require_multiplicities(const RestrictedDatum& datum) {
  if (!datum.has_multiplicities())
    fail(ErrorKind::MissingMultiplicities,
         "no multiplicity data for relative type " + datum.rs_type.name() +
             " (form stored type-only)");
}

long long mult_of(const RestrictedDatum& datum, const Root& alpha) {
  auto it = datum.mult.find(alpha.sq_length);
  if (it == datum.mult.end())
    fail(ErrorKind::MissingMultiplicities,
         "no multiplicity for length class " + std::to_string(alpha.sq_length) + " in " +
             datum.rs_type.name());
  return it->second;
}

}  // namespace

long long dim_nilradical(const RestrictedDatum& datum, int gamma) {
  require_multiplicities(datum);
  RootSystem rs = build_root_system(datum.rs_type);
  GoodRootReport report = good_roots(rs);
  if (!report.is_good(gamma))
    fail(ErrorKind::NotGoodRoot, "alpha_" + std::to_string(gamma) + " is not a good root of " +
                                     datum.rs_type.name());
  long long dim = 0;
  for (std::size_t i : psi(rs, gamma)) dim += mult_of(datum, rs.positive[i]);
  return dim;
}

long long dim_symmetric_space(const RestrictedDatum& datum) {
  require_multiplicities(datum);
  RootSystem rs = build_root_system(datum.rs_type);
  long long dim = datum.rank;
  for (const Root& alpha : rs.positive) dim += mult_of(datum, alpha);
  return dim;
}

StripReport strip_report(const RealFormSpec& g, std::optional<int> gamma) {
  RestrictedDatum datum = restricted_root_datum(g);
  RootSystem rs = build_root_system(datum.rs_type);
  GoodRootReport report = good_roots(rs);
  if (report.good_roots.empty())
    fail(ErrorKind::NotAdmissible, g.render() + " is not admissible (relative root system " +
                                       datum.rs_type.name() + " has no good root)");
  require_multiplicities(datum);

  if (gamma && !report.is_good(*gamma))
    fail(ErrorKind::NotGoodRoot, "alpha_" + std::to_string(*gamma) + " is not a good root of " +
                                     datum.rs_type.name());

  std::vector<std::pair<int, long long>> candidates;
  for (int i : report.good_roots) {
    long long dim = 0;
    for (std::size_t j : psi(rs, i)) dim += mult_of(datum, rs.positive[j]);
    candidates.emplace_back(i, dim);
  }

  int chosen = gamma.value_or(0);
  if (!gamma) {
    long long best = -1;
    for (const auto& [i, dim] : candidates) {
      if (dim > best) {
        best = dim;
        chosen = i;
      }
    }
  }

  StripReport out;
  out.group = g;
  out.chosen_gamma = chosen;
  out.psi_size = static_cast<long long>(psi(rs, chosen).size());
  for (const auto& [i, dim] : candidates) {
    if (i == chosen)
      out.d_minus_1 = dim;
    else
      out.alternatives.emplace_back(i, dim);
  }
  out.d = out.d_minus_1 + 1;
  out.D = datum.rank;
  for (const Root& alpha : rs.positive) out.D += mult_of(datum, alpha);
  out.width = out.D - out.d + 2;
  out.proportion = Rational(out.d - 2, out.D);
  return out;
}

Rational conjugate_exponent(const Rational& p) {
  if (p <= Rational(1))
    fail(ErrorKind::ExponentOutOfRange, "p = " + p.str() + " must be > 1");
  return p / (p - Rational(1));
}

HypStatus hyperbolic_status(long long d, const Rational& p, long long k) {
  if (d < 2) fail(ErrorKind::DegreeOutOfRange, "hyperbolic dimension d must be >= 2");
  if (k < 0) fail(ErrorKind::DegreeOutOfRange, "degree k must be >= 0");
  if (p <= Rational(1))
    fail(ErrorKind::ExponentOutOfRange, "p = " + p.str() + " must be > 1");

  const Rational edge = Rational(d - 1) / p;  // (d-1)/p
  const Rational kk(k);

  HypStatus st;
  if (k == 0 || k >= d)
    st.zero = true;
  else
    st.zero = kk <= edge || kk > edge + Rational(1);
  // the single possibly non-Hausdorff degree is (d-1)/p + 1
  st.hausdorff = kk != edge + Rational(1);
  // reduced cohomology survives only strictly inside ((d-1)/p, (d-1)/p + 1)
  st.reduced_zero = !(edge < kk && kk < edge + Rational(1));
  if (k == 0 || k >= d) {
    st.hausdorff = true;
    st.reduced_zero = true;
  }
  return st;
}

DualityImage duality_image(long long D, const Rational& p, long long k) {
  if (k < 0 || k > D)
    fail(ErrorKind::DegreeOutOfRange,
         "degree k = " + std::to_string(k) + " outside [0, " + std::to_string(D) + "]");
  return DualityImage{conjugate_exponent(p), D - k + 1, D - k};
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::VanishesUnreduced: return "VanishesUnreduced";
    case Verdict::VanishesReducedOnly: return "VanishesReducedOnly";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

const char* reason_name(Reason r) {
  switch (r) {
    case Reason::DegreeZero: return "degree-zero";
    case Reason::DegreeAtLeastD: return "degree-geq-D";
    case Reason::DegreeOneCorollary: return "degree-one-corollary";
    case Reason::LowerTail: return "lower-tail";
    case Reason::UpperTail: return "upper-tail";
    case Reason::ReducedBand: return "reduced-band";
    case Reason::InsideStrip: return "inside-strip";
  }
  return "?";
}

CohomologyStatus group_status(const StripReport& report, const Rational& p, long long k) {
  if (k < 0) fail(ErrorKind::DegreeOutOfRange, "degree k must be >= 0");
  if (p <= Rational(1))
    fail(ErrorKind::ExponentOutOfRange, "p = " + p.str() + " must be > 1");

  const Rational lower = Rational(report.d_minus_1) / p;       // (d-1)/p
  const Rational upper = lower + Rational(report.width);       // (d-1)/p + D-d+2
  const Rational kk(k);

  CohomologyStatus st;
  if (k == 0) {
    st.verdict = Verdict::VanishesUnreduced;
    st.reason = Reason::DegreeZero;
  } else if (k >= report.D) {
    st.verdict = Verdict::VanishesUnreduced;
    st.reason = Reason::DegreeAtLeastD;
  } else if (k == 1 && report.group.rank() >= 2) {
    st.verdict = Verdict::VanishesUnreduced;
    st.reason = Reason::DegreeOneCorollary;
  } else if (kk <= lower) {
    st.verdict = Verdict::VanishesUnreduced;
    st.reason = Reason::LowerTail;
  } else if (kk >= upper) {
    st.verdict = Verdict::VanishesUnreduced;
    st.reason = Reason::UpperTail;
  } else if (kk >= upper - Rational(1)) {
    st.verdict = Verdict::VanishesReducedOnly;
    st.reason = Reason::ReducedBand;
  } else {
    st.verdict = Verdict::Unknown;
    st.reason = Reason::InsideStrip;
    if (!lower.is_integer()) st.concentration_degree = lower.floor() + 1;
  }
  return st;
}

CohomologyStatus group_status(const RealFormSpec& g, const Rational& p, long long k) {
  return group_status(strip_report(g), p, k);
}

}  // namespace lpcoh
