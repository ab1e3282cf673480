#include "lpcoh/admissibility.hpp"

#include <algorithm>

namespace lpcoh {

GoodRootReport good_roots(const RootSystem& rs) {
  GoodRootReport report{rs.type, {}, {}};
  for (int i = 1; i <= rs.rank(); ++i) {
    long long max_coeff = 0;
    for (const Root& alpha : rs.positive)
      max_coeff = std::max(max_coeff, alpha.coeff(i));
    report.per_root_max_coeff[i] = max_coeff;
    if (max_coeff == 1) report.good_roots.push_back(i);
  }
  return report;
}

std::pair<bool, GoodRootReport> is_admissible(const RealFormSpec& g) {
  RestrictedDatum datum = restricted_root_datum(g);
  GoodRootReport report = good_roots(build_root_system(datum.rs_type));
  return {!report.good_roots.empty(), std::move(report)};
}

std::vector<ClassifiedEntry> classify(int max_rank) {
  std::vector<ClassifiedEntry> out;
  for (CatalogEntry& entry : list_families(max_rank)) {
    auto [adm, report] = is_admissible(entry.rep);
    out.push_back(ClassifiedEntry{std::move(entry), adm, std::move(report)});
  }
  return out;
}

}  // namespace lpcoh
