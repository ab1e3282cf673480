#ifndef LPCOH_ADMISSIBILITY_HPP
#define LPCOH_ADMISSIBILITY_HPP

#include <algorithm>
#include <map>
#include <vector>

#include "lpcoh/real_forms.hpp"
#include "lpcoh/root_system.hpp"

namespace lpcoh {

/// Result of the good-root scan of a root system. A simple root is good
/// when every positive root has coefficient 0 or 1 along it; good_roots
/// holds the 1-based indices, per_root_max_coeff the maximum coefficient
/// of each simple root over Phi^+.
struct GoodRootReport {
  RootSystemType rs_type;
  std::vector<int> good_roots;  // sorted, 1-based
  std::map<int, long long> per_root_max_coeff;

  bool is_good(int i) const {
    return std::find(good_roots.begin(), good_roots.end(), i) != good_roots.end();
  }
};

/// Brute-force scan over all positive roots (no table lookup).
GoodRootReport good_roots(const RootSystem& rs);

/// A group is admissible iff its relative root system has a good root.
/// BC types answer false straight from the type.
std::pair<bool, GoodRootReport> is_admissible(const RealFormSpec& g);

struct ClassifiedEntry {
  CatalogEntry entry;
  bool admissible;
  GoodRootReport report;
};

/// Runs is_admissible over the whole catalog up to max_rank.
std::vector<ClassifiedEntry> classify(int max_rank);

}  // namespace lpcoh

#endif
