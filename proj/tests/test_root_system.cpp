#include "lpcoh/root_system.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "doctest.h"

using namespace lpcoh;

namespace {

std::vector<RootSystemType> supported_up_to_rank8() {
  std::vector<RootSystemType> types;
  for (int l = 1; l <= 8; ++l) types.emplace_back(RootFamily::A, l);
  for (int l = 2; l <= 8; ++l) types.emplace_back(RootFamily::B, l);
  for (int l = 2; l <= 8; ++l) types.emplace_back(RootFamily::C, l);
  for (int l = 4; l <= 8; ++l) types.emplace_back(RootFamily::D, l);
  for (int l = 6; l <= 8; ++l) types.emplace_back(RootFamily::E, l);
  types.emplace_back(RootFamily::F, 4);
  types.emplace_back(RootFamily::G, 2);
  for (int l = 1; l <= 8; ++l) types.emplace_back(RootFamily::BC, l);
  return types;
}

const Root& highest_root(const RootSystem& rs) {
  // last in height order
  return rs.positive.back();
}

}  // namespace

TEST_CASE("positive counts match the closed forms") {
  for (const RootSystemType& t : supported_up_to_rank8()) {
    RootSystem rs = build_root_system(t);
    long long l = t.rank;
    long long expected = 0;
    switch (t.family) {
      case RootFamily::A: expected = l * (l + 1) / 2; break;
      case RootFamily::B:
      case RootFamily::C: expected = l * l; break;
      case RootFamily::D: expected = l * (l - 1); break;
      case RootFamily::E: expected = l == 6 ? 36 : l == 7 ? 63 : 120; break;
      case RootFamily::F: expected = 24; break;
      case RootFamily::G: expected = 6; break;
      case RootFamily::BC: expected = l * l + l; break;
    }
    CAPTURE(t.name());
    CHECK(static_cast<long long>(rs.positive.size()) == expected);
    CHECK(count_positive(t) == expected);
  }
}

TEST_CASE("A_1 is the single root alpha_1") {
  RootSystem rs = build_root_system(RootSystemType(RootFamily::A, 1));
  REQUIRE(rs.positive.size() == 1);
  CHECK(rs.positive[0].simple_coeffs == std::vector<long long>{1});
}

TEST_CASE("E_7 has 63 positive roots and E_6 has 36") {
  CHECK(build_root_system(RootSystemType(RootFamily::E, 7)).positive.size() == 63);
  CHECK(build_root_system(RootSystemType(RootFamily::E, 6)).positive.size() == 36);
}

TEST_CASE("BC_2 equals the explicit ambient enumeration") {
  // oracle: {e_1, e_2, 2e_1, 2e_2, e_1-e_2, e_1+e_2}, doubled coordinates
  std::set<std::vector<long long>> expected = {
      {2, 0}, {0, 2}, {4, 0}, {0, 4}, {2, -2}, {2, 2}};
  RootSystem rs = build_root_system(RootSystemType(RootFamily::BC, 2));
  std::set<std::vector<long long>> got;
  for (const Root& r : rs.positive) got.insert(r.ambient);
  CHECK(got == expected);
}

TEST_CASE("BC_3 equals the explicit ambient enumeration") {
  // oracle: {e_i, 2e_i, e_i +- e_j}, built directly in doubled coordinates
  std::set<std::vector<long long>> expected;
  for (int i = 0; i < 3; ++i) {
    std::vector<long long> e(3, 0);
    e[static_cast<std::size_t>(i)] = 2;
    expected.insert(e);
    e[static_cast<std::size_t>(i)] = 4;
    expected.insert(e);
    for (int j = i + 1; j < 3; ++j) {
      std::vector<long long> v(3, 0);
      v[static_cast<std::size_t>(i)] = 2;
      v[static_cast<std::size_t>(j)] = -2;
      expected.insert(v);
      v[static_cast<std::size_t>(j)] = 2;
      expected.insert(v);
    }
  }
  REQUIRE(expected.size() == 12);
  RootSystem rs = build_root_system(RootSystemType(RootFamily::BC, 3));
  std::set<std::vector<long long>> got;
  for (const Root& r : rs.positive) got.insert(r.ambient);
  CHECK(got == expected);
}

TEST_CASE("length classes: B_3 splits 3 short / 6 long") {
  RootSystem rs = build_root_system(RootSystemType(RootFamily::B, 3));
  auto classes = length_classes(rs);
  REQUIRE(classes.size() == 2);
  CHECK(classes.at(1).size() == 3);
  CHECK(classes.at(2).size() == 6);
}

TEST_CASE("length classes: A_4 has one class of size 10") {
  auto classes = length_classes(build_root_system(RootSystemType(RootFamily::A, 4)));
  REQUIRE(classes.size() == 1);
  CHECK(classes.begin()->second.size() == 10);
}

TEST_CASE("length classes: C_n has n(n-1) short and n long roots") {
  for (int n = 2; n <= 7; ++n) {
    auto classes = length_classes(build_root_system(RootSystemType(RootFamily::C, n)));
    REQUIRE(classes.size() == 2);
    CHECK(classes.at(2).size() == static_cast<std::size_t>(n) * (n - 1));
    CHECK(classes.at(4).size() == static_cast<std::size_t>(n));
  }
}

TEST_CASE("length classes: at most 2 for reduced types, at most 3 for BC") {
  for (const RootSystemType& t : supported_up_to_rank8()) {
    auto classes = length_classes(build_root_system(t));
    std::size_t total = 0;
    for (const auto& [len, idx] : classes) total += idx.size();
    CHECK(total == static_cast<std::size_t>(count_positive(t)));
    CHECK(classes.size() <= (t.reduced() ? 2u : 3u));
  }
}

TEST_CASE("ambient vectors reconstruct from simple coefficients") {
  for (const RootSystemType& t : supported_up_to_rank8()) {
    RootSystem rs = build_root_system(t);
    for (const Root& r : rs.positive) {
      std::vector<long long> rebuilt(r.ambient.size(), 0);
      for (int i = 1; i <= rs.rank(); ++i) {
        long long c = r.coeff(i);
        const Root& alpha = rs.simple_root(i);
        for (std::size_t j = 0; j < rebuilt.size(); ++j) rebuilt[j] += c * alpha.ambient[j];
      }
      CAPTURE(t.name());
      CHECK(rebuilt == r.ambient);
    }
  }
}

TEST_CASE("simple roots appear among the positives as unit vectors") {
  for (const RootSystemType& t : supported_up_to_rank8()) {
    RootSystem rs = build_root_system(t);
    for (int i = 1; i <= rs.rank(); ++i) {
      std::vector<long long> unit(static_cast<std::size_t>(rs.rank()), 0);
      unit[static_cast<std::size_t>(i) - 1] = 1;
      bool found = false;
      for (const Root& r : rs.positive)
        if (r.simple_coeffs == unit && r.ambient == rs.simple_root(i).ambient) found = true;
      CHECK(found);
    }
  }
}

TEST_CASE("no duplicates; no root is a multiple of another in reduced types") {
  for (const RootSystemType& t : supported_up_to_rank8()) {
    RootSystem rs = build_root_system(t);
    std::set<std::vector<long long>> seen;
    for (const Root& r : rs.positive) CHECK(seen.insert(r.ambient).second);
    if (!t.reduced()) continue;
    for (const Root& r : rs.positive) {
      std::vector<long long> doubled = r.ambient;
      for (long long& x : doubled) x *= 2;
      CHECK(seen.count(doubled) == 0);
    }
  }
}

TEST_CASE("highest-root coefficients of E_7 and E_6") {
  RootSystem e7 = build_root_system(RootSystemType(RootFamily::E, 7));
  CHECK(highest_root(e7).simple_coeffs == std::vector<long long>{2, 2, 3, 4, 3, 2, 1});
  RootSystem e6 = build_root_system(RootSystemType(RootFamily::E, 6));
  CHECK(highest_root(e6).simple_coeffs == std::vector<long long>{1, 2, 2, 3, 2, 1});
}

TEST_CASE("in BC_l the root 2e_1 has every simple coefficient equal to 2") {
  for (int l = 1; l <= 6; ++l) {
    RootSystem rs = build_root_system(RootSystemType(RootFamily::BC, l));
    std::vector<long long> two_e1(static_cast<std::size_t>(l), 0);
    two_e1[0] = 4;  // doubled
    bool found = false;
    for (const Root& r : rs.positive) {
      if (r.ambient != two_e1) continue;
      found = true;
      for (long long c : r.simple_coeffs) CHECK(c == 2);
    }
    CHECK(found);
  }
}

TEST_CASE("A_l coefficient profiles mirror under i -> l+1-i") {
  for (int l = 2; l <= 8; ++l) {
    RootSystem rs = build_root_system(RootSystemType(RootFamily::A, l));
    for (int i = 1; i <= l; ++i) {
      std::multiset<long long> left, right;
      for (const Root& r : rs.positive) {
        left.insert(r.coeff(i));
        right.insert(r.coeff(l + 1 - i));
      }
      CHECK(left == right);
    }
  }
}

TEST_CASE("out-of-range types are rejected") {
  CHECK_THROWS_AS(RootSystemType(RootFamily::A, 0), DomainError);
  CHECK_THROWS_AS(RootSystemType(RootFamily::B, 1), DomainError);
  CHECK_THROWS_AS(RootSystemType(RootFamily::C, 1), DomainError);
  CHECK_THROWS_AS(RootSystemType(RootFamily::D, 3), DomainError);
  CHECK_THROWS_AS(RootSystemType(RootFamily::E, 5), DomainError);
  CHECK_THROWS_AS(RootSystemType(RootFamily::E, 9), DomainError);
  CHECK_THROWS_AS(RootSystemType(RootFamily::F, 3), DomainError);
  CHECK_THROWS_AS(RootSystemType(RootFamily::G, 3), DomainError);
  CHECK_THROWS_AS(RootSystemType(RootFamily::BC, 0), DomainError);
  try {
    RootSystemType(RootFamily::D, 2);
    FAIL("expected UnsupportedRank");
  } catch (const DomainError& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedRank);
  }
}

TEST_CASE("type parsing") {
  CHECK(RootSystemType::parse("B3") == RootSystemType(RootFamily::B, 3));
  CHECK(RootSystemType::parse("BC2") == RootSystemType(RootFamily::BC, 2));
  CHECK(RootSystemType::parse("E_7") == RootSystemType(RootFamily::E, 7));
  CHECK_THROWS_AS(RootSystemType::parse("H5"), DomainError);
  CHECK_THROWS_AS(RootSystemType::parse("B"), DomainError);
  CHECK_THROWS_AS(RootSystemType::parse("Bx"), DomainError);
}

TEST_CASE("sq_length is integral and takes the plate values") {
  std::map<std::string, std::set<long long>> expected = {
      {"A", {2}}, {"B", {1, 2}}, {"C", {2, 4}}, {"D", {2}},
      {"E", {2}}, {"F", {1, 2}}, {"G", {2, 6}}, {"BC", {1, 2, 4}},
  };
  for (const RootSystemType& t : supported_up_to_rank8()) {
    std::set<long long> lens;
    for (const Root& r : build_root_system(t).positive) lens.insert(r.sq_length);
    std::set<long long> allowed = expected.at(std::string(family_name(t.family)));
    for (long long len : lens) CHECK(allowed.count(len) == 1);
  }
}
