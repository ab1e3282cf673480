#include "lpcoh/root_system.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <numeric>
#include <unordered_set>

#include "lpcoh/rational.hpp"

namespace lpcoh {

namespace {

using Vec = std::vector<long long>;

long long dot(const Vec& a, const Vec& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec axpy(const Vec& a, long long c, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += c * b[i];
  return r;
}

// Doubled Bourbaki simple roots. Plate conventions: A-D and BC live in
// R^l (R^{l+1} for A), E_6..E_8 in R^8, F_4 in R^4, G_2 in R^3. For D_l
// the fork simple root is e_{l-1}+e_l.
std::vector<Vec> simple_ambient(const RootSystemType& t) {
  const int l = t.rank;
  std::vector<Vec> s;
  auto unit_diff = [&](int dim, int count) {
    for (int i = 0; i < count; ++i) {
      Vec v(dim, 0);
      v[i] = 2;
      v[i + 1] = -2;
      s.push_back(v);
    }
  };
  switch (t.family) {
    case RootFamily::A:
      unit_diff(l + 1, l);
      break;
    case RootFamily::B:
    case RootFamily::BC: {
      unit_diff(l, l - 1);
      Vec v(l, 0);
      v[l - 1] = 2;
      s.push_back(v);
      break;
    }
    case RootFamily::C: {
      unit_diff(l, l - 1);
      Vec v(l, 0);
      v[l - 1] = 4;
      s.push_back(v);
      break;
    }
    case RootFamily::D: {
      unit_diff(l, l - 1);
      Vec v(l, 0);
      v[l - 2] = 2;
      v[l - 1] = 2;
      s.push_back(v);
      break;
    }
    case RootFamily::E: {
      s.push_back({1, -1, -1, -1, -1, -1, -1, 1});  // alpha_1
      s.push_back({2, 2, 0, 0, 0, 0, 0, 0});        // alpha_2
      for (int i = 0; i < l - 2; ++i) {             // alpha_3..alpha_l: e_{i+1}-e_i
        Vec v(8, 0);
        v[i] = -2;
        v[i + 1] = 2;
        s.push_back(v);
      }
      break;
    }
    case RootFamily::F:
      s.push_back({0, 2, -2, 0});
      s.push_back({0, 0, 2, -2});
      s.push_back({0, 0, 0, 2});
      s.push_back({1, -1, -1, -1});
      break;
    case RootFamily::G:
      s.push_back({2, -2, 0});
      s.push_back({-4, 2, 2});
      break;
  }
  return s;
}

long long squared_length(const Vec& doubled) {
  long long d = dot(doubled, doubled);
  assert(d % 4 == 0);
  return d / 4;
}

void sort_roots(std::vector<Root>& roots) {
  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
    long long ha = std::accumulate(a.simple_coeffs.begin(), a.simple_coeffs.end(), 0LL);
    long long hb = std::accumulate(b.simple_coeffs.begin(), b.simple_coeffs.end(), 0LL);
    if (ha != hb) return ha < hb;
    return a.simple_coeffs < b.simple_coeffs;
  });
}

Root make_root(const std::vector<Vec>& simple, Vec coeffs) {
  Root r;
  r.ambient.assign(simple[0].size(), 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) r.ambient = axpy(r.ambient, coeffs[i], simple[i]);
  r.simple_coeffs = std::move(coeffs);
  r.sq_length = squared_length(r.ambient);
  return r;
}

struct VecHash {
  std::size_t operator()(const Vec& v) const {
    std::size_t h = 1469598103934665603ULL;
    for (long long x : v)
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

// Closure algorithm for reduced systems: grow Phi^+ level by level from
// Delta. beta + alpha_i is a root iff the alpha_i-string through beta
// extends upward, i.e. q = r - <beta, alpha_i^vee> >= 1 where r is the
// number of steps the string goes down.
std::vector<Root> closure_positive(const std::vector<Vec>& simple) {
  const int l = static_cast<int>(simple.size());
  std::vector<long long> norms(l);
  for (int i = 0; i < l; ++i) norms[i] = dot(simple[i], simple[i]);

  struct Item {
    Vec coeffs;
    Vec ambient;
  };
  std::unordered_set<Vec, VecHash> known;  // coefficient vectors
  std::vector<Item> level;
  for (int i = 0; i < l; ++i) {
    Vec c(l, 0);
    c[i] = 1;
    known.insert(c);
    level.push_back(Item{std::move(c), simple[static_cast<std::size_t>(i)]});
  }

  std::vector<Root> out;
  while (!level.empty()) {
    std::vector<Item> next;
    for (Item& item : level) {
      for (int i = 0; i < l; ++i) {
        // pairing <beta, alpha_i^vee> = 2(beta,alpha_i)/(alpha_i,alpha_i)
        long long pairing = 2 * dot(item.ambient, simple[i]) / norms[i];
        long long r = 0;
        Vec down = item.coeffs;
        while (true) {
          down[i] -= 1;
          if (down[i] < 0 || !known.count(down)) break;
          ++r;
        }
        if (r - pairing >= 1) {
          Vec up = item.coeffs;
          up[i] += 1;
          if (known.insert(up).second)
            next.push_back(Item{std::move(up), axpy(item.ambient, 1, simple[i])});
        }
      }
      Root beta;
      beta.sq_length = squared_length(item.ambient);
      beta.ambient = std::move(item.ambient);
      beta.simple_coeffs = std::move(item.coeffs);
      out.push_back(std::move(beta));
    }
    level = std::move(next);
  }
  sort_roots(out);
  return out;
}

// Exact solve of M x = v over the rationals (M invertible, columns are
// the simple roots). Used to recover simple coefficients for the BC
// enumeration; results are asserted integral.
Vec solve_coeffs(const std::vector<Vec>& simple, const Vec& target) {
  const std::size_t n = simple.size();
  const std::size_t dim = simple[0].size();
  assert(dim >= n);
  std::vector<std::vector<Rational>> m(dim, std::vector<Rational>(n + 1));
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < n; ++c) m[r][c] = Rational(simple[c][r]);
    m[r][n] = Rational(target[r]);
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivot_row(n, SIZE_MAX);
  for (std::size_t col = 0; col < n && row < dim; ++col) {
    std::size_t p = row;
    while (p < dim && m[p][col] == Rational(0)) ++p;
    if (p == dim) continue;
    std::swap(m[p], m[row]);
    Rational inv = Rational(1) / m[row][col];
    for (std::size_t c = col; c <= n; ++c) m[row][c] *= inv;
    for (std::size_t r = 0; r < dim; ++r) {
      if (r == row || m[r][col] == Rational(0)) continue;
      Rational f = m[r][col];
      for (std::size_t c = col; c <= n; ++c) m[r][c] -= f * m[row][c];
    }
    pivot_row[col] = row++;
  }
  Vec x(n, 0);
  for (std::size_t c = 0; c < n; ++c) {
    assert(pivot_row[c] != SIZE_MAX);
    const Rational& v = m[pivot_row[c]][n];
    assert(v.is_integer());
    x[c] = v.num();
  }
  return x;
}

std::vector<Root> bc_positive(const std::vector<Vec>& simple, int l) {
  std::vector<Vec> ambient;
  for (int i = 0; i < l; ++i) {
    Vec e(l, 0);
    e[i] = 2;
    ambient.push_back(e);  // e_i
    e[i] = 4;
    ambient.push_back(e);  // 2e_i
    for (int j = i + 1; j < l; ++j) {
      Vec v(l, 0);
      v[i] = 2;
      v[j] = -2;
      ambient.push_back(v);  // e_i - e_j
      v[j] = 2;
      ambient.push_back(v);  // e_i + e_j
    }
  }
  std::vector<Root> out;
  for (Vec& v : ambient) {
    Root r;
    r.simple_coeffs = solve_coeffs(simple, v);
    r.sq_length = squared_length(v);
    r.ambient = std::move(v);
    out.push_back(std::move(r));
  }
  sort_roots(out);
  return out;
}

}  // namespace

std::string_view family_name(RootFamily f) {
  switch (f) {
    case RootFamily::A: return "A";
    case RootFamily::B: return "B";
    case RootFamily::C: return "C";
    case RootFamily::D: return "D";
    case RootFamily::E: return "E";
    case RootFamily::F: return "F";
    case RootFamily::G: return "G";
    case RootFamily::BC: return "BC";
  }
  return "?";
}

RootSystemType::RootSystemType(RootFamily f, int l) : family(f), rank(l) {
  bool ok = false;
  switch (f) {
    case RootFamily::A: ok = l >= 1; break;
    case RootFamily::B: ok = l >= 2; break;
    case RootFamily::C: ok = l >= 2; break;
    case RootFamily::D: ok = l >= 4; break;
    case RootFamily::E: ok = l >= 6 && l <= 8; break;
    case RootFamily::F: ok = l == 4; break;
    case RootFamily::G: ok = l == 2; break;
    case RootFamily::BC: ok = l >= 1; break;
  }
  if (!ok)
    fail(ErrorKind::UnsupportedRank,
         std::string(family_name(f)) + "_" + std::to_string(l) +
             " is not a supported irreducible root system");
}

std::string RootSystemType::name() const {
  return std::string(family_name(family)) + std::to_string(rank);
}

RootSystemType RootSystemType::parse(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && (std::isalpha(static_cast<unsigned char>(text[i])))) ++i;
  std::string fam(text.substr(0, i));
  std::string_view rest = text.substr(i);
  if (!rest.empty() && rest.front() == '_') rest.remove_prefix(1);
  RootFamily f;
  if (fam == "A") f = RootFamily::A;
  else if (fam == "B") f = RootFamily::B;
  else if (fam == "C") f = RootFamily::C;
  else if (fam == "D") f = RootFamily::D;
  else if (fam == "E") f = RootFamily::E;
  else if (fam == "F") f = RootFamily::F;
  else if (fam == "G") f = RootFamily::G;
  else if (fam == "BC") f = RootFamily::BC;
  else
    fail(ErrorKind::ParseError, "unknown root-system family in '" + std::string(text) + "'");
  int rank = 0;
  if (rest.empty()) fail(ErrorKind::ParseError, "missing rank in '" + std::string(text) + "'");
  for (char c : rest) {
    if (c < '0' || c > '9')
      fail(ErrorKind::ParseError, "bad rank in '" + std::string(text) + "'");
    rank = rank * 10 + (c - '0');
    if (rank > 1000) fail(ErrorKind::UnsupportedRank, "rank too large");
  }
  return RootSystemType(f, rank);
}

const Root& RootSystem::simple_root(int i) const {
  if (i < 1 || i > rank())
    fail(ErrorKind::BadIndex,
         "simple-root index " + std::to_string(i) + " out of range 1.." + std::to_string(rank()));
  return simple[static_cast<std::size_t>(i) - 1];
}

RootSystem build_root_system(RootSystemType t) {
  std::vector<Vec> simple = simple_ambient(t);
  RootSystem rs{t, {}, {}};
  for (int i = 0; i < t.rank; ++i) {
    Vec c(t.rank, 0);
    c[i] = 1;
    rs.simple.push_back(make_root(simple, std::move(c)));
  }
  rs.positive = t.reduced() ? closure_positive(simple) : bc_positive(simple, t.rank);
  assert(static_cast<long long>(rs.positive.size()) == count_positive(t));
  return rs;
}

long long count_positive(RootSystemType t) {
  const long long l = t.rank;
  switch (t.family) {
    case RootFamily::A: return l * (l + 1) / 2;
    case RootFamily::B:
    case RootFamily::C: return l * l;
    case RootFamily::D: return l * (l - 1);
    case RootFamily::E: return l == 6 ? 36 : (l == 7 ? 63 : 120);
    case RootFamily::F: return 24;
    case RootFamily::G: return 6;
    case RootFamily::BC: return l * l + l;
  }
  return 0;
}

std::map<long long, std::vector<std::size_t>> length_classes(const RootSystem& rs) {
  std::map<long long, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < rs.positive.size(); ++i)
    classes[rs.positive[i].sq_length].push_back(i);
  return classes;
}

}  // namespace lpcoh
