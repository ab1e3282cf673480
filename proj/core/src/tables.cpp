#include "lpcoh/tables.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <iterator>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lpcoh/admissibility.hpp"
#include "lpcoh/strip.hpp"

namespace lpcoh {

int IntPolynomial::degree() const {
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
    if (coeffs[static_cast<std::size_t>(i)] != Rational(0)) return i;
  return 0;
}

Rational IntPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs.size())) return Rational(0);
  return coeffs[static_cast<std::size_t>(i)];
}

Rational IntPolynomial::eval(long long l) const {
  Rational acc(0), power(1);
  for (const Rational& c : coeffs) {
    acc += c * power;
    power *= Rational(l);
  }
  return acc;
}

bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
  for (int i = 0; i < 3; ++i)
    if (a.coeff(i) != b.coeff(i)) return false;
  return true;
}

std::string IntPolynomial::str(const std::string& var) const {
  long long lcm = 1;
  for (const Rational& c : coeffs) lcm = lcm / std::gcd(lcm, c.den()) * c.den();
  std::string body;
  for (int i = degree(); i >= 0; --i) {
    Rational c = coeff(i) * Rational(lcm);
    assert(c.is_integer());
    long long v = c.num();
    if (v == 0) continue;
    if (!body.empty()) body += v > 0 ? "+" : "-";
    else if (v < 0) body += "-";
    long long a = v < 0 ? -v : v;
    if (a != 1 || i == 0) body += std::to_string(a);
    if (i >= 1) body += var;
    if (i == 2) body += "^2";
  }
  if (body.empty()) body = "0";
  if (lcm == 1) return body;
  return "(" + body + ")/" + std::to_string(lcm);
}

IntPolynomial exact_polynomial_from_samples(long long first,
                                            const std::vector<long long>& values) {
  if (values.size() < 4)
    fail(ErrorKind::NotLowDegree,
         "need at least 4 samples to certify degree <= 2, got " +
             std::to_string(values.size()));
  std::vector<long long> d1, d2, d3;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) d1.push_back(values[i + 1] - values[i]);
  for (std::size_t i = 0; i + 1 < d1.size(); ++i) d2.push_back(d1[i + 1] - d1[i]);
  for (std::size_t i = 0; i + 1 < d2.size(); ++i) d3.push_back(d2[i + 1] - d2[i]);
  for (long long d : d3)
    if (d != 0)
      fail(ErrorKind::NotLowDegree, "third finite differences do not vanish (degree > 2)");

  // Newton forward form p(t) = v0 + d1*t + d2*t(t-1)/2 at t = l - first,
  // expanded into the monomial basis.
  Rational v0(values[0]), dd1(d1[0]), dd2(d2[0]);
  Rational c2 = dd2 / Rational(2);
  // p(l) = v0 + dd1*(l-first) + c2*(l-first)(l-first-1)
  Rational f(first);
  Rational b0 = v0 - dd1 * f + c2 * f * (f + Rational(1));
  Rational b1 = dd1 - c2 * (Rational(2) * f + Rational(1));
  IntPolynomial p{{b0, b1, c2}};
  for (std::size_t i = 0; i < values.size(); ++i)
    assert(p.eval(first + static_cast<long long>(i)) == Rational(values[i]));
  return p;
}

IntPolynomial fit_on_progression(long long first, long long step,
                                 const std::vector<long long>& values) {
  IntPolynomial q = exact_polynomial_from_samples(0, values);
  // substitute t = (l - first)/step
  Rational u = Rational(1, step);
  Rational v = Rational(-first, step);
  Rational a0 = q.coeff(0), a1 = q.coeff(1), a2 = q.coeff(2);
  IntPolynomial p{{a0 + a1 * v + a2 * v * v, a1 * u + Rational(2) * a2 * u * v, a2 * u * u}};
  for (std::size_t i = 0; i < values.size(); ++i)
    assert(p.eval(first + step * static_cast<long long>(i)) == Rational(values[i]));
  return p;
}

namespace {

IntPolynomial poly(Rational c0, Rational c1, Rational c2) { return IntPolynomial{{c0, c1, c2}}; }

// --- transcribed expected values for the two tables -------------------

struct RowFixture {
  RowId id;
  int table;
  std::string group;          // display label in the grammar of parse_group
  std::string cartan;
  RootFamily rel_family;
  bool is_family;             // false: single group, check fixed values only
  int l_min = 2;              // first sampled rank (families)
  bool parity_split = false;  // A-type best-choice columns
  std::function<RealFormSpec(int)> instantiate;
  std::function<std::vector<int>(int)> good;       // expected good roots at rank l
  std::function<long long(int, int)> psi_count;    // expected |Psi| at (l, gamma)
  std::function<long long(int, int)> nilrad;       // expected d-1 at (l, gamma)
  std::vector<long long> mults;                    // by increasing squared length
  IntPolynomial d_even, d_odd;  // best-choice d-1 (same when not parity split)
  IntPolynomial D_poly;
  Rational proportion;
  int fixed_rank = 0;  // fixed rows: the rank of the single group
};

std::vector<int> good_all(int l) {
  std::vector<int> v(static_cast<std::size_t>(l));
  for (int i = 1; i <= l; ++i) v[static_cast<std::size_t>(i) - 1] = i;
  return v;
}

RealFormSpec make_pq(Family f, int p, int q) { return RealFormSpec{f, p, q, std::nullopt}; }

RealFormSpec make_cx(RootFamily f, int l) {
  RealFormSpec g;
  g.family = Family::Complex;
  g.complex_type = RootSystemType(f, l);
  return g;
}

const std::vector<RowFixture>& fixtures() {
  static const std::vector<RowFixture> rows = [] {
    std::vector<RowFixture> v;
    const Rational half(1, 2);

    auto a_family = [&](RowId id, int table, std::string group, std::string cartan,
                        long long m, std::function<RealFormSpec(int)> inst,
                        IntPolynomial d_even, IntPolynomial d_odd, IntPolynomial D,
                        Rational prop) {
      RowFixture f;
      f.id = id;
      f.table = table;
      f.group = std::move(group);
      f.cartan = std::move(cartan);
      f.rel_family = RootFamily::A;
      f.is_family = true;
      f.parity_split = true;
      f.instantiate = std::move(inst);
      f.good = good_all;
      f.psi_count = [](int l, int i) { return static_cast<long long>(i) * (l + 1 - i); };
      f.nilrad = [m](int l, int i) { return m * i * (l + 1 - i); };
      f.mults = {m};
      f.d_even = std::move(d_even);
      f.d_odd = std::move(d_odd);
      f.D_poly = std::move(D);
      f.proportion = prop;
      v.push_back(std::move(f));
    };

    auto c_family = [&](RowId id, int table, std::string group, std::string cartan,
                        long long m_short, long long m_long,
                        std::function<RealFormSpec(int)> inst, IntPolynomial d,
                        IntPolynomial D, Rational prop) {
      RowFixture f;
      f.id = id;
      f.table = table;
      f.group = std::move(group);
      f.cartan = std::move(cartan);
      f.rel_family = RootFamily::C;
      f.is_family = true;
      f.instantiate = std::move(inst);
      f.good = [](int l) { return std::vector<int>{l}; };
      f.psi_count = [](int l, int) { return static_cast<long long>(l) * (l + 1) / 2; };
      f.nilrad = [m_short, m_long](int l, int) {
        return m_short * l * (l - 1) / 2 + m_long * l;
      };
      f.mults = {m_short, m_long};
      f.d_even = f.d_odd = std::move(d);
      f.D_poly = std::move(D);
      f.proportion = prop;
      v.push_back(std::move(f));
    };

    auto d_family = [&](RowId id, int table, std::string group, std::string cartan,
                        long long m, std::function<RealFormSpec(int)> inst, IntPolynomial d,
                        IntPolynomial D, Rational prop) {
      RowFixture f;
      f.id = id;
      f.table = table;
      f.group = std::move(group);
      f.cartan = std::move(cartan);
      f.rel_family = RootFamily::D;
      f.is_family = true;
      f.l_min = 4;
      f.instantiate = std::move(inst);
      f.good = [](int l) { return std::vector<int>{1, l - 1, l}; };
      f.psi_count = [](int l, int gamma) {
        return gamma == 1 ? 2LL * (l - 1) : static_cast<long long>(l) * (l - 1) / 2;
      };
      f.nilrad = [m](int l, int gamma) {
        return m * (gamma == 1 ? 2LL * (l - 1) : static_cast<long long>(l) * (l - 1) / 2);
      };
      f.mults = {m};
      f.d_even = f.d_odd = std::move(d);
      f.D_poly = std::move(D);
      f.proportion = prop;
      v.push_back(std::move(f));
    };

    auto fixed = [&](RowId id, int table, std::string group, std::string cartan,
                     RootFamily rel, int rank, RealFormSpec g, std::vector<int> good_set,
                     long long psi_n, long long dm1, std::vector<long long> mults,
                     long long D, Rational prop) {
      RowFixture f;
      f.id = id;
      f.table = table;
      f.group = std::move(group);
      f.cartan = std::move(cartan);
      f.rel_family = rel;
      f.is_family = false;
      f.fixed_rank = rank;
      f.instantiate = [g](int) { return g; };
      f.good = [good_set](int) { return good_set; };
      f.psi_count = [psi_n](int, int) { return psi_n; };
      f.nilrad = [dm1](int, int) { return dm1; };
      f.mults = std::move(mults);
      f.d_even = f.d_odd = poly(Rational(dm1), Rational(0), Rational(0));
      f.D_poly = poly(Rational(D), Rational(0), Rational(0));
      f.proportion = prop;
      v.push_back(std::move(f));
    };

    // ----- table 1: real admissible groups -----
    a_family(RowId::AI, 1, "SL(l+1,R)", "A I", 1,
             [](int l) { return make_pq(Family::SL_R, l + 1, 0); },
             poly(Rational(0), half, Rational(1, 4)),          // l(l+2)/4, even l
             poly(Rational(1, 4), half, Rational(1, 4)),       // (l+1)^2/4, odd l
             poly(Rational(0), Rational(3, 2), half), half);   // D = l(l+3)/2
    a_family(RowId::AII, 1, "SL(l+1,H)", "A II", 4,
             [](int l) { return make_pq(Family::SL_H, l + 1, 0); },
             poly(Rational(0), Rational(2), Rational(1)),      // l(l+2)
             poly(Rational(1), Rational(2), Rational(1)),      // (l+1)^2
             poly(Rational(0), Rational(3), Rational(2)), half);  // D = l(2l+3)
    c_family(RowId::AIII, 1, "SU(l,l)", "A III", 2, 1,
             [](int l) { return make_pq(Family::SU, l, l); },
             poly(Rational(0), Rational(0), Rational(1)),      // d-1 = l^2
             poly(Rational(0), Rational(0), Rational(2)), half);  // D = 2l^2
    c_family(RowId::CI, 1, "Sp(2l,R)", "C I", 1, 1,
             [](int l) { return make_pq(Family::Sp_R, l, 0); },
             poly(Rational(0), half, half),                    // d-1 = l(l+1)/2
             poly(Rational(0), Rational(1), Rational(1)), half);  // D = l(l+1)
    c_family(RowId::CII, 1, "Sp(l,l)", "C II", 4, 3,
             [](int l) { return make_pq(Family::Sp_PQ, l, l); },
             poly(Rational(0), Rational(1), Rational(2)),      // d-1 = 2l^2+l
             poly(Rational(0), Rational(0), Rational(4)), half);  // D = 4l^2
    d_family(RowId::DI, 1, "SO(l,l)", "D I", 1,
             [](int l) { return make_pq(Family::SO, l, l); },
             poly(Rational(0), Rational(-1, 2), half),         // best d-1 = l(l-1)/2
             poly(Rational(0), Rational(0), Rational(1)), half);  // D = l^2
    c_family(RowId::DIII, 1, "SO*(4l)", "D III", 4, 1,
             [](int l) { return make_pq(Family::SO_Star, 2 * l, 0); },
             poly(Rational(0), Rational(-1), Rational(2)),     // d-1 = 2l^2-l
             poly(Rational(0), Rational(-2), Rational(4)), half);  // D = 2l(2l-1)
    fixed(RowId::EI, 1, "E6^6", "E I", RootFamily::E, 6,
          RealFormSpec{Family::E6_Split, 0, 0, std::nullopt}, {1, 6}, 16, 16, {1}, 42,
          Rational(5, 14));
    fixed(RowId::EIV, 1, "E6^2", "E IV", RootFamily::A, 2,
          RealFormSpec{Family::E6_Rank2, 0, 0, std::nullopt}, {1, 2}, 2, 16, {8}, 26,
          Rational(15, 26));
    fixed(RowId::EV, 1, "E7^7", "E V", RootFamily::E, 7,
          RealFormSpec{Family::E7_Split, 0, 0, std::nullopt}, {7}, 27, 27, {1}, 70,
          Rational(13, 35));
    fixed(RowId::EVII, 1, "E7^3", "E VII", RootFamily::C, 3,
          RealFormSpec{Family::E7_Rank3, 0, 0, std::nullopt}, {3}, 6, 27, {8, 1}, 54,
          Rational(13, 27));

    // ----- table 2: complex groups viewed as real -----
    a_family(RowId::SL_C, 2, "SL(l+1,C)", "complex", 2,
             [](int l) { return make_cx(RootFamily::A, l); },
             poly(Rational(0), Rational(1), half),             // l(l+2)/2
             poly(half, Rational(1), half),                    // (l+1)^2/2
             poly(Rational(0), Rational(2), Rational(1)), half);  // D = l(l+2)
    {
      RowFixture f;
      f.id = RowId::SO_ODD_C;
      f.table = 2;
      f.group = "SO(2l+1,C)";
      f.cartan = "complex";
      f.rel_family = RootFamily::B;
      f.is_family = true;
      f.instantiate = [](int l) { return make_cx(RootFamily::B, l); };
      f.good = [](int) { return std::vector<int>{1}; };
      f.psi_count = [](int l, int) { return 2LL * l - 1; };
      f.nilrad = [](int l, int) { return 4LL * l - 2; };
      f.mults = {2, 2};  // both length classes carry the complex multiplicity
      f.d_even = f.d_odd = poly(Rational(-2), Rational(4), Rational(0));  // 4l-2
      f.D_poly = poly(Rational(0), Rational(1), Rational(2));             // l(2l+1)
      f.proportion = Rational(0);
      v.push_back(std::move(f));
    }
    c_family(RowId::SP_C, 2, "Sp(2l,C)", "complex", 2, 2,
             [](int l) { return make_cx(RootFamily::C, l); },
             poly(Rational(0), Rational(1), Rational(1)),      // d-1 = l(l+1)
             poly(Rational(0), Rational(1), Rational(2)), half);  // D = l(2l+1)
    d_family(RowId::SO_EVEN_C, 2, "SO(2l,C)", "complex", 2,
             [](int l) { return make_cx(RootFamily::D, l); },
             poly(Rational(0), Rational(-1), Rational(1)),     // best d-1 = l(l-1)
             poly(Rational(0), Rational(-1), Rational(2)), half);  // D = l(2l-1)
    fixed(RowId::E6_C, 2, "E6(C)", "complex", RootFamily::E, 6, make_cx(RootFamily::E, 6),
          {1, 6}, 16, 32, {2}, 78, Rational(31, 78));
    fixed(RowId::E7_C, 2, "E7(C)", "complex", RootFamily::E, 7, make_cx(RootFamily::E, 7),
          {7}, 27, 54, {2}, 133, Rational(53, 133));
    return v;
  }();
  return rows;
}

const RowFixture& fixture(RowId id) {
  for (const RowFixture& f : fixtures())
    if (f.id == id) return f;
  fail(ErrorKind::BadIndex, "unknown table row");
}

// --- row computation (everything below is derived, not transcribed) ---

struct RowData {
  const RowFixture* fx;
  std::vector<int> ranks;                       // sampled ranks (families)
  std::vector<std::vector<int>> good_sets;      // per rank
  std::vector<long long> best_d, D_values;      // per rank
  std::vector<std::vector<long long>> psi_per_good, d_per_good;  // per rank, per good root
  std::vector<long long> mult_list;             // by increasing sq length
  IntPolynomial d_fit_even, d_fit_odd, D_fit;
  Rational proportion{0};
  std::string relative;
};

std::vector<int> sample_ranks(const RowFixture& fx) {
  std::vector<int> ranks;
  for (int l = fx.l_min; l <= 8; ++l) ranks.push_back(l);
  if (fx.parity_split) ranks.push_back(9);  // 4 odd samples for the parity fit
  return ranks;
}

RowData compute_row(RowId id) {
  const RowFixture& fx = fixture(id);
  RowData row;
  row.fx = &fx;
  row.ranks = fx.is_family ? sample_ranks(fx) : std::vector<int>{fx.fixed_rank};

  for (int l : row.ranks) {
    RealFormSpec g = fx.instantiate(l);
    RestrictedDatum datum = restricted_root_datum(g);
    RootSystem rs = build_root_system(datum.rs_type);
    GoodRootReport report = good_roots(rs);
    StripReport strip = strip_report(g);

    row.good_sets.push_back(report.good_roots);
    row.best_d.push_back(strip.d_minus_1);
    row.D_values.push_back(strip.D);
    std::vector<long long> psis, dims;
    for (int gamma : report.good_roots) {
      psis.push_back(static_cast<long long>(psi(rs, gamma).size()));
      dims.push_back(dim_nilradical(datum, gamma));
    }
    row.psi_per_good.push_back(std::move(psis));
    row.d_per_good.push_back(std::move(dims));
    if (l == row.ranks.front()) {
      for (const auto& [len, m] : datum.mult) {
        (void)len;
        row.mult_list.push_back(m);
      }
      row.relative = fx.is_family
                         ? std::string(family_name(datum.rs_type.family)) + "_l"
                         : datum.rs_type.name();
    }
  }

  if (fx.is_family) {
    auto values_where = [&](auto pred, const std::vector<long long>& src) {
      std::vector<long long> out;
      for (std::size_t i = 0; i < row.ranks.size(); ++i)
        if (pred(row.ranks[i])) out.push_back(src[i]);
      return out;
    };
    if (fx.parity_split) {
      int e0 = fx.l_min % 2 == 0 ? fx.l_min : fx.l_min + 1;
      int o0 = fx.l_min % 2 == 1 ? fx.l_min : fx.l_min + 1;
      row.d_fit_even =
          fit_on_progression(e0, 2, values_where([](int l) { return l % 2 == 0; }, row.best_d));
      row.d_fit_odd =
          fit_on_progression(o0, 2, values_where([](int l) { return l % 2 == 1; }, row.best_d));
    } else {
      row.d_fit_even = row.d_fit_odd = exact_polynomial_from_samples(fx.l_min, row.best_d);
    }
    std::vector<long long> D_consecutive;
    for (std::size_t i = 0; i < row.ranks.size() && row.ranks[i] <= 8; ++i)
      D_consecutive.push_back(row.D_values[i]);
    row.D_fit = exact_polynomial_from_samples(fx.l_min, D_consecutive);
    row.proportion = row.d_fit_even.coeff(2) / row.D_fit.coeff(2);
  } else {
    row.d_fit_even = row.d_fit_odd = poly(Rational(row.best_d[0]), Rational(0), Rational(0));
    row.D_fit = poly(Rational(row.D_values[0]), Rational(0), Rational(0));
    row.proportion = Rational(row.best_d[0] - 1, row.D_values[0]);
  }
  return row;
}

// symbolic display of the good-root set, recovered from the sampled sets
std::string good_display(const RowData& row) {
  if (!row.fx->is_family) {
    std::string s;
    for (int i : row.good_sets[0]) s += (s.empty() ? "alpha_" : ", alpha_") + std::to_string(i);
    return s;
  }
  bool all = true;
  for (std::size_t i = 0; i < row.ranks.size(); ++i)
    if (static_cast<int>(row.good_sets[i].size()) != row.ranks[i]) all = false;
  if (all) return "any alpha_i";

  std::size_t slots = row.good_sets[0].size();
  std::string s;
  for (std::size_t j = 0; j < slots; ++j) {
    bool constant = true, from_top = true;
    for (std::size_t i = 0; i < row.ranks.size(); ++i) {
      if (row.good_sets[i][j] != row.good_sets[0][j]) constant = false;
      if (row.ranks[i] - row.good_sets[i][j] != row.ranks[0] - row.good_sets[0][j])
        from_top = false;
    }
    std::string name;
    if (constant)
      name = "alpha_" + std::to_string(row.good_sets[0][j]);
    else if (from_top) {
      int off = row.ranks[0] - row.good_sets[0][j];
      name = off == 0 ? "alpha_l" : "alpha_(l-" + std::to_string(off) + ")";
    } else
      name = "alpha_?";
    s += (s.empty() ? "" : ", ") + name;
  }
  return s;
}

// Fits f(i, l) = M * i * (l + c - i) through per-good-root samples of an
// "any alpha_i" row; the A-family cells all have this shape.
bool fit_bilinear(const RowData& row, const std::vector<std::vector<long long>>& per_good,
                  long long& M, long long& c) {
  // use (i=1, l) twice to solve M(l + c - 1), then verify everything
  long long l1 = row.ranks[0], l2 = row.ranks[1];
  long long f1 = per_good[0][0], f2 = per_good[1][0];
  // f = M*(l + c - 1) => M = (f2 - f1)/(l2 - l1)
  if ((f2 - f1) % (l2 - l1) != 0) return false;
  M = (f2 - f1) / (l2 - l1);
  if (M == 0 || f1 % M != 0) return false;
  c = f1 / M - l1 + 1;
  for (std::size_t s = 0; s < row.ranks.size(); ++s) {
    long long l = row.ranks[s];
    for (std::size_t j = 0; j < per_good[s].size(); ++j) {
      long long i = row.good_sets[s][j];
      if (per_good[s][j] != M * i * (l + c - i)) return false;
    }
  }
  return true;
}

std::string bilinear_str(long long M, long long c) {
  std::string s;
  if (M != 1) s += std::to_string(M);
  s += "i(l";
  if (c > 0) s += "+" + std::to_string(c);
  if (c < 0) s += "-" + std::to_string(-c);
  s += "-i)";
  return s;
}

std::string per_good_display(const RowData& row,
                             const std::vector<std::vector<long long>>& per_good,
                             const IntPolynomial& fit_even, const IntPolynomial& fit_odd,
                             bool best_only) {
  const RowFixture& fx = *row.fx;
  if (!fx.is_family) return std::to_string(per_good[0][0]);

  if (static_cast<int>(row.good_sets[0].size()) == row.ranks[0]) {
    long long M, c;
    if (fit_bilinear(row, per_good, M, c)) {
      std::string s = bilinear_str(M, c);
      if (best_only) {
        if (fit_even == fit_odd) return s + "; best: " + fit_even.str();
        return s + "; best: " + fit_even.str() + " (even l), " + fit_odd.str() + " (odd l)";
      }
      return s;
    }
  }

  // one polynomial per distinct good-root slot pattern
  std::vector<std::string> parts;
  std::size_t slots = row.good_sets[0].size();
  std::vector<IntPolynomial> fits;
  for (std::size_t j = 0; j < slots; ++j) {
    std::vector<long long> vals;
    for (std::size_t s = 0; s < row.ranks.size(); ++s)
      if (row.ranks[s] <= 8) vals.push_back(per_good[s][j]);
    fits.push_back(exact_polynomial_from_samples(fx.l_min, vals));
  }
  bool all_same = std::all_of(fits.begin(), fits.end(),
                              [&](const IntPolynomial& f) { return f == fits[0]; });
  if (all_same) return fits[0].str();
  // group consecutive equal fits (D-type rows: alpha_1 vs the two forks)
  std::string names = good_display(row);
  std::vector<std::string> slot_names;
  {
    std::stringstream ss(names);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty() && item[0] == ' ') item.erase(0, 1);
      slot_names.push_back(item);
    }
  }
  for (std::size_t j = 0; j < slots; ++j) {
    bool dup = false;
    for (std::size_t k = 0; k < j; ++k)
      if (fits[k] == fits[j]) dup = true;
    if (dup) continue;
    std::string who;
    for (std::size_t k = 0; k < slots; ++k)
      if (fits[k] == fits[j]) who += (who.empty() ? "" : ",") + slot_names[k];
    parts.push_back(fits[j].str() + " for " + who);
  }
  std::string s;
  for (const std::string& p : parts) s += (s.empty() ? "" : "; ") + p;
  return s;
}

std::string mult_display(const RowData& row) {
  bool same = std::all_of(row.mult_list.begin(), row.mult_list.end(),
                          [&](long long m) { return m == row.mult_list[0]; });
  if (same) return std::to_string(row.mult_list[0]);
  std::string s;
  for (long long m : row.mult_list) s += (s.empty() ? "" : " and ") + std::to_string(m);
  return s;
}

std::string d_display(const RowData& row) {
  if (!row.fx->is_family) return std::to_string(row.best_d[0]);
  if (row.fx->parity_split)
    return per_good_display(row, row.d_per_good, row.d_fit_even, row.d_fit_odd, true);
  return row.d_fit_even.str();
}

std::string D_display(const RowData& row) {
  if (!row.fx->is_family) return std::to_string(row.D_values[0]);
  return row.D_fit.str();
}

struct RenderedRow {
  std::string group, cartan, relative, good, psi, mult, d, D, proportion;
  int table;
};

RenderedRow render_row(RowId id) {
  RowData row = compute_row(id);
  RenderedRow r;
  r.table = row.fx->table;
  r.group = row.fx->group;
  r.cartan = row.fx->cartan;
  r.relative = row.relative;
  r.good = good_display(row);
  r.psi = per_good_display(row, row.psi_per_good, row.d_fit_even, row.d_fit_odd, false);
  r.mult = mult_display(row);
  r.d = d_display(row);
  r.D = D_display(row);
  r.proportion = row.proportion.str();
  return r;
}

}  // namespace

std::vector<RowInfo> paper_table_rows() {
  std::vector<RowInfo> out;
  for (const RowFixture& f : fixtures())
    out.push_back(RowInfo{f.id, f.table, f.group, f.cartan, f.is_family});
  return out;
}

Rational asymptotic_proportion(RowId id) {
  RowData row = compute_row(id);
  if (!row.fx->is_family) return row.proportion;
  if (row.d_fit_even.coeff(2) != row.d_fit_odd.coeff(2))
    fail(ErrorKind::NotLowDegree, "parity branches disagree in the leading coefficient");
  return row.d_fit_even.coeff(2) / row.D_fit.coeff(2);
}

std::string render_paper_tables(TableFormat format) {
  std::vector<RenderedRow> rows;
  for (const RowFixture& f : fixtures()) rows.push_back(render_row(f.id));

  std::ostringstream out;
  const char* headers[] = {"group",          "cartan type", "relative system",
                           "good root(s)",   "\\|Psi\\|",   "multiplicities",
                           "d-1 = dim N",    "D = dim X",   "proportion (d-2)/D"};
  switch (format) {
    case TableFormat::Markdown: {
      for (int table = 1; table <= 2; ++table) {
        out << (table == 1 ? "### Admissible simple real Lie groups\n\n"
                           : "\n### Complex simple Lie groups viewed as real groups\n\n");
        out << "|";
        for (const char* h : headers) out << " " << h << " |";
        out << "\n|";
        for (std::size_t i = 0; i < std::size(headers); ++i) out << "---|";
        out << "\n";
        for (const RenderedRow& r : rows) {
          if (r.table != table) continue;
          out << "| " << r.group << " | " << r.cartan << " | " << r.relative << " | " << r.good
              << " | " << r.psi << " | " << r.mult << " | " << r.d << " | " << r.D << " | "
              << r.proportion << " |\n";
        }
      }
      break;
    }
    case TableFormat::Csv: {
      out << "table,group,cartan,relative,good_roots,psi,multiplicities,d_minus_1,D,proportion\n";
      auto esc = [](const std::string& s) {
        if (s.find(',') == std::string::npos) return s;
        return "\"" + s + "\"";
      };
      for (const RenderedRow& r : rows)
        out << r.table << "," << esc(r.group) << "," << esc(r.cartan) << "," << esc(r.relative)
            << "," << esc(r.good) << "," << esc(r.psi) << "," << esc(r.mult) << "," << esc(r.d)
            << "," << esc(r.D) << "," << r.proportion << "\n";
      break;
    }
    case TableFormat::Json: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const RenderedRow& r : rows) {
        arr.push_back({{"table", r.table},
                       {"group", r.group},
                       {"cartan", r.cartan},
                       {"relative", r.relative},
                       {"good_roots", r.good},
                       {"psi", r.psi},
                       {"multiplicities", r.mult},
                       {"d_minus_1", r.d},
                       {"D", r.D},
                       {"proportion", r.proportion}});
      }
      out << arr.dump(2) << "\n";
      break;
    }
  }
  return out.str();
}

std::vector<std::string> check_paper_tables() {
  std::vector<std::string> bad;
  auto expect = [&](bool ok, const std::string& where, const std::string& detail) {
    if (!ok) bad.push_back(where + ": " + detail);
  };

  for (const RowFixture& fx : fixtures()) {
    RowData row = compute_row(fx.id);
    const std::string tag = "row " + fx.group;

    for (std::size_t s = 0; s < row.ranks.size(); ++s) {
      int l = row.ranks[s];
      const std::string at = tag + " @ l=" + std::to_string(l);
      RealFormSpec g = fx.instantiate(l);
      RestrictedDatum datum = restricted_root_datum(g);
      expect(datum.rs_type.family == fx.rel_family, at, "relative family mismatch");

      expect(row.good_sets[s] == fx.good(l), at, "good-root set mismatch");
      long long best_expected = 0;
      for (std::size_t j = 0; j < row.good_sets[s].size(); ++j) {
        int gamma = row.good_sets[s][j];
        long long want_psi = fx.psi_count(l, gamma);
        long long want_d = fx.nilrad(l, gamma);
        best_expected = std::max(best_expected, want_d);
        expect(row.psi_per_good[s][j] == want_psi, at,
               "|Psi|(alpha_" + std::to_string(gamma) + ") = " +
                   std::to_string(row.psi_per_good[s][j]) + ", expected " +
                   std::to_string(want_psi));
        expect(row.d_per_good[s][j] == want_d, at,
               "d-1(alpha_" + std::to_string(gamma) + ") = " +
                   std::to_string(row.d_per_good[s][j]) + ", expected " +
                   std::to_string(want_d));
      }
      expect(row.best_d[s] == best_expected, at, "best-choice d-1 mismatch");
      expect(Rational(row.D_values[s]) == fx.D_poly.eval(l), at,
             "D = " + std::to_string(row.D_values[s]) + ", expected " +
                 fx.D_poly.eval(l).str());
    }

    expect(row.mult_list == fx.mults, tag, "multiplicity list mismatch");
    expect(row.d_fit_even == fx.d_even, tag,
           "d-1 polynomial (even) = " + row.d_fit_even.str() + ", expected " + fx.d_even.str());
    expect(row.d_fit_odd == fx.d_odd, tag,
           "d-1 polynomial (odd) = " + row.d_fit_odd.str() + ", expected " + fx.d_odd.str());
    expect(row.D_fit == fx.D_poly, tag,
           "D polynomial = " + row.D_fit.str() + ", expected " + fx.D_poly.str());
    expect(row.proportion == fx.proportion, tag,
           "proportion = " + row.proportion.str() + ", expected " + fx.proportion.str());
  }
  return bad;
}

}  // namespace lpcoh
