#ifndef LPCOH_TABLES_HPP
#define LPCOH_TABLES_HPP

#include <string>
#include <vector>

#include "lpcoh/rational.hpp"

namespace lpcoh {

/// Polynomial of degree <= 2 with exact rational coefficients
/// (coeffs[i] multiplies l^i; trailing zeros are trimmed).
struct IntPolynomial {
  std::vector<Rational> coeffs;

  int degree() const;
  Rational coeff(int i) const;
  Rational eval(long long l) const;

  /// Canonical rendering over a common denominator, e.g. "(l^2+3l)/2".
  std::string str(const std::string& var = "l") const;

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b);
};

/// Fits the unique polynomial of degree <= 2 through consecutive integer
/// samples values[j] = p(first + j) by forward finite differences.
/// Throws NotLowDegree when fewer than 4 samples are given or any third
/// difference is nonzero.
IntPolynomial exact_polynomial_from_samples(long long first,
                                            const std::vector<long long>& values);

/// Same fit on the arithmetic progression first, first+step, ...
/// (used for the parity-split A-family columns).
IntPolynomial fit_on_progression(long long first, long long step,
                                 const std::vector<long long>& values);

/// Rows of the two summary tables, in paper order. Table 1 holds the
/// real admissible families and exceptional groups, table 2 the complex
/// ones.
enum class RowId {
  AI,       // SL(l+1,R)
  AII,      // SL(l+1,H)
  AIII,     // SU(l,l)
  CI,       // Sp(2l,R)
  CII,      // Sp(l,l)
  DI,       // SO(l,l)
  DIII,     // SO*(4l)
  EI,       // E6^6
  EIV,      // E6^2
  EV,       // E7^7
  EVII,     // E7^3
  SL_C,     // SL(l+1,C)
  SO_ODD_C, // SO(2l+1,C)
  SP_C,     // Sp(2l,C)
  SO_EVEN_C,// SO(2l,C)
  E6_C,     // E6(C)
  E7_C,     // E7(C)
};

struct RowInfo {
  RowId id;
  int table;  // 1 or 2
  std::string group;
  std::string cartan;
  bool is_family;
};

std::vector<RowInfo> paper_table_rows();

/// Families: ratio of the quadratic coefficients of d(l) and D(l)
/// (zero when d grows sub-quadratically). Fixed groups: (d-2)/D.
Rational asymptotic_proportion(RowId id);

enum class TableFormat { Markdown, Csv, Json };

/// Renders both tables with every cell computed through the root-system,
/// real-form and strip machinery; family columns are recovered as exact
/// polynomials from sampled ranks.
std::string render_paper_tables(TableFormat format);

/// Diffs the computed tables against the transcribed expected-values
/// fixture. Returns one message per mismatching cell; empty means clean.
std::vector<std::string> check_paper_tables();

}  // namespace lpcoh

#endif
