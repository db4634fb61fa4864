#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <vector>

#include "perron/config.hpp"
#include "perron/errors.hpp"
#include "perron/rational.hpp"
#include "perron/trop.hpp"

namespace perron {

/// One monomial c * t^e of a truncated Puiseux series.
struct Term {
  Rational exp;
  double coef;
  friend bool operator==(const Term& a, const Term& b) {
    return a.exp == b.exp && a.coef == b.coef;
  }
};

/// Truncated real Puiseux series: exact rational exponents, double
/// coefficients, and an explicit knowledge bound `trunc` (inclusive — terms
/// with exponent <= trunc and no stored entry are zero, anything beyond is
/// unknown). The zero series has no terms and valuation +inf.
class PuiseuxSeries {
 public:
  PuiseuxSeries() : trunc_(Trop::infinity()) {}

  /// Exact constant (trunc +inf).
  static PuiseuxSeries constant(double c);
  /// c * t^e, known exactly.
  static PuiseuxSeries monomial(double c, const Rational& e);
  /// Build from a term list; sorts, merges and drops negligible coefficients.
  static PuiseuxSeries from_terms(std::vector<Term> terms, Trop trunc = Trop::infinity());
  static PuiseuxSeries zero(Trop trunc = Trop::infinity()) { return from_terms({}, trunc); }

  const std::vector<Term>& terms() const { return terms_; }
  Trop trunc() const { return trunc_; }
  bool is_zero() const { return terms_.empty(); }

  /// Valuation: exponent of the first term, +inf for the zero series.
  Trop val() const { return terms_.empty() ? Trop::infinity() : Trop(terms_.front().exp); }

  double lead_coef() const { return terms_.empty() ? 0.0 : terms_.front().coef; }

  /// Coefficient at exponent e. Asking beyond the truncation bound is an
  /// error, not zero.
  double coeff(const Rational& e) const;

  /// Coefficient at e if e <= trunc, else 0. For contexts where "not yet
  /// known" deliberately counts as no contribution.
  double coeff_or_unknown_zero(const Rational& e) const;

  /// Least common denominator of the stored exponents (>= 1).
  std::int64_t ramification() const;

  /// Drop terms with exponent > bound and lower the truncation to bound.
  PuiseuxSeries truncated(const Trop& bound) const;

  /// Multiply by t^e.
  PuiseuxSeries shifted(const Rational& e) const;

  PuiseuxSeries scaled(double c) const;

  friend PuiseuxSeries operator-(const PuiseuxSeries& x) { return x.scaled(-1.0); }

  std::string str() const;

 private:
  std::vector<Term> terms_;  // strictly increasing exponents, nonzero coefficients
  Trop trunc_;
};

PuiseuxSeries add(const PuiseuxSeries& x, const PuiseuxSeries& y);
PuiseuxSeries sub(const PuiseuxSeries& x, const PuiseuxSeries& y);
PuiseuxSeries mul(const PuiseuxSeries& x, const PuiseuxSeries& y);

inline PuiseuxSeries operator+(const PuiseuxSeries& x, const PuiseuxSeries& y) { return add(x, y); }
inline PuiseuxSeries operator-(const PuiseuxSeries& x, const PuiseuxSeries& y) { return sub(x, y); }
inline PuiseuxSeries operator*(const PuiseuxSeries& x, const PuiseuxSeries& y) { return mul(x, y); }

inline Trop val(const PuiseuxSeries& x) { return x.val(); }

/// Multiplicative inverse modulo I(order): returns y with x*y = 1 up to terms
/// of exponent > order. Throws ZeroDivision on the zero series.
PuiseuxSeries invert(const PuiseuxSeries& x, const Rational& order);

using PuiseuxVector = std::vector<PuiseuxSeries>;

/// Dense grid of truncated Puiseux series with a shared entry layout.
class PuiseuxMatrix {
 public:
  PuiseuxMatrix() : rows_(0), cols_(0) {}
  PuiseuxMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  PuiseuxSeries& operator()(int r, int c) { return entries_[static_cast<size_t>(r) * cols_ + c]; }
  const PuiseuxSeries& operator()(int r, int c) const {
    return entries_[static_cast<size_t>(r) * cols_ + c];
  }

  /// min of entry valuations; +inf for the zero matrix.
  Trop val() const;

  /// lcm of entry ramifications.
  std::int64_t ramification() const;

  /// min of entry truncation bounds.
  Trop trunc() const;

  PuiseuxMatrix submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const;

  std::string str() const;

 private:
  int rows_, cols_;
  std::vector<PuiseuxSeries> entries_;
};

PuiseuxMatrix mat_add(const PuiseuxMatrix& A, const PuiseuxMatrix& B);
PuiseuxMatrix mat_mul(const PuiseuxMatrix& A, const PuiseuxMatrix& B);
PuiseuxVector mat_vec(const PuiseuxMatrix& A, const PuiseuxVector& x);

/// Coefficient matrix of t^e: zero where an entry has no term, error if an
/// entry's truncation bound is below e.
Eigen::MatrixXd coeff_matrix(const PuiseuxMatrix& A, const Rational& e);

/// Leading term Y_v and its exponent v. Throws ZeroMatrix when all entries
/// vanish to their truncation.
std::pair<Rational, Eigen::MatrixXd> leading_term(const PuiseuxMatrix& A);

/// delta^{-1} Y delta with delta = diag(t^{r_1},...,t^{r_n}): entry (i,j)
/// picks up t^{r_j - r_i}.
PuiseuxMatrix diag_conjugate(const PuiseuxMatrix& A, const std::vector<Rational>& r);

/// A - lambda * Id.
PuiseuxMatrix subtract_scalar(const PuiseuxMatrix& A, const PuiseuxSeries& lambda);

/// Solve A x = b modulo I(order) by elimination with minimal-valuation
/// pivoting (fraction-free forward pass, series back-substitution). Throws
/// SingularLeadingTerm when no usable pivot exists.
PuiseuxVector solve_linear(const PuiseuxMatrix& A, const PuiseuxVector& b, const Rational& order);

/// Positivity classes in the ordered-field sense plus the coefficientwise
/// subtraction-free refinement.
enum class PositivityClass { positive, nonnegative, subtraction_free, general };

/// subtraction_free: every entry nonzero, positive leading coefficient and no
/// negative stored coefficient. positive: every entry nonzero with positive
/// leading coefficient. nonnegative: zero entries allowed, nonzero ones
/// positive-leading. general: anything else.
PositivityClass classify(const PuiseuxMatrix& A, const Tolerances& tol = default_tolerances());

/// Valuation of (Y - lambda Id) x as far as the truncations allow; +inf when
/// every computable term vanishes.
Trop residual_valuation(const PuiseuxMatrix& Y, const PuiseuxSeries& lambda,
                        const PuiseuxVector& x);

std::string format_series(const PuiseuxSeries& s);

}  // namespace perron
