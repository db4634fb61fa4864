#include "perron/puiseux.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace perron {

Tolerances& default_tolerances() {
  static Tolerances tol;
  return tol;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }
std::ostream& operator<<(std::ostream& os, const Trop& t) { return os << t.str(); }

// ---------------------------------------------------------------------------
// PuiseuxSeries

PuiseuxSeries PuiseuxSeries::constant(double c) {
  return from_terms({{Rational(0), c}});
}

PuiseuxSeries PuiseuxSeries::monomial(double c, const Rational& e) {
  return from_terms({{e, c}});
}

PuiseuxSeries PuiseuxSeries::from_terms(std::vector<Term> terms, Trop trunc) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.exp < b.exp; });
  PuiseuxSeries out;
  out.trunc_ = trunc;
  double scale = 0.0;
  for (const Term& t : terms) scale = std::max(scale, std::fabs(t.coef));
  const double cutoff = default_tolerances().zero_rel * scale;
  for (const Term& t : terms) {
    if (trunc.is_finite() && Rational(t.exp) > trunc.finite()) continue;
    if (!out.terms_.empty() && out.terms_.back().exp == t.exp) {
      out.terms_.back().coef += t.coef;
    } else {
      out.terms_.push_back(t);
    }
  }
  auto drop = [&](const Term& t) { return std::fabs(t.coef) <= cutoff; };
  out.terms_.erase(std::remove_if(out.terms_.begin(), out.terms_.end(), drop), out.terms_.end());
  return out;
}

double PuiseuxSeries::coeff(const Rational& e) const {
  if (trunc_.is_finite() && e > trunc_.finite())
    throw TruncationExceeded("coefficient at t^" + e.str() + " beyond truncation t^" +
                             trunc_.str());
  return coeff_or_unknown_zero(e);
}

double PuiseuxSeries::coeff_or_unknown_zero(const Rational& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const Rational& x) { return t.exp < x; });
  if (it != terms_.end() && it->exp == e) return it->coef;
  return 0.0;
}

std::int64_t PuiseuxSeries::ramification() const {
  std::int64_t q = 1;
  for (const Term& t : terms_) q = lcm64(q, denominator_of(t.exp));
  return q;
}

PuiseuxSeries PuiseuxSeries::truncated(const Trop& bound) const {
  PuiseuxSeries out;
  out.trunc_ = min(trunc_, bound);
  for (const Term& t : terms_)
    if (!out.trunc_.is_finite() || Rational(t.exp) <= out.trunc_.finite()) out.terms_.push_back(t);
  return out;
}

PuiseuxSeries PuiseuxSeries::shifted(const Rational& e) const {
  PuiseuxSeries out;
  out.trunc_ = trunc_.is_finite() ? Trop(trunc_.finite() + e) : Trop::infinity();
  out.terms_ = terms_;
  for (Term& t : out.terms_) t.exp += e;
  return out;
}

PuiseuxSeries PuiseuxSeries::scaled(double c) const {
  if (c == 0.0) return zero(trunc_);
  PuiseuxSeries out;
  out.trunc_ = trunc_;
  out.terms_ = terms_;
  for (Term& t : out.terms_) t.coef *= c;
  return out;
}

PuiseuxSeries add(const PuiseuxSeries& x, const PuiseuxSeries& y) {
  std::vector<Term> all;
  all.reserve(x.terms().size() + y.terms().size());
  all.insert(all.end(), x.terms().begin(), x.terms().end());
  all.insert(all.end(), y.terms().begin(), y.terms().end());
  return PuiseuxSeries::from_terms(std::move(all), min(x.trunc(), y.trunc()));
}

PuiseuxSeries sub(const PuiseuxSeries& x, const PuiseuxSeries& y) { return add(x, -y); }

PuiseuxSeries mul(const PuiseuxSeries& x, const PuiseuxSeries& y) {
  // Product knowledge bound: min(x.trunc + val y, y.trunc + val x).
  Trop bound = Trop::infinity();
  if (x.trunc().is_finite()) bound = min(bound, Trop(x.trunc().finite()) + y.val());
  if (y.trunc().is_finite()) bound = min(bound, Trop(y.trunc().finite()) + x.val());
  if (x.is_zero() || y.is_zero()) return PuiseuxSeries::zero(bound);
  std::vector<Term> prod;
  prod.reserve(x.terms().size() * y.terms().size());
  for (const Term& a : x.terms())
    for (const Term& b : y.terms()) {
      Rational e = a.exp + b.exp;
      if (bound.is_finite() && e > bound.finite()) continue;
      prod.push_back({e, a.coef * b.coef});
    }
  return PuiseuxSeries::from_terms(std::move(prod), bound);
}

PuiseuxSeries invert(const PuiseuxSeries& x, const Rational& order) {
  if (x.is_zero()) throw ZeroDivision("invert: zero series");
  const Rational v = x.val().finite();
  const double c0 = x.lead_coef();
  // Normalized tail u with x = c0 t^v (1 + u), val(u) > 0.
  PuiseuxSeries u = sub(x.shifted(-v).scaled(1.0 / c0), PuiseuxSeries::constant(1.0));
  // Geometric series 1 - u + u^2 - ... up to relative order (order + v).
  const Rational rel = order + v;
  PuiseuxSeries acc = PuiseuxSeries::constant(1.0).truncated(Trop(rel));
  if (!u.is_zero()) {
    const Rational uv = u.val().finite();
    if (!(uv > Rational(0))) throw Error("invert: series not normalized");
    PuiseuxSeries term = PuiseuxSeries::constant(1.0);
    double sign = 1.0;
    Rational reached(0);
    while (reached <= rel) {
      term = mul(term, u).truncated(Trop(rel));
      sign = -sign;
      if (term.is_zero()) break;
      acc = add(acc, term.scaled(sign));
      reached += uv;
    }
  }
  return acc.shifted(-v).scaled(1.0 / c0).truncated(Trop(order - v));
}

// ---------------------------------------------------------------------------
// PuiseuxMatrix

Trop PuiseuxMatrix::val() const {
  Trop v = Trop::infinity();
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) v = min(v, (*this)(r, c).val());
  return v;
}

std::int64_t PuiseuxMatrix::ramification() const {
  std::int64_t q = 1;
  for (const PuiseuxSeries& s : entries_) q = lcm64(q, s.ramification());
  return q;
}

Trop PuiseuxMatrix::trunc() const {
  Trop t = Trop::infinity();
  for (const PuiseuxSeries& s : entries_) t = min(t, s.trunc());
  return t;
}

PuiseuxMatrix PuiseuxMatrix::submatrix(const std::vector<int>& row_idx,
                                       const std::vector<int>& col_idx) const {
  PuiseuxMatrix out(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
  for (size_t r = 0; r < row_idx.size(); ++r)
    for (size_t c = 0; c < col_idx.size(); ++c) out((int)r, (int)c) = (*this)(row_idx[r], col_idx[c]);
  return out;
}

PuiseuxMatrix mat_add(const PuiseuxMatrix& A, const PuiseuxMatrix& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) throw DimensionMismatch("mat_add");
  PuiseuxMatrix C(A.rows(), A.cols());
  for (int r = 0; r < A.rows(); ++r)
    for (int c = 0; c < A.cols(); ++c) C(r, c) = add(A(r, c), B(r, c));
  return C;
}

PuiseuxMatrix mat_mul(const PuiseuxMatrix& A, const PuiseuxMatrix& B) {
  if (A.cols() != B.rows()) throw DimensionMismatch("mat_mul: inner dimensions disagree");
  PuiseuxMatrix C(A.rows(), B.cols());
  for (int r = 0; r < A.rows(); ++r)
    for (int c = 0; c < B.cols(); ++c) {
      PuiseuxSeries acc = PuiseuxSeries::zero();
      for (int k = 0; k < A.cols(); ++k) acc = add(acc, mul(A(r, k), B(k, c)));
      C(r, c) = acc;
    }
  return C;
}

PuiseuxVector mat_vec(const PuiseuxMatrix& A, const PuiseuxVector& x) {
  if (A.cols() != static_cast<int>(x.size())) throw DimensionMismatch("mat_vec");
  PuiseuxVector y(A.rows());
  for (int r = 0; r < A.rows(); ++r) {
    PuiseuxSeries acc = PuiseuxSeries::zero();
    for (int c = 0; c < A.cols(); ++c) acc = add(acc, mul(A(r, c), x[c]));
    y[r] = acc;
  }
  return y;
}

Eigen::MatrixXd coeff_matrix(const PuiseuxMatrix& A, const Rational& e) {
  Eigen::MatrixXd M(A.rows(), A.cols());
  for (int r = 0; r < A.rows(); ++r)
    for (int c = 0; c < A.cols(); ++c) M(r, c) = A(r, c).coeff(e);
  return M;
}

std::pair<Rational, Eigen::MatrixXd> leading_term(const PuiseuxMatrix& A) {
  Trop v = A.val();
  if (v.is_inf()) throw ZeroMatrix("leading_term: zero matrix");
  return {v.finite(), coeff_matrix(A, v.finite())};
}

PuiseuxMatrix diag_conjugate(const PuiseuxMatrix& A, const std::vector<Rational>& r) {
  if (static_cast<int>(r.size()) != A.rows() || A.rows() != A.cols())
    throw DimensionMismatch("diag_conjugate: shift count must equal matrix size");
  PuiseuxMatrix C(A.rows(), A.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) C(i, j) = A(i, j).shifted(r[j] - r[i]);
  return C;
}

PuiseuxMatrix subtract_scalar(const PuiseuxMatrix& A, const PuiseuxSeries& lambda) {
  PuiseuxMatrix C = A;
  for (int i = 0; i < A.rows(); ++i) C(i, i) = sub(A(i, i), lambda);
  return C;
}

PuiseuxVector solve_linear(const PuiseuxMatrix& A, const PuiseuxVector& b, const Rational& order) {
  const int n = A.rows();
  if (A.cols() != n || static_cast<int>(b.size()) != n) throw DimensionMismatch("solve_linear");

  // Working precision: pad the target to absorb valuation shifts during
  // elimination and final division.
  Rational pad(0);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      Trop v = A(r, c).val();
      if (v.is_finite() && v.finite() < Rational(0)) pad += -v.finite();
    }
  const Rational work = order + pad + Rational(2);

  // Augmented copy, truncated to working precision.
  std::vector<PuiseuxVector> M(n, PuiseuxVector(n + 1));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) M[r][c] = A(r, c).truncated(Trop(work));
    M[r][n] = b[r].truncated(Trop(work));
  }

  // Fraction-free forward elimination with minimal-valuation pivoting.
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int r = k; r < n; ++r) {
      if (M[r][k].is_zero()) continue;
      if (piv < 0 || M[r][k].val() < M[piv][k].val() ||
          (M[r][k].val() == M[piv][k].val() &&
           std::fabs(M[r][k].lead_coef()) > std::fabs(M[piv][k].lead_coef())))
        piv = r;
    }
    if (piv < 0) throw SingularLeadingTerm("solve_linear: column " + std::to_string(k) +
                                           " has no usable pivot");
    std::swap(M[k], M[piv]);
    for (int r = k + 1; r < n; ++r) {
      if (M[r][k].is_zero()) continue;
      PuiseuxSeries f = M[r][k];
      for (int c = k; c <= n; ++c)
        M[r][c] = sub(mul(M[k][k], M[r][c]), mul(f, M[k][c]));
      M[r][k] = PuiseuxSeries::zero(M[r][k].trunc());
    }
  }

  // Back substitution with series division.
  PuiseuxVector x(n);
  for (int i = n - 1; i >= 0; --i) {
    PuiseuxSeries num = M[i][n];
    for (int j = i + 1; j < n; ++j) num = sub(num, mul(M[i][j], x[j]));
    if (M[i][i].is_zero())
      throw SingularLeadingTerm("solve_linear: zero pivot in back substitution");
    Rational inv_order = work;
    if (num.val().is_finite() && num.val().finite() < Rational(0))
      inv_order += -num.val().finite();
    x[i] = mul(num, invert(M[i][i], inv_order)).truncated(Trop(work));
  }
  for (PuiseuxSeries& xi : x) xi = xi.truncated(Trop(order));
  return x;
}

PositivityClass classify(const PuiseuxMatrix& A, const Tolerances& tol) {
  bool any_zero = false;
  bool all_coeffs_nonneg = true;
  for (int r = 0; r < A.rows(); ++r)
    for (int c = 0; c < A.cols(); ++c) {
      const PuiseuxSeries& s = A(r, c);
      if (s.is_zero()) {
        any_zero = true;
        continue;
      }
      if (s.lead_coef() <= 0.0) return PositivityClass::general;
      for (const Term& t : s.terms())
        if (t.coef < -tol.nonneg_slack) all_coeffs_nonneg = false;
    }
  if (any_zero) return PositivityClass::nonnegative;
  if (all_coeffs_nonneg) return PositivityClass::subtraction_free;
  return PositivityClass::positive;
}

Trop residual_valuation(const PuiseuxMatrix& Y, const PuiseuxSeries& lambda,
                        const PuiseuxVector& x) {
  PuiseuxVector r = mat_vec(subtract_scalar(Y, lambda), x);
  Trop v = Trop::infinity();
  for (const PuiseuxSeries& s : r) v = min(v, s.val());
  return v;
}

// ---------------------------------------------------------------------------
// Formatting

namespace {

std::string format_coef(double c) {
  // Shortest decimal form that round-trips through strtod.
  char buf[64];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, c);
    if (std::strtod(buf, nullptr) == c) break;
  }
  return buf;
}

std::string format_power(const Rational& e) {
  if (e == Rational(1)) return "t";
  if (e.is_integer()) return "t^" + e.str();
  return "t^(" + e.str() + ")";
}

}  // namespace

std::string format_series(const PuiseuxSeries& s) {
  if (s.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : s.terms()) {
    double c = t.coef;
    if (first) {
      if (c < 0) { out += "-"; c = -c; }
    } else {
      out += (c < 0) ? " - " : " + ";
      if (c < 0) c = -c;
    }
    if (t.exp.is_zero()) {
      out += format_coef(c);
    } else if (c == 1.0) {
      out += format_power(t.exp);
    } else {
      out += format_coef(c) + "*" + format_power(t.exp);
    }
    first = false;
  }
  return out;
}

std::string PuiseuxSeries::str() const { return format_series(*this); }

std::string PuiseuxMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (int r = 0; r < rows_; ++r) {
    os << (r ? ",\n [" : "[");
    for (int c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).str();
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace perron
