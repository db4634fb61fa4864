#pragma once

#include <iosfwd>
#include <string>

#include "perron/rational.hpp"

namespace perron {

/// Value of the tropical semifield Q ∪ {+∞}: min is the additive and + the
/// multiplicative operation, with +∞ absorbing under + and neutral under min.
/// Doubles as the valuation codomain (the zero series has valuation +∞) and
/// as a series truncation bound.
class Trop {
 public:
  constexpr Trop() : inf_(true), val_() {}
  Trop(const Rational& v) : inf_(false), val_(v) {}
  Trop(std::int64_t v) : inf_(false), val_(v) {}

  static constexpr Trop infinity() { return Trop(); }

  bool is_inf() const { return inf_; }
  bool is_finite() const { return !inf_; }

  /// Finite value; throws on +∞.
  const Rational& finite() const {
    if (inf_) throw std::domain_error("Trop: +inf has no finite value");
    return val_;
  }

  friend Trop operator+(const Trop& a, const Trop& b) {
    if (a.inf_ || b.inf_) return infinity();
    return Trop(a.val_ + b.val_);
  }
  friend Trop operator-(const Trop& a, const Rational& b) {
    if (a.inf_) return infinity();
    return Trop(a.val_ - b);
  }

  friend Trop min(const Trop& a, const Trop& b) { return a < b ? a : b; }

  friend bool operator==(const Trop& a, const Trop& b) {
    if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
    return a.val_ == b.val_;
  }
  friend bool operator!=(const Trop& a, const Trop& b) { return !(a == b); }
  friend bool operator<(const Trop& a, const Trop& b) {
    if (a.inf_) return false;
    if (b.inf_) return true;
    return a.val_ < b.val_;
  }
  friend bool operator>(const Trop& a, const Trop& b) { return b < a; }
  friend bool operator<=(const Trop& a, const Trop& b) { return !(b < a); }
  friend bool operator>=(const Trop& a, const Trop& b) { return !(a < b); }

  std::string str() const { return inf_ ? "+inf" : val_.str(); }

 private:
  bool inf_;
  Rational val_;
};

std::ostream& operator<<(std::ostream& os, const Trop& t);

}  // namespace perron
