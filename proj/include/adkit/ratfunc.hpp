#pragma once

#include <iosfwd>
#include <string>

#include "adkit/poly.hpp"

namespace adkit {

/// Quotient num/den of polynomials, den != 0. No gcd reduction is attempted;
/// equality is decided by cross multiplication.
class RatFunc {
public:
  RatFunc() : num_(0), den_(1) {}
  RatFunc(int c) : num_(c), den_(1) {}
  RatFunc(const Rational& c) : num_(c), den_(1) {}
  RatFunc(const Poly& p) : num_(p), den_(1) {}
  RatFunc(const Poly& num, const Poly& den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  /// The polynomial num/den when den is constant; throws otherwise.
  Poly as_poly() const;

  /// Throws std::domain_error if the denominator vanishes at the point.
  Rational evaluate(const Assignment& at) const;
  RatFunc partial_evaluate(const Assignment& at) const;
  RatFunc inverse() const;

  std::string str() const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o) { return *this *= o.inverse(); }

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_); }

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ * b.den_ == b.num_ * a.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

private:
  void normalize();
  Poly num_, den_;
};

inline bool is_zero(const RatFunc& f) { return f.is_zero(); }
std::ostream& operator<<(std::ostream& os, const RatFunc& f);

} // namespace adkit
