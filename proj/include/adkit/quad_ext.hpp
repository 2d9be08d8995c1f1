#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "adkit/rational.hpp"

namespace adkit {

/// Element a + b*sqrt(d) of the quadratic field Q(sqrt d).
///
/// The radicand d is carried by every value. A value built from a plain
/// rational has no radicand yet (d == 0, b == 0) and adopts the radicand of
/// whatever it is combined with. Mixing two different radicands throws.
class QuadExt {
public:
  QuadExt() = default;
  QuadExt(int a) : a_(a) {}
  QuadExt(const Rational& a) : a_(a) {}
  /// Throws std::invalid_argument when d is the square of a rational.
  QuadExt(const Rational& a, const Rational& b, const Rational& d);

  static QuadExt sqrt_of(const Rational& d) { return QuadExt(Rational(0), Rational(1), d); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& radicand() const { return d_; }
  bool is_rational() const { return b_.is_zero(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  QuadExt conjugate() const;
  /// a^2 - b^2 d, the field norm; always rational.
  Rational norm() const { return a_ * a_ - b_ * b_ * d_; }
  /// Throws std::domain_error for zero.
  QuadExt inverse() const;

  std::string str() const;

  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o) { return *this *= o.inverse(); }

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
  friend QuadExt operator-(const QuadExt& x);

  friend bool operator==(const QuadExt& x, const QuadExt& y);
  friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

private:
  static Rational common_radicand(const QuadExt& x, const QuadExt& y);

  Rational a_, b_, d_;
};

inline bool is_zero(const QuadExt& x) { return x.is_zero(); }
std::ostream& operator<<(std::ostream& os, const QuadExt& x);

} // namespace adkit
