#include "adkit/quad_ext.hpp"

#include <ostream>

namespace adkit {

QuadExt::QuadExt(const Rational& a, const Rational& b, const Rational& d) : a_(a), b_(b), d_(d) {
  if (d.sqrt_exact())
    throw std::invalid_argument("radicand " + d.str() + " is a rational square; use Rational instead");
  if (b_.is_zero()) d_ = d;
}

Rational QuadExt::common_radicand(const QuadExt& x, const QuadExt& y) {
  if (x.d_.is_zero()) return y.d_;
  if (y.d_.is_zero() || x.d_ == y.d_) return x.d_;
  throw std::invalid_argument("mixing radicands " + x.d_.str() + " and " + y.d_.str());
}

QuadExt QuadExt::conjugate() const {
  QuadExt c = *this;
  c.b_ = -c.b_;
  return c;
}

QuadExt QuadExt::inverse() const {
  Rational n = norm();
  if (n.is_zero()) throw std::domain_error("inverse of zero in Q(sqrt d)");
  QuadExt c = conjugate();
  c.a_ /= n;
  c.b_ /= n;
  return c;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  d_ = common_radicand(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  d_ = common_radicand(*this, o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  d_ = common_radicand(*this, o);
  Rational na = a_ * o.a_ + b_ * o.b_ * d_;
  Rational nb = a_ * o.b_ + o.a_ * b_;
  a_ = na;
  b_ = nb;
  return *this;
}

QuadExt operator-(const QuadExt& x) {
  QuadExt r = x;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

bool operator==(const QuadExt& x, const QuadExt& y) {
  if (x.a_ != y.a_ || x.b_ != y.b_) return false;
  return x.b_.is_zero() || x.d_ == y.d_;
}

std::string QuadExt::str() const {
  if (b_.is_zero()) return a_.str();
  std::string r = "sqrt(" + d_.str() + ")";
  std::string t = b_ == Rational(1) ? r : (b_ == Rational(-1) ? "-" + r : b_.str() + "*" + r);
  if (a_.is_zero()) return t;
  return a_.str() + (t[0] == '-' ? "" : "+") + t;
}

std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.str(); }

} // namespace adkit
