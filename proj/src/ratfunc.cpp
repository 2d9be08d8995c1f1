#include "adkit/ratfunc.hpp"

#include <ostream>
#include <stdexcept>

namespace adkit {

RatFunc::RatFunc(const Poly& num, const Poly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (auto c = den_.constant_value()) {
    num_ *= c->inverse();
    den_ = Poly(1);
    return;
  }
  if (auto q = num_.divide_exact(den_)) {
    num_ = *q;
    den_ = Poly(1);
    return;
  }
  Rational lc = den_.leading_coefficient();
  num_ *= lc.inverse();
  den_ *= lc.inverse();
}

Poly RatFunc::as_poly() const {
  if (!is_polynomial()) throw std::domain_error("rational function " + str() + " is not a polynomial");
  return num_ / den_;
}

Rational RatFunc::evaluate(const Assignment& at) const {
  Rational d = den_.evaluate(at);
  if (d.is_zero()) throw std::domain_error("denominator " + den_.str() + " vanishes at the evaluation point");
  return num_.evaluate(at) / d;
}

RatFunc RatFunc::partial_evaluate(const Assignment& at) const {
  return RatFunc(num_.partial_evaluate(at), den_.partial_evaluate(at));
}

RatFunc RatFunc::inverse() const {
  if (num_.is_zero()) throw std::domain_error("inverse of zero rational function");
  return RatFunc(den_, num_);
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

std::string RatFunc::str() const {
  if (den_.is_constant()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.str(); }

} // namespace adkit
