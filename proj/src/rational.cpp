#include "adkit/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace adkit {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(mpz_class(s, 10));
    mpz_class num(s.substr(0, slash), 10);
    mpz_class den(s.substr(slash + 1), 10);
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational literal: '" + s + "'");
  }
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), q_.get_mpq_t());
  return Rational(r);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

std::optional<Rational> Rational::sqrt_exact() const {
  if (sign() < 0) return std::nullopt;
  const mpz_class& n = q_.get_num();
  const mpz_class& d = q_.get_den();
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0 || mpz_perfect_square_p(d.get_mpz_t()) == 0)
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rational(rn, rd);
}

std::size_t Rational::hash() const {
  // Low limbs of numerator and denominator are enough for bucketing.
  auto limb = [](const mpz_class& z) -> std::size_t {
    if (z == 0) return 0;
    return static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), 0)) ^
           static_cast<std::size_t>(mpz_sgn(z.get_mpz_t()) < 0 ? 0x9e3779b97f4a7c15ULL : 0);
  };
  return limb(q_.get_num()) * 31 + limb(q_.get_den());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace adkit
