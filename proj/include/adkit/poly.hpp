#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "adkit/rational.hpp"

namespace adkit {

using Var = std::uint32_t;

// Variable universe. The four family parameters come first and print as the
// ASCII names used in algebra files; fresh family parameters (p1, p2, ...)
// follow; solver unknowns live in their own range.
inline constexpr Var kAlpha = 0;
inline constexpr Var kBeta = 1;
inline constexpr Var kGamma = 2;
inline constexpr Var kLambda = 3;
inline constexpr Var kFreshBase = 4;
inline constexpr Var kUnknownBase = 1u << 20;
inline constexpr int kMaxUnknownDim = 64;

/// Fresh family parameter p<index> (index >= 1).
inline Var fresh_param(int index) { return kFreshBase + static_cast<Var>(index - 1); }

/// Solver unknown for the coefficient of e_k in e_i |> e_j (0-based indices).
inline Var unknown_var(int i, int j, int k) {
  return kUnknownBase + static_cast<Var>((i * kMaxUnknownDim + j) * kMaxUnknownDim + k);
}
inline bool is_unknown(Var v) { return v >= kUnknownBase; }
inline bool is_param(Var v) { return v < kUnknownBase; }

struct UnknownIndex {
  int i, j, k;
};
UnknownIndex unknown_index(Var v);

std::string var_name(Var v);
/// Inverse of var_name for parameter names (a, b, g, l, p<k>).
std::optional<Var> param_from_name(std::string_view name);

using Namer = std::function<std::string(Var)>;

/// Power product stored as (variable, exponent) pairs sorted by variable.
class Monomial {
public:
  Monomial() = default;
  static Monomial of(Var v, unsigned exp = 1);

  const std::vector<std::pair<Var, unsigned>>& factors() const { return f_; }
  bool is_one() const { return f_.empty(); }
  unsigned total_degree() const { return degree_; }
  unsigned degree_in(Var v) const;
  bool contains(Var v) const { return degree_in(v) > 0; }

  Monomial without(Var v) const;
  std::optional<Monomial> divide(const Monomial& d) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.f_ == b.f_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

private:
  std::vector<std::pair<Var, unsigned>> f_;
  unsigned degree_ = 0;
};

/// Graded lexicographic order; a monomial order (compatible with products).
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

using Assignment = std::map<Var, Rational>;

class MissingAssignment : public std::runtime_error {
public:
  explicit MissingAssignment(Var v)
      : std::runtime_error("no value assigned to indeterminate '" + var_name(v) + "'"), var(v) {}
  Var var;
};

/// Multivariate polynomial over the rationals in canonical form:
/// no zero coefficients, terms keyed by monomial in graded-lex order.
class Poly {
public:
  using Terms = std::map<Monomial, Rational, GradedLex>;

  Poly() = default;
  Poly(int c) : Poly(Rational(c)) {}
  Poly(const Rational& c);
  static Poly variable(Var v);
  static Poly term(const Rational& c, const Monomial& m);

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::optional<Rational> constant_value() const;
  Rational constant_term() const;

  unsigned total_degree() const;
  /// Total degree counting only variables for which `pred` holds.
  unsigned degree_where(const std::function<bool(Var)>& pred) const;
  unsigned degree_in(Var v) const;
  std::set<Var> variables() const;
  bool contains(Var v) const;

  /// Coefficient of v^k viewed as a polynomial in v over the other variables.
  Poly coefficient(Var v, unsigned k) const;

  Poly substitute(Var v, const Poly& value) const;
  Poly substitute(const std::map<Var, Poly>& values) const;
  /// P(v := num/den) * den^deg_v(P); returns the polynomial and that degree.
  std::pair<Poly, unsigned> substitute_fraction(Var v, const Poly& num, const Poly& den) const;

  Rational evaluate(const Assignment& at) const;
  /// Substitutes only the assigned variables; the rest stay symbolic.
  Poly partial_evaluate(const Assignment& at) const;

  std::optional<Poly> divide_exact(const Poly& divisor) const;
  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;
  /// Scaled so the leading coefficient is 1 (zero stays zero).
  Poly monic() const;

  Poly pow(unsigned e) const;

  std::string str() const;
  std::string str(const Namer& namer) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator-(const Poly& a);
  /// Division by a nonzero constant polynomial; throws otherwise.
  friend Poly operator/(const Poly& a, const Poly& b);

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  /// Arbitrary total order (for use as a map key).
  friend bool operator<(const Poly& a, const Poly& b);

private:
  void add_term(const Monomial& m, const Rational& c);
  Terms terms_;
};

inline bool is_zero(const Poly& p) { return p.is_zero(); }
std::ostream& operator<<(std::ostream& os, const Poly& p);

} // namespace adkit
