#include "adkit/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace adkit {

UnknownIndex unknown_index(Var v) {
  if (!is_unknown(v)) throw std::invalid_argument("not a solver unknown: " + var_name(v));
  Var code = v - kUnknownBase;
  int k = static_cast<int>(code % kMaxUnknownDim);
  code /= kMaxUnknownDim;
  int j = static_cast<int>(code % kMaxUnknownDim);
  int i = static_cast<int>(code / kMaxUnknownDim);
  return {i, j, k};
}

std::string var_name(Var v) {
  switch (v) {
  case kAlpha: return "a";
  case kBeta: return "b";
  case kGamma: return "g";
  case kLambda: return "l";
  default: break;
  }
  if (is_unknown(v)) {
    auto [i, j, k] = unknown_index(v);
    return "r" + std::to_string(i + 1) + "_" + std::to_string(j + 1) + "_" + std::to_string(k + 1);
  }
  return "p" + std::to_string(v - kFreshBase + 1);
}

std::optional<Var> param_from_name(std::string_view name) {
  if (name == "a") return kAlpha;
  if (name == "b") return kBeta;
  if (name == "g") return kGamma;
  if (name == "l") return kLambda;
  if (name.size() >= 2 && name[0] == 'p' && name[1] != '0') {
    int idx = 0;
    for (char c : name.substr(1)) {
      if (c < '0' || c > '9') return std::nullopt;
      idx = idx * 10 + (c - '0');
      if (idx > 100000) return std::nullopt;
    }
    return fresh_param(idx);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(Var v, unsigned exp) {
  Monomial m;
  if (exp > 0) {
    m.f_.emplace_back(v, exp);
    m.degree_ = exp;
  }
  return m;
}

unsigned Monomial::degree_in(Var v) const {
  auto it = std::lower_bound(f_.begin(), f_.end(), v,
                             [](const auto& p, Var x) { return p.first < x; });
  return (it != f_.end() && it->first == v) ? it->second : 0;
}

Monomial Monomial::without(Var v) const {
  Monomial m;
  for (const auto& p : f_)
    if (p.first != v) {
      m.f_.push_back(p);
      m.degree_ += p.second;
    }
  return m;
}

std::optional<Monomial> Monomial::divide(const Monomial& d) const {
  Monomial q;
  std::size_t j = 0;
  for (const auto& [v, e] : f_) {
    while (j < d.f_.size() && d.f_[j].first < v) return std::nullopt;
    unsigned de = 0;
    if (j < d.f_.size() && d.f_[j].first == v) de = d.f_[j++].second;
    if (de > e) return std::nullopt;
    if (e > de) {
      q.f_.emplace_back(v, e - de);
      q.degree_ += e - de;
    }
  }
  if (j != d.f_.size()) return std::nullopt;
  return q;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.f_.reserve(a.f_.size() + b.f_.size());
  std::size_t i = 0, j = 0;
  while (i < a.f_.size() || j < b.f_.size()) {
    if (j == b.f_.size() || (i < a.f_.size() && a.f_[i].first < b.f_[j].first)) {
      m.f_.push_back(a.f_[i++]);
    } else if (i == a.f_.size() || b.f_[j].first < a.f_[i].first) {
      m.f_.push_back(b.f_[j++]);
    } else {
      m.f_.emplace_back(a.f_[i].first, a.f_[i].second + b.f_[j].second);
      ++i;
      ++j;
    }
  }
  m.degree_ = a.degree_ + b.degree_;
  return m;
}

bool GradedLex::operator()(const Monomial& a, const Monomial& b) const {
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t n = std::min(fa.size(), fb.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (fa[i].first != fb[i].first) return fa[i].first > fb[i].first; // smaller var index dominates
    if (fa[i].second != fb[i].second) return fa[i].second < fb[i].second;
  }
  return fa.size() < fb.size();
}

// -------------------------------------------------------------------- Poly

Poly::Poly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

Poly Poly::variable(Var v) { return term(Rational(1), Monomial::of(v)); }

Poly Poly::term(const Rational& c, const Monomial& m) {
  Poly p;
  if (!c.is_zero()) p.terms_.emplace(m, c);
  return p;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

std::optional<Rational> Poly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first.is_one()) return terms_.begin()->second;
  return std::nullopt;
}

Rational Poly::constant_term() const {
  if (!terms_.empty() && terms_.begin()->first.is_one()) return terms_.begin()->second;
  return Rational(0);
}

unsigned Poly::total_degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.total_degree();
}

unsigned Poly::degree_where(const std::function<bool(Var)>& pred) const {
  unsigned best = 0;
  for (const auto& [m, c] : terms_) {
    unsigned d = 0;
    for (const auto& [v, e] : m.factors())
      if (pred(v)) d += e;
    best = std::max(best, d);
  }
  return best;
}

unsigned Poly::degree_in(Var v) const {
  unsigned best = 0;
  for (const auto& [m, c] : terms_) best = std::max(best, m.degree_in(v));
  return best;
}

std::set<Var> Poly::variables() const {
  std::set<Var> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors()) out.insert(v);
  return out;
}

bool Poly::contains(Var v) const {
  for (const auto& [m, c] : terms_)
    if (m.contains(v)) return true;
  return false;
}

Poly Poly::coefficient(Var v, unsigned k) const {
  Poly out;
  for (const auto& [m, c] : terms_)
    if (m.degree_in(v) == k) out.add_term(m.without(v), c);
  return out;
}

Poly Poly::substitute(Var v, const Poly& value) const {
  unsigned deg = degree_in(v);
  if (deg == 0) return *this;
  std::vector<Poly> powers{Poly(1)};
  for (unsigned e = 1; e <= deg; ++e) powers.push_back(powers.back() * value);
  Poly out;
  for (const auto& [m, c] : terms_) {
    unsigned e = m.degree_in(v);
    if (e == 0) {
      out.add_term(m, c);
      continue;
    }
    Poly rest = term(c, m.without(v));
    out += rest * powers[e];
  }
  return out;
}

Poly Poly::substitute(const std::map<Var, Poly>& values) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    Poly t(c);
    Monomial kept;
    for (const auto& [v, e] : m.factors()) {
      auto it = values.find(v);
      if (it == values.end())
        kept = kept * Monomial::of(v, e);
      else
        t *= it->second.pow(e);
    }
    out += t * term(Rational(1), kept);
  }
  return out;
}

std::pair<Poly, unsigned> Poly::substitute_fraction(Var v, const Poly& num, const Poly& den) const {
  unsigned deg = degree_in(v);
  if (deg == 0) return {*this, 0};
  std::vector<Poly> npow{Poly(1)}, dpow{Poly(1)};
  for (unsigned e = 1; e <= deg; ++e) {
    npow.push_back(npow.back() * num);
    dpow.push_back(dpow.back() * den);
  }
  Poly out;
  for (unsigned e = 0; e <= deg; ++e) {
    Poly c = coefficient(v, e);
    if (!c.is_zero()) out += c * npow[e] * dpow[deg - e];
  }
  return {out, deg};
}

Rational Poly::evaluate(const Assignment& at) const {
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (const auto& [v, e] : m.factors()) {
      auto it = at.find(v);
      if (it == at.end()) throw MissingAssignment(v);
      for (unsigned i = 0; i < e; ++i) t *= it->second;
    }
    total += t;
  }
  return total;
}

Poly Poly::partial_evaluate(const Assignment& at) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    Monomial kept;
    for (const auto& [v, e] : m.factors()) {
      auto it = at.find(v);
      if (it == at.end()) {
        kept = kept * Monomial::of(v, e);
      } else {
        for (unsigned i = 0; i < e; ++i) t *= it->second;
      }
    }
    out.add_term(kept, t);
  }
  return out;
}

const Monomial& Poly::leading_monomial() const {
  if (terms_.empty()) throw std::logic_error("leading monomial of zero polynomial");
  return terms_.rbegin()->first;
}

const Rational& Poly::leading_coefficient() const {
  if (terms_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
  return terms_.rbegin()->second;
}

std::optional<Poly> Poly::divide_exact(const Poly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  if (auto c = divisor.constant_value()) return *this * c->inverse();
  Poly rem = *this;
  Poly quot;
  const Monomial& lm = divisor.leading_monomial();
  Rational lc_inv = divisor.leading_coefficient().inverse();
  while (!rem.is_zero()) {
    auto qm = rem.leading_monomial().divide(lm);
    if (!qm) return std::nullopt;
    Poly t = term(rem.leading_coefficient() * lc_inv, *qm);
    quot += t;
    rem -= t * divisor;
  }
  return quot;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * leading_coefficient().inverse();
}

Poly Poly::pow(unsigned e) const {
  Poly out(1);
  for (unsigned i = 0; i < e; ++i) out *= *this;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Poly operator-(const Poly& a) {
  Poly out = a;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Poly operator/(const Poly& a, const Poly& b) {
  auto c = b.constant_value();
  if (!c) throw std::domain_error("division by a non-constant polynomial");
  return a * c->inverse();
}

bool operator<(const Poly& a, const Poly& b) {
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  GradedLex less;
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (less(ia->first, ib->first)) return true;
    if (less(ib->first, ia->first)) return false;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.terms_.end() && ib != b.terms_.end();
}

std::string Poly::str() const { return str(var_name); }

std::string Poly::str(const Namer& namer) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string body;
    for (const auto& [v, e] : m.factors()) {
      if (!body.empty()) body += "*";
      body += namer(v);
      if (e > 1) body += "^" + std::to_string(e);
    }
    std::string t;
    if (body.empty()) {
      t = c.str();
    } else if (c == Rational(1)) {
      t = body;
    } else if (c == Rational(-1)) {
      t = "-" + body;
    } else {
      t = c.str() + "*" + body;
    }
    if (!first && t[0] != '-') os << '+';
    os << t;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

} // namespace adkit
