#include "adkit/solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <tuple>

namespace adkit {

std::string Provenance::str() const {
  if (identity == 0) return "assumption";
  return "id" + std::to_string(identity) + " (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
         std::to_string(k + 1) + ") e" + std::to_string(coord + 1);
}

std::string unknown_name(Var v) { return var_name(v); }

const char* status_name(BranchStatus s) {
  switch (s) {
  case BranchStatus::solved: return "solved";
  case BranchStatus::infeasible: return "infeasible";
  case BranchStatus::stuck: return "stuck";
  }
  return "?";
}

SolverOptions default_solver_options() {
  SolverOptions o;
  if (const char* env = std::getenv("ADKIT_MAX_SPLITS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0) o.max_splits = static_cast<int>(v);
  }
  return o;
}

// ---------------------------------------------------------------------------
// Constraint generation

ConstraintSystem generate_constraints(const UnaryAlgebra<Poly>& assoc) {
  if (!is_associative(assoc)) throw PreconditionFailed("input algebra is not associative");
  const int n = assoc.dim();
  if (n > kMaxUnknownDim) throw std::invalid_argument("dimension too large for the solver");
  ConstraintSystem sys;
  sys.dim = n;
  sys.assoc = assoc;
  StructureConstants<Poly> r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Var v = unknown_var(i, j, k);
        sys.unknowns.push_back(v);
        r(i, j, k) = Poly::variable(v);
      }
  AdPair<Poly> ad(r, assoc.mul - r);
  std::map<Poly, int> seen;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        TripleTerms<Poly> t = triple_terms(ad, assoc.mul, i, j, k);
        for (int id = 1; id <= kIdentityCount; ++id) {
          Vec<Poly> res = identity_residual(t, id);
          for (int c = 0; c < n; ++c) {
            const Poly& p = res(c);
            if (p.is_zero()) continue;
            if (id == 5 && p.degree_where(is_unknown) > 1)
              throw std::logic_error("id5 produced an equation nonlinear in the unknowns");
            ++sys.raw_count;
            if (seen.emplace(p.monic(), static_cast<int>(sys.equations.size())).second) {
              sys.equations.push_back(p);
              sys.provenance.push_back({id, i, j, k, c});
            }
          }
        }
      }
  return sys;
}

// ---------------------------------------------------------------------------
// Steps and certificates

namespace {

// q with q^2 = p / lc(p), when one exists and is nonconstant.
std::optional<Poly> monic_square_root(const Poly& p) {
  if (p.is_constant()) return std::nullopt;
  const Poly target = p.monic();
  Monomial lead;
  for (const auto& [v, e] : target.leading_monomial().factors()) {
    if (e % 2) return std::nullopt;
    lead = lead * Monomial::of(v, e / 2);
  }
  Poly q = Poly::term(Rational(1), lead);
  Poly r = target - q * q;
  const Rational two(2);
  while (!r.is_zero()) {
    auto m = r.leading_monomial().divide(lead);
    if (!m) return std::nullopt;
    Poly t = Poly::term(r.leading_coefficient() / two, *m);
    Poly next = r - (two * q + t) * t;
    if (!next.is_zero() && !GradedLex{}(next.leading_monomial(), r.leading_monomial())) return std::nullopt;
    q += t;
    r = next;
  }
  return q;
}

} // namespace

Poly Step::apply(const Poly& p) const {
  if (kind == substitute) return p.substitute_fraction(var, num, den).first;
  if (kind == square_root) {
    auto q = monic_square_root(p);
    if (!q) throw std::logic_error("certificate step: " + p.str() + " is not a square");
    return *q;
  }
  auto q = p.divide_exact(factor);
  if (!q) throw std::logic_error("certificate step: " + factor.str() + " does not divide " + p.str());
  return *q;
}

std::vector<Poly> Certificate::trace() const {
  std::vector<Poly> out;
  Poly p = start;
  for (const Step& s : steps) {
    p = s.apply(p);
    out.push_back(p);
  }
  return out;
}

bool Certificate::replay() const {
  Poly p = start;
  try {
    for (const Step& s : steps) p = s.apply(p);
  } catch (const std::logic_error&) {
    return false;
  }
  if (kind == nonzero_constant) return p.is_constant() && !p.is_zero();
  return p.is_zero();
}

// ---------------------------------------------------------------------------
// Elimination

namespace {

struct Eq {
  Poly p;
  int origin = -1;
  Provenance prov;
  Poly start;
  std::vector<Step> steps;

  void apply(const Step& s) {
    p = s.apply(p);
    steps.push_back(s);
  }
};

struct State {
  std::vector<Eq> eqs;
  std::vector<Eq> side; // asserted nonzero
  std::map<Var, RatFunc> subs;
  std::vector<std::string> decisions;
  int depth = 0;
};

std::set<Var> unknowns_of(const Poly& p) {
  std::set<Var> out;
  for (Var v : p.variables())
    if (is_unknown(v)) out.insert(v);
  return out;
}

unsigned unknown_degree(const Poly& p) { return p.degree_where(is_unknown); }

// True iff c is a constant times a product of asserted-nonzero polynomials.
Poly strip_side(Poly c, const std::vector<Eq>& side);

bool is_side_product(const Poly& c, const std::vector<Eq>& side) {
  Poly r = strip_side(c, side);
  return r.is_constant() && !r.is_zero();
}

RatFunc subst_rf(const RatFunc& f, Var v, const Poly& num, const Poly& den) {
  auto [n2, kn] = f.num().substitute_fraction(v, num, den);
  auto [d2, kd] = f.den().substitute_fraction(v, num, den);
  if (kn == kd) return RatFunc(n2, d2);
  if (kn > kd) return RatFunc(n2, d2 * den.pow(kn - kd));
  return RatFunc(n2 * den.pow(kd - kn), d2);
}

RatFunc cancel_side(RatFunc f, const std::vector<Eq>& side) {
  Poly n = f.num(), d = f.den();
  bool progress = true;
  while (progress && !d.is_constant()) {
    progress = false;
    for (const Eq& s : side) {
      if (s.p.is_constant()) continue;
      auto qn = n.divide_exact(s.p);
      auto qd = d.divide_exact(s.p);
      if (qn && qd) {
        n = *qn;
        d = *qd;
        progress = true;
      }
    }
  }
  return RatFunc(n, d);
}

void substitute_state(State& st, Var v, const Poly& num, const Poly& den) {
  Step step;
  step.kind = Step::substitute;
  step.var = v;
  step.num = num;
  step.den = den;
  for (Eq& e : st.eqs)
    if (e.p.contains(v)) e.apply(step);
  bool side_vanished = false;
  for (Eq& s : st.side) {
    if (s.p.contains(v)) s.apply(step);
    side_vanished = side_vanished || s.p.is_zero();
  }
  // normalize() closes the branch; substitution values would divide by zero
  if (side_vanished) return;
  for (auto& [u, val] : st.subs)
    if (val.num().contains(v) || val.den().contains(v)) val = cancel_side(subst_rf(val, v, num, den), st.side);
  st.subs[v] = cancel_side(RatFunc(num, den), st.side);
}

struct Outcome {
  BranchStatus status;
  std::optional<Certificate> cert;
  std::string reason;
};

Certificate make_cert(const Eq& e, Certificate::Kind kind) {
  Certificate c;
  c.kind = kind;
  c.origin = e.origin;
  c.provenance = e.prov;
  c.start = e.start;
  c.steps = e.steps;
  return c;
}

// Divide out nonzero factors, drop trivial equations, detect contradictions,
// deduplicate. Returns an outcome when the branch is closed.
std::optional<Outcome> normalize(State& st) {
  for (std::size_t s = 0; s < st.side.size(); ++s) {
    if (st.side[s].p.is_zero())
      return Outcome{BranchStatus::infeasible, make_cert(st.side[s], Certificate::side_condition_vanishes), ""};
  }
  // reduce each side condition by the lower-degree ones
  std::stable_sort(st.side.begin(), st.side.end(),
                   [](const Eq& a, const Eq& b) { return a.p.total_degree() < b.p.total_degree(); });
  std::vector<Eq> side;
  std::set<Poly> side_keys;
  for (Eq& s : st.side) {
    bool progress = true;
    while (progress && !s.p.is_constant()) {
      progress = false;
      for (const Eq& t : side) {
        if (auto q = s.p.divide_exact(t.p)) {
          Step step;
          step.kind = Step::divide;
          step.factor = t.p;
          s.p = *q;
          s.steps.push_back(step);
          progress = true;
          break;
        }
      }
    }
    if (!s.p.is_constant() && side_keys.insert(s.p.monic()).second) side.push_back(std::move(s));
  }
  st.side = std::move(side);

  std::vector<Eq> kept;
  std::set<Poly> keys;
  for (Eq& e : st.eqs) {
    bool progress = true;
    while (progress && !e.p.is_constant()) {
      progress = false;
      for (const Eq& s : st.side) {
        if (auto q = e.p.divide_exact(s.p)) {
          Step step;
          step.kind = Step::divide;
          step.factor = s.p;
          e.p = *q;
          e.steps.push_back(step);
          progress = true;
          break;
        }
      }
    }
    if (auto q = monic_square_root(e.p)) {
      Step step;
      step.kind = Step::square_root;
      e.apply(step);
    }
    if (e.p.is_zero()) continue;
    if (e.p.is_constant()) return Outcome{BranchStatus::infeasible, make_cert(e, Certificate::nonzero_constant), ""};
    if (keys.insert(e.p.monic()).second) kept.push_back(std::move(e));
  }
  st.eqs = std::move(kept);
  return std::nullopt;
}

struct Pivot {
  std::size_t eq;
  Var var;
  Poly num, den;
};

std::optional<Pivot> choose_pivot(const State& st) {
  std::optional<Pivot> best;
  std::tuple<int, int, std::size_t, Var, std::size_t> best_key{};
  for (std::size_t e = 0; e < st.eqs.size(); ++e) {
    const Poly& p = st.eqs[e].p;
    std::set<Var> us = unknowns_of(p);
    const int nonlinear = unknown_degree(p) > 1;
    for (auto it = us.begin(); it != us.end(); ++it) {
      Var v = *it;
      if (p.degree_in(v) != 1) continue;
      Poly c = p.coefficient(v, 1);
      int kind;
      if (c.is_constant()) kind = 0;
      else if (is_side_product(c, st.side)) kind = 1;
      else continue;
      auto key = std::make_tuple(nonlinear, kind, us.size(), v, e);
      if (!best || key < best_key) {
        Poly rest = p - c * Poly::variable(v);
        best = Pivot{e, v, -rest, c};
        best_key = key;
      }
    }
  }
  return best;
}

struct Child {
  State st;
};

enum class SplitKind { none, roots, divides, coefficient, needs_extension, nonlinear };

struct SplitPlan {
  SplitKind kind = SplitKind::none;
  std::size_t eq = 0;
  Var var = 0;
  std::vector<Rational> roots;
  Poly coeff;
};

// Divides out every factor already asserted nonzero.
Poly strip_side(Poly c, const std::vector<Eq>& side) {
  bool progress = true;
  while (progress && !c.is_constant()) {
    progress = false;
    for (const Eq& s : side) {
      if (s.p.is_constant()) continue;
      if (auto q = c.divide_exact(s.p)) {
        c = *q;
        progress = true;
      }
    }
  }
  return c;
}

SplitPlan choose_split(const State& st) {
  std::vector<std::size_t> order(st.eqs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto rank = [&](std::size_t e) {
    const Poly& p = st.eqs[e].p;
    return std::make_tuple(unknowns_of(p).size(), unknown_degree(p), p.size());
  };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rank(a) < rank(b); });

  SplitPlan fallback;
  // (a) quadratic in a single unknown with rational coefficients
  for (std::size_t e : order) {
    const Poly& p = st.eqs[e].p;
    std::set<Var> us = unknowns_of(p);
    if (us.size() != 1 || p.variables().size() != 1) continue;
    Var u = *us.begin();
    if (p.degree_in(u) != 2 || p.coefficient(u, 0).is_zero()) continue;
    Rational a = *p.coefficient(u, 2).constant_value(), b = *p.coefficient(u, 1).constant_value(),
             c = *p.coefficient(u, 0).constant_value();
    Rational disc = b * b - Rational(4) * a * c;
    auto root = disc.sign() < 0 ? std::nullopt : disc.sqrt_exact();
    if (!root) {
      if (fallback.kind == SplitKind::none) fallback = {SplitKind::needs_extension, e, u, {}, {}};
      continue;
    }
    std::vector<Rational> rs{(-b - *root) / (Rational(2) * a)};
    if (!root->is_zero()) rs.push_back((-b + *root) / (Rational(2) * a));
    std::sort(rs.begin(), rs.end());
    return {SplitKind::roots, e, u, rs, {}};
  }
  // (b) an unknown divides the equation: u * l = 0
  for (std::size_t e : order) {
    const Poly& p = st.eqs[e].p;
    for (Var u : unknowns_of(p)) {
      bool divides = std::all_of(p.terms().begin(), p.terms().end(),
                                 [&](const auto& t) { return t.first.contains(u); });
      if (divides) return {SplitKind::divides, e, u, {}, {}};
    }
  }
  // (c) a linear unknown whose coefficient is not known to be nonzero
  std::optional<SplitPlan> best;
  std::tuple<unsigned, std::size_t, std::size_t> best_key{};
  for (std::size_t e : order) {
    const Poly& p = st.eqs[e].p;
    for (Var v : unknowns_of(p)) {
      if (p.degree_in(v) != 1) continue;
      Poly c = strip_side(p.coefficient(v, 1), st.side);
      if (c.is_constant()) continue;
      auto key = std::make_tuple(c.total_degree(), c.size(), unknowns_of(p).size());
      if (!best || key < best_key) {
        best = SplitPlan{SplitKind::coefficient, e, v, {}, c};
        best_key = key;
      }
    }
  }
  if (best) return *best;
  if (fallback.kind == SplitKind::none && !order.empty())
    fallback = {SplitKind::nonlinear, order.front(), 0, {}, {}};
  return fallback;
}

Eq assumption(const Poly& p) {
  Eq e;
  e.p = p;
  e.start = p;
  e.origin = -1;
  return e;
}

std::string show(const Poly& p) { return p.str(); }

} // namespace

EliminationResult eliminate(const ConstraintSystem& sys, const SolverOptions& opt) {
  EliminationResult res;
  State root;
  for (std::size_t i = 0; i < sys.equations.size(); ++i) {
    Eq e;
    e.p = e.start = sys.equations[i];
    e.origin = static_cast<int>(i);
    e.prov = sys.provenance[i];
    root.eqs.push_back(std::move(e));
  }

  std::vector<State> stack{std::move(root)};
  auto finish = [&](State& st, BranchStatus status, std::optional<Certificate> cert, std::string reason) {
    Branch b;
    b.status = status;
    b.decisions = st.decisions;
    b.substitutions = st.subs;
    for (const Eq& s : st.side) b.side_conditions.push_back(s.p);
    if (status == BranchStatus::stuck)
      for (const Eq& e : st.eqs) b.remaining.push_back(e.p);
    b.certificate = std::move(cert);
    b.reason = std::move(reason);
    b.depth = st.depth;
    for (Var v : sys.unknowns)
      if (!st.subs.count(v)) b.free_unknowns.push_back(v);
    res.branches.push_back(std::move(b));
  };

  while (!stack.empty()) {
    State st = std::move(stack.back());
    stack.pop_back();
    bool open = true;
    while (open) {
      if (auto out = normalize(st)) {
        finish(st, out->status, std::move(out->cert), out->reason);
        break;
      }
      if (st.eqs.empty()) {
        finish(st, BranchStatus::solved, std::nullopt, "");
        break;
      }
      bool params_only = false;
      for (const Eq& e : st.eqs)
        if (unknowns_of(e.p).empty()) params_only = true;
      if (params_only) {
        finish(st, BranchStatus::stuck, std::nullopt, "condition on the algebra's parameters");
        break;
      }
      // c * u^m = 0 forces u = 0 without a split
      bool forced = false;
      for (const Eq& e : st.eqs) {
        if (e.p.size() != 1) continue;
        const Monomial& m = e.p.terms().begin()->first;
        if (m.factors().size() == 1 && is_unknown(m.factors()[0].first)) {
          substitute_state(st, m.factors()[0].first, Poly(0), Poly(1));
          forced = true;
          break;
        }
      }
      if (forced) continue;
      if (auto piv = choose_pivot(st)) {
        substitute_state(st, piv->var, piv->num, piv->den);
        continue;
      }
      SplitPlan plan = choose_split(st);
      if (plan.kind == SplitKind::none || plan.kind == SplitKind::nonlinear) {
        finish(st, BranchStatus::stuck, std::nullopt, "no linear pivot or split pattern");
        break;
      }
      if (plan.kind == SplitKind::needs_extension) {
        finish(st, BranchStatus::stuck, std::nullopt,
               "stuck-needs-extension: " + show(st.eqs[plan.eq].p) + " = 0 has no rational root");
        break;
      }
      if (st.depth >= opt.max_depth || res.splits >= opt.max_splits) {
        res.budget_exhausted = res.budget_exhausted || res.splits >= opt.max_splits;
        finish(st, BranchStatus::stuck, std::nullopt, "split budget exhausted");
        break;
      }
      ++res.splits;
      std::vector<State> kids;
      const std::string uname = var_name(plan.var);
      switch (plan.kind) {
      case SplitKind::roots:
        for (const Rational& r : plan.roots) {
          State k = st;
          k.depth++;
          k.decisions.push_back(uname + " = " + r.str());
          substitute_state(k, plan.var, Poly(r), Poly(1));
          kids.push_back(std::move(k));
        }
        break;
      case SplitKind::divides: {
        State zero = st, nz = st;
        zero.depth++;
        nz.depth++;
        zero.decisions.push_back(uname + " = 0");
        substitute_state(zero, plan.var, Poly(0), Poly(1));
        nz.decisions.push_back(uname + " != 0");
        nz.side.push_back(assumption(Poly::variable(plan.var)));
        kids.push_back(std::move(zero));
        kids.push_back(std::move(nz));
        break;
      }
      case SplitKind::coefficient: {
        State zero = st, nz = st;
        zero.depth++;
        nz.depth++;
        zero.decisions.push_back(show(plan.coeff) + " = 0");
        zero.eqs.push_back(assumption(plan.coeff));
        nz.decisions.push_back(show(plan.coeff) + " != 0");
        nz.side.push_back(assumption(plan.coeff));
        kids.push_back(std::move(zero));
        kids.push_back(std::move(nz));
        break;
      }
      default: break;
      }
      // depth-first, first child explored first
      for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(std::move(*it));
      open = false;
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Families

RatFunc substitute_values(const Poly& p, const std::map<Var, RatFunc>& values) {
  RatFunc out(0);
  for (const auto& [m, c] : p.terms()) {
    RatFunc t(c);
    for (const auto& [v, e] : m.factors()) {
      auto it = values.find(v);
      if (it == values.end()) {
        t *= RatFunc(Poly::variable(v).pow(e));
      } else {
        for (unsigned i = 0; i < e; ++i) t *= it->second;
      }
    }
    out += t;
  }
  return out;
}

std::optional<AdPair<Poly>> Family::polynomial() const {
  bool poly = true;
  auto check = [&](const RatFunc& f) {
    poly = poly && f.is_polynomial();
    return f;
  };
  pair.map(check);
  if (!poly) return std::nullopt;
  return pair.map([](const RatFunc& f) { return f.as_poly(); });
}

Family family_of(const ConstraintSystem& sys, const Branch& b) {
  Family f;
  f.decisions = b.decisions;
  std::map<Var, Poly> rename;
  int next = 1;
  for (Var v : b.free_unknowns) {
    Var p = fresh_param(next++);
    f.params.push_back(p);
    f.renamed[v] = p;
    rename[v] = Poly::variable(p);
  }
  auto rn = [&](const Poly& p) { return p.substitute(rename); };
  const int n = sys.dim;
  StructureConstants<RatFunc> r(n), l(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Var v = unknown_var(i, j, k);
        RatFunc val;
        auto it = b.substitutions.find(v);
        if (it != b.substitutions.end()) val = RatFunc(rn(it->second.num()), rn(it->second.den()));
        else val = RatFunc(rename.at(v));
        r(i, j, k) = val;
        l(i, j, k) = RatFunc(sys.assoc.mul(i, j, k)) - val;
      }
  f.pair = AdPair<RatFunc>(r, l);
  for (const Poly& s : b.side_conditions) f.side_conditions.push_back(rn(s));
  return f;
}

AdPair<Rational> sample_branch(const Family& f, const Assignment& at) {
  for (const Poly& s : f.side_conditions)
    if (s.evaluate(at).is_zero()) throw ConstraintViolation("side condition " + s.str() + " != 0 violated");
  return f.pair.map([&](const RatFunc& x) { return x.evaluate(at); });
}

bool branch_contains(const Branch& b, const Assignment& point) {
  for (const Poly& s : b.side_conditions)
    if (s.evaluate(point).is_zero()) return false;
  for (const auto& [v, val] : b.substitutions)
    if (val.evaluate(point) != point.at(v)) return false;
  return true;
}

int Enumeration::count(BranchStatus s) const {
  return static_cast<int>(std::count_if(result.branches.begin(), result.branches.end(),
                                         [&](const Branch& b) { return b.status == s; }));
}

Enumeration enumerate_compatible(const UnaryAlgebra<Poly>& assoc, const SolverOptions& opt) {
  Enumeration e;
  e.system = generate_constraints(assoc);
  e.result = eliminate(e.system, opt);
  for (const Branch& b : e.result.branches)
    if (b.status == BranchStatus::solved) e.families.push_back(family_of(e.system, b));
  return e;
}

} // namespace adkit
