#include "adkit/catalog.hpp"

#include <algorithm>
#include <charconv>

#include "adkit/poly_parse.hpp"

namespace adkit {
namespace {

struct E {
  int i, j, k;
  const char* c;
};

StructureConstants<Poly> table(int n, std::initializer_list<E> entries) {
  StructureConstants<Poly> sc(n);
  for (const E& e : entries) sc(e.i - 1, e.j - 1, e.k - 1) = parse_poly(e.c);
  return sc;
}

Poly P(const char* s) { return parse_poly(s); }

MatP matrix(int n, std::initializer_list<const char*> rowmajor) {
  MatP m(n, n);
  auto it = rowmajor.begin();
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = P(*it++);
  return m;
}

CatalogEntry assoc(std::string id, int n, std::initializer_list<E> mul, std::vector<Var> params = {}) {
  CatalogEntry e;
  e.id = std::move(id);
  e.kind = AlgebraKind::associative;
  e.params = std::move(params);
  e.mul = {table(n, mul), e.id};
  return e;
}

CatalogEntry ad(std::string id, int n, std::initializer_list<E> rhd, std::initializer_list<E> lhd, std::string sum,
                std::vector<Var> params = {}) {
  CatalogEntry e;
  e.id = std::move(id);
  e.kind = AlgebraKind::antidendriform;
  e.params = std::move(params);
  e.pair = AdPair<Poly>(table(n, rhd), table(n, lhd), e.id);
  e.associated_sum = std::move(sum);
  return e;
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> v;

  // 2-dimensional associative algebras.
  v.push_back(assoc("As2_1", 2, {}));
  v.push_back(assoc("As2_2", 2, {{1, 1, 1, "1"}}));
  v.push_back(assoc("As2_3", 2, {{1, 1, 2, "1"}}));
  v.push_back(assoc("As2_4", 2, {{1, 1, 1, "1"}, {1, 2, 2, "1"}}));
  v.push_back(assoc("As2_5", 2, {{1, 1, 1, "1"}, {2, 1, 2, "1"}}));
  {
    CatalogEntry e = assoc("As2_6", 2, {{1, 1, 1, "1"}, {1, 2, 2, "1"}, {2, 1, 2, "1"}});
    e.remark = "stored as the unital algebra e1e1=e1, e1e2=e2e1=e2; the printed e2e2=e2 in place of e2e1=e2 is not "
               "associative ((e2e1)e2 = 0, e2(e1e2) = e2)";
    v.push_back(e);
  }
  v.push_back(assoc("As2_7", 2, {{1, 1, 1, "1"}, {2, 2, 2, "1"}}));

  // 3-dimensional nilpotent associative algebras.
  v.push_back(assoc("As3_1", 3, {}));
  v.push_back(assoc("As3_2", 3, {{1, 2, 3, "1"}, {2, 1, 3, "-1"}}));
  v.push_back(assoc("As3_3", 3, {{1, 1, 3, "1"}}));
  v.push_back(assoc("As3_4", 3, {{1, 2, 3, "1"}}));
  v.push_back(assoc("As3_5", 3, {{1, 1, 3, "1"}, {1, 2, 3, "l"}, {2, 2, 3, "1"}}, {kLambda}));
  v.push_back(assoc("As3_6", 3, {{1, 1, 2, "1"}, {1, 2, 3, "1"}, {2, 1, 3, "1"}}));

  // 2-dimensional anti-dendriform algebras.
  v.push_back(ad("AD2_1", 2, {}, {}, "As2_1"));
  v.push_back(ad("AD2_2", 2, {}, {{1, 1, 2, "1"}}, "As2_3"));
  {
    CatalogEntry e = ad("AD2_3", 2, {{1, 1, 2, "1"}}, {{1, 1, 2, "l"}}, "As2_3", {kLambda});
    e.sum_witness = matrix(2, {"1", "0", "0", "1+l"});
    e.sum_witness_nonzero = {P("1+l")};
    e.remark = "sum is e1e1=(1+l)e2: As2_3 for l != -1, As2_1 at l = -1";
    v.push_back(e);
  }

  // 3-dimensional anti-dendriform algebras on the null-filiform As3_6.
  v.push_back(ad("AD3_1", 3, {{1, 1, 2, "1/2"}, {1, 2, 3, "2"}, {2, 1, 3, "-1"}},
                 {{1, 1, 2, "1/2"}, {2, 1, 3, "2"}, {1, 2, 3, "-1"}}, "As3_6"));
  v.push_back(ad("AD3_2", 3, {{1, 1, 2, "1/2"}, {1, 1, 3, "1"}, {1, 2, 3, "2"}, {2, 1, 3, "-1"}},
                 {{1, 1, 2, "1/2"}, {1, 1, 3, "-1"}, {2, 1, 3, "2"}, {1, 2, 3, "-1"}}, "As3_6"));
  {
    CatalogEntry e = ad("AD3_nullfiliform_family", 3, {{1, 1, 2, "1/2"}, {1, 1, 3, "a"}, {1, 2, 3, "2"}, {2, 1, 3, "-1"}},
                        {{1, 1, 2, "1/2"}, {1, 1, 3, "-a"}, {2, 1, 3, "2"}, {1, 2, 3, "-1"}}, "As3_6", {kAlpha});
    e.classified = false;
    e.remark = "one-parameter family of compatible structures on As3_6; normalises to AD3_1 (a = 0) or AD3_2 (a != 0)";
    e.iso_notes.push_back({"AD3_nullfiliform_family(0) = AD3_1", "AD3_1", {{kAlpha, Poly(0)}}, {},
                           matrix(3, {"1", "0", "0", "0", "1", "0", "0", "0", "1"}), {}});
    e.iso_notes.push_back({"AD3_nullfiliform_family(a) ~ AD3_2 for a != 0", "AD3_2", {}, {},
                           matrix(3, {"a", "0", "0", "0", "a^2", "0", "0", "0", "a^3"}), {P("a")}});
    e.iso_notes.push_back({"AD3_nullfiliform_family(a) ~ AD3_nullfiliform_family(a/2) via e'1 = 2e1",
                           "AD3_nullfiliform_family", {}, {{kAlpha, P("1/2*a")}},
                           matrix(3, {"2", "0", "0", "0", "4", "0", "0", "0", "8"}), {}});
    v.push_back(e);
  }

  // On As3_1 (zero sum).
  v.push_back(ad("AD3_3", 3, {}, {}, "As3_1"));
  v.push_back(ad("AD3_4", 3, {{1, 2, 3, "1"}, {2, 1, 3, "-1"}}, {{1, 2, 3, "-1"}, {2, 1, 3, "1"}}, "As3_1"));
  v.push_back(ad("AD3_5", 3, {{1, 1, 3, "1"}}, {{1, 1, 3, "-1"}}, "As3_1"));
  v.push_back(ad("AD3_6", 3, {{1, 2, 3, "1"}}, {{1, 2, 3, "-1"}}, "As3_1"));
  v.push_back(ad("AD3_7", 3, {{1, 1, 3, "1"}, {1, 2, 3, "l"}, {2, 2, 3, "1"}},
                 {{1, 1, 3, "-1"}, {1, 2, 3, "-l"}, {2, 2, 3, "-1"}}, "As3_1", {kLambda}));

  // On As3_2.
  {
    CatalogEntry e = ad("AD3_8", 3, {{1, 1, 3, "1"}, {1, 2, 3, "a"}, {2, 1, 3, "b"}},
                        {{1, 1, 3, "-1"}, {1, 2, 3, "1-a"}, {2, 1, 3, "-1-b"}}, "As3_2", {kAlpha, kBeta});
    e.iso_notes.push_back({"AD3_8(a,b) ~ AD3_8(-b,-a)", "AD3_8", {}, {{kAlpha, P("-b")}, {kBeta, P("-a")}},
                           matrix(3, {"1", "-a-b", "0", "0", "1", "0", "0", "0", "1"}), {}});
    v.push_back(e);
  }
  v.push_back(ad("AD3_9", 3, {{1, 2, 3, "a"}, {2, 1, 3, "-a"}}, {{1, 2, 3, "1-a"}, {2, 1, 3, "-1+a"}}, "As3_2",
                 {kAlpha}));
  v.push_back(ad("AD3_10", 3, {{1, 1, 2, "1"}, {2, 1, 3, "-1"}}, {{1, 1, 2, "-1"}, {1, 2, 3, "1"}}, "As3_2"));

  // On As3_4.
  v.push_back(ad("AD3_11", 3, {{1, 2, 3, "a"}, {2, 1, 3, "b"}}, {{1, 2, 3, "1-a"}, {2, 1, 3, "-b"}}, "As3_4",
                 {kAlpha, kBeta}));
  v.push_back(ad("AD3_12", 3, {{1, 2, 3, "a"}, {2, 1, 3, "b"}, {2, 2, 3, "1"}},
                 {{1, 2, 3, "1-a"}, {2, 1, 3, "-b"}, {2, 2, 3, "-1"}}, "As3_4", {kAlpha, kBeta}));
  v.push_back(ad("AD3_13", 3, {{1, 1, 3, "1"}, {1, 2, 3, "a"}, {2, 1, 3, "b"}, {2, 2, 3, "g"}},
                 {{1, 1, 3, "-1"}, {1, 2, 3, "1-a"}, {2, 1, 3, "-b"}, {2, 2, 3, "-g"}}, "As3_4",
                 {kAlpha, kBeta, kGamma}));
  v.push_back(ad("AD3_14", 3, {{1, 1, 2, "1"}}, {{1, 1, 2, "-1"}, {1, 2, 3, "1"}}, "As3_4"));

  // On As3_5(l).
  {
    CatalogEntry e = ad("AD3_15", 3, {{1, 1, 3, "a"}, {1, 2, 3, "b"}, {2, 1, 3, "g"}},
                        {{1, 1, 3, "1-a"}, {1, 2, 3, "l-b"}, {2, 1, 3, "-g"}, {2, 2, 3, "1"}}, "As3_5",
                        {kAlpha, kBeta, kGamma, kLambda});
    e.nonzero = {P("a")};
    e.iso_notes.push_back({"AD3_15(a,b,g,0) ~ AD3_15(a,-b,-g,0)", "AD3_15", {{kLambda, Poly(0)}},
                           {{kBeta, P("-b")}, {kGamma, P("-g")}, {kLambda, Poly(0)}},
                           matrix(3, {"1", "0", "0", "0", "-1", "0", "0", "0", "1"}), {}});
    v.push_back(e);
  }
  {
    CatalogEntry e = ad("AD3_16", 3, {{1, 2, 3, "a"}, {2, 1, 3, "-a"}},
                        {{1, 1, 3, "1"}, {1, 2, 3, "l-a"}, {2, 1, 3, "a"}, {2, 2, 3, "1"}}, "As3_5",
                        {kAlpha, kLambda});
    e.remark = "e2<|e1 stored as +a e3 (the printed -a e3 gives the sum e2e1 = -2a e3, not As3_5)";
    v.push_back(e);
  }
  {
    CatalogEntry e = ad("AD3_17", 3, {{1, 1, 2, "1"}}, {{1, 1, 2, "-1"}, {1, 1, 3, "1"}, {1, 2, 3, "l"}, {2, 2, 3, "1"}},
                        "As3_5", {kLambda});
    e.remark = "table as printed; it violates id1, id4, id6, id7 at (1,1,2) and is kept unaltered";
    v.push_back(e);
  }

  // On As3_3.
  v.push_back(ad("AD3_18", 3, {{1, 1, 3, "a"}}, {{1, 1, 3, "1-a"}}, "As3_3", {kAlpha}));
  v.push_back(ad("AD3_19", 3, {{2, 1, 3, "1"}}, {{1, 1, 3, "1"}, {2, 1, 3, "-1"}}, "As3_3"));
  v.push_back(ad("AD3_20", 3, {{1, 1, 3, "a"}, {1, 2, 3, "1"}, {2, 1, 3, "-1"}},
                 {{1, 1, 3, "1-a"}, {1, 2, 3, "-1"}, {2, 1, 3, "1"}}, "As3_3", {kAlpha}));
  {
    CatalogEntry e = ad("AD3_21", 3, {{1, 2, 3, "1"}, {2, 1, 3, "a"}},
                        {{1, 1, 3, "1"}, {1, 2, 3, "-1"}, {2, 1, 3, "-a"}}, "As3_3", {kAlpha});
    e.nonzero = {P("a+1")};
    e.iso_notes.push_back({"AD3_21(-1) ~ AD3_20(0)", "AD3_20", {{kAlpha, Poly(-1)}}, {{kAlpha, Poly(0)}}, std::nullopt, {}});
    v.push_back(e);
  }
  v.push_back(ad("AD3_22", 3, {{1, 1, 3, "a"}, {2, 1, 3, "b"}, {2, 2, 3, "1"}},
                 {{1, 1, 3, "1-a"}, {2, 1, 3, "-b"}, {2, 2, 3, "-1"}}, "As3_3", {kAlpha, kBeta}));
  v.push_back(ad("AD3_23", 3, {{1, 1, 2, "1"}}, {{1, 1, 2, "-1"}, {1, 1, 3, "1"}}, "As3_3"));

  std::sort(v.begin(), v.end(), [](const CatalogEntry& x, const CatalogEntry& y) { return x.id < y.id; });
  return v;
}

std::optional<int> mu0_dim(const std::string& id) {
  if (id.rfind("mu0_", 0) != 0) return std::nullopt;
  int n = 0;
  auto [p, ec] = std::from_chars(id.data() + 4, id.data() + id.size(), n);
  if (ec != std::errc() || p != id.data() + id.size() || n < 1 || n > kMaxUnknownDim) return std::nullopt;
  return n;
}

} // namespace

UnaryAlgebra<Poly> mu0(int n) {
  if (n < 1) throw std::invalid_argument("mu0 needs n >= 1");
  StructureConstants<Poly> sc(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; i + j <= n; ++j) sc(i - 1, j - 1, i + j - 1) = Poly(1);
  return {sc, "mu0_" + std::to_string(n)};
}

std::string CatalogEntry::constraint_text() const {
  std::string out;
  for (const Poly& p : nonzero) out += (out.empty() ? "" : ", ") + p.str() + " != 0";
  return out;
}

AlgebraFile CatalogEntry::file() const {
  return kind == AlgebraKind::associative ? AlgebraFile::of(mul, params) : AlgebraFile::of(pair, params);
}

void check_domain(const CatalogEntry& e, const Assignment& at) {
  for (Var v : e.params)
    if (!at.count(v)) throw MissingAssignment(v);
  for (const Poly& p : e.nonzero)
    if (p.evaluate(at).is_zero())
      throw ConstraintViolation(e.id + " requires " + p.str() + " != 0");
}

Catalog::Catalog() : entries_(build()) {}

const Catalog& Catalog::instance() {
  static const Catalog c;
  return c;
}

const CatalogEntry* Catalog::find(const std::string& id) const {
  for (const auto& e : entries_)
    if (e.id == id) return &e;
  return nullptr;
}

CatalogEntry Catalog::at(const std::string& id) const {
  if (const CatalogEntry* e = find(id)) return *e;
  if (auto n = mu0_dim(id)) {
    CatalogEntry e;
    e.id = id;
    e.kind = AlgebraKind::associative;
    e.mul = mu0(*n);
    return e;
  }
  throw std::out_of_range("unknown catalog id '" + id + "'");
}

AlgebraFile Catalog::get(const std::string& id, const std::optional<Assignment>& assign, bool check) const {
  CatalogEntry e = at(id);
  AlgebraFile f = e.file();
  if (!assign) return f;
  if (check) check_domain(e, *assign);
  for (Var v : e.params)
    if (!assign->count(v)) throw MissingAssignment(v);
  auto inst = [&](const Poly& p) { return Poly(p.evaluate(*assign)); };
  if (f.kind == AlgebraKind::associative) f.mul.mul = f.mul.mul.map(inst);
  else f.pair = f.pair.map(inst);
  f.params.clear();
  return f;
}

EntryVerdict Catalog::verify(const CatalogEntry& e) const {
  EntryVerdict v;
  v.id = e.id;
  if (e.kind == AlgebraKind::associative) {
    v.assoc_violations = associativity_violations(e.mul);
    v.axioms = v.assoc_violations.empty();
    return v;
  }
  v.report = check_antidendriform(e.pair);
  v.axioms = v.report.pass();
  const StructureConstants<Poly> sum = sum_algebra(e.pair).mul;
  const CatalogEntry target = at(e.associated_sum);
  if (sum == target.mul.mul) {
    v.sum_match = true;
    v.sum_detail = "sum equals " + e.associated_sum;
  } else if (e.sum_witness) {
    const bool ok = transports_to(sum, target.mul.mul, *e.sum_witness) && !det_poly(*e.sum_witness).is_zero();
    v.sum_match = ok;
    std::string cond;
    for (const Poly& p : e.sum_witness_nonzero) cond += (cond.empty() ? "" : ", ") + p.str() + " != 0";
    v.sum_detail = std::string(ok ? "sum isomorphic to " : "witness fails for ") + e.associated_sum +
                   " by the stored basis change" + (cond.empty() ? "" : " (" + cond + ")");
  } else {
    v.sum_match = false;
    v.sum_detail = "sum differs from " + e.associated_sum;
  }
  return v;
}

std::vector<EntryVerdict> Catalog::verify_all() const {
  std::vector<EntryVerdict> out;
  for (const auto& e : entries_) out.push_back(verify(e));
  return out;
}

} // namespace adkit
