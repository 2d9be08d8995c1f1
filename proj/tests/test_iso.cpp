#include <chrono>
#include <random>

#include "doctest.h"

#include "adkit/iso.hpp"
#include "adkit/poly_parse.hpp"
#include "adkit/solver.hpp"
#include "oracle.hpp"
#include "random_gen.hpp"

using namespace adkit;

namespace {

AdPair<Rational> q(const std::string& id, const Assignment& at = {}, bool check = true) {
  return instantiate(Catalog::instance().get(id, at, check).pair, {});
}

MatP mat(int n, std::initializer_list<const char*> rowmajor) {
  MatP m(n, n);
  auto it = rowmajor.begin();
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = parse_poly(*it++);
  return m;
}

// Parameter points: small integers avoiding the entry's constraints.
std::vector<Assignment> points(const CatalogEntry& e, int count, std::mt19937& rng) {
  std::vector<Assignment> out;
  while (static_cast<int>(out.size()) < count) {
    Assignment at;
    for (Var v : e.params) at[v] = testgen::small_rational(rng, 3);
    bool ok = true;
    for (const Poly& z : e.nonzero) ok = ok && !z.evaluate(at).is_zero();
    if (ok) out.push_back(at);
  }
  return out;
}

} // namespace

TEST_CASE("verify_witness examples") {
  const auto& cat = Catalog::instance();
  // AD3_8(a,b) ~ AD3_8(-b,-a) via e'2 = -(a+b) e1 + e2
  AdPair<Poly> src = cat.at("AD3_8").pair;
  AdPair<Poly> tgt = src.map([](const Poly& p) {
    return p.substitute({{kAlpha, -Poly::variable(kBeta)}, {kBeta, -Poly::variable(kAlpha)}});
  });
  MatP t = mat(3, {"1", "-a-b", "0", "0", "1", "0", "0", "0", "1"});
  WitnessVerdict v = verify_witness(src, tgt, t);
  CHECK(v.pass);
  CHECK(v.det == "1");
  // the identity does not work unless a = -b
  CHECK(!verify_witness(src, tgt, MatP(MatP::Identity(3, 3))).pass);

  // identity witness on any pair
  for (const auto& e : cat.entries())
    if (e.kind == AlgebraKind::antidendriform) CHECK(verify_witness(e.pair, e.pair, MatP(MatP::Identity(3, 3).topLeftCorner(e.dim(), e.dim()))).pass);

  // family member at a = 2 scaled by e'1 = 2 e1 is AD3_2
  AdPair<Rational> fam2 = q("AD3_nullfiliform_family", {{kAlpha, Rational(2)}});
  MatQ d = MatQ::Zero(3, 3);
  d(0, 0) = Rational(2);
  d(1, 1) = Rational(4);
  d(2, 2) = Rational(8);
  CHECK(verify_witness(fam2, q("AD3_2"), d).pass);

  CHECK_THROWS_AS(verify_witness(fam2, q("AD3_2"), MatQ(MatQ::Zero(3, 3))), SingularMatrix);
  CHECK_THROWS_AS(verify_witness(fam2, q("AD2_1"), d), DimensionMismatch);
  CHECK_THROWS_AS(verify_witness(src, tgt, mat(3, {"a", "0", "0", "0", "0", "0", "0", "0", "1"})), SingularMatrix);
}

TEST_CASE("catalog iso notes pass symbolically") {
  int checked = 0;
  for (const auto& e : Catalog::instance().entries())
    for (const auto& note : e.iso_notes) {
      if (!note.witness) continue;
      WitnessVerdict v = verify_note(e, note);
      CHECK_MESSAGE(v.pass, note.text << ": " << v.detail);
      ++checked;
    }
  CHECK(checked >= 5);
  const auto& ad15 = Catalog::instance().at("AD3_15");
  CHECK(verify_note(ad15, ad15.iso_notes.at(0)).pass);
}

TEST_CASE("fingerprint examples") {
  Fingerprint f1 = fingerprint(q("AD3_1")), f2 = fingerprint(q("AD3_2"));
  CHECK(differing(f1, f2) == std::vector<std::string>{"diff_square_span"});
  CHECK(f1.diff_square_span == 0);
  CHECK(f2.diff_square_span == 1);

  Fingerprint z = fingerprint(AdPair<Rational>(3));
  CHECK(z.rhd_span == 0);
  CHECK(z.lhd_span == 0);
  CHECK(z.sum_span == 0);
  CHECK(z.center_ad == 3);
  CHECK(z.center_sum == 3);
  CHECK(z.left_annihilator == 3);
  CHECK(z.right_annihilator == 3);

  Fingerprint f5 = fingerprint(q("AD3_5")), f6 = fingerprint(q("AD3_6"));
  CHECK(f5 != f6);
  // both left annihilators are 2-dimensional; the centres differ
  CHECK(f5.left_annihilator == f6.left_annihilator);
  CHECK(f5.center_ad != f6.center_ad);
  auto r5 = q("AD3_5"), r6 = q("AD3_6");
  CHECK(f5.left_annihilator == oracle::annihilated_dim({oracle::from(r5.rhd), oracle::from(r5.lhd)}, true, false));
  CHECK(f6.left_annihilator == oracle::annihilated_dim({oracle::from(r6.rhd), oracle::from(r6.lhd)}, true, false));
  CHECK(f5.center_ad == oracle::annihilated_dim({oracle::from(r5.rhd), oracle::from(r5.lhd)}, true, true));
  CHECK(f6.center_ad == oracle::annihilated_dim({oracle::from(r6.rhd), oracle::from(r6.lhd)}, true, true));

  CHECK_THROWS_AS(fingerprint(Catalog::instance().at("AD3_8").pair, {}), MissingAssignment);
}

TEST_CASE("fingerprints are basis invariant") {
  std::mt19937 rng(7);
  for (const auto& e : Catalog::instance().entries()) {
    if (e.kind != AlgebraKind::antidendriform) continue;
    for (const Assignment& at : points(e, 3, rng)) {
      AdPair<Rational> ad = instantiate(e.pair, at);
      Fingerprint f = fingerprint(ad);
      for (int s = 0; s < 50; ++s) {
        MatQ t = testgen::random_invertible(rng, e.dim());
        CHECK_MESSAGE(fingerprint(apply_basis_change(ad, t)) == f, e.id);
      }
    }
  }
}

TEST_CASE("search examples") {
  auto start = std::chrono::steady_clock::now();
  AdPair<Rational> a21 = q("AD3_21", {{kAlpha, Rational(-1)}}, false), a20 = q("AD3_20", {{kAlpha, Rational(0)}});
  SearchResult r = search_witness(a21, a20);
  REQUIRE(r.status == SearchStatus::found);
  REQUIRE(r.witness);
  CHECK(verify_witness(a21, a20, *r.witness).pass);
  CHECK(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() < 10.0);

  SearchOptions one;
  one.bound = 1;
  for (const char* id : {"AD3_2", "AD3_10", "AD2_2"}) {
    SearchResult self = search_witness(q(id), q(id), one);
    REQUIRE(self.status == SearchStatus::found);
    CHECK(verify_witness(q(id), q(id), *self.witness).pass);
  }
  SearchResult id4 = search_witness(q("AD3_4"), q("AD3_4"), one);
  REQUIRE(id4.witness);

  SearchResult sep = search_witness(q("AD3_5"), q("AD3_6"));
  CHECK(sep.status == SearchStatus::separated);
  CHECK(!sep.separation.empty());
  CHECK(sep.nodes == 0);
}

TEST_CASE("search finds transported copies") {
  std::mt19937 rng(99);
  SearchOptions opt;
  opt.bound = 2;
  for (const char* id : {"AD3_1", "AD3_5", "AD3_12", "AD2_3"}) {
    const auto& e = Catalog::instance().at(id);
    Assignment at;
    for (Var v : e.params) at[v] = Rational(2);
    AdPair<Rational> ad = instantiate(e.pair, at);
    // a basis change with entries in {0, 1, -1}
    MatQ t;
    do {
      t = MatQ(e.dim(), e.dim());
      std::uniform_int_distribution<int> d(-1, 1);
      for (int r = 0; r < e.dim(); ++r)
        for (int c = 0; c < e.dim(); ++c) t(r, c) = Rational(d(rng));
    } while (det(t).is_zero());
    AdPair<Rational> moved = apply_basis_change(ad, t);
    SearchResult r = search_witness(ad, moved, opt);
    REQUIRE_MESSAGE(r.status == SearchStatus::found, id);
    CHECK(verify_witness(ad, moved, *r.witness).pass);
  }
}

TEST_CASE("search never contradicts a separation") {
  const auto& cat = Catalog::instance();
  std::vector<std::pair<std::string, AdPair<Rational>>> pool;
  for (const auto& e : cat.entries()) {
    if (e.kind != AlgebraKind::antidendriform || e.dim() != 3) continue;
    Assignment at;
    for (Var v : e.params) at[v] = Rational(2);
    pool.emplace_back(e.id, instantiate(e.pair, at));
  }
  SearchOptions opt;
  opt.bound = 1;
  opt.node_limit = 2000;
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = 0; j < pool.size(); ++j) {
      Fingerprint fi = fingerprint(pool[i].second), fj = fingerprint(pool[j].second);
      if (fi == fj) continue;
      SearchResult r = search_witness(pool[i].second, pool[j].second, opt);
      CHECK_MESSAGE(r.status == SearchStatus::separated, pool[i].first << " vs " << pool[j].first);
      CHECK(!r.witness);
    }
}

TEST_CASE("quadratic extension retry") {
  // zero-sum pairs e1|>e1 = e3, e2|>e2 = c e3: the quadratic forms x^2 + y^2
  // and x^2 + 2y^2 are not similar over Q, but e'2 = sqrt(2) e2 works
  auto pair = [](int c) {
    AdPair<Rational> p(3);
    p.rhd(0, 0, 2) = Rational(1);
    p.rhd(1, 1, 2) = Rational(c);
    p.lhd = p.rhd.map([](const Rational& x) { return -x; });
    return p;
  };
  REQUIRE(check_antidendriform(pair(2)).pass());
  SearchOptions opt;
  opt.bound = 1;
  SearchResult plain = search_witness(pair(1), pair(2), opt);
  CHECK(plain.status == SearchStatus::not_found);
  CHECK(!plain.node_limit_hit);
  opt.sqrt = Rational(2);
  SearchResult ext = search_witness(pair(1), pair(2), opt);
  REQUIRE(ext.status == SearchStatus::found);
  REQUIRE(ext.witness_ext);
  auto lift_ext = [](const AdPair<Rational>& p) { return p.map([](const Rational& x) { return QuadExt(x); }); };
  CHECK(verify_witness(lift_ext(pair(1)), lift_ext(pair(2)), *ext.witness_ext).pass);
}
