#include <random>
#include <set>
#include <tuple>

#include "doctest.h"

#include "adkit/catalog.hpp"
#include "adkit/poly_parse.hpp"
#include "adkit/identities.hpp"
#include "adkit/structural.hpp"
#include "oracle.hpp"
#include "random_gen.hpp"

using namespace adkit;

namespace {

AdPair<Poly> pair_of(const std::string& id) { return Catalog::instance().at(id).pair; }
UnaryAlgebra<Poly> alg_of(const std::string& id) { return Catalog::instance().at(id).mul; }
AdPair<Rational> qpair(const std::string& id, const Assignment& at = {}) { return instantiate(pair_of(id), at); }

VecQ e(int n, int i) { return MatQ::Identity(n, n).col(i); }

MatQ span_of(int n, std::initializer_list<int> idx) {
  MatQ m = MatQ::Zero(n, static_cast<Eigen::Index>(idx.size()));
  int c = 0;
  for (int i : idx) m(i, c++) = Rational(1);
  return m;
}

StructureConstants<Rational> qtable(int n, std::initializer_list<std::tuple<int, int, int, Rational>> entries) {
  StructureConstants<Rational> sc(n);
  for (const auto& [i, j, k, c] : entries) sc(i - 1, j - 1, k - 1) = c;
  return sc;
}

bool oracle_is_ad(const AdPair<Rational>& ad) {
  return oracle::is_ad(oracle::from(ad.rhd), oracle::from(ad.lhd));
}

} // namespace

TEST_CASE("product examples") {
  auto m3 = instantiate(mu0(3).mul, {});
  CHECK(product(m3, e(3, 0), e(3, 1)) == e(3, 2));
  StructureConstants<Rational> zero(3);
  CHECK(is_zero_matrix(product(zero, e(3, 0), e(3, 1))));
  auto ad1 = qpair("AD3_1");
  CHECK(product(ad1.rhd, e(3, 0), e(3, 1)) == VecQ(Rational(2) * e(3, 2)));
  CHECK_THROWS_AS(product(m3, e(2, 0), e(3, 1)), DimensionMismatch);
}

TEST_CASE("product is bilinear (oracle)") {
  std::mt19937 rng(3);
  auto ad = qpair("AD3_13", {{kAlpha, Rational(2)}, {kBeta, Rational(-1, 3)}, {kGamma, Rational(5)}});
  oracle::T3 t = oracle::from(ad.lhd);
  for (int s = 0; s < 50; ++s) {
    VecQ x(3), y(3);
    for (int i = 0; i < 3; ++i) {
      x(i) = testgen::small_rational(rng);
      y(i) = testgen::small_rational(rng);
    }
    oracle::V ox(x.data(), x.data() + 3), oy(y.data(), y.data() + 3);
    VecQ got = product(ad.lhd, x, y);
    CHECK(oracle::V(got.data(), got.data() + 3) == oracle::mul(t, ox, oy));
  }
}

TEST_CASE("sum_algebra examples") {
  CHECK(sum_algebra(pair_of("AD3_1")).mul == mu0(3).mul);
  CHECK(sum_algebra(AdPair<Poly>(3)).mul.is_zero());
  auto s = sum_algebra(pair_of("AD2_3")).mul;
  CHECK(s(0, 0, 1) == parse_poly("1+l"));
  CHECK(instantiate(s, {{kLambda, Rational(-1)}}).is_zero());
}

TEST_CASE("is_associative examples") {
  CHECK(is_associative(mu0(4)));
  CHECK(is_associative(alg_of("As3_2")));
  UnaryAlgebra<Rational> t{qtable(2, {{1, 1, 1, Rational(1)}, {1, 2, 1, Rational(1)}}), ""};
  // brute force over all 8 triples
  oracle::T3 o = oracle::from(t.mul);
  std::set<std::tuple<int, int, int>> expected;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        auto x = oracle::unit(2, i), y = oracle::unit(2, j), z = oracle::unit(2, k);
        if (oracle::mul(o, oracle::mul(o, x, y), z) != oracle::mul(o, x, oracle::mul(o, y, z))) expected.insert({i, j, k});
      }
  std::set<std::tuple<int, int, int>> got;
  for (const auto& v : associativity_violations(t)) got.insert({v.i, v.j, v.k});
  CHECK(!expected.empty());
  CHECK(got == expected);
}

TEST_CASE("check_antidendriform examples") {
  CHECK(check_antidendriform(pair_of("AD3_10")).pass());
  CHECK(check_antidendriform(AdPair<Poly>(3)).pass());

  AdPair<Poly> bad(mu0(3).mul, StructureConstants<Poly>(3));
  auto rep = check_antidendriform(bad);
  CHECK(!rep.pass());
  REQUIRE(!rep.identity_holds(2));
  const auto& v = rep.per_identity[1].front();
  CHECK(std::tuple(v.i, v.j, v.k) == std::tuple(0, 0, 0));
  // direct expansion: e1|>(e1|>e1) = e3, -(e1.e1)|>e1 = -e3
  auto q = instantiate(bad, {});
  oracle::T3 r = oracle::from(q.rhd);
  auto x = oracle::unit(3, 0);
  oracle::V lhs = oracle::mul(r, x, oracle::mul(r, x, x));
  oracle::V rhs = oracle::neg(oracle::mul(r, oracle::mul(r, x, x), x));
  CHECK(lhs == oracle::unit(3, 2));
  CHECK(rhs == oracle::neg(oracle::unit(3, 2)));
  VecQ res = evaluate(MatP(v.residual), {});
  CHECK(oracle::V(res.data(), res.data() + 3) == oracle::add(lhs, oracle::neg(rhs)));
}

TEST_CASE("axiom equivalence: eq (2)-(3) iff id1..id7, against the oracle (200 samples)") {
  std::mt19937 rng(17);
  const auto& cat = Catalog::instance();
  std::vector<std::string> ids;
  for (const auto& en : cat.entries())
    if (en.kind == AlgebraKind::antidendriform) ids.push_back(en.id);
  int passing = 0;
  for (int s = 0; s < 200; ++s) {
    const CatalogEntry& en = *cat.find(ids[s % ids.size()]);
    Assignment at = testgen::random_point(rng);
    if (!en.nonzero.empty() && en.nonzero[0].evaluate(at).is_zero()) at[kAlpha] = Rational(7);
    AdPair<Rational> ad = instantiate(en.pair, at);
    if (s % 3 == 1) { // perturb one coefficient
      std::uniform_int_distribution<int> idx(0, ad.dim() - 1);
      ad.lhd(idx(rng), idx(rng), idx(rng)) += Rational(1);
    }
    auto rep = check_antidendriform(ad);
    bool all_ids = true;
    for (int id = 1; id <= 7; ++id) all_ids = all_ids && rep.identity_holds(id);
    CHECK(rep.pass() == all_ids);
    CHECK(rep.pass() == oracle_is_ad(ad));
    passing += rep.pass();
  }
  CHECK(passing > 50);
  CHECK(passing < 200);
}

TEST_CASE("2-nilpotency examples") {
  CHECK(is_two_nilpotent(pair_of("AD3_5")));
  CHECK(is_two_nilpotent(AdPair<Poly>(3)));
  auto w = two_nilpotent_violation(pair_of("AD3_10"));
  REQUIRE(w.has_value());
  // (e1|>e1)|>e1 = e2|>e1 = -e3
  auto q = qpair("AD3_10");
  CHECK(product(q.rhd, product(q.rhd, e(3, 0), e(3, 0)), e(3, 0)) == VecQ(-e(3, 2)));
}

TEST_CASE("(R,-R) anti-dendriform pairs are 2-nilpotent") {
  std::mt19937 rng(23);
  int found = 0;
  for (int s = 0; s < 400; ++s) {
    int n = 3 + s % 2;
    StructureConstants<Rational> r(n);
    std::uniform_int_distribution<int> pick(0, n - 1), coin(0, 2);
    for (int t = 0; t < 3; ++t) {
      int i = pick(rng), j = pick(rng), k = pick(rng);
      if (k > std::max(i, j) && coin(rng)) r(i, j, k) = testgen::small_rational(rng, 3);
    }
    AdPair<Rational> ad(r, -r);
    if (check_antidendriform(ad).pass()) {
      ++found;
      CHECK(is_two_nilpotent(ad));
    } else {
      CHECK(!oracle_is_ad(ad));
    }
  }
  CHECK(found > 100);
}

TEST_CASE("centers") {
  CHECK(center_associative(alg_of("As3_2"), {}) == span_of(3, {2}));
  CHECK(center_associative(alg_of("As3_1"), {}).cols() == 3);
  CHECK(center_associative(mu0(3), {}) == span_of(3, {2}));
  CHECK(center_ad(pair_of("AD3_5"), {}) == span_of(3, {1, 2}));
  CHECK(center_ad(AdPair<Poly>(3), {}).cols() == 3);
  CHECK(center_ad(pair_of("AD3_1"), {}) == span_of(3, {2}));
  CHECK_THROWS_AS(center_ad(pair_of("AD3_8"), {{kAlpha, Rational(1)}}), MissingAssignment);
}

TEST_CASE("centers agree with the linear-solve oracle across the catalog") {
  for (const auto& en : Catalog::instance().entries()) {
    for (int a : {0, 1, -1, 2, 3}) {
      Assignment at{{kAlpha, Rational(a)}, {kBeta, Rational(a + 1)}, {kGamma, Rational(2 - a)}, {kLambda, Rational(a)}};
      try {
        check_domain(en, at);
      } catch (const ConstraintViolation&) {
        continue;
      }
      if (en.kind == AlgebraKind::associative) {
        auto alg = instantiate(en.mul, at);
        CHECK(center_associative(alg).cols() == oracle::annihilated_dim({oracle::from(alg.mul)}, true, true));
        continue;
      }
      auto ad = instantiate(en.pair, at);
      std::vector<oracle::T3> ops{oracle::from(ad.rhd), oracle::from(ad.lhd)};
      CHECK(center_ad(ad).cols() == oracle::annihilated_dim(ops, true, true));
      CHECK(left_annihilator(ad).cols() == oracle::annihilated_dim(ops, true, false));
      CHECK(right_annihilator(ad).cols() == oracle::annihilated_dim(ops, false, true));
      // Z_AD is an ideal at every sample point
      CHECK_NOTHROW(quotient_by_ideal(ad, center_ad(ad)));
    }
  }
}

TEST_CASE("power series") {
  auto ps = power_series(mu0(3), {});
  CHECK(ps.dims == std::vector<int>{3, 2, 1, 0});
  CHECK(ps.nilpotency == 4);
  CHECK(ps.null_filiform);

  ps = power_series(alg_of("As3_1"), {});
  CHECK(ps.dims == std::vector<int>{3, 0});
  CHECK(ps.nilpotency == 2);
  CHECK(!ps.null_filiform);

  CHECK(power_series(alg_of("As3_6"), {}).null_filiform);
  CHECK(power_series(mu0(6), {}).dims == std::vector<int>{6, 5, 4, 3, 2, 1, 0});

  ps = power_series(alg_of("As2_2"), {});
  CHECK(!ps.nilpotency);
  CHECK(ps.dims == std::vector<int>{2, 1});
}

TEST_CASE("sum algebras across the catalog are nilpotent") {
  for (const auto& en : Catalog::instance().entries()) {
    if (en.kind != AlgebraKind::antidendriform) continue;
    for (int a : {1, 2, -3}) {
      Assignment at{{kAlpha, Rational(a)}, {kBeta, Rational(a - 1)}, {kGamma, Rational(1, a)}, {kLambda, Rational(a + 2)}};
      auto ps = power_series(sum_algebra(instantiate(en.pair, at)));
      CHECK_MESSAGE(ps.nilpotency.has_value(), en.id);
    }
  }
}

TEST_CASE("quotients") {
  Quotient q = quotient_by_center(pair_of("AD3_1"), {});
  CHECK(q.complement == std::vector<int>{0, 1});
  CHECK(q.pair.rhd == qtable(2, {{1, 1, 2, Rational(1, 2)}}));
  CHECK(q.pair.lhd == qtable(2, {{1, 1, 2, Rational(1, 2)}}));
  // isomorphic to AD2_3(1) via e'2 = 1/2 e2
  auto target = qpair("AD2_3", {{kLambda, Rational(1)}});
  MatQ t = MatQ::Identity(2, 2);
  t(1, 1) = Rational(1, 2);
  CHECK(transports_to(q.pair.rhd, target.rhd, t));
  CHECK(transports_to(q.pair.lhd, target.lhd, t));
  // sum of quotient = quotient of sum
  CHECK(sum_algebra(q.pair).mul == qtable(2, {{1, 1, 2, Rational(1)}}));

  Quotient z = quotient_by_center(AdPair<Poly>(3), {});
  CHECK(z.pair.dim() == 0);

  // centers of AD3_5 differ (Z_As of the zero sum is everything)
  CHECK_THROWS_AS(quotient_by_center(pair_of("AD3_5"), {}), PreconditionFailed);
  Quotient f = quotient_by_ideal(qpair("AD3_5"), span_of(3, {1, 2}));
  CHECK(f.pair.dim() == 1);
  CHECK(f.pair.rhd.is_zero());
  CHECK(f.pair.lhd.is_zero());
  CHECK_THROWS_AS(quotient_by_ideal(qpair("AD3_10"), span_of(3, {0})), PreconditionFailed);
}

TEST_CASE("basis change") {
  auto fam = pair_of("AD3_nullfiliform_family");
  MatQ t = MatQ::Zero(3, 3);
  t(0, 0) = Rational(2);
  t(1, 1) = Rational(4);
  t(2, 2) = Rational(8);
  auto moved = apply_basis_change(fam, t);
  auto expected = fam.map([](const Poly& p) { return p.substitute(kAlpha, parse_poly("1/2*a")); });
  CHECK(moved == expected);

  CHECK(apply_basis_change(pair_of("AD3_8"), MatQ(MatQ::Identity(3, 3))) == pair_of("AD3_8"));

  auto as32 = instantiate(alg_of("As3_2").mul, {});
  MatQ swap = MatQ::Zero(3, 3);
  swap(1, 0) = swap(0, 1) = swap(2, 2) = Rational(1);
  auto swapped = apply_basis_change(as32, swap);
  CHECK(swapped == qtable(3, {{1, 2, 3, Rational(-1)}, {2, 1, 3, Rational(1)}}));
  MatQ flip = MatQ::Identity(3, 3);
  flip(2, 2) = Rational(-1);
  CHECK(apply_basis_change(swapped, flip) == as32);

  CHECK_THROWS_AS(apply_basis_change(as32, MatQ(MatQ::Zero(3, 3))), SingularMatrix);
}

TEST_CASE("basis change round trip (random)") {
  std::mt19937 rng(41);
  for (int s = 0; s < 30; ++s) {
    auto ad = qpair("AD3_13", {{kAlpha, Rational(s)}, {kBeta, Rational(1, 2)}, {kGamma, Rational(-s)}});
    MatQ t = testgen::random_invertible(rng, 3);
    auto there = apply_basis_change(ad, t);
    CHECK(apply_basis_change(there, inverse(t)) == ad);
    CHECK(transports_to(ad.rhd, there.rhd, t));
    CHECK(check_antidendriform(there).pass());
  }
}
