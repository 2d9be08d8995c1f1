#include <random>
#include <vector>

#include "doctest.h"

#include "adkit/eigen_support.hpp"
#include "adkit/poly_parse.hpp"
#include "adkit/quad_ext.hpp"
#include "adkit/ratfunc.hpp"
#include "random_gen.hpp"

using namespace adkit;

namespace {

// Dense bivariate polynomial in (a, b): coeff[i][j] of a^i b^j.
using Dense2 = std::vector<std::vector<Rational>>;

Dense2 schoolbook(const Dense2& x, const Dense2& y) {
  Dense2 out(x.size() + y.size() - 1, std::vector<Rational>(x[0].size() + y[0].size() - 1));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x[i].size(); ++j)
      for (std::size_t k = 0; k < y.size(); ++k)
        for (std::size_t l = 0; l < y[k].size(); ++l) out[i + k][j + l] += x[i][j] * y[k][l];
  return out;
}

Poly from_dense(const Dense2& d) {
  Poly p;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d[i].size(); ++j)
      p += Poly::term(d[i][j], Monomial::of(kAlpha, unsigned(i)) * Monomial::of(kBeta, unsigned(j)));
  return p;
}

} // namespace

TEST_CASE("parse examples") {
  CHECK(parse_poly("1/2") == Poly(Rational(1, 2)));
  CHECK(parse_poly("-1-b") == Poly(-1) - Poly::variable(kBeta));
  CHECK(parse_poly("l-a") == Poly::variable(kLambda) - Poly::variable(kAlpha));
  CHECK(parse_poly("2*a*b") == Poly(2) * Poly::variable(kAlpha) * Poly::variable(kBeta));
  CHECK(parse_poly("a^2") == Poly::variable(kAlpha) * Poly::variable(kAlpha));
  CHECK(parse_poly(" 3 / 6 * a ") == Poly(Rational(1, 2)) * Poly::variable(kAlpha));
  CHECK(parse_poly("p2 - p1") == Poly::variable(fresh_param(2)) - Poly::variable(fresh_param(1)));
}

TEST_CASE("parse errors carry positions") {
  auto pos_of = [](const char* text) -> long {
    try {
      parse_poly(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position);
    }
    return -1;
  };
  CHECK(pos_of("1/0") == 0);
  CHECK(pos_of("a + 3/0") == 4);
  CHECK(pos_of("a + x") == 4);
  CHECK(pos_of("a +") == 3);
  CHECK(pos_of("2 a") == 2);
  CHECK(pos_of("a^0") == 2);
  CHECK_THROWS_AS(parse_poly("q"), ParseError);
  CHECK_THROWS_AS(parse_poly(""), ParseError);
  CHECK_THROWS_AS(parse_poly("a*2"), ParseError);
}

TEST_CASE("print then parse is a fixed point") {
  std::mt19937 rng(7);
  for (int t = 0; t < 300; ++t) {
    Poly p = testgen::random_poly(rng, 4);
    Poly q = parse_poly(p.str());
    CHECK(q == p);
    CHECK(parse_poly(q.str()).str() == q.str());
  }
}

TEST_CASE("evaluation examples") {
  CHECK(parse_poly("1-a").evaluate({{kAlpha, Rational(1)}}) == Rational(0));
  CHECK(parse_poly("l").evaluate({{kLambda, Rational(3)}}) == Rational(3));
  // (-1 - b) at b = 2, by direct substitution into the literal form
  Rational b(2);
  CHECK(parse_poly("-1-b").evaluate({{kBeta, b}}) == Rational(-1) - b);
  CHECK_THROWS_AS(parse_poly("a+b").evaluate({{kAlpha, Rational(1)}}), MissingAssignment);
  // unused assignments are fine
  CHECK(parse_poly("2").evaluate({}) == Rational(2));
}

TEST_CASE("ring operation examples") {
  Poly s = parse_poly("a+b");
  CHECK((s + parse_poly("-a-b")).is_zero());
  Dense2 ab = {{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
  CHECK(s * s == from_dense(schoolbook(ab, ab)));
  CHECK((s * s).str() == "b^2+2*a*b+a^2");
  CHECK(Poly(Rational(1, 2)) * parse_poly("2*a") == parse_poly("a"));
  CHECK((s - s).terms().empty());
}

TEST_CASE("schoolbook oracle on random bivariate products") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> c(-4, 4);
  for (int t = 0; t < 100; ++t) {
    Dense2 x(3, std::vector<Rational>(3)), y(2, std::vector<Rational>(4));
    for (auto& row : x)
      for (auto& v : row) v = Rational(c(rng), 1 + std::abs(c(rng)));
    for (auto& row : y)
      for (auto& v : row) v = Rational(c(rng));
    CHECK(from_dense(x) * from_dense(y) == from_dense(schoolbook(x, y)));
  }
}

TEST_CASE("evaluation is a ring homomorphism (1000 random pairs)") {
  std::mt19937 rng(2024);
  for (int t = 0; t < 1000; ++t) {
    Poly p = testgen::random_poly(rng, 4), q = testgen::random_poly(rng, 4);
    Assignment at = testgen::random_point(rng);
    Rational ep = p.evaluate(at), eq = q.evaluate(at);
    REQUIRE((p * q).evaluate(at) == ep * eq);
    REQUIRE((p + q).evaluate(at) == ep + eq);
    REQUIRE((p - q).evaluate(at) == ep - eq);
    REQUIRE((-p).evaluate(at) == -ep);
  }
}

TEST_CASE("canonical form: equal iff equal as functions") {
  std::mt19937 rng(99);
  for (int t = 0; t < 200; ++t) {
    Poly p = testgen::random_poly(rng, 3);
    Poly q = testgen::random_poly(rng, 3);
    // rearranged but mathematically identical expression
    Poly r = (p + q) * (p - q) + q * q;
    CHECK(r == p * p);
    CHECK((p - p).terms().empty());
    // structural inequality implies a point where they differ; degree <= 3 so
    // the grid {0..3}^4 detects any nonzero difference
    if (p != q) {
      bool differ = false;
      for (int a = 0; a <= 3 && !differ; ++a)
        for (int b = 0; b <= 3 && !differ; ++b)
          for (int g = 0; g <= 3 && !differ; ++g)
            for (int l = 0; l <= 3 && !differ; ++l) {
              Assignment at{{kAlpha, Rational(a)}, {kBeta, Rational(b)}, {kGamma, Rational(g)}, {kLambda, Rational(l)}};
              differ = p.evaluate(at) != q.evaluate(at);
            }
      CHECK(differ);
    }
  }
}

TEST_CASE("rational canonical form") {
  Rational r(mpz_class(6), mpz_class(-4));
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(Rational::from_string("-10/4") == Rational(-5, 2));
  CHECK_THROWS(Rational::from_string("1/0"));
  CHECK_THROWS(Rational(1) / Rational(0));
  CHECK(Rational(9, 4).sqrt_exact() == Rational(3, 2));
  CHECK(!Rational(2).sqrt_exact());
}

TEST_CASE("quadratic extension") {
  QuadExt s = QuadExt::sqrt_of(Rational(2));
  CHECK(s * s == QuadExt(Rational(2)));
  QuadExt x(Rational(1), Rational(3), Rational(2));
  CHECK((x * x.conjugate()) == QuadExt(x.norm()));
  CHECK(x.norm() == Rational(1 - 18));
  CHECK(x * x.inverse() == QuadExt(1));
  CHECK_THROWS_AS(QuadExt(Rational(1), Rational(1), Rational(4)), std::invalid_argument);
  CHECK_THROWS_AS(QuadExt(0).inverse(), std::domain_error);
  CHECK_THROWS_AS(s + QuadExt::sqrt_of(Rational(3)), std::invalid_argument);
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> c(-5, 5);
  for (int t = 0; t < 200; ++t) {
    QuadExt u(Rational(c(rng)), Rational(c(rng)), Rational(-3));
    QuadExt v(Rational(c(rng)), Rational(c(rng)), Rational(-3));
    // closure formula
    QuadExt w = u * v;
    CHECK(w.a() == u.a() * v.a() + u.b() * v.b() * Rational(-3));
    CHECK(w.b() == u.a() * v.b() + v.a() * u.b());
    CHECK((u * u.conjugate()).is_rational());
    if (!u.is_zero()) CHECK(u * u.inverse() == QuadExt(1));
    else CHECK_THROWS(u.inverse());
  }
}

TEST_CASE("rational functions") {
  Poly a = Poly::variable(kAlpha);
  RatFunc f(Poly(1) - a, a);
  CHECK(f * RatFunc(a) == RatFunc(Poly(1) - a));
  CHECK((f + RatFunc(1)) == RatFunc(Poly(1), a));
  CHECK(f.evaluate({{kAlpha, Rational(2)}}) == Rational(-1, 2));
  CHECK_THROWS_AS(f.evaluate({{kAlpha, Rational(0)}}), std::domain_error);
}

TEST_CASE("eigen containers of polynomials") {
  MatP m(2, 2);
  m << parse_poly("a"), Poly(1), Poly(0), parse_poly("b");
  MatP sq = m * m;
  CHECK(sq(0, 0) == parse_poly("a^2"));
  CHECK(sq(0, 1) == parse_poly("a+b"));
  CHECK(sq(1, 1) == parse_poly("b^2"));
}
