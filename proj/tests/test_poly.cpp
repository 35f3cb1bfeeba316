#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spinflux/linalg.hpp"
#include "spinflux/poly.hpp"

#include <random>

using namespace spinflux;

namespace {

// Random sparse polynomial of modest degree for property tests.
Poly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nterms(0, 4);
  std::uniform_int_distribution<int> sym(0, kNumSymbols - 1);
  std::uniform_int_distribution<int> deg(0, 2);
  std::uniform_int_distribution<long> coeff(-9, 9);
  Poly p;
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    Exponents e{};
    int nvars = deg(rng);
    for (int v = 0; v < nvars; ++v) e[static_cast<size_t>(sym(rng))] += 1;
    p.add_term(e, GaussianRational(Rational(coeff(rng)), Rational(coeff(rng))));
  }
  return p;
}

}  // namespace

TEST_CASE("gaussian rational field axioms and division") {
  GaussianRational i = GaussianRational::unit_i();
  CHECK(i * i == GaussianRational(-1));
  GaussianRational x(Rational(3, 2), Rational(-5, 7));
  CHECK(x / x == GaussianRational(1));
  CHECK((x * i) / i == x);
  CHECK(x + (-x) == GaussianRational(0));
  CHECK_THROWS_AS(x / GaussianRational(0), std::domain_error);
}

TEST_CASE("polynomial ring axioms on random elements") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 300; ++t) {
    Poly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p + Poly() == p);
    CHECK(p * Poly(1) == p);
    CHECK(p - p == Poly());
    CHECK((p * Poly()).is_zero());
  }
}

TEST_CASE("expansion (B-1)(B-5) = B^2-6B+5") {
  Poly b = Poly::symbol("B");
  CHECK((b - Poly(1)) * (b - Poly(5)) == b * b - Poly(6) * b + Poly(5));
  CHECK(parse_poly("(B-1)*(B-5)") == parse_poly("B^2-6*B+5"));
}

TEST_CASE("parser handles the documented grammar") {
  Poly p = parse_poly("a^2/2*(B-1)*(B-5)+2*A^2*(q-1)*(3*q-1)");
  Poly a = Poly::symbol("a"), big_a = Poly::symbol("A"), b = Poly::symbol("B"), q = Poly::symbol("q");
  Poly expect = Poly::constant(GaussianRational(Rational(1, 2))) * a * a * (b - Poly(1)) * (b - Poly(5)) +
                Poly(2) * big_a * big_a * (q - Poly(1)) * (Poly(3) * q - Poly(1));
  CHECK(p == expect);
  CHECK(parse_poly("i^2") == Poly(-1));
  CHECK(parse_poly("-3*i*alpha") == Poly(-3) * Poly::unit_i() * Poly::symbol("alpha"));
  CHECK(parse_poly("(1+i)*(1-i)") == Poly(2));
  CHECK_THROWS_AS(parse_poly("zz+1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("a/b"), std::invalid_argument);
}

TEST_CASE("printer output reparses to the same polynomial") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    Poly p = random_poly(rng);
    CHECK(parse_poly(p.str()) == p);
  }
}

TEST_CASE("substitution and clearing denominators") {
  Poly p = parse_poly("A^2-alpha^2*(B-1)^2");
  CHECK(p.substitute(symbol_index("A"), parse_poly("alpha*(B-1)")).is_zero());
  // p with B -> (A+alpha)/alpha, cleared by alpha^2: alpha^2 A^2 - alpha^2 A^2 = 0.
  CHECK(p.substitute_cleared(symbol_index("B"), parse_poly("A+alpha"), parse_poly("alpha")).is_zero());
  Poly q = parse_poly("q^2+q");
  // q -> 1/2 cleared by 2^2 gives 1 + 2 = 3.
  CHECK(q.substitute_cleared(symbol_index("q"), Poly(1), Poly(2)) == Poly(3));
}

TEST_CASE("evaluation agrees with substitution chains") {
  std::mt19937_64 rng(11);
  SamplePointSource src(99);
  for (int t = 0; t < 50; ++t) {
    Poly p = random_poly(rng);
    auto pt = src.point();
    Poly step = p;
    for (int k = 0; k < kNumSymbols; ++k) step = step.substitute(k, Poly::constant(pt[static_cast<size_t>(k)]));
    CHECK(step.is_constant());
    CHECK(step.constant_value() == p.evaluate(pt));
  }
}

TEST_CASE("exact division") {
  Poly a = parse_poly("(a+b)^3*(B-5)");
  auto q = divide_exact(a, parse_poly("a+b"));
  REQUIRE(q.has_value());
  CHECK(*q == parse_poly("(a+b)^2*(B-5)"));
  CHECK(!divide_exact(a, parse_poly("a+2*b")).has_value());
  std::mt19937_64 rng(13);
  for (int t = 0; t < 60; ++t) {
    Poly x = random_poly(rng), y = random_poly(rng);
    if (y.is_zero()) continue;
    auto z = divide_exact(x * y, y);
    REQUIRE(z.has_value());
    CHECK(*z == x);
  }
}

TEST_CASE("degree cap raises instead of silently truncating") {
  Poly a = Poly::symbol("a");
  CHECK_THROWS_AS(a.pow(kMaxDegree + 1), PolyOverflow);
}
