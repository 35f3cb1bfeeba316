#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spinflux/exterior.hpp"

#include <bit>
#include <random>

using namespace spinflux;

namespace {

Form random_form(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nterms(0, 5);
  std::uniform_int_distribution<uint32_t> mask(0, (1u << n) - 1);
  std::uniform_int_distribution<long> coeff(-7, 7);
  Form f(n);
  int k = nterms(rng);
  for (int t = 0; t < k; ++t) f.add_term(mask(rng), Poly(coeff(rng)));
  return f;
}

Form random_homogeneous(int n, int deg, std::mt19937_64& rng) {
  std::uniform_int_distribution<uint32_t> mask(0, (1u << n) - 1);
  std::uniform_int_distribution<long> coeff(-7, 7);
  Form f(n);
  for (int t = 0; t < 5; ++t) {
    uint32_t m = mask(rng);
    if (std::popcount(m) == deg) f.add_term(m, Poly(coeff(rng)));
  }
  return f;
}

// Reference Hodge sign via explicit permutation parity of (I, complement).
int hodge_sign_reference(int n, uint32_t m) {
  std::vector<int> perm;
  for (int b = 0; b < n; ++b)
    if (m & (1u << b)) perm.push_back(b);
  for (int b = 0; b < n; ++b)
    if (!(m & (1u << b))) perm.push_back(b);
  int inv = 0;
  for (size_t x = 0; x < perm.size(); ++x)
    for (size_t y = x + 1; y < perm.size(); ++y)
      if (perm[x] > perm[y]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

}  // namespace

TEST_CASE("wedge is graded-commutative and associative") {
  std::mt19937_64 rng(101);
  for (int n : {5, 6, 7}) {
    for (int t = 0; t < 120; ++t) {
      Form x = random_form(n, rng), y = random_form(n, rng), z = random_form(n, rng);
      CHECK(wedge(wedge(x, y), z) == wedge(x, wedge(y, z)));
    }
    std::uniform_int_distribution<int> dd(0, n);
    for (int t = 0; t < 120; ++t) {
      int dp = dd(rng), dq = dd(rng);
      Form x = random_homogeneous(n, dp, rng), y = random_homogeneous(n, dq, rng);
      Form lhs = wedge(x, y);
      Form rhs = wedge(y, x);
      if ((dp * dq) % 2 == 1) rhs = -rhs;
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("interior product is an antiderivation and squares to zero") {
  std::mt19937_64 rng(202);
  for (int n : {5, 6, 7}) {
    std::uniform_int_distribution<int> vd(1, n), dd(0, n);
    for (int t = 0; t < 250; ++t) {
      int v = vd(rng), dp = dd(rng);
      Form x = random_homogeneous(n, dp, rng), y = random_form(n, rng);
      Form lhs = interior(v, wedge(x, y));
      Form rhs = wedge(interior(v, x), y) +
                 ((dp % 2 == 0) ? wedge(x, interior(v, y)) : -wedge(x, interior(v, y)));
      CHECK(lhs == rhs);
      CHECK(interior(v, interior(v, y)).is_zero());
    }
  }
}

TEST_CASE("interior product drops an index with sign (-1)^(position-1)") {
  Form f = Form::basis(5, {1, 3, 5});
  CHECK(interior(1, f) == Form::basis(5, {3, 5}));
  CHECK(interior(3, f) == -Form::basis(5, {1, 5}));
  CHECK(interior(5, f) == Form::basis(5, {1, 3}));
  CHECK(interior(2, f).is_zero());
}

TEST_CASE("hodge star signs and involution") {
  // Exhaustive over all basis monomials in dims 5,6,7: oracle is permutation parity.
  for (int n : {5, 6, 7}) {
    for (uint32_t m = 0; m < (1u << n); ++m) {
      Form f(n);
      f.add_term(m, Poly(1));
      Form h = hodge(f);
      uint32_t comp = ((1u << n) - 1) & ~m;
      REQUIRE(h.terms().size() == 1);
      CHECK(h.terms().begin()->first == comp);
      CHECK(h.terms().begin()->second == Poly(hodge_sign_reference(n, m)));
      int k = std::popcount(m);
      int sign = ((k * (n - k)) % 2 == 0) ? 1 : -1;
      CHECK(hodge(h) == (sign > 0 ? f : -f));
    }
  }
}

TEST_CASE("hodge involution on random forms, 1000+ cases") {
  std::mt19937_64 rng(303);
  int cases = 0;
  for (int n : {5, 6, 7}) {
    for (int deg = 0; deg <= n; ++deg) {
      for (int t = 0; t < 60; ++t) {
        Form f = random_homogeneous(n, deg, rng);
        int sign = ((deg * (n - deg)) % 2 == 0) ? 1 : -1;
        CHECK(hodge(hodge(f)) == (sign > 0 ? f : -f));
        ++cases;
      }
    }
  }
  CHECK(cases >= 1000);
}

TEST_CASE("specific hodge values used downstream") {
  // *1 = volume, *(e1) = e2345 in dim 5, and *(e12345) = 1.
  Form one(5);
  one.add_term(0, Poly(1));
  CHECK(hodge(one) == Form::basis(5, {1, 2, 3, 4, 5}));
  CHECK(hodge(Form::basis(5, {1})) == Form::basis(5, {2, 3, 4, 5}));
  CHECK(hodge(Form::basis(5, {5})) == Form::basis(5, {1, 2, 3, 4}));
  // In dim 6 with Omega = e12+e34+e56: *Omega = e3456+e1256+e1234.
  Form omega = parse_form(6, "e12+e34+e56");
  CHECK(hodge(omega) == parse_form(6, "e3456+e1256+e1234"));
}

TEST_CASE("sigma of a 3-form: Clifford-square identity data") {
  // For T = e123 in dim 5: e_k -| T nonzero for k=1,2,3 and each wedge-square
  // vanishes, so sigma = 0.
  CHECK(sigma_form(Form::basis(5, {1, 2, 3})).is_zero());
  // T = e123 + e145: (e1 -| T)^2 = (e23+e45)^2 = 2 e2345.
  Form t = parse_form(5, "e123+e145");
  CHECK(sigma_form(t) == parse_form(5, "e2345"));
}

TEST_CASE("j pullback is an involution up to sign and fixes the Kaehler form") {
  Form omega = parse_form(6, "e12+e34+e56");
  CHECK(j_pullback(omega) == omega);
  std::mt19937_64 rng(404);
  for (int t = 0; t < 200; ++t) {
    Form f = random_form(6, rng);
    // J^2 = -1 on vectors, so the pullback squares to (-1)^deg on each term;
    // verify on homogeneous pieces.
    for (int deg = 0; deg <= 6; ++deg) {
      Form g = random_homogeneous(6, deg, rng);
      Form jj = j_pullback(j_pullback(g));
      CHECK(jj == ((deg % 2 == 0) ? g : -g));
    }
    CHECK(j_pullback(wedge(f, omega)) == wedge(j_pullback(f), omega));
  }
}

TEST_CASE("form parser reads the documented syntax") {
  Form f = parse_form(6, "+a*e135 \xe2\x88\x92 a*e146");
  Form g = Poly::symbol("a") * (Form::basis(6, {1, 3, 5}) - Form::basis(6, {1, 4, 6}));
  CHECK(f == g);
  CHECK(parse_form(7, "-e246+e136+e145+e235").str() == "e235 + e145 + e136 - e246");
  CHECK(parse_form(5, "A*e1234") == Poly::symbol("A") * Form::basis(5, {1, 2, 3, 4}));
}
