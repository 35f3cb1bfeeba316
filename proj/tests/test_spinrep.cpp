#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spinflux/spinrep.hpp"

using namespace spinflux;

namespace {

Mat diag(const std::vector<Poly>& d) {
  Mat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (size_t k = 0; k < d.size(); ++k) m.at(static_cast<int>(k), static_cast<int>(k)) = d[k];
  return m;
}

Vec unit(int dim, int slot) {
  Vec v(static_cast<size_t>(dim));
  v[static_cast<size_t>(slot)] = Poly(1);
  return v;
}

}  // namespace

TEST_CASE("clifford relations hold exhaustively in all three dimensions") {
  for (int n : {5, 6, 7}) {
    const SpinRep& rep = spin_rep(n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        Mat anti = rep.gamma(i) * rep.gamma(j) + rep.gamma(j) * rep.gamma(i);
        Mat expect = (i == j) ? Poly(-2) * Mat::identity(rep.dim()) : Mat(rep.dim(), rep.dim());
        CHECK(anti == expect);
      }
  }
}

TEST_CASE("form action is compatible with clifford products of basis monomials") {
  const SpinRep& rep = spin_rep(6);
  // e_1 . (e_1 ^ e_2) = -e_2 as Clifford product: gamma1 * act(e12) = act(e1 . e12).
  CHECK(rep.gamma(1) * rep.act(Form::basis(6, {1, 2})) == -rep.gamma(2));
  // X . w = X ^ w - X -| w for a vector and a form.
  Form w = parse_form(6, "e135+2*e25-e3456");
  for (int k = 1; k <= 6; ++k) {
    Mat lhs = rep.gamma(k) * rep.act(w);
    Mat rhs = rep.act(wedge(Form::basis(6, {k}), w) - interior(k, w));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("dim 5: volume element acts as -i and Phi has eigenvalues +-2i, 0") {
  const SpinRep& rep = spin_rep(5);
  CHECK(rep.act(Form::basis(5, {1, 2, 3, 4, 5})) == (-Poly::unit_i()) * Mat::identity(4));
  Mat phi = rep.act(parse_form(5, "e12+e34"));
  CHECK(eigenspace(phi, parse_poly("2*i")).size() == 1);
  CHECK(eigenspace(phi, parse_poly("-2*i")).size() == 1);
  CHECK(eigenspace(phi, Poly()).size() == 2);
}

TEST_CASE("dim 7: Phi = e12+e34+e56 has eigenvalues +-3i and +-i") {
  const SpinRep& rep = spin_rep(7);
  Mat phi = rep.act(parse_form(7, "e12+e34+e56"));
  CHECK(eigenspace(phi, parse_poly("3*i")).size() == 1);
  CHECK(eigenspace(phi, parse_poly("-3*i")).size() == 1);
  CHECK(eigenspace(phi, parse_poly("i")).size() == 3);
  CHECK(eigenspace(phi, parse_poly("-i")).size() == 3);
}

TEST_CASE("dim 6: torsion and *Omega act by their literature matrices") {
  const SpinRep& rep = spin_rep(6);
  Poly a = Poly::symbol("a");
  Mat t = rep.act(a * parse_form(6, "-e246+e136+e145+e235"));
  Mat expect(8, 8);
  expect.at(0, 1) = Poly(4) * Poly::unit_i() * a;
  expect.at(1, 0) = Poly(-4) * Poly::unit_i() * a;
  CHECK(t == expect);
  CHECK(rep.act(parse_form(6, "e3456+e1256+e1234")) ==
        diag({Poly(-3), Poly(-3), Poly(1), Poly(1), Poly(1), Poly(1), Poly(1), Poly(1)}));
}

TEST_CASE("dim 6: covariant-derivative column display for X = e1") {
  const SpinRep& rep = spin_rep(6);
  Poly a = Poly::symbol("a"), A = Poly::symbol("A"), B = Poly::symbol("B"), q = Poly::symbol("q");
  Poly i = Poly::unit_i();
  Form tc = a * parse_form(6, "-e246+e136+e145+e235");
  Form so = parse_form(6, "e3456+e1256+e1234");
  Poly quarter = Poly::constant(GaussianRational(Rational(1, 4)));
  Poly half = Poly::constant(GaussianRational(Rational(1, 2)));
  Mat op = quarter * (B - Poly(1)) * rep.act(interior(1, tc)) + half * A * rep.act(interior(1, so)) +
           A * q * rep.act(wedge(Form::basis(6, {1}), so));
  // Psi_1 = [(p+ - p-) i, p+ + p-, 0,...]: test p+=1,p-=0 and p+=0,p-=1.
  for (int plus : {1, 0}) {
    Poly pd = Poly(plus == 1 ? 1 : -1);  // p+ - p-
    Vec psi(8);
    psi[0] = pd * i;
    psi[1] = Poly(1);
    Vec out = op * psi;
    Vec expect(8);
    expect[2] = A * (q - Poly(1)) * pd + half * a * (B - Poly(1));
    expect[5] = half * a * (B - Poly(1)) * pd * i + A * (q - Poly(1)) * i;
    for (size_t k = 0; k < 8; ++k) CHECK(out[k] == expect[k]);
  }
}

TEST_CASE("dim 6: generic covariant-derivative column display under the sign relations") {
  const SpinRep& rep = spin_rep(6);
  Poly a = Poly::symbol("a"), A = Poly::symbol("A"), B = Poly::symbol("B"), q = Poly::symbol("q");
  Poly i = Poly::unit_i();
  Form tc = a * parse_form(6, "-e246+e136+e145+e235");
  Form so = parse_form(6, "e3456+e1256+e1234");
  Poly quarter = Poly::constant(GaussianRational(Rational(1, 4)));
  Poly half = Poly::constant(GaussianRational(Rational(1, 2)));
  for (int sign : {1, -1}) {
    // Clear denominators of A = +-a(B-1)/(2(q-1)) by scaling the condition.
    Poly anum = Poly(sign) * a * (B - Poly(1)), aden = Poly(2) * (q - Poly(1));
    Vec psi(8);
    psi[0] = Poly(sign) * i;  // p_+ = 1 or p_- = 1
    psi[1] = Poly(1);
    for (int k = 1; k <= 6; ++k) {
      Mat op = quarter * (B - Poly(1)) * rep.act(interior(k, tc)) +
               half * A * rep.act(interior(k, so)) + A * q * rep.act(wedge(Form::basis(6, {k}), so));
      Vec out = op * psi;
      // Expected column a(B-1)[0,0,X1-iX2,-X3+iX4,iX5+X6,+-(iX1-X2),+-(-iX3+X4),+-(X5+iX6)].
      std::vector<Poly> x(7);
      x[static_cast<size_t>(k)] = Poly(1);
      Vec expect(8);
      expect[2] = x[1] - i * x[2];
      expect[3] = -x[3] + i * x[4];
      expect[4] = i * x[5] + x[6];
      expect[5] = Poly(sign) * (i * x[1] - x[2]);
      expect[6] = Poly(sign) * (-i * x[3] + x[4]);
      expect[7] = Poly(sign) * (x[5] + i * x[6]);
      for (size_t r = 0; r < 8; ++r) {
        Poly lhs = out[r].substitute_cleared(symbol_index("A"), anum, aden);
        Poly rhs = (a * (B - Poly(1)) * expect[r]) * aden.pow(out[r].degree_in(symbol_index("A")));
        // substitute_cleared scales by aden^deg_A; deg_A is 1 in every entry.
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("dim 7: literature diagonals and distinguished parallel spinors") {
  const SpinRep& rep = spin_rep(7);
  Form omega3 = parse_form(7, "e127+e135-e146-e236-e245+e347+e567");
  CHECK(rep.act(omega3) ==
        diag({Poly(-7), Poly(1), Poly(1), Poly(1), Poly(1), Poly(1), Poly(1), Poly(1)}));
  CHECK(rep.act(parse_form(7, "e127+e347+e567") - omega3) ==
        diag({Poly(4), Poly(-4), Poly(), Poly(), Poly(), Poly(), Poly(), Poly()}));
  Form d2 = -parse_form(7, "e135-e146-e236-e245") +
            Poly::constant(GaussianRational(Rational(-1, 2))) * parse_form(7, "e127+e347-2*e567");
  CHECK(rep.act(d2) ==
        diag({Poly(4), Poly(-4), Poly(-2), Poly(-2), Poly(1), Poly(1), Poly(1), Poly(1)}));
  CHECK(rep.act(Form::basis(7, {5, 6, 7}) - omega3) ==
        diag({Poly(6), Poly(-2), Poly(-2), Poly(-2), Poly(), Poly(), Poly(), Poly()}));
}

TEST_CASE("dim 7: slots 3 and 4 carry opposite type-III correction systems") {
  const SpinRep& rep = spin_rep(7);
  // On each of the two distinguished directions in the D2 = -2 block the
  // stacked correction conditions s(e_k .| T) + p(e_k .| F) + q(e_k ^ F),
  // written as linear forms in the bilinear monomials
  //   [a*s, p*A1, q*A1, p*A2, q*A2, p*A3, q*A3],
  // span exactly the rank-4 system
  //   2(p+q)A1 = a s,   q(2A2 - A3) = 0,
  //   2p A2 + q A3 = eps a s,   A2(p - q) - A3 p = eps a s
  // with eps = -1 on slot 3 and eps = +1 on slot 4.  Note the last two rows
  // together with q(2A2 - A3) = 0 are jointly solvable only when a s = 0, so
  // nonzero type-III torsion with s != 0 admits no flux solution here.
  Form t3 = parse_form(7, "e135-e245");
  std::array<Form, 3> fx = {parse_form(7, "-e2467+e2357+e1457+e1367"),
                            parse_form(7, "e1256+e3456"), parse_form(7, "e1234")};
  // The torsion rotation pins the two directions: slots 3,4 are its -+2 eigenlines.
  Mat n_op = rep.act(t3);
  CHECK((n_op * unit(8, 2))[2] == Poly(2));
  CHECK((n_op * unit(8, 3))[3] == Poly(-2));
  auto rank_of = [](const Mat& m) {
    std::array<GaussianRational, kNumSymbols> pt{};
    for (auto& x : pt) x = GaussianRational(1);
    return spinflux::detail::numeric_profile(m, pt).rank;
  };
  for (int slot : {2, 3}) {
    int eps = (slot == 2) ? -1 : 1;
    Vec v = unit(8, slot);
    Mat rows(56, 7);
    for (int k = 1; k <= 7; ++k) {
      for (size_t j = 0; j < 3; ++j) {
        Mat ip = rep.act(interior(k, fx[j])), wp = rep.act(wedge(Form::basis(7, {k}), fx[j]));
        Vec pcol = ip * v, qcol = wp * v;
        for (size_t r = 0; r < 8; ++r) {
          rows.at(8 * static_cast<size_t>(k - 1) + r, 1 + 2 * j) = pcol[r];
          rows.at(8 * static_cast<size_t>(k - 1) + r, 2 + 2 * j) = qcol[r];
        }
      }
      Vec tcol = rep.act(interior(k, t3)) * v;
      for (size_t r = 0; r < 8; ++r) rows.at(8 * static_cast<size_t>(k - 1) + r, 0) = tcol[r];
    }
    CHECK(rank_of(rows) == 4);
    auto contains = [&](std::array<int, 7> target) {
      Mat ext(57, 7);
      for (size_t r = 0; r < 56; ++r)
        for (size_t c = 0; c < 7; ++c) ext.at(r, c) = rows.at(r, c);
      for (size_t c = 0; c < 7; ++c) ext.at(56, c) = Poly(target[c]);
      return rank_of(ext) == 4;
    };
    CHECK(contains({-1, 2, 2, 0, 0, 0, 0}));                     // 2(p+q)A1 - a s
    CHECK(contains({0, 0, 0, 0, 2, 0, -1}));                     // q(2A2 - A3)
    CHECK(contains({-eps, 0, 0, 2, 0, 0, 1}));                   // 2p A2 + q A3 - eps a s
    CHECK(contains({-eps, 0, 0, 1, -1, -1, 0}));                 // A2(p-q) - A3 p - eps a s
    CHECK_FALSE(contains({eps, 0, 0, 2, 0, 0, 1}));              // opposite sign excluded
  }
}
