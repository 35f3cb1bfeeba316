#pragma once

#include "spinflux/exterior.hpp"
#include "spinflux/linalg.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace spinflux {

// Complex spin representations of Cl(5), Cl(6), Cl(7) with the convention
// e_i * e_i = -1.  The basis of the spinor module is calibrated so that the
// distinguished structure forms act by their literature matrices:
//   dim 5: volume element e_12345 acts as -i.
//   dim 6: torsion form -e246+e136+e145+e235 acts as [[0,4i],[-4i,0]] (+) 0,
//          and the interior/wedge actions of *Omega take the displayed
//          column form on the first two spinors.
//   dim 7: e135-e146-e236-e245 = diag(-4,4,0,...), e567 = diag(-1,-1,-1,-1,1,1,1,1),
//          e127+e347 = diag(-2,-2,2,2,0,...), hence omega^3 = diag(-7,1,...,1);
//          slots 3,4 carry the two extra parallel spinors of the su(2) classes.
class SpinRep {
 public:
  SpinRep(int n, std::vector<Mat> gamma) : n_(n), gamma_(std::move(gamma)) {
    dim_ = gamma_.front().rows();
  }

  int n() const { return n_; }
  int dim() const { return dim_; }
  const Mat& gamma(int k) const { return gamma_[static_cast<size_t>(k - 1)]; }

  // Clifford action of a (mixed-degree) form.
  Mat act(const Form& f) const {
    if (f.dim() != n_) throw std::invalid_argument("SpinRep::act: dimension mismatch");
    Mat out(dim_, dim_);
    for (const auto& [mask, c] : f.terms()) out = out + c * monomial(mask);
    return out;
  }

  const Mat& monomial(uint32_t mask) const {
    auto it = cache_.find(mask);
    if (it != cache_.end()) return it->second;
    Mat m = Mat::identity(dim_);
    for (int b = 0; b < n_; ++b)
      if (mask & (1u << b)) m = m * gamma_[static_cast<size_t>(b)];
    return cache_.emplace(mask, std::move(m)).first->second;
  }

 private:
  int n_, dim_;
  std::vector<Mat> gamma_;
  mutable std::map<uint32_t, Mat> cache_;
};

namespace detail {

inline Mat kronecker(const Mat& x, const Mat& y) {
  Mat r(x.rows() * y.rows(), x.cols() * y.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j)
      for (int k = 0; k < y.rows(); ++k)
        for (int l = 0; l < y.cols(); ++l)
          r.at(i * y.rows() + k, j * y.cols() + l) = x.at(i, j) * y.at(k, l);
  return r;
}

inline Mat pauli(int which) {
  Mat m(2, 2);
  Poly i = Poly::unit_i();
  switch (which) {
    case 1:
      m.at(0, 1) = Poly(1);
      m.at(1, 0) = Poly(1);
      break;
    case 2:
      m.at(0, 1) = -i;
      m.at(1, 0) = i;
      break;
    case 3:
      m.at(0, 0) = Poly(1);
      m.at(1, 1) = Poly(-1);
      break;
    default:
      throw std::invalid_argument("pauli");
  }
  return m;
}

// gamma_{2j-1} = i s3^(j-1) x s1 x 1..., gamma_{2j} = i s3^(j-1) x s2 x 1...
inline std::vector<Mat> tensor_gammas(int factors) {
  std::vector<Mat> out;
  for (int j = 1; j <= factors; ++j)
    for (int which : {1, 2}) {
      Mat m(1, 1);
      m.at(0, 0) = Poly(1);
      for (int f = 1; f <= factors; ++f) {
        if (f < j)
          m = kronecker(m, pauli(3));
        else if (f == j)
          m = kronecker(m, pauli(which));
        else
          m = kronecker(m, Mat::identity(2));
      }
      out.push_back(Poly::unit_i() * m);
    }
  return out;
}

// Gauss-Jordan inverse for matrices with constant entries.
inline Mat inverse_constant(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse_constant: not square");
  int n = m.rows();
  std::vector<std::vector<GaussianRational>> a(static_cast<size_t>(n),
                                               std::vector<GaussianRational>(static_cast<size_t>(2 * n)));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) a[static_cast<size_t>(r)][static_cast<size_t>(c)] = m.at(r, c).constant_value();
    a[static_cast<size_t>(r)][static_cast<size_t>(n + r)] = GaussianRational(1);
  }
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (!a[static_cast<size_t>(r)][static_cast<size_t>(c)].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::runtime_error("inverse_constant: singular");
    std::swap(a[static_cast<size_t>(c)], a[static_cast<size_t>(pivot)]);
    GaussianRational inv = GaussianRational(1) / a[static_cast<size_t>(c)][static_cast<size_t>(c)];
    for (auto& v : a[static_cast<size_t>(c)]) v *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == c) continue;
      GaussianRational f = a[static_cast<size_t>(r)][static_cast<size_t>(c)];
      if (f.is_zero()) continue;
      for (int cc = 0; cc < 2 * n; ++cc)
        a[static_cast<size_t>(r)][static_cast<size_t>(cc)] -= f * a[static_cast<size_t>(c)][static_cast<size_t>(cc)];
    }
  }
  Mat out(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out.at(r, c) = Poly::constant(a[static_cast<size_t>(r)][static_cast<size_t>(n + c)]);
  return out;
}

inline void check_clifford(const std::vector<Mat>& g) {
  int dim = g.front().rows();
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = i; j < g.size(); ++j) {
      Mat anti = g[i] * g[j] + g[j] * g[i];
      Mat expect = (i == j) ? Poly(-2) * Mat::identity(dim) : Mat(dim, dim);
      if (anti != expect) throw std::logic_error("clifford relations violated");
    }
}

inline Vec column_of(const Mat& m, int c) {
  Vec v(static_cast<size_t>(m.rows()));
  for (int r = 0; r < m.rows(); ++r) v[static_cast<size_t>(r)] = m.at(r, c);
  return v;
}

inline Mat columns_to_matrix(const std::vector<Vec>& cols) {
  int rows = static_cast<int>(cols.front().size());
  Mat m(rows, static_cast<int>(cols.size()));
  for (size_t c = 0; c < cols.size(); ++c)
    for (int r = 0; r < rows; ++r) m.at(r, static_cast<int>(c)) = cols[c][static_cast<size_t>(r)];
  return m;
}

inline Vec mat_apply(const Mat& m, const Vec& v) { return m * v; }

inline Vec scale(const GaussianRational& s, const Vec& v) {
  Vec r = v;
  for (auto& e : r) e = Poly::constant(s) * e;
  return r;
}
inline Vec add(const Vec& x, const Vec& y) {
  Vec r = x;
  for (size_t k = 0; k < r.size(); ++k) r[k] += y[k];
  return r;
}
inline Vec sub(const Vec& x, const Vec& y) {
  Vec r = x;
  for (size_t k = 0; k < r.size(); ++k) r[k] -= y[k];
  return r;
}
inline bool vec_zero(const Vec& v) {
  for (const auto& e : v)
    if (!e.is_zero()) return false;
  return true;
}

// Scalar ratio target = s * base (throws if no such constant exists).
inline GaussianRational vector_ratio(const Vec& target, const Vec& base) {
  GaussianRational s(0);
  bool found = false;
  for (size_t k = 0; k < base.size(); ++k)
    if (!base[k].is_zero()) {
      s = target[k].constant_value() / base[k].constant_value();
      found = true;
      break;
    }
  if (!found) throw std::runtime_error("vector_ratio: zero base vector");
  for (size_t k = 0; k < base.size(); ++k)
    if (target[k].constant_value() != s * base[k].constant_value())
      throw std::runtime_error("vector_ratio: vectors not proportional");
  return s;
}

// Normalize a constant vector by its first nonzero entry.
inline Vec normalize(const Vec& v) {
  for (const auto& e : v)
    if (!e.is_zero()) return scale(GaussianRational(1) / e.constant_value(), v);
  throw std::runtime_error("normalize: zero vector");
}

inline SpinRep conjugated(const SpinRep& rep, const std::vector<Vec>& basis) {
  Mat s = columns_to_matrix(basis);
  Mat sinv = inverse_constant(s);
  std::vector<Mat> g;
  for (int k = 1; k <= rep.n(); ++k) g.push_back(sinv * rep.gamma(k) * s);
  check_clifford(g);
  return SpinRep(rep.n(), std::move(g));
}

inline SpinRep build_rep5() {
  auto g = tensor_gammas(2);
  Mat vol4 = g[0] * g[1] * g[2] * g[3];
  g.push_back((-Poly::unit_i()) * vol4);  // makes e_12345 act as -i
  check_clifford(g);
  SpinRep rep(5, std::move(g));
  if (rep.act(Form::basis(5, {1, 2, 3, 4, 5})) != (-Poly::unit_i()) * Mat::identity(4))
    throw std::logic_error("dim-5 volume convention broken");
  return rep;
}

inline SpinRep build_rep6() {
  SpinRep raw(6, tensor_gammas(3));
  Form tc = parse_form(6, "-e246+e136+e145+e235");   // unit torsion coefficient
  Form so = parse_form(6, "e3456+e1256+e1234");      // *Omega
  // u+ / u- : the +-4 eigenspinors of the torsion endomorphism.
  auto up_space = eigenspace(raw.act(tc), Poly(4));
  auto um_space = eigenspace(raw.act(tc), Poly(-4));
  if (up_space.size() != 1 || um_space.size() != 1)
    throw std::logic_error("dim-6: torsion eigenspaces not one-dimensional");
  Vec up = normalize(up_space.front()), um = normalize(um_space.front());

  // Operators appearing in the covariant-derivative columns.
  std::vector<Mat> G, H1, H2, Pp, Pm;
  GaussianRational half(Rational(1, 2)), quarter(Rational(1, 4));
  for (int k = 1; k <= 6; ++k) {
    G.push_back(raw.act(interior(k, tc)));
    H1.push_back(raw.act(interior(k, so)));
    H2.push_back(raw.act(wedge(Form::basis(6, {k}), so)));
    Pp.push_back(Poly::constant(quarter) * G.back() + Poly::constant(half) * H2.back());
    Pm.push_back(Poly::constant(quarter) * G.back() - Poly::constant(half) * H2.back());
    // Consistency of the flux coefficient in the displayed columns.
    for (const Vec& u : {up, um})
      if (!vec_zero(mat_apply(H1.back() + Poly(2) * H2.back(), u)))
        throw std::logic_error("dim-6: flux coefficient identity fails");
  }
  Poly i = Poly::unit_i();

  // Displayed columns for X = e1..e6 applied to u+ determine f3..f8.
  Vec w1 = mat_apply(Pp[0], up), w2 = mat_apply(Pp[1], up);
  Vec w3 = mat_apply(Pp[2], up), w4 = mat_apply(Pp[3], up);
  Vec w5 = mat_apply(Pp[4], up), w6 = mat_apply(Pp[5], up);
  auto cmul = [](const Poly& c, const Vec& v) {
    Vec r = v;
    for (auto& e : r) e = c * e;
    return r;
  };
  GaussianRational h = half;
  // w1 = f3+i f6, w2 = -i f3 - f6  =>  f3 = (w1+i w2)/2, f6 = (w1-i w2)/(2i).
  Vec f3 = scale(h, add(w1, cmul(i, w2)));
  Vec f6 = scale(h, cmul(-i, sub(w1, cmul(i, w2))));
  // w3 = -f4-i f7, w4 = i f4+f7  =>  f4 = -(w3+i w4)/2, f7 = (w4+i w3)/2.
  Vec f4 = scale(-h, add(w3, cmul(i, w4)));
  Vec f7 = scale(h, add(w4, cmul(i, w3)));
  // w5 = i f5+f8, w6 = f5+i f8  =>  f5 = (w6-i w5)/2, f8 = (w5-i w6)/2.
  Vec f5 = scale(h, sub(w6, cmul(i, w5)));
  Vec f8 = scale(h, sub(w5, cmul(i, w6)));

  // The lower-sign column for X=e1 pins the relative phase of u-.
  GaussianRational beta = vector_ratio(sub(f3, cmul(i, f6)), mat_apply(Pm[0], um));
  Vec bum = scale(beta, um);
  // Remaining lower-sign columns certify the construction.
  struct Check {
    int k;
    Vec expect;
  };
  std::vector<Check> checks = {{2, add(cmul(-i, f3), f6)}, {3, add(cmul(Poly(-1), f4), cmul(i, f7))},
                               {4, sub(cmul(i, f4), f7)},  {5, sub(cmul(i, f5), f8)},
                               {6, sub(f5, cmul(i, f8))}};
  for (const auto& c : checks)
    if (!vec_zero(sub(mat_apply(Pm[static_cast<size_t>(c.k - 1)], bum), c.expect)))
      throw std::logic_error("dim-6: lower-sign column check fails");

  Vec f1 = scale(GaussianRational(1) / GaussianRational(Rational(0), Rational(2)), sub(up, bum));
  Vec f2 = scale(h, add(up, bum));
  SpinRep rep = conjugated(raw, {f1, f2, f3, f4, f5, f6, f7, f8});

  // Certify the calibration against the displayed endomorphisms.
  Mat tmat(8, 8);
  tmat.at(0, 1) = Poly(4) * i;
  tmat.at(1, 0) = Poly(-4) * i;
  if (rep.act(tc) != tmat) throw std::logic_error("dim-6: torsion matrix mismatch");
  Mat so_mat = rep.act(so);
  Mat so_expect = Mat::identity(8);
  so_expect.at(0, 0) = Poly(-3);
  so_expect.at(1, 1) = Poly(-3);
  if (so_mat != so_expect) throw std::logic_error("dim-6: *Omega matrix mismatch");
  return rep;
}

inline SpinRep build_rep7() {
  Form omega3 = parse_form(7, "e127+e135-e146-e236-e245+e347+e567");
  for (int sign : {1, -1}) {
    auto g = tensor_gammas(3);
    Mat g7 = Mat::identity(8);
    for (int k = 0; k < 6; ++k) g7 = g7 * g[static_cast<size_t>(k)];
    g.push_back(Poly(sign) * g7);
    check_clifford(g);
    SpinRep raw(7, std::move(g));
    if (eigenspace(raw.act(omega3), Poly(-7)).size() != 1) continue;  // other volume class

    Mat e_op = raw.act(parse_form(7, "e135-e146-e236-e245"));
    Mat r_op = raw.act(Form::basis(7, {5, 6, 7}));
    Mat p_op = raw.act(parse_form(7, "e127+e347"));
    if (e_op * r_op != r_op * e_op || e_op * p_op != p_op * e_op || r_op * p_op != p_op * r_op)
      throw std::logic_error("dim-7: splitting operators fail to commute");

    auto one = [&](const std::vector<Vec>& s) {
      if (s.size() != 1) throw std::logic_error("dim-7: unexpected eigenspace dimension");
      return normalize(s.front());
    };
    Vec f1 = one(eigenspace(e_op, Poly(-4)));
    Vec f2 = one(eigenspace(e_op, Poly(4)));
    auto block34 = joint_kernel({e_op, r_op + Mat::identity(8), p_op - Poly(2) * Mat::identity(8)});
    auto block58 = joint_kernel({e_op, r_op - Mat::identity(8), p_op});
    if (block34.size() != 2 || block58.size() != 4)
      throw std::logic_error("dim-7: block dimensions unexpected");

    // Distinguish slots 3,4 inside the su(2) block.  The type-III torsion
    // direction e135-e245 acts on this block as an antisymmetric rotation
    // with eigenvalues -+2; its eigenlines are the only directions on which
    // the flux correction system degenerates.  Label them by the sign eps of
    // the scalar relation 2p*A2 + q*A3 = eps*a*s carried in the row space of
    // that degenerate system: slot 3 takes eps = -1, slot 4 takes eps = +1.
    Form t3 = parse_form(7, "e135-e245");
    Form flux1 = parse_form(7, "-e2467+e2357+e1457+e1367");
    Form flux2 = parse_form(7, "e1256+e3456");
    Form flux3 = parse_form(7, "e1234");
    Mat n_op = raw.act(t3);
    auto eps_of = [&](const Vec& v) -> int {
      // Stack, for every frame direction e_k, the correction operator applied
      // to v as exact linear forms in the bilinear monomials
      //   [a*s, p*A1, q*A1, p*A2, q*A2, p*A3, q*A3].
      std::array<const Form*, 3> fluxes = {&flux1, &flux2, &flux3};
      Mat rows(56, 7);
      for (int k = 1; k <= 7; ++k) {
        Form fk = Form::basis(7, {k});
        Vec torsion_col = mat_apply(raw.act(interior(k, t3)), v);
        for (size_t r = 0; r < 8; ++r) rows.at(8 * static_cast<size_t>(k - 1) + r, 0) = torsion_col[r];
        for (size_t j = 0; j < 3; ++j) {
          Vec pcol = mat_apply(raw.act(interior(k, *fluxes[j])), v);
          Vec qcol = mat_apply(raw.act(wedge(fk, *fluxes[j])), v);
          for (size_t r = 0; r < 8; ++r) {
            rows.at(8 * static_cast<size_t>(k - 1) + r, 1 + 2 * j) = pcol[r];
            rows.at(8 * static_cast<size_t>(k - 1) + r, 2 + 2 * j) = qcol[r];
          }
        }
      }
      auto rank_of = [](const Mat& m) {
        std::array<GaussianRational, kNumSymbols> pt{};  // entries are constants
        for (auto& x : pt) x = GaussianRational(1);
        return numeric_profile(m, pt).rank;
      };
      int base = rank_of(rows);
      if (base != 4) throw std::logic_error("dim-7: slot system rank unexpected");
      auto contains = [&](std::array<int, 7> target) {
        Mat ext(57, 7);
        for (int r = 0; r < 56; ++r)
          for (int c = 0; c < 7; ++c) ext.at(static_cast<size_t>(r), static_cast<size_t>(c)) = rows.at(static_cast<size_t>(r), static_cast<size_t>(c));
        for (int c = 0; c < 7; ++c) ext.at(56, static_cast<size_t>(c)) = Poly(target[static_cast<size_t>(c)]);
        return rank_of(ext) == base;
      };
      // Sanity: the eps-independent rows of the degenerate system.
      if (!contains({-1, 2, 2, 0, 0, 0, 0}) || !contains({0, 0, 0, 0, 2, 0, -1}))
        throw std::logic_error("dim-7: slot system rows unexpected");
      bool minus = contains({1, 0, 0, 2, 0, 0, 1});   // 2p*A2 + q*A3 + a*s
      bool plus = contains({-1, 0, 0, 2, 0, 0, 1});   // 2p*A2 + q*A3 - a*s
      if (minus == plus) throw std::logic_error("dim-7: slot 3/4 assignment ambiguous");
      return minus ? -1 : 1;
    };
    auto eigenline = [&](int mu) -> Vec {
      auto sp = joint_kernel({e_op, r_op + Mat::identity(8), p_op - Poly(2) * Mat::identity(8),
                              n_op - Poly(mu) * Mat::identity(8)});
      if (sp.size() != 1) throw std::logic_error("dim-7: torsion rotation eigenline not simple");
      return normalize(sp.front());
    };
    Vec f3 = eigenline(2), f4 = eigenline(-2);
    if (eps_of(f3) != -1) std::swap(f3, f4);
    if (eps_of(f3) != -1 || eps_of(f4) != 1)
      throw std::logic_error("dim-7: slot 3/4 labels inconsistent");

    std::vector<Vec> basis = {f1, f2, f3, f4};
    for (const auto& b : block58) basis.push_back(normalize(b));
    SpinRep rep = conjugated(raw, basis);

    // Certify the literature diagonals.
    auto expect_diag = [&](const Form& f, std::array<long, 8> d) {
      Mat m(8, 8);
      for (int k = 0; k < 8; ++k) m.at(k, k) = Poly(d[static_cast<size_t>(k)]);
      if (rep.act(f) != m) throw std::logic_error("dim-7: diagonal certification fails");
    };
    expect_diag(omega3, {-7, 1, 1, 1, 1, 1, 1, 1});
    expect_diag(parse_form(7, "e127+e347+e567") - omega3, {4, -4, 0, 0, 0, 0, 0, 0});
    Form d2 = -parse_form(7, "e135-e146-e236-e245");
    d2 = d2 + Poly::constant(GaussianRational(Rational(-1, 2))) * parse_form(7, "e127+e347-2*e567");
    expect_diag(d2, {4, -4, -2, -2, 1, 1, 1, 1});
    expect_diag(Form::basis(7, {5, 6, 7}) - omega3, {6, -2, -2, -2, 0, 0, 0, 0});
    return rep;
  }
  throw std::logic_error("dim-7: no volume class with omega^3 eigenvalue -7");
}

}  // namespace detail

// Calibrated representation, built once per dimension.
inline const SpinRep& spin_rep(int n) {
  static const SpinRep rep5 = detail::build_rep5();
  static const SpinRep rep6 = detail::build_rep6();
  static const SpinRep rep7 = detail::build_rep7();
  switch (n) {
    case 5:
      return rep5;
    case 6:
      return rep6;
    case 7:
      return rep7;
    default:
      throw std::invalid_argument("spin_rep: dimension must be 5, 6 or 7");
  }
}

}  // namespace spinflux
