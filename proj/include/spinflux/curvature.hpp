#pragma once

// Spinorial curvature engine.  For a connection
//   nabla_X = nabla^g_X + 1/4 (X . T) + p (X . F) + q (X ^ F)
// with T = B * T^c and nabla^c-parallel T^c, F, the curvature endomorphism
// differs from the characteristic one by twelve algebraic terms R_1..R_12
// (with s := (B-1)/4).  This header computes those terms and their first and
// second Clifford contractions
//   M_j(X) = sum_k e_k . R_j(e_k, X),    M_j = sum_k e_k . M_j(e_k),
//   K(X)   = 1/2 Ric^c(X) - 1/2 (X . sigma^{T^c}) + sum_j M_j(X),
//   K      = -1/2 Scal^c - 2 sigma^{T^c} + sum_j M_j,
// exactly, as matrices over the polynomial ring.

#include <stdexcept>
#include <utility>
#include <vector>

#include "spinflux/exterior.hpp"
#include "spinflux/linalg.hpp"
#include "spinflux/spinrep.hpp"

namespace spinflux {

// Interior product / wedge with a 1-form whose coefficients are polynomials.
inline Form interior_vec(const Form& v, const Form& f) {
  Form out(f.dim());
  for (int k = 1; k <= v.dim(); ++k) {
    Poly c = v.component({k});
    if (!c.is_zero()) out = out + c * interior(k, f);
  }
  return out;
}

inline Form wedge_vec(const Form& v, const Form& f) {
  Form out(f.dim());
  for (int k = 1; k <= v.dim(); ++k) {
    Poly c = v.component({k});
    if (!c.is_zero()) out = out + c * wedge(Form::basis(f.dim(), {k}), f);
  }
  return out;
}

// Connection coefficients (p, q) of the three derivative families:
// family 0: p=(n-4)/4, q=1;  family 1: p=(n-4)/4, q free;  family 2: p=0, q=1.
inline std::pair<Poly, Poly> derivative_pq(int n, int family) {
  Poly p_special = Poly::constant(GaussianRational(Rational(n - 4, 4)));
  switch (family) {
    case 0: return {p_special, Poly(1)};
    case 1: return {p_special, Poly::symbol("q")};
    case 2: return {Poly(), Poly(1)};
  }
  throw std::invalid_argument("derivative_pq: family must be 0, 1 or 2");
}

// s = (B-1)/4 for the torsion rescaling T = B * T^c.
inline Poly torsion_s() {
  return (Poly::symbol("B") - Poly(1)) * Poly::constant(GaussianRational(Rational(1, 4)));
}

class CurvatureEngine {
 public:
  CurvatureEngine(const SpinRep& rep, Form torsion, Form flux, Poly s, Poly p, Poly q)
      : rep_(rep),
        torsion_(std::move(torsion)),
        flux_(std::move(flux)),
        s_(std::move(s)),
        p_(std::move(p)),
        q_(std::move(q)),
        sigma_(sigma_form(torsion_)) {
    int n = rep_.n();
    if (torsion_.dim() != n || flux_.dim() != n)
      throw std::invalid_argument("CurvatureEngine: dimension mismatch");
    for (int k = 1; k <= n; ++k) {
      it_.push_back(rep_.act(interior(k, torsion_)));
      if_.push_back(rep_.act(interior(k, flux_)));
      wf_.push_back(rep_.act(wedge(Form::basis(n, {k}), flux_)));
    }
  }

  const SpinRep& rep() const { return rep_; }
  const Form& sigma_torsion() const { return sigma_; }

  // R_j(e_x, e_y), j = 1..12, frame indices 1-based.
  Mat r_term(int j, int x, int y) const {
    auto comm = [](const Mat& u, const Mat& v) { return u * v - v * u; };
    switch (j) {
      case 1: return s_ * rep_.act(interior_vec(contract2(x, y, torsion_), torsion_));
      case 2: return p_ * rep_.act(interior_vec(contract2(x, y, torsion_), flux_));
      case 3: return q_ * rep_.act(wedge_vec(contract2(x, y, torsion_), flux_));
      case 4: return s_ * s_ * comm(it(x), it(y));
      case 5: return s_ * p_ * comm(it(x), if_m(y));
      case 6: return s_ * p_ * comm(if_m(x), it(y));
      case 7: return s_ * q_ * comm(it(x), wf(y));
      case 8: return s_ * q_ * comm(wf(x), it(y));
      case 9: return p_ * p_ * comm(if_m(x), if_m(y));
      case 10: return p_ * q_ * comm(if_m(x), wf(y));
      case 11: return p_ * q_ * comm(wf(x), if_m(y));
      case 12: return q_ * q_ * comm(wf(x), wf(y));
    }
    throw std::invalid_argument("r_term: j must be 1..12");
  }

  Mat r_total(int x, int y) const {
    Mat out(rep_.dim(), rep_.dim());
    for (int j = 1; j <= 12; ++j) out = out + r_term(j, x, y);
    return out;
  }

  // M_j(e_x) = sum_k e_k . R_j(e_k, e_x).
  Mat m_first(int j, int x) const {
    Mat out(rep_.dim(), rep_.dim());
    for (int k = 1; k <= rep_.n(); ++k) out = out + rep_.gamma(k) * r_term(j, k, x);
    return out;
  }

  Mat m_first_total(int x) const {
    Mat out(rep_.dim(), rep_.dim());
    for (int k = 1; k <= rep_.n(); ++k) out = out + rep_.gamma(k) * r_total(k, x);
    return out;
  }

  // K(e_x) for the given characteristic Ricci tensor (rows indexed from 0).
  Mat k_first(const Mat& ricci, int x) const {
    Poly half = Poly::constant(GaussianRational(Rational(1, 2)));
    Mat out(rep_.dim(), rep_.dim());
    for (int m = 1; m <= rep_.n(); ++m) {
      const Poly& r = ricci.at(static_cast<size_t>(x - 1), static_cast<size_t>(m - 1));
      if (!r.is_zero()) out = out + half * r * rep_.gamma(m);
    }
    out = out - half * rep_.act(interior(x, sigma_));
    return out + m_first_total(x);
  }

  // K via the displayed closed formula.
  Mat k_second(const Poly& scal) const {
    Poly minus_half = Poly::constant(GaussianRational(Rational(-1, 2)));
    Mat out = (minus_half * scal) * Mat::identity(rep_.dim());
    out = out - Poly(2) * rep_.act(sigma_);
    for (int x = 1; x <= rep_.n(); ++x) out = out + rep_.gamma(x) * m_first_total(x);
    return out;
  }

  // K via its definition sum_k e_k . K(e_k); must agree with k_second when
  // scal equals the trace of ricci.
  Mat k_second_contracted(const Mat& ricci) const {
    Mat out(rep_.dim(), rep_.dim());
    for (int x = 1; x <= rep_.n(); ++x) out = out + rep_.gamma(x) * k_first(ricci, x);
    return out;
  }

 private:
  const Mat& it(int k) const { return it_[static_cast<size_t>(k - 1)]; }
  const Mat& if_m(int k) const { return if_[static_cast<size_t>(k - 1)]; }
  const Mat& wf(int k) const { return wf_[static_cast<size_t>(k - 1)]; }

  const SpinRep& rep_;
  Form torsion_, flux_;
  Poly s_, p_, q_;
  Form sigma_;
  std::vector<Mat> it_, if_, wf_;
};

}  // namespace spinflux
