#pragma once

// Theorem-level verification machinery: the algebraic parallel-spinor
// condition on eigenbundles, sufficiency by exact substitution, necessity by
// seeded generic sampling, eigenspinor extraction, and rank obstructions.

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spinflux/catalog.hpp"
#include "spinflux/curvature.hpp"

namespace spinflux {

// One solved relation "symbol := num/den" of a substitution chain.  Chains are
// applied in order; denominators are protected by the record's side
// conditions.
struct Subst {
  std::string symbol;
  Poly num;
  Poly den = Poly(1);
};

// Necessity probe: parameters on `chain` satisfy every claimed relation except
// the one whose defect polynomial `violated` is forced nonzero at the sample.
struct NecessityCase {
  std::string label;
  std::vector<Subst> chain;
  Poly violated;
};

struct BundleSpec {
  Form op;
  Poly ev;
};

enum class ConditionKind {
  Correction,      // s(X . T^c) + p(X . F) + q(X ^ F), minus any preservation part
  KillingSpinor,   // mu X + (B/4)(X . T^c) + p(X . F) + q(X ^ F)
  KernelOnly,      // bundle lies in ker K(e_i) and ker K; no correction condition
};

struct TheoremSpec {
  std::string id;
  std::string cls;
  int family = 1;  // 0, 1, 2 per the derivative table; 3 = fully generic (p, q) symbols
  std::vector<std::pair<std::string, Poly>> flux;
  std::vector<BundleSpec> bundle;
  int bundle_dim = 0;
  ConditionKind kind = ConditionKind::Correction;
  Poly killing_mu;
  std::vector<Subst> relations;
  // If preservation_scale is nonzero the condition asserted is
  //   correction(e_i) v = preservation_scale * <dir, e_i> * v on the bundle.
  Form preservation_dir{1};
  Poly preservation_scale;
  bool check_k = false;  // additionally require bundle in ker K(e_i) and ker K
  Mat ricci{0, 0};       // Ricci override for check_k; empty => catalog value
  Poly scal;
  std::vector<Poly> side;  // nonvanishing constraints at samples
  std::vector<NecessityCase> necessity;
};

struct SufficiencyResult {
  bool pass = false;
  std::string detail;
};

struct NecessityResult {
  std::string label;
  int samples = 0;
  int witnesses = 0;  // samples with a nonzero condition value
  bool vacuous = false;
  bool pass = false;
};

struct EigenResult {
  bool is_eigen = false;
  Poly num;  // eigenvalue = num / den
  Poly den = Poly(1);
};

inline std::pair<Poly, Poly> family_pq(int n, int family) {
  if (family == 3) return {Poly::symbol("p"), Poly::symbol("q")};
  return derivative_pq(n, family);
}

// act(m) v = ev * v?  Exact test over the polynomial ring via cross-ratios.
inline EigenResult eigenvalue_of(const Mat& m, const Vec& v) {
  size_t d = v.size();
  Vec w(d);
  for (size_t r = 0; r < d; ++r) {
    Poly acc;
    for (size_t c = 0; c < d; ++c) acc += m.at(r, c) * v[c];
    w[r] = acc;
  }
  size_t pivot = d;
  for (size_t r = 0; r < d; ++r)
    if (!v[r].is_zero()) {
      pivot = r;
      break;
    }
  if (pivot == d) return {};
  for (size_t r = 0; r < d; ++r)
    if (!(w[r] * v[pivot] == w[pivot] * v[r])) return {};
  return {true, w[pivot], v[pivot]};
}

class Verifier {
 public:
  explicit Verifier(uint64_t seed = 20260826, int samples = 20)
      : seed_(seed), samples_(samples) {}

  uint64_t seed() const { return seed_; }
  int samples() const { return samples_; }

  std::vector<Vec> bundle_basis(const TheoremSpec& t) const {
    const GeometryClass& g = get_class(t.cls);
    const SpinRep& rep = spin_rep(g.n);
    std::vector<Mat> ops;
    for (const auto& b : t.bundle) ops.push_back(rep.act(b.op) - b.ev * Mat::identity(rep.dim()));
    return joint_kernel(ops, seed_);
  }

  // Raw condition polynomials (before any relation is substituted): the
  // entries of the per-direction condition operator applied to each bundle
  // basis spinor, minus the asserted preservation part.
  std::vector<Poly> conditions(const TheoremSpec& t) const {
    const GeometryClass& g = get_class(t.cls);
    const SpinRep& rep = spin_rep(g.n);
    auto [p, q] = family_pq(g.n, t.family);
    Poly s = torsion_s();
    Form F = flux_form(g, t.flux);
    std::vector<Vec> basis = bundle_basis(t);
    if (static_cast<int>(basis.size()) != t.bundle_dim)
      throw std::runtime_error(t.id + ": bundle dimension " + std::to_string(basis.size()) +
                               " != expected " + std::to_string(t.bundle_dim));
    Poly torsion_coeff = s;
    if (t.kind == ConditionKind::KillingSpinor)
      torsion_coeff = s + Poly::constant(GaussianRational(Rational(1, 4)));
    std::vector<Poly> out;
    for (int i = 1; i <= g.n; ++i) {
      Mat M = torsion_coeff * rep.act(interior(i, g.torsion)) + p * rep.act(interior(i, F)) +
              q * rep.act(wedge(Form::basis(g.n, {i}), F));
      if (t.kind == ConditionKind::KillingSpinor) M = M + t.killing_mu * rep.gamma(i);
      for (const Vec& v : basis) {
        Poly eta_i = t.preservation_scale.is_zero() ? Poly() : t.preservation_dir.component({i});
        for (size_t r = 0; r < v.size(); ++r) {
          Poly acc;
          for (size_t c = 0; c < v.size(); ++c) acc += M.at(r, c) * v[c];
          if (!t.preservation_scale.is_zero()) acc -= t.preservation_scale * eta_i * v[r];
          if (!acc.is_zero()) out.push_back(acc);
        }
      }
    }
    return out;
  }

  // K(e_i) and K condition polynomials on the bundle, for records with a
  // printed characteristic Ricci tensor.
  std::vector<Poly> k_conditions(const TheoremSpec& t) const {
    const GeometryClass& g = get_class(t.cls);
    const SpinRep& rep = spin_rep(g.n);
    auto [p, q] = family_pq(g.n, t.family);
    CurvatureEngine eng(rep, g.torsion, flux_form(g, t.flux), torsion_s(), p, q);
    Mat ric = t.ricci.rows() ? t.ricci : g.ricci_c;
    Poly scal = t.ricci.rows() ? t.scal : g.scal_c;
    if (t.ricci.rows() && t.scal.is_zero()) scal = ric.trace();
    std::vector<Mat> ks;
    for (int i = 1; i <= g.n; ++i) ks.push_back(eng.k_first(ric, i));
    ks.push_back(eng.k_second(scal));
    std::vector<Poly> out;
    for (const Vec& v : bundle_basis(t))
      for (const Mat& K : ks)
        for (size_t r = 0; r < v.size(); ++r) {
          Poly acc;
          for (size_t c = 0; c < v.size(); ++c) acc += K.at(r, c) * v[c];
          if (!acc.is_zero()) out.push_back(acc);
        }
    return out;
  }

  static Poly apply_chain(Poly poly, const std::vector<Subst>& chain) {
    for (const auto& st : chain)
      poly = poly.substitute_cleared(symbol_index(st.symbol), st.num, st.den);
    return poly;
  }

  // All condition polynomials the record asserts to vanish under its chain.
  std::vector<Poly> all_conditions(const TheoremSpec& t) const {
    std::vector<Poly> cs;
    if (t.kind != ConditionKind::KernelOnly) cs = conditions(t);
    if (t.kind == ConditionKind::KernelOnly || t.check_k) {
      auto kc = k_conditions(t);
      cs.insert(cs.end(), kc.begin(), kc.end());
    }
    return cs;
  }

  SufficiencyResult verify_sufficiency(const TheoremSpec& t) const {
    std::vector<Poly> cs;
    try {
      cs = all_conditions(t);
    } catch (const std::exception& e) {
      return {false, e.what()};
    }
    for (const Poly& c : cs) {
      Poly r = apply_chain(c, t.relations);
      if (!r.is_zero()) return {false, t.id + ": residual condition " + r.str()};
    }
    return {true, ""};
  }

  std::vector<NecessityResult> verify_necessity(const TheoremSpec& t) const {
    std::vector<Poly> cs = all_conditions(t);
    std::vector<NecessityResult> out;
    for (const auto& nc : t.necessity) {
      NecessityResult res;
      res.label = nc.label;
      SamplePointSource src(seed_ ^ std::hash<std::string>{}(t.id + "/" + nc.label));
      for (int k = 0; k < samples_; ++k) {
        std::array<GaussianRational, kNumSymbols> pt{};
        bool ok = false;
        for (int attempt = 0; attempt < 400 && !ok; ++attempt) {
          pt = src.point();
          // Enforce the non-violated relations numerically, in chain order.
          ok = true;
          for (const auto& st : nc.chain) {
            GaussianRational den = st.den.evaluate(pt);
            if (den.is_zero()) {
              ok = false;
              break;
            }
            pt[static_cast<size_t>(symbol_index(st.symbol))] = st.num.evaluate(pt) / den;
          }
          if (!ok) continue;
          for (const Poly& sd : t.side)
            if (sd.evaluate(pt).is_zero()) {
              ok = false;
              break;
            }
          if (ok && nc.violated.evaluate(pt).is_zero()) ok = false;
        }
        if (!ok) continue;  // witness search exhausted for this sample
        ++res.samples;
        for (const Poly& c : cs)
          if (!c.evaluate(pt).is_zero()) {
            ++res.witnesses;
            break;
          }
      }
      res.vacuous = (res.witnesses == 0);
      res.pass = (res.samples == samples_) && (res.witnesses == res.samples);
      out.push_back(res);
    }
    return out;
  }

 private:
  uint64_t seed_;
  int samples_;
};

// ---------------------------------------------------------------------------
// Univariate helpers for the rank-obstruction arguments.

inline Poly coeff_in(const Poly& poly, int sym, int deg) {
  Poly out;
  for (const auto& [e, c] : poly.terms()) {
    if (e[static_cast<size_t>(sym)] != deg) continue;
    auto rest = e;
    rest[static_cast<size_t>(sym)] = 0;
    Poly t;
    t.add_term(rest, c);
    out += t;
  }
  return out;
}

// Sylvester resultant of two polynomials with respect to one symbol.
inline Poly resultant(const Poly& f, const Poly& g, int sym) {
  int m = f.degree_in(sym), n = g.degree_in(sym);
  if (m < 0 || n < 0 || (m == 0 && n == 0)) throw std::invalid_argument("resultant: degenerate");
  size_t size = static_cast<size_t>(m + n);
  Mat syl(size, size);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) syl.at(static_cast<size_t>(r), static_cast<size_t>(r + k)) = coeff_in(f, sym, m - k);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k)
      syl.at(static_cast<size_t>(n + r), static_cast<size_t>(r + k)) = coeff_in(g, sym, n - k);
  return det(syl);
}

// Greatest common divisor of univariate polynomials over the rationals
// (monic Euclid with cleared denominators); result is content-normalized only
// up to a unit, which suffices for constancy tests.
inline Poly gcd_univariate(Poly f, Poly g, int sym) {
  auto degree = [&](const Poly& x) { return x.degree_in(sym); };
  while (!g.is_zero()) {
    // Pseudo-remainder of f by g.
    int df = degree(f), dg = degree(g);
    if (df < dg) {
      std::swap(f, g);
      continue;
    }
    Poly lg = coeff_in(g, sym, dg);
    Poly r = f;
    while (!r.is_zero() && degree(r) >= dg) {
      int dr = degree(r);
      Poly lr = coeff_in(r, sym, dr);
      Poly shift;
      {
        Poly x = Poly::symbol(sym);
        shift = Poly(1);
        for (int k = 0; k < dr - dg; ++k) shift *= x;
      }
      r = lg * r - lr * shift * g;
    }
    f = g;
    g = r;
  }
  return f;
}

}  // namespace spinflux
