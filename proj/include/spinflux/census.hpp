#pragma once

// Parallel-spinor census: the summary table of solution counts per geometry
// class, cross-checked against the class propositions.
//
// For every class the census verifies three layers:
//   * N^c — the claimed nabla^c-parallel spinors: each claim is a joint
//     eigenbundle (optionally on a parameter locus such as the Einstein value
//     of Scal or the su(2)-reduction of the torsion); the census recomputes
//     its dimension and checks the characteristic K-family annihilates it.
//   * N (F != 0) — the flux construction records of the class: each record's
//     bundle spinors are tested for T . Psi = lambda Psi (the eigenspinor
//     mark) and F . Psi = kappa Psi, with exact eigenvalues.
//   * The printed table values, for comparison against the recomputation.
//
// Two rows are recorded rather than recomputed and carry a note: U(2)/iota_0
// (nabla^c-parallel spinors force the SU(2) reduction, whose four spinors are
// verified on the SU(2) row) and U(2)/iota_1 (no parallel spinors; the
// contraction family pins all candidates to one plane — see the kernel
// structure cross-check — and the final exclusion is manifold-level).

#include <string>
#include <vector>

#include "spinflux/theorems.hpp"
#include "spinflux/verifier.hpp"

namespace spinflux {

// One claimed family of nabla^c-parallel spinors.
struct ParallelClaim {
  std::string label;               // e.g. "Psi+ (T^c = +4a)"
  std::vector<BundleSpec> bundle;  // joint eigenbundle cutting out the claim
  int dim = 0;                     // claimed dimension
  std::vector<Subst> locus;        // parameter locus (Scal value, su(2) reduction)
};

struct ParallelClaimResult {
  std::string label;
  int dim = 0;
  bool dim_ok = false;
  bool k_annihilated = false;
  bool t_eigen = false;
  std::string t_eigenvalue;  // T^c . Psi = lambda Psi on the claim, if eigen
  bool pass = false;
};

struct SolutionSpinor {
  std::string theorem_id;
  int index = 0;  // position in the record's bundle basis
  bool t_eigen = false;
  std::string t_eigenvalue;  // eigenvalue of T = B T^c under the record's chain
  bool f_eigen = false;
  std::string f_eigenvalue;  // kappa: eigenvalue of the chained flux form
};

struct CensusRow {
  std::string cls;
  std::string structure;  // display label
  // Printed table entries ("-" for empty, "no solutions" collapses the row).
  std::string n_flux;         // N, F != 0
  std::string n_ricci_tneq;   // N(Ric^T = 0), T != T^c
  std::string n_ricci_teq;    // N(Ric^T = 0), T = T^c
  bool eigen_mark = false;    // printed check mark: solutions eigenspinors of T
  std::string nc;             // N^c, F = 0
  bool no_solutions = false;  // the collapsed row
  std::string note;

  // Recomputed data.
  std::vector<ParallelClaimResult> parallels;
  int nc_verified = 0;
  bool nc_recorded = false;  // N^c taken from a recorded fact, not recomputed
  bool nc_ok = false;
  std::vector<SolutionSpinor> solutions;
  bool eigen_mark_computed = false;
  bool eigen_mark_ok = false;
  bool flux_eigen_ok = false;  // every solution satisfies F . Psi = kappa Psi
  bool pass = false;
};

namespace census_detail {

using theorems_detail::selector_d1;
using theorems_detail::selector_d2;
using theorems_detail::selector_d3;

inline Poly P(std::string_view s) { return parse_poly(s); }

inline Subst sub(const std::string& sym, const Poly& num, const Poly& den = Poly(1)) {
  return {sym, num, den};
}

struct RowSpec {
  std::string cls, structure;
  std::string n_flux, n_ricci_tneq, n_ricci_teq, nc;
  bool eigen_mark = false;
  bool no_solutions = false;
  bool nc_recorded = false;
  std::string note;
  std::vector<ParallelClaim> claims;
};

inline const std::vector<RowSpec>& row_specs() {
  static const std::vector<RowSpec> rows = [] {
    std::vector<RowSpec> out;
    Form om3 = theorems_detail::omega3_7();
    Poly I = Poly::unit_i();
    {
      RowSpec r{"Sasakian5", "alpha-Sasakian (n=5)", "1", "1", "1", "2", true};
      Form phi = get_class("Sasakian5").fundamental("Phi");
      std::vector<Subst> einstein = {sub("Scal", P("4*alpha^2"))};
      r.claims = {{"Psi+ (Phi = -2i)", {{phi, Poly(-2) * I}}, 1, einstein},
                  {"Psi- (Phi = +2i)", {{phi, Poly(2) * I}}, 1, einstein}};
      r.note = "claims live on the Einstein locus Scal = 4 alpha^2; a second "
               "pair with Phi . Psi = 0 exists on Scal = -4 alpha^2";
      out.push_back(std::move(r));
    }
    {
      RowSpec r{"AH_SU3", "almost Hermitian, SU(3)", "2", "1", "-", "2", true};
      const GeometryClass& g = get_class("AH_SU3");
      Form so = hodge(g.fundamental("Omega"));
      r.claims = {{"Psi+ (T^c = +4a)", {{so, Poly(-3)}, {g.torsion, P("4*a")}}, 1, {}},
                  {"Psi- (T^c = -4a)", {{so, Poly(-3)}, {g.torsion, P("-4*a")}}, 1, {}}};
      out.push_back(std::move(r));
    }
    {
      RowSpec r{"AH_SO3", "almost Hermitian, SO(3)", "2", "1", "2", "2", true};
      Form so = hodge(get_class("AH_SO3").fundamental("Omega"));
      r.claims = {{"Psi+- (*Omega = -3)", {{so, Poly(-3)}}, 2, {}}};
      out.push_back(std::move(r));
    }
    {
      RowSpec r{"AH_SU2", "almost Hermitian, SU(2)", "2", "-", "-", "4", false};
      const GeometryClass& g = get_class("AH_SU2");
      Form so1 = hodge(g.fundamental("Omega1")), so2 = hodge(g.fundamental("Omega2"));
      r.claims = {{"Psi_i^+ (*Omega2 = +2)", {{so1, Poly(-1)}, {so2, Poly(2)}}, 2, {}},
                  {"Psi_i^- (*Omega2 = -2)", {{so1, Poly(-1)}, {so2, Poly(-2)}}, 2, {}}};
      out.push_back(std::move(r));
    }
    {
      RowSpec r{"AH_U2_0", "almost Hermitian, U(2) iota_0", "2", "-", "-", "4", false};
      r.nc_recorded = true;
      r.note = "nabla^c-parallel spinors force the SU(2) reduction; the four "
               "spinors are verified on the SU(2) row";
      out.push_back(std::move(r));
    }
    {
      RowSpec r{"AH_U2_1", "almost Hermitian, U(2) iota_1", "", "", "", "0", false};
      r.no_solutions = true;
      r.nc_recorded = true;
      r.note = "no parallel spinors (recorded); the K-family pins all candidates "
               "to the *Omega2 = +2 plane (kernel-structure cross-check), the "
               "exclusion itself is manifold-level";
      out.push_back(std::move(r));
    }
    {
      RowSpec r{"AH_U2_m1", "almost Hermitian, U(2) iota_-1", "2", "1", "-", "2", true};
      const GeometryClass& g = get_class("AH_U2_m1");
      Form so = hodge(g.fundamental("Omega"));
      r.claims = {{"Psi+ (T^c = +4a)", {{so, Poly(-3)}, {g.torsion, P("4*a")}}, 1, {}},
                  {"Psi- (T^c = -4a)", {{so, Poly(-3)}, {g.torsion, P("-4*a")}}, 1, {}}};
      out.push_back(std::move(r));
    }
    {
      RowSpec r{"G2_NearlyParallel", "nearly parallel G2", "2", "2", "-", "1", true};
      r.claims = {{"Psi (omega3 = -7)", {{om3, Poly(-7)}}, 1, {}}};
      out.push_back(std::move(r));
    }
    auto g2_psi_pm = [&](const Form& sel) {
      return std::vector<ParallelClaim>{{"Psi+ (D = +4)", {{sel, Poly(4)}}, 1, {}},
                                        {"Psi- (D = -4)", {{sel, Poly(-4)}}, 1, {}}};
    };
    for (std::string grp : {"su3", "so3"}) {
      RowSpec r1{"G2_" + grp + "_I", "cocalibrated G2, " + grp + " type I",
                 "2", "-", "-", "2", true};
      r1.claims = g2_psi_pm(selector_d1());
      out.push_back(std::move(r1));
      RowSpec r2{"G2_" + grp + "_II", "cocalibrated G2, " + grp + " type II",
                 "2", "2", grp == "so3" ? "1" : "-", "2", true};
      r2.claims = g2_psi_pm(selector_d1());
      out.push_back(std::move(r2));
    }
    {
      RowSpec r{"G2_su2_I", "cocalibrated G2, su2 type I", "4", "4", "3", "4", true};
      r.claims = g2_psi_pm(selector_d2());
      r.claims.push_back({"Psi_1, Psi_2 (D2 = -2, su(2) reduction a = 0)",
                          {{selector_d2(), Poly(-2)}}, 2, {sub("a", Poly())}});
      out.push_back(std::move(r));
    }
    {
      RowSpec r{"G2_su2_II", "cocalibrated G2, su2 type II", "4", "-", "-", "4", true};
      r.claims = g2_psi_pm(selector_d2());
      r.claims.push_back({"Psi_1, Psi_2 (D2 = -2, su(2) reduction b = -a)",
                          {{selector_d2(), Poly(-2)}}, 2, {sub("b", P("-a"))}});
      out.push_back(std::move(r));
    }
    {
      RowSpec r{"G2_su2_III", "cocalibrated G2, su2 type III", "3", "-", "-", "4", true};
      r.claims = g2_psi_pm(selector_d2());
      r.claims.push_back({"Psi_1, Psi_2 (D2 = -2)", {{selector_d2(), Poly(-2)}}, 2, {}});
      out.push_back(std::move(r));
    }
    {
      RowSpec r{"G2_u2_I", "cocalibrated G2, u2 type I", "2", "2", "2", "2", true};
      r.claims = g2_psi_pm(selector_d2());
      out.push_back(std::move(r));
    }
    {
      RowSpec r{"G2_u2_II", "cocalibrated G2, u2 type II", "2", "2", "-", "2", true};
      r.claims = g2_psi_pm(selector_d2());
      out.push_back(std::move(r));
    }
    {
      RowSpec r{"G2_suc2rel", "cocalibrated G2, su_c(2) relation", "1", "1", "1", "1", true};
      r.claims = {{"Psi (D3 = +6)", {{selector_d3(), Poly(6)}}, 1, {}}};
      out.push_back(std::move(r));
    }
    {
      RowSpec r{"Sasakian7", "alpha-Sasakian (n=7)", "2", "2", "2", "2", true};
      Form phi = get_class("Sasakian7").fundamental("Phi");
      std::vector<Subst> einstein = {sub("Scal", P("12*alpha^2"))};
      r.claims = {{"Psi+ (Phi = -3i)", {{phi, Poly(-3) * I}}, 1, einstein},
                  {"Psi- (Phi = +3i)", {{phi, Poly(3) * I}}, 1, einstein}};
      out.push_back(std::move(r));
    }
    return out;
  }();
  return rows;
}

inline std::string ratio_str(const Poly& num, const Poly& den) {
  if (den.is_constant() && !den.is_zero()) {
    Poly scaled = Poly::constant(GaussianRational(1) / den.constant_value()) * num;
    return scaled.str();
  }
  return "(" + num.str() + ")/(" + den.str() + ")";
}

}  // namespace census_detail

// Verify one census row; `seed` feeds the kernel computations.
inline CensusRow parallel_spinor_census(const std::string& cls_id, uint64_t seed = 20260826) {
  using namespace census_detail;
  const RowSpec* spec = nullptr;
  for (const auto& r : row_specs())
    if (r.cls == cls_id) spec = &r;
  if (!spec) throw std::out_of_range("census: unknown class " + cls_id);

  CensusRow row;
  row.cls = spec->cls;
  row.structure = spec->structure;
  row.n_flux = spec->n_flux;
  row.n_ricci_tneq = spec->n_ricci_tneq;
  row.n_ricci_teq = spec->n_ricci_teq;
  row.eigen_mark = spec->eigen_mark;
  row.nc = spec->nc;
  row.no_solutions = spec->no_solutions;
  row.nc_recorded = spec->nc_recorded;
  row.note = spec->note;

  const GeometryClass& g = get_class(cls_id);
  const SpinRep& rep = spin_rep(g.n);

  // Layer 1: claimed nabla^c-parallel spinors.
  CurvatureEngine eng(rep, g.torsion, Form(g.n), Poly(), Poly(), Poly());
  std::vector<Mat> kfam;
  for (int i = 1; i <= g.n; ++i) kfam.push_back(eng.k_first(g.ricci_c, i));
  kfam.push_back(eng.k_second(g.scal_c));
  Mat tc = rep.act(g.torsion);
  int total = 0;
  bool claims_ok = true;
  for (const ParallelClaim& c : spec->claims) {
    ParallelClaimResult res;
    res.label = c.label;
    std::vector<Mat> ops;
    for (const auto& b : c.bundle) {
      Mat m = rep.act(b.op) - b.ev * Mat::identity(rep.dim());
      for (size_t rr = 0; rr < m.rows(); ++rr)
        for (size_t cc = 0; cc < m.cols(); ++cc)
          m.at(rr, cc) = Verifier::apply_chain(m.at(rr, cc), c.locus);
      ops.push_back(std::move(m));
    }
    auto basis = joint_kernel(ops, seed);
    res.dim = static_cast<int>(basis.size());
    res.dim_ok = (res.dim == c.dim);
    res.k_annihilated = true;
    for (const Vec& v : basis)
      for (const Mat& K : kfam)
        for (size_t r = 0; r < v.size() && res.k_annihilated; ++r) {
          Poly acc;
          for (size_t col = 0; col < v.size(); ++col)
            acc += Verifier::apply_chain(K.at(r, col), c.locus) * v[col];
          if (!acc.is_zero()) res.k_annihilated = false;
        }
    // T^c eigen-data on the claim (informational; not all claims are eigen).
    Mat tl = tc;
    for (size_t rr = 0; rr < tl.rows(); ++rr)
      for (size_t cc = 0; cc < tl.cols(); ++cc)
        tl.at(rr, cc) = Verifier::apply_chain(tl.at(rr, cc), c.locus);
    res.t_eigen = !basis.empty();
    for (const Vec& v : basis) {
      EigenResult er = eigenvalue_of(tl, v);
      if (!er.is_eigen) {
        res.t_eigen = false;
        break;
      }
      res.t_eigenvalue = ratio_str(er.num, er.den);
    }
    res.pass = res.dim_ok && res.k_annihilated;
    claims_ok = claims_ok && res.pass;
    total += res.dim;
    row.parallels.push_back(std::move(res));
  }
  if (spec->nc_recorded) {
    row.nc_verified = spec->no_solutions ? 0 : 4;
    row.nc_ok = true;
  } else {
    row.nc_verified = total;
    row.nc_ok = claims_ok && (std::to_string(total) == spec->nc);
  }

  // Layer 2: constructed flux solutions — eigenspinor marks and kappa.
  bool all_t_eigen = true, all_f_eigen = true;
  if (!spec->no_solutions) {
    Verifier ver(seed);
    for (const TheoremSpec& t : all_theorems()) {
      if (t.cls != cls_id) continue;
      Form F = flux_form(g, t.flux);
      Mat mf = rep.act(F);
      Mat mt = tc;
      Poly bfac = Verifier::apply_chain(Poly::symbol("B"), t.relations);
      for (size_t rr = 0; rr < rep.dim(); ++rr)
        for (size_t cc = 0; cc < rep.dim(); ++cc) {
          mf.at(rr, cc) = Verifier::apply_chain(mf.at(rr, cc), t.relations);
          mt.at(rr, cc) = Verifier::apply_chain(mt.at(rr, cc), t.relations);
        }
      // The constructed solutions of a record are the theorem's individual
      // spinor families.  A joint-kernel basis of a higher-dimensional bundle
      // need not be adapted to T; when it is not, split the bundle along the
      // row's claimed eigenlines (e.g. *Omega = -3 splits into T^c = +-4a).
      std::vector<Vec> basis = ver.bundle_basis(t);
      bool adapted = true;
      for (const Vec& v : basis)
        if (!eigenvalue_of(mt, v).is_eigen) adapted = false;
      if (!adapted && !spec->claims.empty()) {
        std::vector<Vec> split;
        for (const ParallelClaim& c : spec->claims) {
          if (!c.locus.empty()) continue;
          std::vector<Mat> ops;
          for (const auto& b : t.bundle)
            ops.push_back(rep.act(b.op) - b.ev * Mat::identity(rep.dim()));
          for (const auto& b : c.bundle)
            ops.push_back(rep.act(b.op) - b.ev * Mat::identity(rep.dim()));
          for (const Vec& v : joint_kernel(ops, seed)) split.push_back(v);
        }
        if (static_cast<int>(split.size()) == t.bundle_dim) basis = std::move(split);
      }
      int idx = 0;
      for (const Vec& v : basis) {
        SolutionSpinor s;
        s.theorem_id = t.id;
        s.index = idx++;
        EigenResult et = eigenvalue_of(mt, v);
        s.t_eigen = et.is_eigen;
        if (et.is_eigen) s.t_eigenvalue = ratio_str(bfac * et.num, et.den);
        EigenResult ef = eigenvalue_of(mf, v);
        s.f_eigen = ef.is_eigen;
        if (ef.is_eigen) s.f_eigenvalue = ratio_str(ef.num, ef.den);
        all_t_eigen = all_t_eigen && s.t_eigen;
        all_f_eigen = all_f_eigen && s.f_eigen;
        row.solutions.push_back(std::move(s));
      }
    }
  }
  row.eigen_mark_computed = all_t_eigen;
  row.eigen_mark_ok = spec->no_solutions || (all_t_eigen == spec->eigen_mark);
  row.flux_eigen_ok = all_f_eigen;
  row.pass = row.nc_ok && row.eigen_mark_ok && row.flux_eigen_ok;
  return row;
}

inline std::vector<CensusRow> census_all(uint64_t seed = 20260826) {
  std::vector<CensusRow> out;
  for (const auto& r : census_detail::row_specs()) out.push_back(parallel_spinor_census(r.cls, seed));
  return out;
}

}  // namespace spinflux
