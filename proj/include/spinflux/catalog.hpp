#pragma once

// Registry of the geometry classes: adapted-frame fundamental forms, torsion
// normal form, admissible flux basis, characteristic Ricci tensor and side
// conditions.  All data is immutable static state built on first access.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spinflux/exterior.hpp"
#include "spinflux/linalg.hpp"

namespace spinflux {

struct GeometryClass {
  std::string id;
  int n = 0;
  std::vector<std::pair<std::string, Form>> fundamental_forms;
  Form torsion{1};
  std::vector<std::pair<std::string, Form>> flux_basis;
  Mat ricci_c{0, 0};
  Poly scal_c;
  std::vector<std::string> constraints;   // displayed parameter relations
  std::vector<std::string> nonvanishing;  // side conditions for generic sampling

  const Form& fundamental(const std::string& name) const {
    for (const auto& [k, f] : fundamental_forms)
      if (k == name) return f;
    throw std::out_of_range("unknown fundamental form: " + name);
  }
  const Form& flux_component(const std::string& name) const {
    for (const auto& [k, f] : flux_basis)
      if (k == name) return f;
    throw std::out_of_range("unknown flux component: " + name);
  }
};

// F = sum_i coeff_i * basis_i; coefficient names must match the class's basis.
inline Form flux_form(const GeometryClass& cls,
                      const std::vector<std::pair<std::string, Poly>>& coeffs) {
  Form f(cls.n);
  for (const auto& [name, c] : coeffs) f = f + c * cls.flux_component(name);
  return f;
}

// Ric^T_ij = Ric^g_ij - 1/4 * T_imn T_jmn (sum over ordered pairs m,n).
inline Mat ric_T(const Form& t, const Mat& ric_g) {
  int n = t.dim();
  if (ric_g.rows() != n || ric_g.cols() != n) throw std::invalid_argument("ric_T: size mismatch");
  Mat out = ric_g;
  Poly quarter = Poly::constant(GaussianRational(Rational(1, 4)));
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      Poly acc;
      for (int m = 1; m <= n; ++m)
        for (int k = 1; k <= n; ++k) acc += t.component({i, m, k}) * t.component({j, m, k});
      Poly v = quarter * acc;
      out.at(static_cast<size_t>(i - 1), static_cast<size_t>(j - 1)) -= v;
      if (j != i) out.at(static_cast<size_t>(j - 1), static_cast<size_t>(i - 1)) -= v;
    }
  return out;
}

namespace detail {

inline Mat diag_ric(const std::vector<Poly>& d) {
  Mat m(d.size(), d.size());
  for (size_t k = 0; k < d.size(); ++k) m.at(k, k) = d[k];
  return m;
}

inline Poly trace_of(const Mat& m) { return m.trace(); }

inline std::vector<GeometryClass> build_catalog() {
  std::vector<GeometryClass> cat;
  Poly a = Poly::symbol("a"), b = Poly::symbol("b"), c = Poly::symbol("c");
  Poly alpha = Poly::symbol("alpha"), lambda = Poly::symbol("lambda");
  Poly scal = Poly::symbol("Scal");
  Poly u1 = Poly::symbol("U1"), u2 = Poly::symbol("U2");
  Poly v1 = Poly::symbol("V1"), v2 = Poly::symbol("V2");
  auto frac = [](long num, long den) { return Poly::constant(GaussianRational(Rational(num, den))); };

  {  // alpha-Sasakian, dimension 5: T^c = alpha * Phi ^ eta.
    GeometryClass g;
    g.id = "Sasakian5";
    g.n = 5;
    Form eta = Form::basis(5, {5});
    Form phi = parse_form(5, "e12+e34");
    g.fundamental_forms = {{"eta", eta}, {"Phi", phi}, {"deta", alpha * phi}};
    g.torsion = alpha * wedge(phi, eta);
    g.flux_basis = {{"*eta", hodge(eta)}};
    // The literature leaves Ric^c free up to the shape diag(r,r,r,r,0); store it
    // with r = Scal/4 so it stays generic, symmetric, and kills the contact
    // direction.  Theorem records substitute their own value of r.
    Poly r = scal * frac(1, 4);
    g.ricci_c = diag_ric({r, r, r, r, Poly()});
    g.scal_c = scal;
    g.constraints = {"alpha != 0"};
    g.nonvanishing = {"alpha"};
    cat.push_back(std::move(g));
  }
  {  // alpha-Sasakian, dimension 7.
    GeometryClass g;
    g.id = "Sasakian7";
    g.n = 7;
    Form eta = Form::basis(7, {7});
    Form phi = parse_form(7, "e12+e34+e56");
    g.fundamental_forms = {{"eta", eta}, {"Phi", phi}, {"deta", alpha * phi}};
    g.torsion = alpha * wedge(phi, eta);
    g.flux_basis = {{"*(eta^Phi)", hodge(wedge(eta, phi))}};
    Poly r = scal * frac(1, 6);
    g.ricci_c = diag_ric({r, r, r, r, r, r, Poly()});
    g.scal_c = scal;
    g.constraints = {"alpha != 0"};
    g.nonvanishing = {"alpha"};
    cat.push_back(std::move(g));
  }
  Form omega6 = parse_form(6, "e12+e34+e56");
  {  // almost Hermitian, class SU(3).
    GeometryClass g;
    g.id = "AH_SU3";
    g.n = 6;
    g.fundamental_forms = {{"Omega", omega6}};
    g.torsion = a * parse_form(6, "-e246+e136+e145+e235");
    g.flux_basis = {{"*Omega", hodge(omega6)}};
    Poly r = Poly(4) * a * a;
    g.ricci_c = diag_ric({r, r, r, r, r, r});
    g.scal_c = Poly(24) * a * a;
    g.constraints = {};
    g.nonvanishing = {"a"};
    cat.push_back(std::move(g));
  }
  {  // almost Hermitian, class SO(3): T^c = T^c_2 + T^c_12.
    GeometryClass g;
    g.id = "AH_SO3";
    g.n = 6;
    g.fundamental_forms = {{"Omega", omega6}};
    Form t2 = a * parse_form(6, "-e135+e146+e236+e245");
    Form w12 = parse_form(6, "3*e135+e146+e236+e245");
    g.torsion = t2 + b * w12 + c * j_pullback(w12);
    g.flux_basis = {{"*Omega", hodge(omega6)}};
    Poly r = Poly(4) * (a * a - b * b - c * c);
    g.ricci_c = diag_ric({r, r, r, r, r, r});
    g.scal_c = Poly(6) * r;
    g.constraints = {};
    g.nonvanishing = {"a"};
    cat.push_back(std::move(g));
  }
  Form omega1_6 = Form::basis(6, {5, 6});
  Form omega2_6 = parse_form(6, "e12+e34");
  {  // almost Hermitian, class SU(2).
    GeometryClass g;
    g.id = "AH_SU2";
    g.n = 6;
    g.fundamental_forms = {{"Omega", omega6}, {"Omega1", omega1_6}, {"Omega2", omega2_6}};
    g.torsion = a * parse_form(6, "e145+e235") + b * parse_form(6, "e125+e345");
    g.flux_basis = {{"*Omega1", hodge(omega1_6)}, {"*Omega2", hodge(omega2_6)}};
    Poly r = a * a + b * b;
    g.ricci_c = diag_ric({r, r, r, r, Poly(), Poly()});
    g.scal_c = Poly(4) * r;
    g.constraints = {};
    g.nonvanishing = {};
    cat.push_back(std::move(g));
  }
  {  // almost Hermitian, class U(2) with embedding iota_0.
    GeometryClass g;
    g.id = "AH_U2_0";
    g.n = 6;
    g.fundamental_forms = {{"Omega", omega6}, {"Omega1", omega1_6}, {"Omega2", omega2_6}};
    g.torsion = a * parse_form(6, "e125+e345");
    g.flux_basis = {{"*Omega1", hodge(omega1_6)}, {"*Omega2", hodge(omega2_6)}};
    Mat ric(6, 6);
    ric.at(0, 0) = u1 + u2;
    ric.at(1, 1) = u1 + u2;
    ric.at(2, 2) = u2;
    ric.at(3, 3) = u2;
    ric.at(0, 2) = v1;
    ric.at(2, 0) = v1;
    ric.at(0, 3) = v2;
    ric.at(3, 0) = v2;
    ric.at(1, 2) = -v2;
    ric.at(2, 1) = -v2;
    ric.at(1, 3) = v1;
    ric.at(3, 1) = v1;
    g.ricci_c = ric;
    g.scal_c = g.ricci_c.trace();
    g.constraints = {"a > 0"};
    g.nonvanishing = {"a"};
    cat.push_back(std::move(g));
  }
  {  // almost Hermitian, class U(2) with embedding iota_1.
    GeometryClass g;
    g.id = "AH_U2_1";
    g.n = 6;
    g.fundamental_forms = {{"Omega", omega6}, {"Omega1", omega1_6}, {"Omega2", omega2_6}};
    g.torsion = a * parse_form(6, "e135-e245+e236+e146");
    g.flux_basis = {{"*Omega1", hodge(omega1_6)}, {"*Omega2", hodge(omega2_6)}};
    Poly r = Poly(4) * a * a;
    g.ricci_c = diag_ric({r, r, r, r, r, r});
    g.scal_c = Poly(24) * a * a;
    g.constraints = {"a > 0"};
    g.nonvanishing = {"a"};
    cat.push_back(std::move(g));
  }
  {  // almost Hermitian, class U(2) with embedding iota_{-1}: subclass of SU(3),
     // with a two-parameter flux ansatz instead of A * (*Omega).
    GeometryClass g;
    g.id = "AH_U2_m1";
    g.n = 6;
    g.fundamental_forms = {{"Omega", omega6}, {"Omega1", omega1_6}, {"Omega2", omega2_6}};
    g.torsion = a * parse_form(6, "-e246+e136+e145+e235");
    g.flux_basis = {{"*Omega1", hodge(omega1_6)}, {"*Omega2", hodge(omega2_6)}};
    Poly r = Poly(4) * a * a;
    g.ricci_c = diag_ric({r, r, r, r, r, r});
    g.scal_c = Poly(24) * a * a;
    g.constraints = {};
    g.nonvanishing = {"a"};
    cat.push_back(std::move(g));
  }
  Form omega3 = parse_form(7, "e127+e135-e146-e236-e245+e347+e567");
  Form fx1 = parse_form(7, "-e2467+e2357+e1457+e1367");
  Form fx2 = parse_form(7, "e1256+e3456");
  Form fx3 = parse_form(7, "e1234");
  {  // nearly parallel G2: T^c = -lambda/6 * omega^3, Ric^c = lambda^2/3 * g.
    GeometryClass g;
    g.id = "G2_NearlyParallel";
    g.n = 7;
    g.fundamental_forms = {{"omega3", omega3}};
    g.torsion = (frac(-1, 6) * lambda) * omega3;
    g.flux_basis = {{"*omega3", hodge(omega3)}};
    Poly r = frac(1, 3) * lambda * lambda;
    g.ricci_c = diag_ric({r, r, r, r, r, r, r});
    g.scal_c = frac(7, 3) * lambda * lambda;
    g.constraints = {"lambda != 0"};
    g.nonvanishing = {"lambda"};
    cat.push_back(std::move(g));
  }
  // Cocalibrated G2, classes su(3) and so(3): two torsion types, shared
  // normal forms; Ric^c = lambda_type * diag(1,...,1,0).
  Form g2t1 = parse_form(7, "e127+e347+e567");
  Form g2t2 = a * parse_form(7, "-2*e123+e136-e145+e235+e246+2*e356") +
              b * parse_form(7, "-2*e124-e135-e146+e236-e245+2*e456") +
              c * parse_form(7, "e135-e146-e236-e245");
  for (std::string grp : {"su3", "so3"}) {
    {
      GeometryClass g;
      g.id = "G2_" + grp + "_I";
      g.n = 7;
      g.fundamental_forms = {{"omega3", omega3}};
      g.torsion = a * g2t1;
      g.flux_basis = {{"F1", fx1}, {"F2", fx2}, {"F3", fx3}, {"*omega3", hodge(omega3)}};
      Poly r = Poly(2) * a * a;
      g.ricci_c = diag_ric({r, r, r, r, r, r, Poly()});
      g.scal_c = Poly(12) * a * a;
      g.nonvanishing = {"a"};
      cat.push_back(std::move(g));
    }
    {
      GeometryClass g;
      g.id = "G2_" + grp + "_II";
      g.n = 7;
      g.fundamental_forms = {{"omega3", omega3}};
      g.torsion = g2t2;
      g.flux_basis = {{"F1", fx1}, {"F2", fx2}, {"F3", fx3}, {"*omega3", hodge(omega3)}};
      Poly r = Poly(-4) * (a * a + b * b - c * c);
      g.ricci_c = diag_ric({r, r, r, r, r, r, Poly()});
      g.scal_c = Poly(6) * r;
      g.nonvanishing = {};
      cat.push_back(std::move(g));
    }
  }
  // Cocalibrated G2, classes su(2) and u(2): torsion types I, II (both classes)
  // and III (su(2) only); Ric^c = diag(l,l,l,l,k,k,0).
  struct Su2Type {
    std::string tag;
    Form torsion;
    Poly l, k;
    std::vector<std::string> nonvanishing;
  };
  std::vector<Su2Type> su2_types = {
      {"I", a * parse_form(7, "e127+e347") + b * Form::basis(7, {5, 6, 7}), a * a + a * b,
       Poly(2) * a * b, {}},
      {"II",
       a * parse_form(7, "e135-e146-e236-e245") + b * parse_form(7, "e127+e347-2*e567"),
       Poly(4) * a * a - b * b, Poly(4) * a * a - Poly(4) * b * b, {"a"}},
      {"III", a * parse_form(7, "e135-e245"), a * a, Poly(), {"a"}},
  };
  for (std::string grp : {"su2", "u2"}) {
    for (const auto& t : su2_types) {
      if (grp == "u2" && t.tag == "III") continue;  // type III has no u(2) structure
      GeometryClass g;
      g.id = "G2_" + grp + "_" + t.tag;
      g.n = 7;
      g.fundamental_forms = {{"omega3", omega3}};
      g.torsion = t.torsion;
      g.flux_basis = {{"F1", fx1}, {"F2", fx2}, {"F3", fx3}, {"*omega3", hodge(omega3)}};
      g.ricci_c = diag_ric({t.l, t.l, t.l, t.l, t.k, t.k, Poly()});
      g.scal_c = Poly(4) * t.l + Poly(2) * t.k;
      g.nonvanishing = t.nonvanishing;
      if (t.tag == "II") g.constraints = {"a != 0"};
      cat.push_back(std::move(g));
    }
  }
  {  // Cocalibrated G2, class su_c(2) rel.: T^c = a*omega^3 + b*e567, b != 0.
    GeometryClass g;
    g.id = "G2_suc2rel";
    g.n = 7;
    g.fundamental_forms = {{"omega3", omega3}};
    g.torsion = a * omega3 + b * Form::basis(7, {5, 6, 7});
    g.flux_basis = {{"F1", fx1}, {"F2", fx2}, {"F3", fx3}, {"*omega3", hodge(omega3)}};
    Poly l = Poly(12) * a * a + Poly(3) * a * b;
    Poly k = Poly(12) * a * a + Poly(4) * a * b;
    g.ricci_c = diag_ric({l, l, l, l, k, k, k});
    g.scal_c = Poly(4) * l + Poly(3) * k;
    g.constraints = {"b != 0"};
    g.nonvanishing = {"b"};
    cat.push_back(std::move(g));
  }
  return cat;
}

inline const std::vector<GeometryClass>& catalog() {
  static const std::vector<GeometryClass> cat = build_catalog();
  return cat;
}

}  // namespace detail

inline std::vector<std::string> class_ids() {
  std::vector<std::string> ids;
  for (const auto& g : detail::catalog()) ids.push_back(g.id);
  return ids;
}

inline const GeometryClass& get_class(const std::string& id) {
  for (const auto& g : detail::catalog())
    if (g.id == id) return g;
  throw std::out_of_range("unknown class id: " + id);
}

}  // namespace spinflux
