#pragma once

// Registry of verification records: one TheoremSpec per classification or
// construction statement, with the solved substitution chain, the target
// eigenbundle, side conditions and auto-generated necessity probes.

#include <string_view>

#include "spinflux/verifier.hpp"

namespace spinflux {

namespace theorems_detail {

inline Poly P(std::string_view s) { return parse_poly(std::string(s)); }

inline Subst sub(std::string sym, std::string_view num, std::string_view den = "1") {
  return {std::move(sym), P(num), P(den)};
}

// One necessity case per solved relation: enforce the others, break this one.
inline void auto_necessity(TheoremSpec& t) {
  for (size_t j = 0; j < t.relations.size(); ++j) {
    NecessityCase nc;
    nc.label = "violate " + t.relations[j].symbol + "-relation";
    for (size_t k = 0; k < t.relations.size(); ++k)
      if (k != j) nc.chain.push_back(t.relations[k]);
    nc.violated = Poly::symbol(t.relations[j].symbol) * t.relations[j].den - t.relations[j].num;
    t.necessity.push_back(nc);
  }
}

inline Form omega3_7() { return parse_form(7, "e127+e135-e146-e236-e245+e347+e567"); }

// Diagonal selector 4-fold/2-fold eigenvalue forms of the 7-dimensional case.
inline Form selector_d1() {
  return parse_form(7, "e127+e347+e567") + Poly(-1) * omega3_7();
}
inline Form selector_d2() {
  Poly h = Poly::constant(GaussianRational(Rational(-1, 2)));
  return Poly(-1) * parse_form(7, "e135-e146-e236-e245") +
         h * parse_form(7, "e127+e347-2*e567");
}
inline Form selector_d3() { return Form::basis(7, {5, 6, 7}) + Poly(-1) * omega3_7(); }

inline std::vector<TheoremSpec> build() {
  std::vector<TheoremSpec> out;
  Form om6 = parse_form(6, "e12+e34+e56");
  Form om2_6 = parse_form(6, "e12+e34");
  Form om1_6 = Form::basis(6, {5, 6});

  // --- alpha-Sasakian, dimension 5 -----------------------------------------
  for (int sg : {+1, -1}) {
    TheoremSpec t;
    t.id = std::string("sasakian5-nabla1-") + (sg > 0 ? "plus" : "minus");
    t.cls = "Sasakian5";
    t.family = 1;
    t.flux = {{"*eta", P("A")}};
    t.bundle = {{parse_form(5, "e12+e34"), Poly(2 * sg) * P("i")}};
    t.bundle_dim = 1;
    t.relations = {sub("A", sg > 0 ? "-alpha*(B-1)" : "alpha*(B-1)")};
    t.preservation_dir = Form::basis(5, {5});
    t.preservation_scale = P(sg > 0 ? "i*alpha*(B-1)*(2*q+1)/2" : "-i*alpha*(B-1)*(2*q+1)/2");
    t.side = {P("alpha")};
    auto_necessity(t);
    out.push_back(std::move(t));
  }
  for (int sg : {+1, -1}) {
    TheoremSpec t;
    t.id = std::string("sasakian5-nabla2-") + (sg > 0 ? "plus" : "minus");
    t.cls = "Sasakian5";
    t.family = 2;
    t.flux = {{"*eta", P("A")}};
    t.bundle = {{parse_form(5, "e12+e34"), Poly(2 * sg) * P("i")}};
    t.bundle_dim = 1;
    t.relations = {sub("B", "1")};
    t.preservation_dir = Form::basis(5, {5});
    t.preservation_scale = P("-i*A");
    t.side = {P("alpha"), P("A")};
    auto_necessity(t);
    out.push_back(std::move(t));
  }

  // --- alpha-Sasakian, dimension 7 -----------------------------------------
  for (int sg : {+1, -1}) {
    TheoremSpec t;
    t.id = std::string("sasakian7-nabla1-") + (sg > 0 ? "plus" : "minus");
    t.cls = "Sasakian7";
    t.family = 1;
    t.flux = {{"*(eta^Phi)", P("A")}};
    t.bundle = {{parse_form(7, "e12+e34+e56"), Poly(3 * sg) * P("i")}};
    t.bundle_dim = 1;
    t.relations = {sub("A", "alpha*(B-1)", "4*q-6")};
    t.preservation_dir = Form::basis(7, {7});
    t.preservation_scale = P(sg > 0 ? "-9*i*A/2" : "9*i*A/2");
    t.side = {P("alpha"), P("2*q-3")};
    auto_necessity(t);
    out.push_back(std::move(t));
  }
  for (int sg : {+1, -1}) {
    TheoremSpec t;
    t.id = std::string("sasakian7-nabla2-") + (sg > 0 ? "plus" : "minus");
    t.cls = "Sasakian7";
    t.family = 2;
    t.flux = {{"*(eta^Phi)", P("A")}};
    t.bundle = {{parse_form(7, "e12+e34+e56"), Poly(3 * sg) * P("i")}};
    t.bundle_dim = 1;
    t.relations = {sub("A", "alpha*(B-1)", "4")};
    t.side = {P("alpha")};
    auto_necessity(t);
    out.push_back(std::move(t));
  }

  // --- almost Hermitian, class SU(3) ---------------------------------------
  for (int sg : {+1, -1}) {
    TheoremSpec t;
    t.id = std::string("su3-nabla1-") + (sg > 0 ? "plus" : "minus");
    t.cls = "AH_SU3";
    t.family = 1;
    t.flux = {{"*Omega", P("A")}};
    t.bundle = {{hodge(om6), Poly(-3)}, {get_class("AH_SU3").torsion, Poly(4 * sg) * P("a")}};
    t.bundle_dim = 1;
    t.relations = {sub("A", sg > 0 ? "-a*(B-1)" : "a*(B-1)", "2*(q-1)")};
    t.side = {P("a"), P("q-1")};
    auto_necessity(t);
    out.push_back(std::move(t));
  }
  {
    TheoremSpec t;
    t.id = "su3-nabla0";
    t.cls = "AH_SU3";
    t.family = 0;
    t.flux = {{"*Omega", P("A")}};
    t.bundle = {{hodge(om6), Poly(-3)}};
    t.bundle_dim = 2;
    t.relations = {sub("B", "1")};
    t.side = {P("a")};
    auto_necessity(t);
    out.push_back(std::move(t));
  }
  for (int sg : {+1, -1}) {
    TheoremSpec t;
    t.id = std::string("su3-nabla2-") + (sg > 0 ? "plus" : "minus");
    t.cls = "AH_SU3";
    t.family = 2;
    t.flux = {{"*Omega", P("A")}};
    t.bundle = {{hodge(om6), Poly(-3)}, {get_class("AH_SU3").torsion, Poly(4 * sg) * P("a")}};
    t.bundle_dim = 1;
    t.relations = {sub("A", sg > 0 ? "-a*(B-1)" : "a*(B-1)", "2")};
    t.side = {P("a")};
    auto_necessity(t);
    out.push_back(std::move(t));
  }

  // --- almost Hermitian, class SO(3) ---------------------------------------
  for (int sg : {+1, -1}) {
    TheoremSpec t;
    t.id = std::string("so3-constr-") + (sg > 0 ? "plus" : "minus");
    t.cls = "AH_SO3";
    t.family = 3;
    t.flux = {{"*Omega", P("A")}};
    t.bundle = {{hodge(om6), Poly(-3)},
                {parse_form(6, "-e135+e146+e236+e245"), Poly(4 * sg)}};
    t.bundle_dim = 1;
    t.relations = {sub("b", "0"), sub("c", "0"),
                   sub("A", sg > 0 ? "2*a*(B-1)/4" : "-2*a*(B-1)/4", "2*p-q")};
    t.side = {P("a"), P("2*p-q"), P("B-1")};
    auto_necessity(t);
    out.push_back(std::move(t));
  }

  // --- almost Hermitian, class SU(2) ---------------------------------------
  {
    TheoremSpec t;
    t.id = "su2-nabla0-minus";
    t.cls = "AH_SU2";
    t.family = 0;
    t.flux = {{"*Omega1", P("A1")}, {"*Omega2", P("A2")}};
    t.bundle = {{hodge(om1_6), Poly(-1)}, {hodge(om2_6), Poly(-2)}};
    t.bundle_dim = 2;
    t.relations = {sub("B", "1"), sub("A1", "A2")};
    t.side = {P("A2")};
    auto_necessity(t);
    out.push_back(std::move(t));
  }
  {
    TheoremSpec t;
    t.id = "su2-nabla0-plus";
    t.cls = "AH_SU2";
    t.family = 0;
    t.flux = {{"*Omega1", P("A1")}, {"*Omega2", P("A2")}};
    t.bundle = {{hodge(om1_6), Poly(-1)}, {hodge(om2_6), Poly(2)}};
    t.bundle_dim = 2;
    t.relations = {sub("B", "1"), sub("A1", "-A2")};
    t.side = {P("A2")};
    auto_necessity(t);
    out.push_back(std::move(t));
  }
  {
    TheoremSpec t;
    t.id = "su2-nabla0-zero";
    t.cls = "AH_SU2";
    t.family = 0;
    t.flux = {{"*Omega1", P("A1")}, {"*Omega2", P("A2")}};
    t.bundle = {{hodge(om1_6), Poly(-1)}};
    t.bundle_dim = 4;
    t.relations = {sub("B", "1"), sub("A1", "0"), sub("A2", "0")};
    t.side = {};
    auto_necessity(t);
    out.push_back(std::move(t));
  }
  {
    struct Case {
      const char* tag;
      int plane;
      Subst a1;
      Subst pq;
    };
    std::vector<Case> cases = {
        {"1", -2, sub("A1", "A2"), sub("q", "2*p")},
        {"2", -2, sub("A1", "-2*A2"), sub("p", "-q")},
        {"3", +2, sub("A1", "-A2"), sub("q", "2*p")},
        {"4", +2, sub("A1", "2*A2"), sub("p", "-q")},
    };
    for (const auto& c : cases) {
      TheoremSpec t;
      t.id = std::string("su2-constr-case") + c.tag;
      t.cls = "AH_SU2";
      t.family = 3;
      t.flux = {{"*Omega1", P("A1")}, {"*Omega2", P("A2")}};
      t.bundle = {{hodge(om1_6), Poly(-1)}, {hodge(om2_6), Poly(c.plane)}};
      t.bundle_dim = 2;
      t.relations = {sub("B", "1"), c.a1, c.pq};
      t.side = {P("A2")};
      auto_necessity(t);
      out.push_back(std::move(t));
    }
  }

  // --- almost Hermitian, class U(2), embedding iota_0 ----------------------
  for (int sg : {+1, -1}) {
    TheoremSpec t;
    t.id = std::string("u2-iota0-nabla0-") + (sg > 0 ? "plus" : "minus");
    t.cls = "AH_U2_0";
    t.family = 0;
    t.flux = {{"*Omega1", P("A1")}, {"*Omega2", P("A2")}};
    t.bundle = {{hodge(om2_6), Poly(-2 * sg)}};
    t.bundle_dim = 2;
    t.relations = {sub("B", "1"), sub("A1", sg > 0 ? "A2" : "-A2")};
    t.side = {P("a"), P("A2")};
    auto_necessity(t);
    out.push_back(std::move(t));
  }

  // --- almost Hermitian, class U(2), embedding iota_1 ----------------------
  {
    TheoremSpec t;
    t.id = "u2-iota1-nabla0";
    t.cls = "AH_U2_1";
    t.family = 0;
    t.flux = {{"*Omega1", P("A1")}, {"*Omega2", P("A2")}};
    t.bundle = {{hodge(om2_6), Poly(2)}};
    t.bundle_dim = 2;
    t.relations = {sub("B", "1"), sub("A1", "-A2")};
    t.side = {P("a"), P("A2")};
    auto_necessity(t);
    out.push_back(std::move(t));
  }

  // --- almost Hermitian, class U(2), embedding iota_{-1} -------------------
  {
    TheoremSpec t;
    t.id = "u2-iotam1-nabla0";
    t.cls = "AH_U2_m1";
    t.family = 0;
    t.flux = {{"*Omega1", P("A1")}, {"*Omega2", P("A2")}};
    t.bundle = {{hodge(om2_6), Poly(-2)}};
    t.bundle_dim = 2;
    t.relations = {sub("B", "1"), sub("A1", "A2")};
    t.side = {P("a")};
    auto_necessity(t);
    out.push_back(std::move(t));
  }
  for (int sg : {+1, -1}) {
    TheoremSpec t;
    t.id = std::string("u2-iotam1-constr-") + (sg > 0 ? "plus" : "minus");
    t.cls = "AH_U2_m1";
    t.family = 3;
    t.flux = {{"*Omega1", P("A1")}, {"*Omega2", P("A2")}};
    t.bundle = {{hodge(om2_6), Poly(-2)},
                {get_class("AH_U2_m1").torsion, Poly(4 * sg) * P("a")}};
    t.bundle_dim = 1;
    t.relations = {sub("A1", "A2"),
                   sub("A2", sg > 0 ? "2*a*(B-1)/4" : "-2*a*(B-1)/4", "2*p-q")};
    t.side = {P("a"), P("2*p-q")};
    auto_necessity(t);
    out.push_back(std::move(t));
  }

  // --- nearly parallel G2 --------------------------------------------------
  Form om3 = omega3_7();
  {
    TheoremSpec t;
    t.id = "g2np-nabla1-singlet";
    t.cls = "G2_NearlyParallel";
    t.family = 1;
    t.kind = ConditionKind::KillingSpinor;
    t.killing_mu = P("lambda/8");
    t.flux = {{"*omega3", P("A")}};
    t.bundle = {{om3, Poly(-7)}};
    t.bundle_dim = 1;
    t.relations = {sub("A", "-lambda*(B-1)", "24*(q-1)")};
    t.side = {P("lambda"), P("q-1")};
    auto_necessity(t);
    out.push_back(std::move(t));
  }
  {
    TheoremSpec t;
    t.id = "g2np-nabla1-generic7";
    t.cls = "G2_NearlyParallel";
    t.family = 1;
    t.kind = ConditionKind::KillingSpinor;
    t.killing_mu = P("lambda/8");
    t.flux = {{"*omega3", P("A")}};
    t.bundle = {{om3, Poly(1)}};
    t.bundle_dim = 7;
    t.relations = {sub("A", "lambda", "6"), sub("B", "-4*q-3")};
    t.side = {P("lambda")};
    auto_necessity(t);
    out.push_back(std::move(t));
  }
  {
    TheoremSpec t;
    t.id = "g2np-nabla2";
    t.cls = "G2_NearlyParallel";
    t.family = 2;
    t.kind = ConditionKind::KillingSpinor;
    t.killing_mu = P("lambda/8");
    t.flux = {{"*omega3", P("A")}};
    t.bundle = {{om3, Poly(-7)}};
    t.bundle_dim = 1;
    t.relations = {sub("A", "-lambda*(B-1)", "24")};
    t.side = {P("lambda")};
    auto_necessity(t);
    out.push_back(std::move(t));
  }

  // --- cocalibrated G2: special-type records on the singlet bundle ---------
  for (std::string cls : {"G2_su3_I", "G2_su3_II", "G2_so3_I", "G2_so3_II", "G2_su2_I",
                          "G2_su2_II", "G2_su2_III", "G2_u2_I", "G2_u2_II", "G2_suc2rel"}) {
    TheoremSpec t;
    std::string slug = cls.substr(3);
    for (auto& ch : slug)
      if (ch == '_') ch = '-';
    t.id = "g2-" + slug + "-nabla0";
    t.cls = cls;
    t.family = 0;
    t.flux = {{"*omega3", P("A")}};
    t.bundle = {{om3, Poly(-7)}};
    t.bundle_dim = 1;
    t.relations = {sub("B", "1")};
    for (const auto& nv : get_class(cls).nonvanishing) t.side.push_back(Poly::symbol(nv));
    auto_necessity(t);
    out.push_back(std::move(t));
  }

  // --- cocalibrated G2, classes su(3)/so(3): construction on D1 = +-4 ------
  for (std::string grp : {"su3", "so3"}) {
    for (int sg : {+1, -1}) {
      {  // torsion type I: alpha = +-a, beta = +-3a
        TheoremSpec t;
        t.id = "g2-" + grp + "-type1-psi-" + (sg > 0 ? "plus" : "minus");
        t.cls = "G2_" + grp + "_I";
        t.family = 3;
        t.flux = {{"F1", P("A1")}, {"F2", P("A2")}, {"F3", P("A2")}};
        t.bundle = {{selector_d1(), Poly(4 * sg)}};
        t.bundle_dim = 1;
        Poly a1num = Poly(sg) * P("A2*(p+q)") - Poly(sg) * P("a*(B-1)/4");
        t.relations = {{"A1", a1num, P("p+q")},
                       {"A2", P("a*(B-1)*(p-3*q)/4"), P("(p+q)*(4*p-3*q)")}};
        t.side = {P("a"), P("p+q"), P("4*p-3*q")};
        auto_necessity(t);
        out.push_back(std::move(t));
      }
      {  // torsion type II: alpha = -c, beta = 0; needs a = b = 0
        TheoremSpec t;
        t.id = "g2-" + grp + "-type2-psi-" + (sg > 0 ? "plus" : "minus");
        t.cls = "G2_" + grp + "_II";
        t.family = 3;
        t.flux = {{"F1", P("A1")}, {"F2", P("A2")}, {"F3", P("A2")}};
        t.bundle = {{selector_d1(), Poly(4 * sg)}};
        t.bundle_dim = 1;
        Poly a1num = Poly(sg) * P("A2*(p+q)") + P("c*(B-1)/4");
        t.relations = {sub("a", "0"), sub("b", "0"),
                       {"A1", a1num, P("p+q")},
                       {"A2", Poly(-sg) * P("p*c*(B-1)"), P("(p+q)*(4*p-3*q)")}};
        t.side = {P("c"), P("p+q"), P("4*p-3*q"), P("B-1")};
        auto_necessity(t);
        out.push_back(std::move(t));
      }
    }
  }

  // --- cocalibrated G2, classes su(2)/u(2): construction on D2 = +-4 -------
  for (std::string grp : {"su2", "u2"}) {
    for (int sg : {+1, -1}) {
      std::string pm = sg > 0 ? "plus" : "minus";
      {  // torsion type I: alpha=+-b, beta=+-a, gamma=+-(2a+b)
        TheoremSpec t;
        t.id = "g2-" + grp + "-type1-psi-" + pm;
        t.cls = "G2_" + grp + "_I";
        t.family = 3;
        t.flux = {{"F1", P("A1")}, {"F2", P("A2")}, {"F3", P("A3")}};
        t.bundle = {{selector_d2(), Poly(4 * sg)}};
        t.bundle_dim = 1;
        t.relations = {
            {"A3", Poly(sg) * P("A1*(p+q)") + P("b*(B-1)/4"), P("p+q")},
            {"A2", Poly(sg) * P("A1*(p+q)") + P("a*(B-1)/4"), P("p+q")},
            {"A1", Poly(-sg) * P("(2*a+b)*p*(B-1)/4"), P("(p+q)*(4*p-3*q)")}};
        t.side = {P("p+q"), P("4*p-3*q")};
        auto_necessity(t);
        out.push_back(std::move(t));
      }
      {  // torsion type II: alpha=-(+-2b+a), beta=+-b-a, gamma=0
        TheoremSpec t;
        t.id = "g2-" + grp + "-type2-psi-" + pm;
        t.cls = "G2_" + grp + "_II";
        t.family = 3;
        t.flux = {{"F1", P("A1")}, {"F2", P("A2")}, {"F3", P("A3")}};
        t.bundle = {{selector_d2(), Poly(4 * sg)}};
        t.bundle_dim = 1;
        Poly alpha = Poly(-sg) * (Poly(sg) * P("2*b") + P("a"));
        Poly beta = Poly(sg) * (Poly(sg) * P("b") - P("a"));
        t.relations = {
            {"A3", Poly(sg) * P("A1*(p+q)") + alpha * P("(B-1)/4"), P("p+q")},
            {"A2", Poly(sg) * P("A1*(p+q)") + beta * P("(B-1)/4"), P("p+q")},
            {"A1", P("-3*a*q*(B-1)/4"), P("(p+q)*(4*p-3*q)")}};
        t.side = {P("a"), P("p+q"), P("4*p-3*q")};
        auto_necessity(t);
        out.push_back(std::move(t));
      }
    }
  }
  {  // su(2) torsion type III: only the top eigenspinor, torsion term must die
    TheoremSpec t;
    t.id = "g2-su2-type3-psi-plus";
    t.cls = "G2_su2_III";
    t.family = 3;
    t.flux = {{"F1", P("A1")}, {"F2", P("A2")}, {"F3", P("A3")}};
    t.bundle = {{selector_d2(), Poly(4)}};
    t.bundle_dim = 1;
    t.relations = {sub("B", "1"), sub("p", "-q"), sub("A1", "-A2"), sub("A3", "2*A2")};
    t.side = {P("a"), P("q"), P("A2")};
    auto_necessity(t);
    out.push_back(std::move(t));
  }

  // --- cocalibrated G2, class su(2): construction on D2 = -2 ---------------
  {
    TheoremSpec t;
    t.id = "g2-su2-type1-doublet";
    t.cls = "G2_su2_I";
    t.family = 3;
    t.flux = {{"F1", P("A1")}, {"F2", P("A2")}, {"F3", P("A3")}};
    t.bundle = {{selector_d2(), Poly(-2)}};
    t.bundle_dim = 2;
    t.relations = {sub("A1", "0"), sub("A2", "a*(B-1)", "4*(p+q)"),
                   sub("A3", "b*(B-1)", "4*(p+q)"), sub("p", "0")};
    t.side = {P("q"), P("B-1"), P("2*a-b")};
    auto_necessity(t);
    out.push_back(std::move(t));
  }
  {
    TheoremSpec t;
    t.id = "g2-su2-type2-doublet";
    t.cls = "G2_su2_II";
    t.family = 3;
    t.flux = {{"F1", P("A1")}, {"F2", P("A2")}, {"F3", P("A3")}};
    t.bundle = {{selector_d2(), Poly(-2)}};
    t.bundle_dim = 2;
    t.relations = {sub("A1", "a*(B-1)", "4*(p+q)"), sub("A2", "b*(B-1)", "4*(p+q)"),
                   sub("A3", "-2*b*(B-1)", "4*(p+q)"), sub("p", "0")};
    t.side = {P("a"), P("b"), P("q"), P("B-1")};
    auto_necessity(t);
    out.push_back(std::move(t));
  }
  {
    TheoremSpec t;
    t.id = "g2-su2-type3-doublet";
    t.cls = "G2_su2_III";
    t.family = 3;
    t.flux = {{"F1", P("A1")}, {"F2", P("A2")}, {"F3", P("A3")}};
    t.bundle = {{selector_d2(), Poly(-2)}};
    t.bundle_dim = 2;
    t.relations = {sub("B", "1"), sub("p", "-q"), sub("A3", "2*A2")};
    t.side = {P("a"), P("q"), P("A2")};
    auto_necessity(t);
    out.push_back(std::move(t));
  }

  // --- cocalibrated G2, class su_c(2) rel. ---------------------------------
  {
    TheoremSpec t;
    t.id = "g2-suc2rel-constr";
    t.cls = "G2_suc2rel";
    t.family = 3;
    t.flux = {{"F1", P("A1")}, {"F2", P("A1")}, {"F3", P("A2")}};
    t.bundle = {{selector_d3(), Poly(6)}};
    t.bundle_dim = 1;
    t.relations = {{"A1", P("A2*(p+q)-b*(B-1)/4"), P("p+q")},
                   {"A2", P("3*(B-1)*((p-q)*b-a*(p+q))/4"), P("(4*p-3*q)*(p+q)")}};
    t.side = {P("b"), P("p+q"), P("4*p-3*q")};
    auto_necessity(t);
    out.push_back(std::move(t));
  }
  {  // B = -7 branch: the three-dimensional D3-eigenbundle sits in ker K.
    TheoremSpec t;
    t.id = "g2-suc2rel-branch2";
    t.cls = "G2_suc2rel";
    t.family = 0;
    t.kind = ConditionKind::KernelOnly;
    t.flux = {{"*omega3", P("A")}};
    t.bundle = {{selector_d3(), Poly(-2)}};
    t.bundle_dim = 3;
    t.relations = {sub("A", "-2*a"), sub("b", "3*a"), sub("B", "-7")};
    t.side = {P("a")};
    auto_necessity(t);
    out.push_back(std::move(t));
  }

  return out;
}

}  // namespace theorems_detail

inline const std::vector<TheoremSpec>& all_theorems() {
  static const std::vector<TheoremSpec> regs = theorems_detail::build();
  return regs;
}

inline const TheoremSpec& find_theorem(const std::string& id) {
  for (const auto& t : all_theorems())
    if (t.id == id) return t;
  throw std::out_of_range("unknown theorem id: " + id);
}

}  // namespace spinflux
