#pragma once

// Deterministic reporting: run the theorem registry / cross-checks / census
// and serialize the results as JSON or aligned text.

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "spinflux/census.hpp"
#include "spinflux/crosschecks.hpp"
#include "spinflux/theorems.hpp"

namespace spinflux {

struct TheoremReport {
  std::string id;
  std::string cls;
  int family = 1;
  bool sufficiency = false;
  std::string detail;
  std::vector<NecessityResult> necessity;
  bool pass = false;
};

inline std::vector<TheoremReport> run_verification(const std::string& cls_filter = "",
                                                   int family_filter = -1,
                                                   uint64_t seed = 20260826, int samples = 20) {
  Verifier ver(seed, samples);
  std::vector<TheoremReport> out;
  for (const TheoremSpec& t : all_theorems()) {
    if (!cls_filter.empty() && t.cls != cls_filter) continue;
    if (family_filter >= 0 && t.family != family_filter) continue;
    TheoremReport r;
    r.id = t.id;
    r.cls = t.cls;
    r.family = t.family;
    SufficiencyResult s = ver.verify_sufficiency(t);
    r.sufficiency = s.pass;
    r.detail = s.detail;
    r.pass = s.pass;
    for (const NecessityResult& n : ver.verify_necessity(t)) {
      r.pass = r.pass && n.pass;
      r.necessity.push_back(n);
    }
    out.push_back(std::move(r));
  }
  return out;
}

inline nlohmann::json to_json(const TheoremReport& r) {
  nlohmann::json nec = nlohmann::json::array();
  for (const auto& n : r.necessity)
    nec.push_back({{"label", n.label},
                   {"samples", n.samples},
                   {"witnesses", n.witnesses},
                   {"vacuous", n.vacuous},
                   {"pass", n.pass}});
  return {{"id", r.id},         {"class", r.cls},     {"family", r.family},
          {"sufficiency", r.sufficiency}, {"detail", r.detail}, {"necessity", nec},
          {"pass", r.pass}};
}

inline nlohmann::json to_json(const CheckResult& c) {
  return {{"id", c.id}, {"pass", c.pass}, {"detail", c.detail}};
}

inline nlohmann::json to_json(const CensusRow& r) {
  nlohmann::json claims = nlohmann::json::array();
  for (const auto& c : r.parallels)
    claims.push_back({{"label", c.label},
                      {"dim", c.dim},
                      {"dim_ok", c.dim_ok},
                      {"k_annihilated", c.k_annihilated},
                      {"t_eigen", c.t_eigen},
                      {"t_eigenvalue", c.t_eigenvalue},
                      {"pass", c.pass}});
  nlohmann::json sols = nlohmann::json::array();
  for (const auto& s : r.solutions)
    sols.push_back({{"theorem", s.theorem_id},
                    {"index", s.index},
                    {"t_eigen", s.t_eigen},
                    {"lambda", s.t_eigenvalue},
                    {"f_eigen", s.f_eigen},
                    {"kappa", s.f_eigenvalue}});
  return {{"class", r.cls},
          {"structure", r.structure},
          {"table", {{"N_flux", r.n_flux},
                     {"N_ricci_flat_T_neq_Tc", r.n_ricci_tneq},
                     {"N_ricci_flat_T_eq_Tc", r.n_ricci_teq},
                     {"eigenspinor_mark", r.eigen_mark},
                     {"Nc", r.nc},
                     {"no_solutions", r.no_solutions}}},
          {"nc_verified", r.nc_verified},
          {"nc_recorded", r.nc_recorded},
          {"nc_ok", r.nc_ok},
          {"eigen_mark_computed", r.eigen_mark_computed},
          {"eigen_mark_ok", r.eigen_mark_ok},
          {"flux_eigen_ok", r.flux_eigen_ok},
          {"note", r.note},
          {"parallel_claims", claims},
          {"solutions", sols},
          {"pass", r.pass}};
}

// Aligned text rendering of the summary table.
inline std::string render_table1(const std::vector<CensusRow>& rows) {
  std::ostringstream os;
  os << std::left << std::setw(34) << "structure" << std::setw(8) << "N"
     << std::setw(12) << "N(Ric,T!=Tc)" << "  " << std::setw(12) << "N(Ric,T=Tc)"
     << std::setw(12) << "T-eigen" << std::setw(6) << "N^c" << "status\n";
  os << std::string(88, '-') << "\n";
  for (const CensusRow& r : rows) {
    os << std::left << std::setw(34) << r.structure;
    if (r.no_solutions) {
      os << std::setw(48) << "no solutions";
    } else {
      os << std::setw(8) << r.n_flux << std::setw(12) << r.n_ricci_tneq << "  "
         << std::setw(12) << r.n_ricci_teq << std::setw(12)
         << (r.eigen_mark ? "yes" : "no") << std::setw(6) << r.nc;
    }
    os << (r.pass ? "ok" : "MISMATCH") << "\n";
  }
  return os.str();
}

inline std::string render_census_text(const std::vector<CensusRow>& rows) {
  std::ostringstream os;
  for (const CensusRow& r : rows) {
    os << (r.pass ? "PASS " : "FAIL ") << r.cls << "  N^c=" << r.nc
       << " verified=" << r.nc_verified << (r.nc_recorded ? " (recorded)" : "")
       << "  T-eigen mark=" << (r.eigen_mark ? "yes" : "no")
       << " computed=" << (r.eigen_mark_computed ? "yes" : "no")
       << "  F-eigen=" << (r.flux_eigen_ok ? "ok" : "fail") << "\n";
    for (const auto& c : r.parallels)
      os << "    " << (c.pass ? "ok   " : "fail ") << c.label << "  dim=" << c.dim
         << (c.t_eigen ? "  T^c eigenvalue " + c.t_eigenvalue : "") << "\n";
    for (const auto& s : r.solutions)
      os << "    sol " << s.theorem_id << "[" << s.index << "]"
         << (s.t_eigen ? "  lambda=" + s.t_eigenvalue : "  (not a T-eigenspinor)")
         << (s.f_eigen ? "  kappa=" + s.f_eigenvalue : "") << "\n";
    if (!r.note.empty()) os << "    note: " << r.note << "\n";
  }
  return os.str();
}

inline std::string render_verification_text(const std::vector<TheoremReport>& reps) {
  std::ostringstream os;
  for (const TheoremReport& r : reps) {
    os << (r.pass ? "PASS " : "FAIL ") << std::left << std::setw(28) << r.id
       << " class=" << std::setw(18) << r.cls << " family=" << r.family;
    int nec_pass = 0;
    for (const auto& n : r.necessity) nec_pass += n.pass;
    os << " necessity " << nec_pass << "/" << r.necessity.size();
    if (!r.detail.empty()) os << "  " << r.detail;
    os << "\n";
  }
  return os.str();
}

}  // namespace spinflux
