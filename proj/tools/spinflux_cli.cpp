// Command-line entry point: verification runs, curvature-matrix dumps, and
// the summary-table / census reports.
//
// Exit codes: 0 = all requested checks pass, 1 = a verification failed,
// 2 = usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "spinflux/report.hpp"

namespace {

uint64_t default_seed() {
  if (const char* env = std::getenv("SPINFLUX_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      // fall through to the fixed default
    }
  }
  return 20260826;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw std::runtime_error("cannot open output file: " + out_path);
  f << text;
}

std::string dump_matrices(const std::string& cls_id, int family) {
  using namespace spinflux;
  const GeometryClass& g = get_class(cls_id);
  const SpinRep& rep = spin_rep(g.n);
  auto [p, q] = family_pq(g.n, family < 0 ? 3 : family);
  CurvatureEngine eng(rep, g.torsion, Form(g.n), torsion_s(), p, q);
  std::ostringstream os;
  os << "class " << cls_id << "  dimension " << g.n << "\n";
  os << "torsion T^c = " << g.torsion.str() << "\n";
  if (family >= 0)
    os << "derivative family " << family << "  p = " << p.str() << "  q = " << q.str() << "\n";
  for (int i = 1; i <= g.n; ++i) {
    os << "K(e_" << i << ") =\n";
    Mat K = eng.k_first(g.ricci_c, i);
    for (size_t r = 0; r < K.rows(); ++r) {
      os << "  [";
      for (size_t c = 0; c < K.cols(); ++c) os << (c ? ", " : " ") << K.at(r, c).str();
      os << " ]\n";
    }
  }
  os << "K =\n";
  Mat K2 = eng.k_second(g.scal_c);
  for (size_t r = 0; r < K2.rows(); ++r) {
    os << "  [";
    for (size_t c = 0; c < K2.cols(); ++c) os << (c ? ", " : " ") << K2.at(r, c).str();
    os << " ]\n";
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the torsion/flux parallel-spinor classification"};
  app.require_subcommand(1);

  std::string cls_filter, format = "text", out_path;
  int family = -1;
  uint64_t seed = default_seed();
  int samples = 20;
  app.add_option("--class", cls_filter, "restrict to one geometry class id");
  app.add_option("--derivative", family, "derivative family: 0, 1, 2, or 3 (generic)")
      ->check(CLI::Range(0, 3));
  app.add_option("--seed", seed, "seed for kernel bases and necessity sampling");
  app.add_option("--samples", samples, "necessity samples per case")->check(CLI::PositiveNumber);
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", out_path, "write output to this file instead of stdout");

  CLI::App* cmd_verify = app.add_subcommand("verify", "run theorem verification and cross-checks");
  CLI::App* cmd_dump = app.add_subcommand("dump", "print the K-contraction matrices of a class");
  CLI::App* cmd_table = app.add_subcommand("table1", "render the summary table");
  CLI::App* cmd_census = app.add_subcommand("census", "parallel-spinor census with eigen data");
  for (CLI::App* c : {cmd_verify, cmd_dump, cmd_table, cmd_census}) c->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_verify->parsed()) {
      auto reps = spinflux::run_verification(cls_filter, family, seed, samples);
      if (reps.empty()) {
        std::cerr << "no theorem records match the given filters\n";
        return 2;
      }
      auto checks = cls_filter.empty() ? spinflux::run_crosschecks(seed, samples)
                                       : std::vector<spinflux::CheckResult>{};
      bool pass = true;
      for (const auto& r : reps) pass = pass && r.pass;
      for (const auto& c : checks) pass = pass && c.pass;
      if (format == "json") {
        nlohmann::json j{{"seed", seed}, {"samples", samples}, {"pass", pass}};
        j["theorems"] = nlohmann::json::array();
        for (const auto& r : reps) j["theorems"].push_back(spinflux::to_json(r));
        j["crosschecks"] = nlohmann::json::array();
        for (const auto& c : checks) j["crosschecks"].push_back(spinflux::to_json(c));
        emit(j.dump(2) + "\n", out_path);
      } else {
        std::string text = spinflux::render_verification_text(reps);
        for (const auto& c : checks)
          text += std::string(c.pass ? "PASS " : "FAIL ") + c.id + "  " + c.detail + "\n";
        emit(text, out_path);
      }
      return pass ? 0 : 1;
    }

    if (cmd_dump->parsed()) {
      if (cls_filter.empty()) {
        std::cerr << "dump requires --class\n";
        return 2;
      }
      emit(dump_matrices(cls_filter, family), out_path);
      return 0;
    }

    if (cmd_table->parsed() || cmd_census->parsed()) {
      std::vector<spinflux::CensusRow> rows;
      if (cls_filter.empty()) {
        rows = spinflux::census_all(seed);
      } else {
        rows.push_back(spinflux::parallel_spinor_census(cls_filter, seed));
      }
      bool pass = true;
      for (const auto& r : rows) pass = pass && r.pass;
      if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : rows) j.push_back(spinflux::to_json(r));
        emit(j.dump(2) + "\n", out_path);
      } else if (cmd_table->parsed()) {
        emit(spinflux::render_table1(rows), out_path);
      } else {
        emit(spinflux::render_census_text(rows), out_path);
      }
      return pass ? 0 : 1;
    }
  } catch (const std::out_of_range& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
