#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ttoda/parameters_stokes.hpp"
#include "ttoda/radial_solver.hpp"
#include "ttoda/render.hpp"
#include "ttoda/representation_functor.hpp"
#include "ttoda/root_geometry.hpp"
#include "ttoda/verify.hpp"

namespace {

using nlohmann::json;

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file " + out_path);
  file << content;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

ttoda::TodaParams resolve_params(int n, const std::vector<double>& m,
                                 const std::string& preset) {
  if (!preset.empty()) {
    if (preset != "cpn") throw CLI::ValidationError("--preset", "unknown preset " + preset);
    std::vector<double> k(n + 1, -1.0);
    k[0] = 0.0;
    return ttoda::params_from_k(n, k);
  }
  if (m.empty())
    throw CLI::ValidationError("--m", "either --m or --preset is required");
  return ttoda::params_from_m(n, m);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tt*-Toda Stokes data, Coxeter-plane geometry, soliton polytopes "
               "and a radial boundary-value solver"};
  app.require_subcommand(1);

  // coxeter
  auto* coxeter = app.add_subcommand("coxeter", "Project the A_n roots to a Coxeter plane");
  int cox_n = 2;
  int cox_spin = 1;
  std::string cox_format = "json";
  std::string cox_out;
  coxeter->add_option("--n", cox_n, "rank")->required();
  coxeter->add_option("--spin", cox_spin, "spin order r (default 1)");
  coxeter->add_option("--format", cox_format)->check(CLI::IsMember({"svg", "json"}));
  coxeter->add_option("--out", cox_out, "output file (default stdout)");

  // polytope
  auto* polytope = app.add_subcommand("polytope", "Soliton polytope of wedge^k");
  int pol_n = 5, pol_k = 3;
  std::string pol_format = "json";
  std::string pol_out;
  std::vector<double> pol_stokes;
  polytope->add_option("--n", pol_n, "rank")->required();
  polytope->add_option("--k", pol_k, "exterior power")->required();
  polytope->add_option("--stokes", pol_stokes,
                       "explicit real Stokes values s_1..s_n (default: binomial preset)")
      ->delimiter(',');
  polytope->add_option("--format", pol_format)->check(CLI::IsMember({"svg", "json"}));
  polytope->add_option("--out", pol_out, "output file (default stdout)");

  // stokes
  auto* stokes = app.add_subcommand("stokes", "Closed-form Stokes data from m");
  int st_n = 1;
  std::vector<double> st_m;
  std::string st_preset;
  std::string st_out;
  bool st_factors = false;
  stokes->add_option("--n", st_n, "rank")->required();
  stokes->add_option("--m", st_m, "asymptotic exponents m_0..m_n")->delimiter(',');
  stokes->add_option("--preset", st_preset, "named point (cpn)");
  stokes->add_flag("--factors", st_factors, "include the Stokes factors Q_phi and their ordered product");
  stokes->add_option("--out", st_out, "output file (default stdout)");

  // solve
  auto* solve = app.add_subcommand("solve", "Radial boundary-value solve and tail fit");
  int sv_n = 1;
  std::vector<double> sv_m;
  std::string sv_preset;
  double sv_xmin = 1e-3, sv_xmax = 8.0, sv_tol = 1e-9;
  int sv_nodes = 2000;
  std::vector<double> sv_window = {1.5, 3.5};
  std::string sv_template = "bessel";
  std::string sv_out;
  solve->add_option("--n", sv_n, "rank")->required();
  solve->add_option("--m", sv_m, "asymptotic exponents m_0..m_n")->delimiter(',');
  solve->add_option("--preset", sv_preset, "named point (cpn)");
  solve->add_option("--xmin", sv_xmin, "grid start (default 1e-3)");
  solve->add_option("--xmax", sv_xmax, "grid end (default 8)");
  solve->add_option("--nodes", sv_nodes, "grid nodes (default 2000)");
  solve->add_option("--tol", sv_tol, "Newton tolerance (default 1e-9)");
  solve->add_option("--window", sv_window, "fit window x_a,x_b (default 1.5,3.5)")
      ->delimiter(',')
      ->expected(2);
  solve->add_option("--template", sv_template, "tail template: f or bessel")
      ->check(CLI::IsMember({"f", "bessel"}));
  solve->add_option("--out", sv_out, "write the solution CSV here");

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string vf_suite = "all";
  std::string vf_out;
  verify->add_option("suite", vf_suite, "satake | asymptotics | algebra | all")
      ->check(CLI::IsMember({"satake", "asymptotics", "algebra", "all"}));
  verify->add_option("--out", vf_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);

    if (*coxeter) {
      const ttoda::CoxeterDiagram diagram = ttoda::coxeter_diagram(cox_n, cox_spin);
      if (cox_format == "svg")
        emit(ttoda::svg_coxeter(diagram), cox_out);
      else
        emit(dump(ttoda::json_coxeter(diagram)), cox_out);
    } else if (*polytope) {
      ttoda::StokesVector S;
      if (pol_stokes.empty()) {
        S = ttoda::binomial_stokes(pol_n);
      } else {
        std::vector<ttoda::complexd> s(pol_stokes.begin(), pol_stokes.end());
        S = ttoda::StokesVector::symmetric(pol_n, std::move(s));
      }
      const ttoda::SolitonGraph graph = ttoda::soliton_graph(pol_n, pol_k, S);
      if (pol_format == "svg")
        emit(ttoda::svg_polytope(graph), pol_out);
      else
        emit(dump(ttoda::json_polytope(graph)), pol_out);
    } else if (*stokes) {
      const ttoda::TodaParams params = resolve_params(st_n, st_m, st_preset);
      const ttoda::StokesVector S = ttoda::stokes_from_m(params);
      json out = ttoda::json_stokes(params, S);
      if (st_factors) out["stokes_factors"] = ttoda::json_stokes_factors(st_n, S);
      emit(dump(out), st_out);
    } else if (*solve) {
      const ttoda::TodaParams params = resolve_params(sv_n, sv_m, sv_preset);
      const ttoda::RadialGrid grid = ttoda::RadialGrid::from_x(sv_xmin, sv_xmax, sv_nodes);
      const ttoda::FitTemplate templ = ttoda::template_from_name(sv_template);
      ttoda::SolverOptions opts;
      opts.tol = sv_tol;
      const ttoda::RadialSolution sol = ttoda::solve_radial(params, grid, opts);
      const ttoda::AsymptoticsReport report =
          ttoda::compare_fit(sol, sv_window[0], sv_window[1], templ);
      if (!sv_out.empty()) emit(ttoda::csv_solution(sol), sv_out);
      std::cout << dump(ttoda::json_fit_report(params, grid, sv_window[0], sv_window[1], report));
    } else if (*verify) {
      const std::vector<ttoda::CheckResult> checks = ttoda::run_verify(vf_suite);
      json out;
      out["suite"] = vf_suite;
      out["checks"] = json::array();
      bool all_pass = true;
      for (const ttoda::CheckResult& c : checks) {
        out["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        all_pass = all_pass && c.passed;
      }
      out["passed"] = all_pass;
      emit(dump(out), vf_out);
      return all_pass ? 0 : 1;
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return 0;  // --help
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
