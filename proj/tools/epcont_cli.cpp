// epcont: curves, figure data and checks for the fourth-order Darboux
// partner of the free radial Hamiltonian with an exceptional point at k = q.
//
// Exit codes: 0 success, 1 a verification check failed, 2 invalid input.

#include <CLI11.hpp>

#include <algorithm>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "epcont/csv.hpp"
#include "epcont/potential.hpp"
#include "epcont/tables.hpp"
#include "epcont/verify.hpp"

namespace {

struct Settings {
  epcont::ModelParams params;
  std::optional<double> k;
  std::optional<double> k_min;
  std::optional<double> k_max;
  std::optional<double> r_max;
  std::optional<std::size_t> n;
  std::string out = "-";
  std::uint64_t seed = epcont::SuiteOptions{}.seed;
  double t_max = 2.0;
  bool no_oracle = false;
  bool acceptance = false;
  std::string figure_dir = "figures";
};

std::string command_line(int argc, char** argv) {
  std::string s;
  for (int i = 1; i < argc; ++i) s += (i > 1 ? " " : "") + std::string(argv[i]);
  return s;
}

void emit(epcont::CsvTable table, const Settings& s, const std::string& command) {
  // Replace the generic provenance lines with the actual command line.
  const auto head = epcont::provenance(s.params, command);
  std::copy(head.begin(), head.end(), table.comments.begin());
  epcont::write_csv_file(s.out, table);
}

int run_verify(const Settings& s) {
  epcont::SuiteOptions options;
  options.seed = s.seed;
  options.figure_dir = s.figure_dir;
  std::cout << "invariants at " << epcont::describe(s.params) << '\n';
  auto results = epcont::run_invariants(s.params, options);
  epcont::print_results(std::cout, results);
  if (s.acceptance) {
    std::cout << "acceptance criteria\n";
    const auto acc = epcont::run_acceptance(options);
    epcont::print_results(std::cout, acc);
    results.insert(results.end(), acc.begin(), acc.end());
  }
  std::size_t failed = 0;
  for (const auto& r : results) failed += r.pass ? 0 : 1;
  std::cout << (failed == 0 ? "all checks passed" : std::to_string(failed) + " check(s) failed") << '\n';
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jost solutions, scattering data and Jordan-block evolution at a continuum exceptional point"};
  app.set_version_flag("--version", epcont::version);
  app.set_config("--config", "", "key=value file with option defaults");
  app.require_subcommand(1);

  Settings s;
  app.add_option("--alpha", s.params.alpha, "alpha")->capture_default_str();
  app.add_option("--beta", s.params.beta, "beta (nonzero)")->capture_default_str();
  app.add_option("--q", s.params.q, "exceptional wave number (> 0)")->capture_default_str();
  app.add_option("--k", s.k, "fixed wave number");
  app.add_option("--k-min", s.k_min, "start of a k sweep (default 0)");
  app.add_option("--k-max", s.k_max, "end of a k sweep (default 4q)");
  app.add_option("--r-max", s.r_max, "largest radius");
  app.add_option("--n", s.n, "number of samples");
  app.add_option("--out", s.out, "output CSV path, - for stdout")->capture_default_str();
  app.add_option("--seed", s.seed, "seed for the random parameter draws")->capture_default_str();

  auto* potential = app.add_subcommand("potential", "r, V4, W1")->fallthrough();
  auto* boundstates = app.add_subcommand("boundstates", "r, psi_B, chi_B")->fallthrough();
  auto* scattering =
      app.add_subcommand("scattering", "psi_s and psi_is at fixed --k, or S and Delta over a k sweep")->fallthrough();
  auto* evolve = app.add_subcommand("evolve", "norms and overlaps against time")->fallthrough();
  evolve->add_option("--t-max", s.t_max, "final time")->capture_default_str();
  evolve->add_flag("--no-oracle", s.no_oracle, "skip the Crank-Nicolson columns");
  auto* verify = app.add_subcommand("verify", "invariant suite with a PASS/FAIL table")->fallthrough();
  verify->add_flag("--acceptance", s.acceptance, "also run the ten acceptance criteria");
  verify->add_option("--figure-dir", s.figure_dir, "where the acceptance run writes figure CSVs")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string command = command_line(argc, argv);
  try {
    const epcont::Model model(s.params);
    const double q = s.params.q;
    if (potential->parsed()) {
      emit(epcont::potential_table(model, s.r_max.value_or(30.0 / q), s.n.value_or(3001)), s, command);
    } else if (boundstates->parsed()) {
      emit(epcont::boundstates_table(model, s.r_max.value_or(30.0 / q), s.n.value_or(3001)), s, command);
    } else if (scattering->parsed()) {
      if (s.k) {
        emit(epcont::scattering_r_table(model, *s.k, s.r_max.value_or(30.0 / q), s.n.value_or(3001)), s, command);
      } else {
        emit(epcont::scattering_k_table(model, s.k_min.value_or(0.0), s.k_max.value_or(4.0 * q), s.n.value_or(4001)),
             s, command);
      }
    } else if (evolve->parsed()) {
      epcont::EvolveOptions o;
      o.t_max = s.t_max;
      o.n_t = s.n.value_or(o.n_t);
      o.r_max = s.r_max.value_or(0.0);
      o.with_oracle = !s.no_oracle;
      emit(epcont::evolve_table(model, o), s, command);
    } else if (verify->parsed()) {
      return run_verify(s);
    }
  } catch (const epcont::InvalidModel& e) {
    std::cerr << "invalid model: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
