// ncg: verification reports for K_N and the noncommutative torus.
//
// Exit status: 0 when every check passes, 1 when some check fails, 2 on
// usage, parse or input errors.

#include <CLI11.hpp>
#include <iostream>
#include <optional>

#include "ncg/error.hpp"
#include "ncg/random.hpp"
#include "ncg/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact checks of calculi and Levi-Civita connections on K_N and the noncommutative torus"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Indent the JSON output");

  int n = 0;
  std::string g;
  std::string form_path;
  bool star = false;
  int window = 0;

  auto* kn = app.add_subcommand("kn-info", "Dimensions of K_N, its center and its derivation algebras");
  kn->add_option("--n", n, "Number of arrows")->required();

  auto* calc = app.add_subcommand("calculus", "Omega^1, relations and cohomology for a Lie algebra of derivations");
  calc->add_option("--n", n, "Number of arrows")->required();
  calc->add_option("--g", g, "der, inner or tilde")->required();

  auto* lc = app.add_subcommand("lc-solve", "Solve for Levi-Civita connections of a form file");
  auto* lc_n = lc->add_option("--n", n, "Number of arrows (must match the file)");
  auto* lc_g = lc->add_option("--g", g, "der, inner or tilde (must match the file)");
  lc->add_option("--form", form_path, "Form file (JSON, schema 1)")->required();
  lc->add_flag("--star", star, "Only star connections");

  auto* torus = app.add_subcommand("torus", "Noncommutative torus");
  torus->require_subcommand(1);
  auto* verify = torus->add_subcommand("verify-examples", "Run every worked connection example");
  auto* coh = torus->add_subcommand("cohomology", "de Rham cohomology on a window [-K, K]^2");
  coh->add_option("--window", window, "Window size K")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const std::uint64_t seed = ncg::seed_from_env();
    std::optional<ncg::Report> report;
    if (kn->parsed()) {
      report = ncg::cmd_kn_info(n, seed);
    } else if (calc->parsed()) {
      report = ncg::cmd_calculus(n, g, seed);
    } else if (lc->parsed()) {
      const ncg::FormFile form = ncg::read_form_file(form_path);
      report = ncg::cmd_lc_solve(form, form_path, lc_n->count() ? std::optional<int>(n) : std::nullopt,
                                 lc_g->count() ? std::optional<std::string>(g) : std::nullopt, star);
    } else if (verify->parsed()) {
      report = ncg::cmd_torus_verify(seed);
    } else if (coh->parsed()) {
      report = ncg::cmd_torus_cohomology(window);
    }
    std::cout << ncg::dump(report->to_json(), pretty) << "\n";
    return report->exit_code();
  } catch (const ncg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
