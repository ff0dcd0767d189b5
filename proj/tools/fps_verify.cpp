// Batch verification front end: property suites, factorial-integral checks,
// and the two number-theoretic pipelines, with machine-readable reports.

#include <CLI11.hpp>

#include "fps/cli.hpp"

namespace {

void add_common(CLI::App* cmd, fps::RunConfig& cfg, std::string& eps)
{
  cmd->add_option("--output", cfg.output, "report destination (default: $FPS_VERIFY_OUT or stdout)");
  cmd->add_option("--format", cfg.format, "report format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--eps", eps, "interval width target, e.g. 1e-8 or 1/100000000");
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"exact power-series and semiformal-integral verification harness"};
  app.require_subcommand(1);

  fps::RunConfig cfg;
  std::string eps, coeffs, b, alpha;

  auto* props = app.add_subcommand("props", "run the seeded property suites");
  props->add_option("--seed", cfg.seed, "RNG seed");
  props->add_option("--cases", cfg.cases, "cases per suite");
  add_common(props, cfg, eps);

  auto* euler = app.add_subcommand("euler", "exact and numeric factorial-integral checks");
  euler->add_option("--max-k", cfg.max_k, "largest k for the numeric sweep");
  add_common(euler, cfg, eps);

  auto* bbr = app.add_subcommand("bbr", "rational-series pipeline checks");
  bbr->add_option("--b", b, "comma list of nonzero integer weights");
  bbr->add_option("--alpha", alpha, "comma list of distinct natural exponents");
  bbr->add_option("--max-n", cfg.N, "table depth N");
  bbr->add_option("--max-k", cfg.K, "highest q-power row K");
  bbr->add_option("--max-r", cfg.max_r, "depth of the recovered-polynomial checks");
  bbr->add_option("--emit-tables", cfg.emit_tables, "write the integer tables as CSV");
  add_common(bbr, cfg, eps);

  auto* hilbert = app.add_subcommand("hilbert", "factorial-divisibility pipeline checks");
  hilbert->add_option("--coeffs", coeffs, "comma list a_0,...,a_n (a_0 nonzero)");
  hilbert->add_option("--max-r", cfg.max_r, "pipeline depth in r");
  hilbert->add_option("--emit-tables", cfg.emit_tables, "write per-r rows as CSV");
  add_common(hilbert, cfg, eps);

  auto* all = app.add_subcommand("all", "run every check with the configured depths");
  all->add_option("--seed", cfg.seed, "RNG seed");
  all->add_option("--cases", cfg.cases, "cases per suite");
  all->add_option("--max-k", cfg.max_k, "largest k for the numeric sweep");
  all->add_option("--max-r", cfg.max_r, "pipeline depth in r");
  add_common(all, cfg, eps);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (props->parsed())
      cfg.command = fps::Command::props;
    else if (euler->parsed()) {
      cfg.command = fps::Command::euler;
      if (eps.empty())
        cfg.eps = fps::parse_rat("1e-6");
    } else if (bbr->parsed())
      cfg.command = fps::Command::bbr;
    else if (hilbert->parsed())
      cfg.command = fps::Command::hilbert;
    else
      cfg.command = fps::Command::all;

    if (!eps.empty())
      cfg.eps = fps::parse_rat(eps);
    if (!coeffs.empty())
      cfg.coeffs = fps::parse_int_list(coeffs);
    if (!b.empty())
      cfg.b = fps::parse_int_list(b);
    if (!alpha.empty())
      cfg.alpha = fps::parse_int_list(alpha);
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  }

  return fps::run(cfg);
}
