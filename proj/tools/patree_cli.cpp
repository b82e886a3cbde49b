// patree: command-line front end for the aromatic-tree engine and the SO(3)
// order experiments. Exit codes: 0 success, 1 verification failure, 2 usage.

#include "patree/aroma.hpp"
#include "patree/divergence.hpp"
#include "patree/expr_io.hpp"
#include "patree/golden.hpp"
#include "patree/harness.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>

namespace {

constexpr int kOk = 0, kFail = 1, kUsage = 2;

int cmd_basis(int n, bool aromas) {
  for (int k = 1; k <= n; ++k) {
    auto trees = patree::enumerate_trees(k);
    std::cout << "# trees of order " << k << ": " << trees.size() << '\n';
    for (const auto& t : trees) std::cout << patree::to_string(t) << '\n';
  }
  if (aromas)
    for (int k = 1; k <= n; ++k) {
      auto as = patree::enumerate_aromas(k);
      std::cout << "# aromas of order " << k << ": " << as.size() << '\n';
      for (const auto& a : as) std::cout << patree::to_string(a) << '\n';
    }
  return kOk;
}

int cmd_div(const std::string& expr) {
  auto e = patree::parse_element(expr);
  std::cout << patree::to_string(patree::div(e)) << '\n';
  return kOk;
}

int report(const patree::Report& r) {
  for (const auto& c : r.results)
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
  std::cout << r.results.size() - r.failures() << '/' << r.results.size() << " passed\n";
  return r.all_passed() ? kOk : kFail;
}

int cmd_verify_tables() {
  auto cases = patree::table1_cases();
  auto appendix = patree::appendix_cases();
  cases.insert(cases.end(), appendix.begin(), appendix.end());
  return report(patree::verify_cases(cases));
}

int cmd_psi_check() {
  bool ok = true;
  for (int k = 1; k <= 5; ++k) {
    bool zero = patree::div(patree::psi(k)).is_zero();
    ok = ok && zero;
    std::cout << (zero ? "PASS" : "FAIL") << " psi" << k << ": Div = " << (zero ? "0" : "nonzero") << '\n';
  }
  return ok ? kOk : kFail;
}

void print_slopes(const std::optional<double>& conv, const std::optional<double>& vol) {
  auto show = [](const std::optional<double>& s) {
    std::ostringstream o;
    if (s)
      o << std::fixed << std::setprecision(3) << *s;
    else
      o << "indeterminate";
    return o.str();
  };
  std::cout << "convergence_slope " << show(conv) << "\nvolume_slope " << show(vol) << '\n';
}

int cmd_run(const std::string& config_path, bool serial) {
  auto cfg = patree::load_config(config_path);
  auto r = serial ? patree::run_experiment_serial(cfg) : patree::run_experiment(cfg);
  patree::write_csv(std::cout, r.records);
  for (const auto& rec : r.records)
    if (!rec.ok) std::cerr << "h=" << rec.h << " failed: " << rec.message << '\n';
  print_slopes(r.convergence_slope, r.volume_slope);
  std::cout << "reference_check " << r.reference_check << '\n';
  patree::save(r);
  return kOk;
}

int cmd_slopes(const std::string& csv) {
  std::ifstream in(csv);
  if (!in) throw patree::DomainError("cannot open " + csv);
  auto records = patree::read_csv(in);
  std::vector<std::pair<double, double>> err, vol;
  for (const auto& r : records) {
    err.emplace_back(r.h, r.global_error);
    vol.emplace_back(r.h, r.det_defect);
  }
  auto slope = [](const auto& pairs) -> std::optional<double> {
    try {
      return patree::estimate_slope(pairs);
    } catch (const patree::NumericError&) {
      return std::nullopt;
    }
  };
  print_slopes(slope(err), slope(vol));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planar aromatic trees and volume-preserving Lie-group integrators"};
  app.require_subcommand(1);

  int order = 3;
  bool aromas = false;
  auto* basis = app.add_subcommand("basis", "list trees (and aromas) of order <= N");
  basis->add_option("N", order, "maximal order")->required()->check(CLI::Range(1, 8));
  basis->add_flag("--aromas", aromas, "also list aromas");

  std::string expr;
  auto* div = app.add_subcommand("div", "print the divergence of an expression");
  div->add_option("expr", expr, "element, e.g. \"A[(x -> o)] (o -> o)\"")->required();

  auto* verify = app.add_subcommand("verify-tables", "check the golden divergence tables");
  auto* psi = app.add_subcommand("psi-check", "check that the five Psi combinations are divergence-free");

  std::string config;
  bool serial = false;
  auto* run = app.add_subcommand("run", "run an order experiment and print its CSV");
  run->add_option("--config", config, "key=value experiment file")->required()->check(CLI::ExistingFile);
  run->add_flag("--serial", serial, "run the h-grid on one thread");

  std::string csv;
  auto* slopes = app.add_subcommand("slopes", "estimate slopes from an experiment CSV");
  slopes->add_option("csv", csv, "CSV with header h,global_error,det_defect,wall_ms")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*basis) return cmd_basis(order, aromas);
    if (*div) return cmd_div(expr);
    if (*verify) return cmd_verify_tables();
    if (*psi) return cmd_psi_check();
    if (*run) return cmd_run(config, serial);
    if (*slopes) return cmd_slopes(csv);
  } catch (const patree::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const patree::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
  return kUsage;
}
