#include "cayleyqc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>

#include "cayleyqc/bounds.hpp"
#include "cayleyqc/css_code.hpp"
#include "cayleyqc/errors.hpp"
#include "cayleyqc/hypercube.hpp"
#include "cayleyqc/matrix_io.hpp"
#include "cayleyqc/report.hpp"
#include "cayleyqc/verify_suites.hpp"

namespace cayleyqc::cli {

namespace {

struct RunConfig {
  std::string input_path;
  std::optional<std::size_t> n, t, d, k, cap;
  std::size_t budget = 10000;
  std::uint64_t seed = default_seed;
  std::string suite;
  std::string format = "json";
  std::string output;
  bool heuristic = false;
  bool simple = false;
  bool stirling = false;
};

// Runs without a cap stay inside these envelopes.
bool within_exact_envelope(std::size_t n, std::size_t t) { return (n <= 8 && t <= 3) || (n <= 6 && t <= 4); }

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Emitted {
  std::string text;
  int code = exit_ok;
};

Emitted cmd_analyze(const RunConfig& cfg) {
  const GeneratorSpec spec(read_matrix_file(cfg.input_path));
  const auto params = quantum_params(spec, cfg.cap);
  const auto degeneracy = degeneracy_report(spec, params);
  const int code = params.D_status == DistanceStatus::lower_bounded_by_cap ? exit_incomplete : exit_ok;
  return {render(to_json(params, &degeneracy), parse_output_format(cfg.format)), code};
}

Json bound_summary(const BoundReport& b) {
  return {{"formula_id", formula_id(b.formula)},
          {"M", b.M},
          {"exact", b.value ? b.value->exact_form() : ""},
          {"decimal", b.decimal}};
}

Emitted cmd_pseudoborder(const RunConfig& cfg) {
  const std::size_t n = *cfg.n;
  const std::size_t t = *cfg.t;
  if (t < 1 || t >= n) throw ValidationError("need 1 <= t < n");
  const auto bound = theorem_bound(n, t);

  Json report;
  report["n"] = n;
  report["t"] = t;
  report["mode"] = cfg.heuristic ? "heuristic" : "exact";
  int code = exit_ok;
  std::optional<SetFamily> witness;

  if (cfg.heuristic) {
    const auto start = random_t_pseudo_border(n, t, cfg.seed);
    report["seed"] = cfg.seed;
    if (!start) {
      report["status"] = "none-exists";
    } else {
      const auto descent = flip_descent(*start, t, cfg.budget);
      report["status"] = "upper-bound";
      report["start_size"] = start->size();
      report["flips"] = descent.flips;
      report["flip_minimal"] = descent.flip_minimal;
      witness = descent.family;
    }
  } else {
    if (!cfg.cap && !within_exact_envelope(n, t)) {
      throw ResourceError("exact search beyond n <= 8, t <= 3 and n <= 6, t <= 4 needs --cap or --heuristic");
    }
    const auto result = minimal_t_pseudo_border(n, t, cfg.cap);
    report["status"] = to_string(result.status);
    if (result.status == SearchStatus::cap_reached) {
      report["size_greater_than"] = result.ruled_out_below_or_at;
      code = exit_incomplete;
    }
    witness = result.witness;
  }

  if (witness) {
    report["size"] = witness->size();
    report["witness"] = to_json(*witness);
    report["is_t_pseudo_border"] = is_t_pseudo_border(*witness, t);
  } else {
    report["size"] = nullptr;
    report["witness"] = nullptr;
  }
  if (report["status"] == "none-exists") report["note"] = "no t-pseudo-border exists for these parameters";

  report["theorem_bound"] = bound_summary(bound);
  if (witness) {
    const auto& v = *bound.value;
    const SurdValue margin(Rational(witness->size()) - v.rational_part(), -v.surd_coefficient(), v.radicand());
    report["bound_satisfied"] = bound.satisfied_by(witness->size());
    report["margin"] = margin.lower_decimal(BoundReport::decimal_digits);
  }
  if (t >= 3) {
    const auto simple = simple_bound(n);
    report["simple_bound"] = bound_summary(simple);
    if (witness) report["simple_bound_satisfied"] = simple.satisfied_by(witness->size());
  }
  return {render(report, parse_output_format(cfg.format)), code};
}

Emitted cmd_verify(const RunConfig& cfg) {
  const auto results = run_suite(cfg.suite, cfg.seed);
  const Json report = to_json(results, cfg.seed);
  const bool passed = report.at("passed").get<bool>();
  return {render_checks(report, parse_output_format(cfg.format)), passed ? exit_ok : exit_validation};
}

Emitted cmd_bound(const RunConfig& cfg) {
  const int chosen = static_cast<int>(cfg.t.has_value()) + static_cast<int>(cfg.d.has_value()) +
                     static_cast<int>(cfg.k.has_value()) + static_cast<int>(cfg.simple) +
                     static_cast<int>(cfg.stirling);
  if (chosen != 1) throw UsageError("bound needs exactly one of --t, --d, --k, --simple, --stirling");
  const std::size_t n = *cfg.n;
  BoundReport b;
  if (cfg.t) {
    b = theorem_bound(n, *cfg.t);
  } else if (cfg.d) {
    b = corollary_bound(n, *cfg.d);
  } else if (cfg.k) {
    b = k_layer_bound(n, *cfg.k);
  } else if (cfg.simple) {
    b = simple_bound(n);
  } else {
    b = stirling_floor(n);
  }
  return {render(to_json(b), parse_output_format(cfg.format)), exit_ok};
}

void add_output_options(CLI::App* sub, RunConfig& cfg, const std::string& default_format) {
  cfg.format = default_format;
  sub->add_option("--format", cfg.format, "json, csv or table")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();
  sub->add_option("--output", cfg.output, "write the report here instead of stdout");
}

int write_report(const RunConfig& cfg, const Emitted& emitted, std::ostream& out, std::ostream& err) {
  if (cfg.output.empty()) {
    out << emitted.text;
    out.flush();
    return emitted.code;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  file << emitted.text;
  if (!file) {
    err << "error: cannot write " << cfg.output << "\n";
    return exit_parse;
  }
  return emitted.code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cayley-graph CSS codes: parameters, pseudo-borders and distance bounds", "cayleyqc"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  RunConfig analyze_cfg, pseudo_cfg, verify_cfg, bound_cfg;

  auto* analyze = app.add_subcommand("analyze", "[[N, K, D]] of the code built from a parity-check matrix");
  analyze->add_option("--input", analyze_cfg.input_path, "matrix file: 'r n' then r rows of 0/1")->required();
  analyze->add_option("--cap", analyze_cfg.cap, "largest distance searched");
  add_output_options(analyze, analyze_cfg, "json");

  auto* pseudo = app.add_subcommand("pseudoborder", "minimum t-pseudo-border of the n-cube");
  pseudo->add_option("--n", pseudo_cfg.n, "cube dimension")->required();
  pseudo->add_option("--t", pseudo_cfg.t, "radius, 1 <= t < n")->required();
  pseudo->add_option("--cap", pseudo_cfg.cap, "largest size searched");
  pseudo->add_flag("--heuristic", pseudo_cfg.heuristic, "random start plus greedy flips (upper bound only)");
  pseudo->add_option("--seed", pseudo_cfg.seed, "seed for --heuristic")->capture_default_str();
  pseudo->add_option("--budget", pseudo_cfg.budget, "flip budget for --heuristic")->capture_default_str();
  add_output_options(pseudo, pseudo_cfg, "json");

  auto* verify = app.add_subcommand("verify", "run a property suite");
  verify->add_option("suite", verify_cfg.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--seed", verify_cfg.seed, "seed for randomized checks")->capture_default_str();
  add_output_options(verify, verify_cfg, "table");

  auto* bound = app.add_subcommand("bound", "evaluate a lower-bound formula");
  bound->add_option("--n", bound_cfg.n, "n")->required();
  bound->add_option("--t", bound_cfg.t, "pseudo-border radius (theorem sum)");
  bound->add_option("--d", bound_cfg.d, "classical distance (corollary sum)");
  bound->add_option("--k", bound_cfg.k, "even layer index (k-set bound)");
  bound->add_flag("--simple", bound_cfg.simple, "1 + n/2");
  bound->add_flag("--stirling", bound_cfg.stirling, "e^sqrt(n/2)");
  add_output_options(bound, bound_cfg, "json");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_parse;
  }

  const RunConfig* cfg = nullptr;
  try {
    Emitted emitted;
    if (analyze->parsed()) {
      cfg = &analyze_cfg;
      emitted = cmd_analyze(analyze_cfg);
    } else if (pseudo->parsed()) {
      cfg = &pseudo_cfg;
      emitted = cmd_pseudoborder(pseudo_cfg);
    } else if (verify->parsed()) {
      cfg = &verify_cfg;
      emitted = cmd_verify(verify_cfg);
    } else {
      cfg = &bound_cfg;
      emitted = cmd_bound(bound_cfg);
    }
    return write_report(*cfg, emitted, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return exit_parse;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_parse;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return exit_validation;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return exit_resource;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_internal;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace cayleyqc::cli
