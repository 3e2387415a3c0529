// jordan: construct algebras, analyze algebra files, run verification suites.
// Exit codes: 0 success, 1 a verification check failed, 2 bad input.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "jordan/io.hpp"
#include "jordan/verify.hpp"

namespace {

using namespace jordan;
using nlohmann::ordered_json;

constexpr int kInputError = 2;

std::vector<Scalar> parse_list(const std::string& text) {
  std::vector<Scalar> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_scalar(item));
  return out;
}

AnyAlgebra construct(const std::string& type, const std::string& alpha_text, std::size_t k, std::size_t n) {
  auto alpha = [&] {
    if (alpha_text.empty()) throw BadSpec("--alpha is required for --type " + type);
    return parse_list(alpha_text);
  };
  if (type == "spin") return spin_factor(alpha());
  if (type == "albert") return albert_algebra();
  if (type == "example-3.2") return nilpotent_fixture();
  if (type == "halfspin") return halfspin_fixture();
  if (type == "full-matrix") return full_matrix_jordan(k).first;
  if (type == "hermitian") return hermitian_jordan(k).first;
  if (type == "assoc-lie") return assoc_lie(k);
  if (type == "skew-lie") return skew_lie(k);
  if (type == "so-alpha") {
    auto a = alpha_text.empty() && n ? std::vector<Scalar>(n, Scalar(1)) : alpha();
    if (n && a.size() != n) throw BadSpec("--alpha must have n entries");
    return so_alpha(a.size(), a);
  }
  throw BadSpec("unknown algebra type '" + type + "'");
}

ordered_json basis_json(const RowBasis& b) {
  ordered_json rows = ordered_json::array();
  for (const auto& v : b.vectors) {
    ordered_json row = ordered_json::array();
    for (const auto& x : v) row.push_back(to_string(x));
    rows.push_back(std::move(row));
  }
  return {{"dim", b.dim()}, {"basis", std::move(rows)}};
}

ordered_json verdict_json(const LieTable& l, const SolveOptions& options) {
  auto v = simplicity(l, options);
  ordered_json out;
  out["dim"] = l.dim();
  out["status"] = to_string(v.status);
  out["witness"] = v.witness ? basis_json(*v.witness) : ordered_json(nullptr);
  out["certificate"] = {{"killing_nondegenerate", v.certificate.killing_nondegenerate},
                        {"centroid_dim", v.certificate.centroid_dim}};
  return out;
}

ordered_json analyze(const AnyAlgebra& algebra, const std::vector<std::string>& what, const SolveOptions& options) {
  ordered_json report;
  if (const auto* j = std::get_if<JordanAlgebra>(&algebra)) {
    report["kind"] = "jordan";
    report["dim"] = j->dim();
    for (const auto& w : what) {
      if (w == "der") report["der"] = basis_json(der(*j, options).basis);
      else if (w == "tder") report["tder"] = basis_json(tder(*j, options).basis);
      else if (w == "inn") report["inn"] = basis_json(inn(*j).basis);
      else if (w == "center") report["center"] = basis_json(center(*j, options));
      else if (w == "unit") {
        ordered_json unit = nullptr;
        if (j->unit()) {
          unit = ordered_json::array();
          for (const auto& x : *j->unit()) unit.push_back(to_string(x));
        }
        report["unit"] = std::move(unit);
      } else if (w == "lie") report["lie"] = verdict_json(from_operators(der(*j, options)), options);
      else throw BadSpec("unknown analysis '" + w + "'");
    }
    return report;
  }
  const auto& l = std::get<LieTable>(algebra);
  report["kind"] = "lie";
  report["dim"] = l.dim();
  for (const auto& w : what) {
    if (w == "der") report["der"] = basis_json(lie_der(l, options).basis);
    else if (w == "tder") report["tder"] = basis_json(lie_tder(l, options).basis);
    else if (w == "inn") report["inn"] = basis_json(ad_span(l).basis);
    else if (w == "center") report["center"] = basis_json(lie_center(l));
    else if (w == "unit") report["unit"] = nullptr;
    else if (w == "lie") report["lie"] = verdict_json(l, options);
    else throw BadSpec("unknown analysis '" + w + "'");
  }
  return report;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact structure-constant toolkit for Jordan and Lie algebras"};
  app.require_subcommand(1);

  std::string strategy;
  std::size_t prime_budget = 64;
  app.add_option("--strategy", strategy, "Nullspace strategy (default: modular for dim >= 20)")
      ->check(CLI::IsMember({"dense", "modular"}));
  app.add_option("--prime-budget", prime_budget, "Primes tried by the modular strategy")->check(CLI::PositiveNumber);

  std::string out_path;

  auto* construct_cmd = app.add_subcommand("construct", "Write an algebra file");
  std::string type, alpha_text;
  std::size_t k = 2, n = 0;
  construct_cmd->add_option("--type", type, "spin|albert|example-3.2|halfspin|full-matrix|hermitian|so-alpha|assoc-lie|skew-lie")
      ->required();
  construct_cmd->add_option("--alpha", alpha_text, "Comma-separated rationals, e.g. 1,1,1 or 1/2,3");
  construct_cmd->add_option("--k", k, "Matrix size for full-matrix, hermitian, assoc-lie, skew-lie");
  construct_cmd->add_option("--n", n, "Size for so-alpha (alpha defaults to all ones)");
  construct_cmd->add_option("-o,--output", out_path, "Output file (default: stdout)");

  auto* analyze_cmd = app.add_subcommand("analyze", "Compute spaces and verdicts for an algebra file");
  std::string in_path;
  std::vector<std::string> what{"der", "tder", "inn", "center", "unit", "lie"};
  analyze_cmd->add_option("file", in_path, "Algebra file")->required();
  analyze_cmd->add_option("--what", what, "Any of der,tder,inn,center,unit,lie")->delimiter(',');
  analyze_cmd->add_option("-o,--output", out_path, "Report file (default: stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  std::string tier_text = "fast";
  bool timed = false;
  std::vector<std::string> suite_choices = suite_ids();
  suite_choices.push_back("all");
  verify_cmd->add_option("suite", suite, "2.2|2.6|2.8|2.10|3.4|3.7|4.4|4.7|all")->required()->check(CLI::IsMember(suite_choices));
  verify_cmd->add_option("--tier", tier_text, "fast|slow")->check(CLI::IsMember({"fast", "slow"}));
  verify_cmd->add_flag("--timing", timed, "Include wall time in the report");
  verify_cmd->add_option("-o,--output", out_path, "Report file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  SolveOptions options;
  options.prime_budget = prime_budget;
  if (strategy == "dense") options.strategy = Strategy::dense;
  if (strategy == "modular") options.strategy = Strategy::modular;

  try {
    if (*construct_cmd) {
      emit(serialize(construct(type, alpha_text, k, n)), out_path);
      return 0;
    }
    if (*analyze_cmd) {
      emit(analyze(load_algebra(in_path), what, options).dump(2) + "\n", out_path);
      return 0;
    }
    const Tier tier = tier_text == "slow" ? Tier::slow : Tier::fast;
    std::vector<std::string> ids = suite == "all" ? suite_ids() : std::vector<std::string>{suite};
    ordered_json reports = ordered_json::array();
    bool passed = true;
    for (const auto& id : ids) {
      auto report = run_suite(id, tier, options, timed);
      passed = passed && report.passed();
      reports.push_back(to_json(report));
    }
    ordered_json out = {{"tier", tier_text}, {"passed", passed}, {"suites", std::move(reports)}};
    emit(out.dump(2) + "\n", out_path);
    return passed ? 0 : 1;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {  // BadSpec, ZeroParameter, DimensionMismatch
    std::cerr << "error: " << e.what() << "\n";
  } catch (const ReconstructionFailed& e) {
    std::cerr << "error: " << e.what() << " (try a larger --prime-budget)\n";
  }
  return kInputError;
}
