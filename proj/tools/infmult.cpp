#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "infmult/report.hpp"

namespace {

constexpr int kUsageError = 2;

std::optional<infmult::OutputFormat> parse_format(const std::string& s) {
  if (s == "text") return infmult::OutputFormat::text;
  if (s == "json") return infmult::OutputFormat::json;
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of finite-orbit / infinite-multiplicity claims for a subgroup H of SL(2n,R)"};
  app.require_subcommand(1);

  infmult::RunConfig config;
  std::string lambda_text = "formal";
  std::string format_text;
  std::string out_path;

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", config.suite, "algebra | lemma-d | invariance | independence | support | orbits | "
                                            "complex-orbits | all")
      ->required()
      ->check(CLI::IsMember(infmult::suite_names()));
  verify->add_option("--n", config.n, "complex dimension n (C^n = R^2n)")->capture_default_str();
  verify->add_option("--lmax", config.lmax, "largest order l of the distribution families")->capture_default_str();
  verify->add_option("--lambda", lambda_text, "lambda as p/q, or 'formal'")->capture_default_str();
  verify->add_option("--seed", config.seed, "seed for all sampled checks")->capture_default_str();
  verify->add_option("--samples", config.samples, "sample count for randomized checks")->capture_default_str();
  verify->add_option("--format", format_text, "text | json (default: $INFMULT_FORMAT, else text)")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", out_path, "write the report to this file instead of stdout");
  verify->add_option("--jobs", config.jobs, "worker threads")->capture_default_str();
  verify->add_flag("--timing", config.timing, "include per-check wall time (breaks byte-stability)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  if (format_text.empty()) {
    if (const char* env = std::getenv("INFMULT_FORMAT")) format_text = env;
  }
  if (!format_text.empty()) {
    auto f = parse_format(format_text);
    if (!f) {
      std::cerr << "error: unknown format '" << format_text << "'\n";
      return kUsageError;
    }
    config.format = *f;
  }

  try {
    if (lambda_text != "formal") config.lambda = infmult::parse_rational(lambda_text);
    config.validate();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n" << verify->help();
    return kUsageError;
  }

  const infmult::Report report = infmult::run_suite(config);
  const std::string text = infmult::emit_report(report, config.format);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return kUsageError;
    }
    out << text;
  }
  return report.exit_status();
}
