#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "invlab/acceptance.hpp"
#include "invlab/catalog.hpp"
#include "invlab/experiment.hpp"
#include "invlab/report.hpp"

namespace {

// Environment overrides (CI hook): INVLAB_JOBS, INVLAB_SEED, INVLAB_FORMAT.
int env_jobs() {
  const char* v = std::getenv("INVLAB_JOBS");
  return v ? std::atoi(v) : 0;
}
std::uint64_t env_seed(std::uint64_t fallback) {
  const char* v = std::getenv("INVLAB_SEED");
  return v ? std::strtoull(v, nullptr, 10) : fallback;
}
std::string env_format(const std::string& fallback) {
  const char* v = std::getenv("INVLAB_FORMAT");
  return v ? v : fallback;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invlab: locally uniform Fourier/Laplace inversion laboratory"};
  app.require_subcommand(1);

  // catalog ------------------------------------------------------------
  auto* cmd_catalog = app.add_subcommand("catalog", "list the function/system catalog");
  std::string filter;
  cmd_catalog->add_option("--filter", filter, "substring filter on entry ids");

  // run ----------------------------------------------------------------
  auto* cmd_run = app.add_subcommand("run", "run one experiment from a config file");
  std::string config_path, out_path, format = env_format("json");
  int jobs = env_jobs();
  std::uint64_t seed = 0;
  bool have_seed = false;
  cmd_run->add_option("--config", config_path, "experiment config file")->required();
  cmd_run->add_option("--out", out_path, "output report path (overrides config)");
  cmd_run->add_option("--format", format, "csv|json (overrides config)");
  cmd_run->add_option("--jobs", jobs, "worker threads (0 = hardware)");
  cmd_run->add_option("--seed", seed, "seed for randomized checks")->each([&](const std::string&) {
    have_seed = true;
  });

  // verify -------------------------------------------------------------
  auto* cmd_verify = app.add_subcommand("verify", "run the full acceptance suite");
  std::string verify_out;
  int verify_jobs = env_jobs();
  std::uint64_t verify_seed = env_seed(12345);
  cmd_verify->add_option("--out", verify_out, "directory for acceptance reports");
  cmd_verify->add_option("--jobs", verify_jobs, "worker threads (0 = hardware)");
  cmd_verify->add_option("--seed", verify_seed, "seed for randomized checks");

  // report -------------------------------------------------------------
  auto* cmd_report = app.add_subcommand("report", "re-emit a stored report record");
  std::string report_in, report_out, report_format = "csv";
  cmd_report->add_option("--in", report_in, "stored JSON report")->required();
  cmd_report->add_option("--out", report_out, "output path (default stdout)");
  cmd_report->add_option("--format", report_format, "csv|json");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_catalog) {
      for (const auto& line : invlab::catalog_list(filter)) std::cout << line << '\n';
      return 0;
    }

    if (*cmd_run) {
      invlab::ExperimentConfig cfg = invlab::parse_config_file(config_path);
      if (!out_path.empty()) cfg.out_path = out_path;
      if (cmd_run->count("--format") || std::getenv("INVLAB_FORMAT")) cfg.format = format;
      if (jobs > 0) cfg.jobs = jobs;
      if (have_seed) cfg.seed = seed;
      else cfg.seed = env_seed(cfg.seed);

      invlab::ReportRecord rec = invlab::run_experiment(cfg);
      if (!cfg.out_path.empty()) {
        invlab::write_report_file(rec, cfg.out_path, cfg.format);
        std::cout << "report written to " << cfg.out_path << '\n';
      } else {
        if (cfg.format == "csv")
          invlab::emit_report_csv(rec, std::cout);
        else
          invlab::emit_report_json(rec, std::cout);
      }
      std::string expected = invlab::expected_verdict(rec.function_id, rec.experiment_kind);
      std::cout << "verdict: " << rec.verdict
                << (expected.empty() ? "" : " (expected " + expected + ")") << '\n';
      if (!expected.empty() && rec.verdict != expected) return 1;
      return 0;
    }

    if (*cmd_verify) {
      invlab::AcceptanceOptions opts;
      opts.jobs = verify_jobs;
      opts.seed = verify_seed;
      if (!verify_out.empty()) {
        std::filesystem::create_directories(verify_out);
        opts.out_dir = verify_out;
      }
      auto results = invlab::run_acceptance(opts);
      int failures = invlab::print_acceptance(results);
      return failures == 0 ? 0 : 1;
    }

    if (*cmd_report) {
      std::ifstream is(report_in);
      if (!is) throw std::runtime_error("cannot open " + report_in);
      invlab::ReportRecord rec = invlab::parse_report_json(is);
      if (report_out.empty()) {
        if (report_format == "csv")
          invlab::emit_report_csv(rec, std::cout);
        else
          invlab::emit_report_json(rec, std::cout);
      } else {
        invlab::write_report_file(rec, report_out, report_format);
      }
      return 0;
    }
  } catch (const invlab::config_error& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
