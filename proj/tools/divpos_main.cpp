// Batch front end: parse scenario files, dispatch to the library, emit
// deterministic reports. Exit status 0 = all scenarios processed, 1 = some
// scenario failed, 2 = the input could not be parsed or validated.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "divpos/scenario.hpp"
#include "divpos/suites.hpp"

namespace {

enum class LogLevel { quiet, info, debug };

LogLevel log_level() {
  const char* env = std::getenv("DIVPOS_LOG");
  if (env == nullptr) return LogLevel::quiet;
  const std::string value(env);
  if (value == "debug") return LogLevel::debug;
  if (value == "info") return LogLevel::info;
  return LogLevel::quiet;
}

void write_output(const std::string& report, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << report;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    divpos::fail(divpos::ErrorCode::ParseError, "cannot write " + out_path);
  }
  out << report;
}

struct SubcommandOptions {
  std::string input;
  std::string format = "text";
  std::string out;
};

int run_batch(divpos::scenario::Kind kind, const SubcommandOptions& opt) {
  using namespace divpos::scenario;
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Scenario> scenarios = parse_scenarios_file(opt.input, kind);
  if (log_level() >= LogLevel::debug) {
    for (const Scenario& s : scenarios) {
      std::cerr << "divpos: scenario " << s.id << " (" << kind_name(s.kind) << ")\n";
    }
  }
  const std::vector<Outcome> outcomes = evaluate_batch(scenarios, divpos::kernels::Exec::openmp);
  const ReportFormat format = opt.format == "json" ? ReportFormat::json : ReportFormat::text;
  write_output(render_report(outcomes, format), opt.out);
  if (log_level() >= LogLevel::info) {
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    long long failed = 0;
    for (const Outcome& o : outcomes) failed += o.ok ? 0 : 1;
    std::cerr << "divpos: " << outcomes.size() << " scenario(s), " << failed << " failed, "
              << seconds << "s\n";
  }
  return all_ok(outcomes) ? 0 : 1;
}

int run_selftest(const SubcommandOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  const std::string report = divpos::suites::selftest_report(divpos::kernels::Exec::openmp);
  write_output(report, opt.out);
  if (log_level() >= LogLevel::info) {
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cerr << "divpos: selftest finished in " << seconds << "s\n";
  }
  return report.find("selftest: PASS") != std::string::npos ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "divpos: exact positivity decisions for divisor classes on projective bundles over curves "
      "and on abelian-surface lattices"};
  app.require_subcommand(1);

  const std::vector<std::pair<std::string, divpos::scenario::Kind>> kinds = {
      {"classify", divpos::scenario::Kind::classify},
      {"hn", divpos::scenario::Kind::hn},
      {"frobsplit", divpos::scenario::Kind::frobsplit},
      {"cone", divpos::scenario::Kind::cone},
      {"rationalize", divpos::scenario::Kind::rationalize},
      {"counterexample", divpos::scenario::Kind::counterexample},
  };

  std::vector<std::shared_ptr<SubcommandOptions>> options;
  std::vector<std::pair<CLI::App*, divpos::scenario::Kind>> batch_commands;
  for (const auto& [name, kind] : kinds) {
    auto opt = std::make_shared<SubcommandOptions>();
    CLI::App* sub = app.add_subcommand(name, "evaluate a batch of " + name + " scenarios");
    sub->add_option("--input", opt->input, "scenario file (JSON or TOML)")->required();
    sub->add_option("--format", opt->format, "report format")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", opt->out, "write the report to this path instead of stdout");
    options.push_back(opt);
    batch_commands.emplace_back(sub, kind);
  }

  auto selftest_opt = std::make_shared<SubcommandOptions>();
  CLI::App* selftest = app.add_subcommand("selftest", "run the built-in oracle and cone suites");
  selftest->add_option("--out", selftest_opt->out, "write the report to this path instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (selftest->parsed()) return run_selftest(*selftest_opt);
    for (std::size_t i = 0; i < batch_commands.size(); ++i) {
      if (batch_commands[i].first->parsed()) {
        return run_batch(batch_commands[i].second, *options[i]);
      }
    }
  } catch (const divpos::Error& e) {
    std::cerr << "divpos: " << divpos::error_code_name(e.code()) << ": " << e.what() << "\n";
    const bool input_problem = e.code() == divpos::ErrorCode::ParseError ||
                               e.code() == divpos::ErrorCode::SchemaError;
    return input_problem ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "divpos: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
