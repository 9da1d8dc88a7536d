#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "locrep/cli/parse.hpp"
#include "locrep/cli/report.hpp"
#include "locrep/errors.hpp"

using locrep::cli::json;

namespace {

struct Options {
  std::vector<std::string> functions;
  std::string catalog;
  std::string model;
  std::string t0;
  std::size_t t0_samples = 25;
  std::uint64_t prime_bound = 1000;
  std::uint64_t seed = 0;
  std::uint64_t p = 0;
  std::size_t cap = 0;
  std::string format = "text";
  std::string out;
  std::string replay_file;
};

struct Flags {
  CLI::Option* t0_samples = nullptr;
  CLI::Option* prime_bound = nullptr;
};

Flags add_job_options(CLI::App* sub, Options& o, bool with_functions) {
  if (with_functions) sub->add_option("functions", o.functions, "Rational functions in X");
  sub->add_option("--catalog", o.catalog, "Catalog entry name");
  sub->add_option("--t0", o.t0, "Single t0 instead of the default samples");
  Flags f;
  f.t0_samples = sub->add_option("--t0-samples", o.t0_samples, "Number of t0 samples")->check(CLI::PositiveNumber);
  f.prime_bound = sub->add_option("--prime-bound", o.prime_bound, "Scan primes up to B")->check(CLI::Range(2ULL, 100000000ULL));
  sub->add_option("--seed", o.seed, "Seed of the sample generator");
  sub->add_option("--cap", o.cap, "Group order cap (overrides LOCREP_CAP)")->check(CLI::PositiveNumber);
  sub->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  sub->add_option("--out", o.out, "Write the report to this file");
  return f;
}

locrep::cli::JobConfig to_config(const Options& o) {
  locrep::cli::JobConfig c;
  c.exprs = o.functions;
  c.catalog = o.catalog;
  if (!o.t0.empty()) c.t0 = locrep::cli::parse_rational(o.t0);
  c.t0_samples = o.t0_samples;
  c.prime_bound = o.prime_bound;
  c.seed = o.seed;
  c.cap = o.cap ? o.cap : locrep::cli::cap_from_env(locrep::perm::kDefaultCap);
  if (o.p) c.p = o.p;
  c.model = o.model;
  return c;
}

int emit(const json& report, const Options& o) {
  const std::string text = o.format == "json" ? report.dump(2) + "\n" : locrep::cli::render_text(report);
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out);
    if (!f) {
      std::cerr << "cannot write " << o.out << '\n';
      return locrep::cli::kUsage;
    }
    f << text;
  }
  return locrep::cli::exit_code(report);
}

json error_report(const std::string& command, const std::string& kind, const std::string& message) {
  return {{"command", command}, {"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks whether sets of rational functions locally represent Q"};
  app.require_subcommand(1);
  Options o;

  using Runner = json (*)(const locrep::cli::JobConfig&);
  struct Command {
    const char* name;
    const char* help;
    Runner run;
    bool functions;
  };
  const Command commands[] = {
      {"check", "Scan primes for every t0 sample", locrep::cli::run_check, true},
      {"minimal", "Search a witness for each dropped function", locrep::cli::run_minimal, true},
      {"padic", "Decide whether t0 is a Q_p-value of one function", locrep::cli::run_padic, true},
      {"branch", "Branch points, partitions and Riemann-Hurwitz sums", locrep::cli::run_branch, true},
      {"group", "Covering certificate of a group model", locrep::cli::run_group, false},
      {"monodromy", "Frobenius cycle types, compared with a catalog model", locrep::cli::run_monodromy, true},
      {"catalog", "List catalog entries or verify one", locrep::cli::run_catalog, false},
  };
  Flags minimal_flags;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    const Flags f = add_job_options(sub, o, c.functions);
    if (std::string(c.name) == "minimal") minimal_flags = f;
    if (std::string(c.name) == "padic") sub->add_option("--p", o.p, "Prime");
    if (std::string(c.name) == "group") sub->add_option("--model", o.model, "Group construction JSON");
    if (std::string(c.name) == "catalog") sub->add_option("name", o.catalog, "Entry name");
  }
  CLI::App* replay = app.add_subcommand("replay", "Recompute the exit code of a saved JSON report");
  replay->add_option("report", o.replay_file, "Report file")->required()->check(CLI::ExistingFile);
  replay->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : locrep::cli::kUsage;
  }

  if (replay->parsed()) {
    std::ifstream f(o.replay_file);
    std::stringstream ss;
    ss << f.rdbuf();
    json report;
    try {
      report = json::parse(ss.str());
    } catch (const json::parse_error& e) {
      std::cerr << "replay: " << e.what() << '\n';
      return locrep::cli::kUsage;
    }
    return emit(report, o);
  }

  for (const auto& c : commands) {
    CLI::App* sub = app.get_subcommand(c.name);
    if (!sub->parsed()) continue;
    if (sub == app.get_subcommand("minimal")) {
      if (minimal_flags.t0_samples->count() == 0) o.t0_samples = 40;
      if (minimal_flags.prime_bound->count() == 0) o.prime_bound = 2000;
    }
    json report;
    try {
      report = c.run(to_config(o));
    } catch (const locrep::CapExceeded& e) {
      report = error_report(c.name, "cap", e.what());
    } catch (const locrep::Error& e) {
      report = error_report(c.name, "usage", e.what());
    }
    // Text reports on stdout already carry the message.
    if (report.contains("error") && (o.format == "json" || !o.out.empty()))
      std::cerr << c.name << ": " << report["error"]["message"].get<std::string>() << '\n';
    return emit(report, o);
  }
  return locrep::cli::kUsage;
}
