#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hetnet/config.hpp"
#include "hetnet/report.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kConfigError = 2;
constexpr int kNumericError = 3;

struct Options {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<std::size_t> trials;
  std::vector<std::string> sets;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--config", o.config, "INI configuration file");
  cmd->add_option("--seed", o.seed, "run seed");
  cmd->add_option("--out", o.out, "output directory");
  cmd->add_option("--trials", o.trials, "Monte Carlo trials");
  cmd->add_option("--set", o.sets, "override, e.g. icic.alpha=0.25")->take_all();
}

hetnet::RunConfig load(const Options& o) {
  std::vector<std::string> ov = o.sets;
  // Dedicated flags beat --set, which beats the file.
  if (o.seed) ov.push_back("run.seed=" + std::to_string(*o.seed));
  if (o.out) ov.push_back("run.output_dir=" + *o.out);
  if (o.trials) {
    ov.push_back("sim.trials=" + std::to_string(*o.trials));
    ov.push_back("compare.trials=" + std::to_string(*o.trials));
  }
  return o.config.empty() ? hetnet::default_config(ov) : hetnet::load_config(o.config, ov);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-tier HetNet capacity: analytic model, simulation and threshold search"};
  app.require_subcommand(1);
  Options opts;
  bool dump = false;
  app.add_flag("--print-config", dump, "print the effective configuration and exit");

  using Command = hetnet::CommandResult (*)(const hetnet::RunConfig&);
  const std::pair<const char*, Command> commands[] = {
      {"analytic", hetnet::cmd_analytic},
      {"simulate", hetnet::cmd_simulate},
      {"optimize", hetnet::cmd_optimize},
      {"compare", hetnet::cmd_compare},
  };
  const char* help[] = {
      "per-user SE and throughput percentiles from the stochastic-geometry model",
      "Monte Carlo per-user SE, fairness and percentiles",
      "threshold search, beta sweep and 5th/50th percentile frontier",
      "5th percentile SE for PPP, hex and imported macro layouts",
  };
  for (std::size_t i = 0; i < 4; ++i) add_common(app.add_subcommand(commands[i].first, help[i]), opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kConfigError;
  }

  try {
    const auto cfg = load(opts);
    if (dump) {
      std::cout << hetnet::serialize_config(cfg);
      return kOk;
    }
    Command run = nullptr;
    for (const auto& [name, fn] : commands) {
      if (app.got_subcommand(name)) run = fn;
    }
    const auto res = run(cfg);
    for (const auto& f : res.files) std::cout << f.string() << '\n';
    if (res.numeric_failures > 0) {
      std::cerr << "error: " << res.numeric_failures << " value(s) could not be computed (written as nan)\n";
      return kNumericError;
    }
    return kOk;
  } catch (const hetnet::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const hetnet::ImportError& e) {
    std::cerr << "import error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const hetnet::QuadratureError& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kNumericError;
  } catch (const std::domain_error& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kNumericError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
