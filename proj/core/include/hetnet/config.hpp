#pragma once

// Run configuration: one INI file with a section per record, plus dotted-key
// overrides ("icic.alpha=0.25"). Precedence: overrides > file > defaults.

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hetnet/analytic.hpp"
#include "hetnet/model.hpp"
#include "hetnet/optimizer.hpp"
#include "hetnet/simulation.hpp"

namespace hetnet {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Points evaluated by `analytic` and `simulate`.
struct SweepSpec {
  std::vector<double> quantiles = {0.05, 0.5};

  friend bool operator==(const SweepSpec&, const SweepSpec&) = default;
};

// Deployment comparison (`compare`).
struct CompareSpec {
  double lambda_macro = 1.53;  // per km^2
  std::vector<double> lambda_pico = {2.0, 4.0, 8.0, 16.0};
  std::vector<double> p_pico_dbm = {10.0, 30.0};
  double rho_pico_db = 12.0;
  std::string imported;            // CSV of MBS sites; empty: synthesise a jittered lattice
  double jitter_fraction = 0.3;    // of the lattice spacing, for the synthetic import
  std::size_t trials = 10;

  friend bool operator==(const CompareSpec&, const CompareSpec&) = default;
};

struct RunConfig {
  RadioParams radio;
  IcicParams icic;
  IntegrationConfig integration;
  SimConfig sim;
  GridSpec grids = GridSpec::defaults();
  SweepSpec sweep;
  CompareSpec compare;
  std::string output_dir = "out";
  std::uint64_t seed = 1;

  // Copies the run seed into the simulation and optimizer backends.
  SimConfig sim_backend() const;
  GridSpec grid_backend() const;

  void validate() const;
};

bool operator==(const RunConfig& a, const RunConfig& b);

// Throws ConfigError on unknown sections/keys, malformed values or invariant violations.
RunConfig parse_config(const std::string& ini_text,
                       const std::vector<std::string>& overrides = {});
RunConfig load_config(const std::filesystem::path& path,
                      const std::vector<std::string>& overrides = {});
RunConfig default_config(const std::vector<std::string>& overrides = {});

// Every key, values printed so that parsing restores them exactly.
std::string serialize_config(const RunConfig& cfg);

}  // namespace hetnet
