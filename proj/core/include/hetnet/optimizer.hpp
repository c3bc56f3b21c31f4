#pragma once

// Grid search of the scheduling thresholds (rho, rho') that maximise the mean
// per-cell C_log, and the sweeps built on top of it. Every grid point of one
// search is evaluated on the same cached drops (common random numbers).

#include <cstdint>
#include <span>
#include <vector>

#include "hetnet/simulation.hpp"

namespace hetnet {

struct GridSpec {
  std::vector<double> rho_grid_db;
  std::vector<double> rho_pico_grid_db;
  std::vector<double> alpha_grid;
  std::vector<double> tau_grid_db;
  std::vector<double> beta_grid;
  double reference_beta = 0.5;  // beta at which thresholds are optimised
  SimConfig sim;                // backend; its rng_seed is replaced by common_seed
  std::uint64_t common_seed = 1;
  bool smooth_thresholds = false;  // 3-point moving average of rho*(alpha)

  // rho, rho' in -5..20 dB step 1; alpha {0,.125,.25,.5,.75,1}; tau {0,6,12} dB;
  // beta 0.1..0.9 step 0.1.
  static GridSpec defaults();
  // Throws std::invalid_argument on an empty or non-increasing axis.
  void validate() const;

  SimConfig backend() const;

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

struct ThresholdOptimum {
  double alpha = 0.0;
  double tau_db = 0.0;
  double beta = 0.0;
  double rho_star_db = 0.0;
  double rho_pico_star_db = 0.0;
  double c_log = 0.0;
  double c_sum = 0.0;
};

using OptimumThresholds = std::vector<ThresholdOptimum>;

// Fairness at every (rho, rho') grid point, row-major with rho as the slow axis.
std::vector<FairnessMetrics> evaluate_threshold_grid(std::span<const Drop> drops,
                                                     const GridSpec& grid, double alpha,
                                                     double tau_db, double beta);

// Index of the largest c_log; ties go to the smallest rho, then smallest rho'.
std::size_t argmax_c_log(std::span<const FairnessMetrics> values);

ThresholdOptimum optimize_thresholds(std::span<const Drop> drops, const GridSpec& grid,
                                     double alpha, double tau_db, double beta);
ThresholdOptimum optimize_thresholds(const RadioParams& rp, const GridSpec& grid, double alpha,
                                     double tau_db, double beta);

// optimize_thresholds for every (alpha, tau) at the reference beta; alpha is
// the fast axis.
OptimumThresholds sweep_alpha_tau(const RadioParams& rp, const GridSpec& grid);
OptimumThresholds sweep_alpha_tau(std::span<const Drop> drops, const GridSpec& grid);

// Centred 3-point moving average of rho*, rho'* along alpha for each tau
// (end points use the available neighbours). Fairness values are left as found.
OptimumThresholds smooth_along_alpha(const OptimumThresholds& t);

struct BetaPoint {
  double beta = 0.0;
  double alpha = 0.0;
  double tau_db = 0.0;
  double c_log = 0.0;
  double c_sum = 0.0;
};

// Fairness across beta_grid with each (alpha, tau) keeping the thresholds
// optimised at the reference beta.
std::vector<BetaPoint> sweep_beta(const RadioParams& rp, const GridSpec& grid,
                                  const OptimumThresholds& thresholds);

struct FrontierPoint {
  double alpha = 0.0;
  double tau_db = 0.0;
  double se5 = 0.0;   // 5th percentile of per-UE SE, bps/Hz
  double se50 = 0.0;  // median
};

std::vector<FrontierPoint> percentile_frontier(std::span<const Drop> drops, const GridSpec& grid,
                                               const OptimumThresholds& thresholds);
std::vector<FrontierPoint> percentile_frontier(const RadioParams& rp, const GridSpec& grid,
                                               const OptimumThresholds& thresholds);

}  // namespace hetnet
