#include "hetnet/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace hetnet {

namespace {

std::vector<double> arange(double lo, double hi, double step) {
  std::vector<double> v;
  const auto n = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
  for (long i = 0; i <= n; ++i) v.push_back(lo + static_cast<double>(i) * step);
  return v;
}

void check_axis(const std::vector<double>& v, const char* name) {
  if (v.empty()) throw std::invalid_argument(std::string("GridSpec: empty axis ") + name);
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i] > v[i - 1])) {
      throw std::invalid_argument(std::string("GridSpec: axis ") + name + " must be strictly increasing");
    }
  }
}

IcicParams icic_at(double alpha, double tau_db, double beta, double rho_db, double rho_pico_db) {
  IcicParams p;
  p.alpha = alpha;
  p.tau_db = tau_db;
  p.beta = beta;
  p.rho_db = rho_db;
  p.rho_pico_db = rho_pico_db;
  return p;
}

// NaN compares as the worst value.
bool better(double a, double b) {
  if (std::isnan(a)) return false;
  if (std::isnan(b)) return true;
  return a > b;
}

}  // namespace

GridSpec GridSpec::defaults() {
  GridSpec g;
  g.rho_grid_db = arange(-5.0, 20.0, 1.0);
  g.rho_pico_grid_db = arange(-5.0, 20.0, 1.0);
  g.alpha_grid = {0.0, 0.125, 0.25, 0.5, 0.75, 1.0};
  g.tau_grid_db = {0.0, 6.0, 12.0};
  g.beta_grid = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  return g;
}

void GridSpec::validate() const {
  check_axis(rho_grid_db, "rho_grid_db");
  check_axis(rho_pico_grid_db, "rho_pico_grid_db");
  check_axis(alpha_grid, "alpha_grid");
  check_axis(tau_grid_db, "tau_grid_db");
  check_axis(beta_grid, "beta_grid");
  if (alpha_grid.front() < 0.0 || alpha_grid.back() > 1.0) {
    throw std::invalid_argument("GridSpec: alpha values must lie in [0, 1]");
  }
  if (beta_grid.front() < 0.0 || beta_grid.back() > 1.0 || reference_beta < 0.0 || reference_beta > 1.0) {
    throw std::invalid_argument("GridSpec: beta values must lie in [0, 1]");
  }
  backend().validate();
}

SimConfig GridSpec::backend() const {
  SimConfig s = sim;
  s.rng_seed = common_seed;
  return s;
}

std::vector<FairnessMetrics> evaluate_threshold_grid(std::span<const Drop> drops, const GridSpec& grid,
                                                     double alpha, double tau_db, double beta) {
  grid.validate();
  std::vector<FairnessMetrics> out;
  out.reserve(grid.rho_grid_db.size() * grid.rho_pico_grid_db.size());
  for (double rho : grid.rho_grid_db) {
    for (double rho_pico : grid.rho_pico_grid_db) {
      out.push_back(fairness_on_drops(drops, icic_at(alpha, tau_db, beta, rho, rho_pico), grid.sim));
    }
  }
  return out;
}

std::size_t argmax_c_log(std::span<const FairnessMetrics> values) {
  if (values.empty()) throw std::invalid_argument("argmax_c_log: empty grid");
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (better(values[i].c_log, values[best].c_log)) best = i;
  }
  return best;
}

ThresholdOptimum optimize_thresholds(std::span<const Drop> drops, const GridSpec& grid, double alpha,
                                     double tau_db, double beta) {
  const auto values = evaluate_threshold_grid(drops, grid, alpha, tau_db, beta);
  const std::size_t best = argmax_c_log(values);
  const std::size_t n = grid.rho_pico_grid_db.size();
  ThresholdOptimum o;
  o.alpha = alpha;
  o.tau_db = tau_db;
  o.beta = beta;
  o.rho_star_db = grid.rho_grid_db[best / n];
  o.rho_pico_star_db = grid.rho_pico_grid_db[best % n];
  o.c_log = values[best].c_log;
  o.c_sum = values[best].c_sum;
  return o;
}

ThresholdOptimum optimize_thresholds(const RadioParams& rp, const GridSpec& grid, double alpha,
                                     double tau_db, double beta) {
  grid.validate();
  const auto drops = drop_networks(rp, beta, grid.backend());
  return optimize_thresholds(drops, grid, alpha, tau_db, beta);
}

OptimumThresholds sweep_alpha_tau(std::span<const Drop> drops, const GridSpec& grid) {
  OptimumThresholds out;
  for (double tau : grid.tau_grid_db) {
    for (double alpha : grid.alpha_grid) {
      out.push_back(optimize_thresholds(drops, grid, alpha, tau, grid.reference_beta));
    }
  }
  return grid.smooth_thresholds ? smooth_along_alpha(out) : out;
}

OptimumThresholds sweep_alpha_tau(const RadioParams& rp, const GridSpec& grid) {
  grid.validate();
  const auto drops = drop_networks(rp, grid.reference_beta, grid.backend());
  return sweep_alpha_tau(drops, grid);
}

OptimumThresholds smooth_along_alpha(const OptimumThresholds& t) {
  OptimumThresholds out = t;
  std::map<double, std::vector<std::size_t>> by_tau;
  for (std::size_t i = 0; i < t.size(); ++i) by_tau[t[i].tau_db].push_back(i);
  for (auto& [tau, idx] : by_tau) {
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return t[a].alpha < t[b].alpha; });
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const std::size_t lo = k > 0 ? k - 1 : k;
      const std::size_t hi = k + 1 < idx.size() ? k + 1 : k;
      double rho = 0.0, rho_pico = 0.0;
      for (std::size_t j = lo; j <= hi; ++j) {
        rho += t[idx[j]].rho_star_db;
        rho_pico += t[idx[j]].rho_pico_star_db;
      }
      const double n = static_cast<double>(hi - lo + 1);
      out[idx[k]].rho_star_db = rho / n;
      out[idx[k]].rho_pico_star_db = rho_pico / n;
    }
  }
  return out;
}

std::vector<BetaPoint> sweep_beta(const RadioParams& rp, const GridSpec& grid,
                                  const OptimumThresholds& thresholds) {
  grid.validate();
  std::vector<BetaPoint> out;
  for (double beta : grid.beta_grid) {
    const auto drops = drop_networks(rp, beta, grid.backend());
    for (const auto& t : thresholds) {
      const auto f = fairness_on_drops(
          drops, icic_at(t.alpha, t.tau_db, beta, t.rho_star_db, t.rho_pico_star_db), grid.sim);
      out.push_back({beta, t.alpha, t.tau_db, f.c_log, f.c_sum});
    }
  }
  return out;
}

std::vector<FrontierPoint> percentile_frontier(std::span<const Drop> drops, const GridSpec& grid,
                                               const OptimumThresholds& thresholds) {
  std::vector<FrontierPoint> out;
  for (const auto& t : thresholds) {
    const auto rep = estimate(
        drops, icic_at(t.alpha, t.tau_db, t.beta, t.rho_star_db, t.rho_pico_star_db), grid.backend());
    FrontierPoint p;
    p.alpha = t.alpha;
    p.tau_db = t.tau_db;
    p.se5 = percentile_mc(rep.pooled_all_se, 0.05);
    p.se50 = percentile_mc(rep.pooled_all_se, 0.5);
    out.push_back(p);
  }
  return out;
}

std::vector<FrontierPoint> percentile_frontier(const RadioParams& rp, const GridSpec& grid,
                                               const OptimumThresholds& thresholds) {
  grid.validate();
  const auto drops = drop_networks(rp, grid.reference_beta, grid.backend());
  return percentile_frontier(drops, grid, thresholds);
}

}  // namespace hetnet
