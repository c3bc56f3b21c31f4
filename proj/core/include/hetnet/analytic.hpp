#pragma once

// Stochastic-geometry evaluation of the joint distribution of the USF SIR
// pair (Gamma, Gamma') for PPP tiers with Rayleigh fading and path-loss
// exponent 4, and the capacity metrics derived from it.
//
// The distance to the serving macro (pico) BS is integrated against the
// nearest-neighbour law of the tier restricted to r >= d_min, renormalised so
// that the SIR law describes the UEs that are actually served.

#include <array>
#include <functional>
#include <limits>
#include <optional>

#include "hetnet/model.hpp"
#include "hetnet/quadrature.hpp"

namespace hetnet {

struct IntegrationConfig {
  double rel_tol = 1e-3;        // outer (r, r') axes
  double inner_rel_tol = 1e-5;  // SIR axes
  double abs_tol = 1e-10;
  double r_trunc_quantile = 0.99999;
  std::size_t max_subdivisions = 400;

  void validate() const;

  friend bool operator==(const IntegrationConfig&, const IntegrationConfig&) = default;
};

// Integration regions in the (gamma, gamma') plane.
//   R1: CSF-MUE   gamma > rho,   gamma' < min(1/gamma, gamma/tau)
//   R2: USF-MUE   gamma <= rho,  gamma' < min(1/gamma, gamma/tau)
//   R3: CSF-PUE   gamma' <= rho', gamma < min(tau gamma', 1/gamma')
//   R4: USF-PUE   gamma' > rho',  gamma < min(tau gamma', 1/gamma')
enum class Region { R1, R2, R3, R4 };

Region region_of(UeCategory c);
UeCategory category_of(Region r);

// Closed-form building blocks of the conditional density (delta = 4).
struct JpdfIntermediates {
  double a_tilde;   // 1 / (1 + (P/P')(r'/r)^4)
  double mu_tilde;  // 1 / (1 + (lambda'/lambda) sqrt(P'/P))
  double big_b;     // pi r^2 (lambda sqrt(P) + lambda' sqrt(P')) / sqrt(P a_tilde)
  double c;
  double h;         // d ln M2 / dc
  double m1;
  double m2;
  double dm1_dgamma;
  double dm1_dgamma_pico;
  double dc_dgamma;
  double dc_dgamma_pico;
  double d2c_dgamma_dgamma_pico;
  double dh_dc;
};

template <class T>
struct PerCategory {
  std::array<T, 4> values{};

  T& operator[](UeCategory c) { return values[index_of(c)]; }
  const T& operator[](UeCategory c) const { return values[index_of(c)]; }
};

struct PercentileResult {
  double value = 0.0;  // bps/Hz
  double lo = 0.0;     // final bracket
  double hi = 0.0;
  bool converged = true;
};

class AnalyticEngine {
 public:
  // Throws std::invalid_argument for delta != 4 or invalid parameters.
  AnalyticEngine(const RadioParams& rp, const IcicParams& icic,
                 const IntegrationConfig& cfg = {});

  const RadioParams& radio() const { return rp_; }
  const IcicParams& icic() const { return icic_; }
  const IntegrationConfig& config() const { return cfg_; }

  // Laplace transform of the out-of-cell interference; r, r_pico in metres and
  // s in 1/mW. Throws std::domain_error for s < 0.
  double laplace_z(double s, double r, double r_pico) const;

  // P{Gamma > g, Gamma' > gp | R = r, R' = r_pico}.
  double jccdf_cond(double g, double gp, double r, double r_pico) const;

  JpdfIntermediates intermediates(double g, double gp, double r, double r_pico) const;

  // Mixed partial of jccdf_cond; zero outside g * gp < 1.
  double jpdf_cond(double g, double gp, double r, double r_pico) const;

  // First partials of jccdf_cond in g and in gp.
  double jccdf_dgamma(double g, double gp, double r, double r_pico) const;
  double jccdf_dgamma_pico(double g, double gp, double r, double r_pico) const;

  // Unconditional density of (Gamma, Gamma').
  double jpdf_uncond(double g, double gp) const;

  // Integral of g * jpdf over a region by nested quadrature of jpdf_cond.
  using Integrand2 = std::function<double(double, double)>;
  double region_integral(const Integrand2& g, Region region) const;

  // Integral of g(s) * jpdf over a region where s is the region's outer SIR
  // (gamma for R1/R2, gamma' for R3/R4). The inner SIR axis is integrated in
  // closed form through the first partials of the JCCDF. An optional
  // inner_cap(s) further truncates the inner axis from above.
  using Integrand1 = std::function<double(double)>;
  double region_integral_outer(const Integrand1& g, Region region,
                               double outer_hi = std::numeric_limits<double>::infinity(),
                               const Integrand1& inner_cap = {}) const;

  PerCategory<double> category_probabilities() const;
  PerCategory<double> mean_counts() const;
  PerCategory<double> mean_counts(const PerCategory<double>& probabilities) const;

  // duty * E[log2(1 + SIR) | category]: the per-cell aggregate SE of a category.
  PerCategory<std::optional<double>> aggregate_se() const;
  // Aggregate SE divided by the mean number of UEs of the category per cell.
  PerCategory<std::optional<double>> per_user_se() const;

  struct SeReport {
    PerCategory<double> probability;
    PerCategory<double> mean_count;
    PerCategory<std::optional<double>> aggregate;
    PerCategory<std::optional<double>> per_user;
  };
  SeReport se_report() const;

  // P{log2(1 + SIR_cat) <= c | category}.
  double throughput_cdf(UeCategory cat, double c) const;
  double throughput_cdf(UeCategory cat, double c, double category_probability) const;

  // Smallest c with throughput_cdf(c) >= q, by bisection to 1e-4 bps/Hz.
  PercentileResult percentile(UeCategory cat, double q) const;

  // Probability floor below which per-user SE is reported undefined.
  static constexpr double kMinCategoryProbability = 1e-9;

 private:
  struct Geometry;
  Geometry geometry(double r, double r_pico) const;
  double jpdf_cond(double g, double gp, const Geometry& geo) const;
  double dgamma(double g, double gp, const Geometry& geo) const;
  double dgamma_pico(double g, double gp, const Geometry& geo) const;
  double r_of_u(double u) const;
  double r_pico_of_u(double u) const;
  template <class F>
  double over_distances(F&& conditional) const;

  RadioParams rp_;
  IcicParams icic_;
  IcicLinear lin_;
  IntegrationConfig cfg_;
  double p_ = 0, p_pico_ = 0;           // mW
  double lam_ = 0, lam_pico_ = 0;       // per m^2
  double mu_tilde_ = 0;
  double u_lo_ = 0;                     // lower limit of the u = P{R > r | R >= d_min} axis
};

// Free-function forms.
double laplace_z(double s, double r, double r_pico, const RadioParams& rp,
                 const IcicParams& icic);
double jccdf_cond(double g, double gp, double r, double r_pico, const RadioParams& rp,
                  const IcicParams& icic);
double jpdf_cond(double g, double gp, double r, double r_pico, const RadioParams& rp,
                 const IcicParams& icic);
double jpdf_uncond(double g, double gp, const RadioParams& rp, const IcicParams& icic,
                   const IntegrationConfig& cfg = {});
PerCategory<double> category_probabilities(const RadioParams& rp, const IcicParams& icic,
                                           const IntegrationConfig& cfg = {});
PerCategory<double> mean_counts(const RadioParams& rp, const IcicParams& icic,
                                const IntegrationConfig& cfg = {});
PerCategory<std::optional<double>> per_user_se(const RadioParams& rp, const IcicParams& icic,
                                               const IntegrationConfig& cfg = {});
double throughput_cdf(UeCategory cat, double c, const RadioParams& rp,
                      const IcicParams& icic, const IntegrationConfig& cfg = {});
PercentileResult percentile(UeCategory cat, double q, const RadioParams& rp,
                            const IcicParams& icic, const IntegrationConfig& cfg = {});

}  // namespace hetnet
