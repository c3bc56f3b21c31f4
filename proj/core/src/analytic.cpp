#include "hetnet/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hetnet {

namespace {

constexpr double kPi = std::numbers::pi;
// Lower limit of every SIR axis.
constexpr double kSirFloor = 1e-12;
constexpr double kSirCeil = 1e12;

// pi * l * sqrt(P s) * (pi/2 - atan(d^2 / sqrt(P s))), written with
// atan(sqrt(P s) / d^2) to avoid cancellation when sqrt(P s) << d^2.
double interference_exponent(double intensity, double power, double s, double d) {
  const double ps = power * s;
  if (intensity <= 0.0 || ps <= 0.0) return 0.0;
  const double root = std::sqrt(ps);
  return kPi * intensity * root * std::atan(root / (d * d));
}

}  // namespace

void IntegrationConfig::validate() const {
  if (!(rel_tol > 0) || !(inner_rel_tol > 0) || !(abs_tol > 0)) {
    throw std::invalid_argument("IntegrationConfig: tolerances must be positive");
  }
  if (!(r_trunc_quantile > 0.999 && r_trunc_quantile < 1.0)) {
    throw std::invalid_argument("IntegrationConfig: r_trunc_quantile must lie in (0.999, 1)");
  }
  if (max_subdivisions < 1) {
    throw std::invalid_argument("IntegrationConfig: max_subdivisions must be >= 1");
  }
}

Region region_of(UeCategory c) {
  switch (c) {
    case UeCategory::CsfMue: return Region::R1;
    case UeCategory::UsfMue: return Region::R2;
    case UeCategory::CsfPue: return Region::R3;
    case UeCategory::UsfPue: return Region::R4;
  }
  return Region::R2;
}

UeCategory category_of(Region r) {
  switch (r) {
    case Region::R1: return UeCategory::CsfMue;
    case Region::R2: return UeCategory::UsfMue;
    case Region::R3: return UeCategory::CsfPue;
    case Region::R4: return UeCategory::UsfPue;
  }
  return UeCategory::UsfMue;
}

// Quantities that depend only on the serving distances.
struct AnalyticEngine::Geometry {
  double r;
  double r_pico;
  double r4;
  double r_pico4;
  double k;            // (P'/P) (r/r')^4
  double a_tilde;      // k / (1 + k)
  double one_minus_a;  // 1 / (1 + k)
  double big_b;
};

AnalyticEngine::AnalyticEngine(const RadioParams& rp, const IcicParams& icic,
                               const IntegrationConfig& cfg)
    : rp_(rp), icic_(icic), lin_(IcicLinear::from(icic)), cfg_(cfg) {
  rp_.validate();
  icic_.validate();
  cfg_.validate();
  if (rp_.delta != 4.0) {
    throw std::invalid_argument(
        "analytic engine requires path-loss exponent 4 (closed forms assume delta = 4)");
  }
  const auto pw = effective_powers(rp_, icic_);
  p_ = pw.macro_usf_mw;
  p_pico_ = pw.pico_mw;
  lam_ = rp_.lambda_macro * 1e-6;
  lam_pico_ = rp_.lambda_pico * 1e-6;
  mu_tilde_ = 1.0 / (1.0 + (lam_pico_ / lam_) * std::sqrt(p_pico_ / p_));
  u_lo_ = 1.0 - cfg_.r_trunc_quantile;
}

AnalyticEngine::Geometry AnalyticEngine::geometry(double r, double r_pico) const {
  if (!(r > 0.0) || !(r_pico > 0.0)) {
    throw std::domain_error("serving distances must be positive");
  }
  Geometry g{};
  g.r = r;
  g.r_pico = r_pico;
  g.r4 = r * r * r * r;
  g.r_pico4 = r_pico * r_pico * r_pico * r_pico;
  g.k = (p_pico_ / p_) * (g.r4 / g.r_pico4);
  g.a_tilde = g.k / (1.0 + g.k);
  g.one_minus_a = 1.0 / (1.0 + g.k);
  g.big_b = kPi * r * r * (lam_ * std::sqrt(p_) + lam_pico_ * std::sqrt(p_pico_)) /
            std::sqrt(p_ * g.a_tilde);
  return g;
}

double AnalyticEngine::laplace_z(double s, double r, double r_pico) const {
  if (s < 0.0 || std::isnan(s)) throw std::domain_error("laplace_z: s must be >= 0");
  const double e = interference_exponent(lin_.beta * lam_, p_, s, r) +
                   interference_exponent((1.0 - lin_.beta) * lam_, lin_.alpha * p_, s, r) +
                   interference_exponent(lam_pico_, p_pico_, s, r_pico);
  return std::exp(-e);
}

double AnalyticEngine::jccdf_cond(double g, double gp, double r, double r_pico) const {
  if (!(r > 0.0) || !(r_pico > 0.0)) {
    throw std::domain_error("jccdf_cond: serving distances must be positive");
  }
  if (g < 0.0 || gp < 0.0) throw std::domain_error("jccdf_cond: SIR thresholds must be >= 0");
  const double d = 1.0 - g * gp;
  if (d <= 0.0) return 0.0;
  const double r4 = std::pow(r, 4);
  const double rp4 = std::pow(r_pico, 4);
  const double ratio = (p_pico_ / p_) * (r4 / rp4);
  const double m1 = d / ((1.0 + g * ratio) * (1.0 + gp / ratio));
  const double s = (g * (1.0 + gp) * r4 / p_ + gp * (1.0 + g) * rp4 / p_pico_) / d;
  return m1 * laplace_z(s, r, r_pico);
}

namespace {

struct Terms {
  double c, h, m1, m2, lnm2;
  double dm1_dg, dm1_dgp, dc_dg, dc_dgp, d2c, dh_dc;
};

}  // namespace

JpdfIntermediates AnalyticEngine::intermediates(double g, double gp, double r,
                                                double r_pico) const {
  if (!(g > 0.0) || !(gp > 0.0) || g * gp >= 1.0) {
    throw std::domain_error("intermediates: requires g, gp > 0 and g * gp < 1");
  }
  const Geometry geo = geometry(r, r_pico);
  const double a = geo.a_tilde;
  const double b1 = geo.one_minus_a;
  const double mu = mu_tilde_;
  const double al = lin_.alpha;
  const double be = lin_.beta;
  const double bb = geo.big_b;
  const double d = 1.0 - g * gp;
  const double c2 = (g * (1.0 + gp) * a + gp * (1.0 + g) * b1) / d;
  const double c = std::sqrt(c2);
  const double sa = std::sqrt(a);
  const double sb = std::sqrt(b1);
  const double sal = std::sqrt(al);

  const double lnm2 = -bb * c *
                      (be * mu * std::atan(c / sa) + (1.0 - be) * mu * sal * std::atan(c * sal / sa) +
                       (1.0 - mu) * std::atan(c / sb));
  JpdfIntermediates out{};
  out.a_tilde = a;
  out.mu_tilde = mu;
  out.big_b = bb;
  out.c = c;
  out.m2 = std::exp(lnm2);
  out.m1 = d / ((1.0 + g * geo.k) * (1.0 + gp / geo.k));
  out.h = lnm2 / c - bb * c *
                         (be * mu * sa / (c2 + a) + (1.0 - be) * mu * al * sa / (c2 * al + a) +
                          (1.0 - mu) * sb / (c2 + b1));
  out.dm1_dgamma = -a * b1 / ((b1 + g * a) * (b1 + g * a));
  out.dm1_dgamma_pico = -a * b1 / ((a + gp * b1) * (a + gp * b1));
  // dc/dg = (c - gp (1-a)/c) / (2 g d), rearranged to avoid cancellation at small g.
  out.dc_dgamma = (1.0 + gp) * (a + gp * b1) / (2.0 * c * d * d);
  out.dc_dgamma_pico = (1.0 + g) * (b1 + g * a) / (2.0 * c * d * d);
  out.d2c_dgamma_dgamma_pico = (3.0 * c + 1.0 / c - a * b1 / (c * c2)) / (4.0 * d * d);
  const double ta = a * sa;
  const double tb = b1 * sb;
  out.dh_dc = -2.0 * bb *
              (be * mu * ta / ((c2 + a) * (c2 + a)) +
               (1.0 - be) * mu * ta * al / ((c2 * al + a) * (c2 * al + a)) +
               (1.0 - mu) * tb / ((c2 + b1) * (c2 + b1)));
  return out;
}

namespace {

// Shared evaluation of c, M1, M2, h and their partials for one geometry.
struct PartialInputs {
  double a, b1, k, bb, mu, al, be;
};

inline Terms eval_terms(double g, double gp, const PartialInputs& in, bool second_order) {
  Terms t{};
  const double a = in.a;
  const double b1 = in.b1;
  const double d = 1.0 - g * gp;
  const double c2 = (g * (1.0 + gp) * a + gp * (1.0 + g) * b1) / d;
  const double c = std::sqrt(c2);
  const double sa = std::sqrt(a);
  const double sb = std::sqrt(b1);
  const double sal = std::sqrt(in.al);
  const double w_usf = in.be * in.mu;
  const double w_csf = (1.0 - in.be) * in.mu;
  const double w_pico = 1.0 - in.mu;
  // ln M2 / c, kept finite as c -> 0.
  const double lnm2_over_c =
      -in.bb * (w_usf * std::atan(c / sa) + w_csf * sal * std::atan(c * sal / sa) +
                w_pico * std::atan(c / sb));
  t.c = c;
  t.lnm2 = lnm2_over_c * c;
  t.m2 = std::exp(t.lnm2);
  t.m1 = d / ((1.0 + g * in.k) * (1.0 + gp / in.k));
  t.h = lnm2_over_c - in.bb * c *
                          (w_usf * sa / (c2 + a) + w_csf * in.al * sa / (c2 * in.al + a) +
                           w_pico * sb / (c2 + b1));
  t.dm1_dg = -a * b1 / ((b1 + g * a) * (b1 + g * a));
  t.dm1_dgp = -a * b1 / ((a + gp * b1) * (a + gp * b1));
  t.dc_dg = (1.0 + gp) * (a + gp * b1) / (2.0 * c * d * d);
  t.dc_dgp = (1.0 + g) * (b1 + g * a) / (2.0 * c * d * d);
  if (second_order) {
    t.d2c = (3.0 * c + 1.0 / c - a * b1 / (c * c2)) / (4.0 * d * d);
    const double ta = a * sa;
    const double tb = b1 * sb;
    t.dh_dc = -2.0 * in.bb *
              (w_usf * ta / ((c2 + a) * (c2 + a)) +
               w_csf * ta * in.al / ((c2 * in.al + a) * (c2 * in.al + a)) +
               w_pico * tb / ((c2 + b1) * (c2 + b1)));
  }
  return t;
}

}  // namespace

double AnalyticEngine::jpdf_cond(double g, double gp, const Geometry& geo) const {
  if (!(g > 0.0) || !(gp > 0.0) || g * gp >= 1.0) return 0.0;
  const PartialInputs in{geo.a_tilde, geo.one_minus_a, geo.k, geo.big_b,
                         mu_tilde_,   lin_.alpha,      lin_.beta};
  const Terms t = eval_terms(g, gp, in, true);
  if (t.m2 == 0.0) return 0.0;
  return t.m2 * t.h * (t.dm1_dg * t.dc_dgp + t.dm1_dgp * t.dc_dg + t.d2c * t.m1) +
         t.m1 * t.m2 * t.dc_dg * t.dc_dgp * (t.h * t.h + t.dh_dc);
}

double AnalyticEngine::dgamma(double g, double gp, const Geometry& geo) const {
  if (g * gp >= 1.0) return 0.0;
  const PartialInputs in{geo.a_tilde, geo.one_minus_a, geo.k, geo.big_b,
                         mu_tilde_,   lin_.alpha,      lin_.beta};
  const Terms t = eval_terms(g, gp, in, false);
  return t.m2 * (t.dm1_dg + t.m1 * t.h * t.dc_dg);
}

double AnalyticEngine::dgamma_pico(double g, double gp, const Geometry& geo) const {
  if (g * gp >= 1.0) return 0.0;
  const PartialInputs in{geo.a_tilde, geo.one_minus_a, geo.k, geo.big_b,
                         mu_tilde_,   lin_.alpha,      lin_.beta};
  const Terms t = eval_terms(g, gp, in, false);
  return t.m2 * (t.dm1_dgp + t.m1 * t.h * t.dc_dgp);
}

double AnalyticEngine::jpdf_cond(double g, double gp, double r, double r_pico) const {
  return jpdf_cond(g, gp, geometry(r, r_pico));
}

double AnalyticEngine::jccdf_dgamma(double g, double gp, double r, double r_pico) const {
  if (!(g > 0.0) || gp < 0.0) throw std::domain_error("jccdf_dgamma: requires g > 0, gp >= 0");
  return dgamma(g, gp, geometry(r, r_pico));
}

double AnalyticEngine::jccdf_dgamma_pico(double g, double gp, double r, double r_pico) const {
  if (g < 0.0 || !(gp > 0.0)) throw std::domain_error("jccdf_dgamma_pico: requires g >= 0, gp > 0");
  return dgamma_pico(g, gp, geometry(r, r_pico));
}

double AnalyticEngine::r_of_u(double u) const {
  return std::sqrt(rp_.d_min_macro * rp_.d_min_macro - std::log(u) / (kPi * lam_));
}

double AnalyticEngine::r_pico_of_u(double u) const {
  return std::sqrt(rp_.d_min_pico * rp_.d_min_pico - std::log(u) / (kPi * lam_pico_));
}

// Integrates conditional(geometry) against the nearest-BS distance laws of both
// tiers. With u = P{R > r | R >= d_min} the weight f_R(r) dr becomes du, and
// truncating u at 1 - q drops exactly 1 - q of the tail mass of each axis.
template <class F>
double AnalyticEngine::over_distances(F&& conditional) const {
  const QuadOptions outer{cfg_.rel_tol, cfg_.abs_tol, cfg_.max_subdivisions};
  auto over_pico = [&](double u) {
    const double r = r_of_u(u);
    auto inner = [&](double v) { return conditional(geometry(r, r_pico_of_u(v))); };
    return integrate_or_throw(inner, u_lo_, 1.0, outer, "distance quadrature (pico)");
  };
  return integrate_or_throw(over_pico, u_lo_, 1.0, outer, "distance quadrature (macro)");
}

double AnalyticEngine::jpdf_uncond(double g, double gp) const {
  if (!(g > 0.0) || !(gp > 0.0) || g * gp >= 1.0) return 0.0;
  return over_distances([&](const Geometry& geo) { return jpdf_cond(g, gp, geo); });
}

namespace {

// Integrates f over [lo, hi] on a logarithmic axis, splitting at the given
// breakpoints that fall inside the interval.
template <class F>
double integrate_log_axis(F&& f, double lo, double hi, std::initializer_list<double> breaks,
                          const QuadOptions& opt, const char* where) {
  if (!(hi > lo) || !(lo > 0.0)) return 0.0;
  double pts[8];
  int n = 0;
  pts[n++] = std::log(lo);
  std::vector<double> inner;
  for (double b : breaks) {
    if (b > lo && b < hi) inner.push_back(std::log(b));
  }
  std::sort(inner.begin(), inner.end());
  for (double b : inner) pts[n++] = b;
  pts[n++] = std::log(hi);
  auto in_log = [&](double t) {
    const double s = std::exp(t);
    return f(s) * s;
  };
  double total = 0.0;
  for (int i = 0; i + 1 < n; ++i) {
    total += integrate_or_throw(in_log, pts[i], pts[i + 1], opt, where);
  }
  return total;
}

}  // namespace

double AnalyticEngine::region_integral(const Integrand2& gfun, Region region) const {
  const QuadOptions inner{cfg_.inner_rel_tol, cfg_.abs_tol, cfg_.max_subdivisions};
  const double tau = lin_.tau;
  const bool macro = region == Region::R1 || region == Region::R2;
  double lo = kSirFloor;
  double hi = kSirCeil;
  switch (region) {
    case Region::R1: lo = std::max(lin_.rho, kSirFloor); break;
    case Region::R2: hi = std::min(lin_.rho, kSirCeil); break;
    case Region::R3: hi = std::min(lin_.rho_pico, kSirCeil); break;
    case Region::R4: lo = std::max(lin_.rho_pico, kSirFloor); break;
  }
  const double kink = macro ? std::sqrt(tau) : 1.0 / std::sqrt(tau);

  return over_distances([&](const Geometry& geo) {
    auto outer_axis = [&](double s) {
      const double bound = macro ? std::min(1.0 / s, s / tau) : std::min(tau * s, 1.0 / s);
      if (bound <= kSirFloor) return 0.0;
      auto inner_axis = [&](double t) {
        return macro ? gfun(s, t) * jpdf_cond(s, t, geo) : gfun(t, s) * jpdf_cond(t, s, geo);
      };
      return integrate_log_axis(inner_axis, kSirFloor, bound, {}, inner, "SIR quadrature (inner)");
    };
    return integrate_log_axis(outer_axis, lo, hi, {kink}, inner, "SIR quadrature (outer)");
  });
}

double AnalyticEngine::region_integral_outer(const Integrand1& gfun, Region region,
                                             double outer_hi, const Integrand1& inner_cap) const {
  const QuadOptions inner{cfg_.inner_rel_tol, cfg_.abs_tol, cfg_.max_subdivisions};
  const double tau = lin_.tau;
  const bool macro = region == Region::R1 || region == Region::R2;
  double lo = kSirFloor;
  double hi = kSirCeil;
  switch (region) {
    case Region::R1: lo = std::max(lin_.rho, kSirFloor); break;
    case Region::R2: hi = std::min(lin_.rho, kSirCeil); break;
    case Region::R3: hi = std::min(lin_.rho_pico, kSirCeil); break;
    case Region::R4: lo = std::max(lin_.rho_pico, kSirFloor); break;
  }
  hi = std::min(hi, outer_hi);
  if (!(hi > lo)) return 0.0;
  const double kink = macro ? std::sqrt(tau) : 1.0 / std::sqrt(tau);

  return over_distances([&](const Geometry& geo) {
    // Conditional tail of the outer SIR: P{S > s | r, r'} = jccdf at (s, 0) or (0, s).
    double upper = hi;
    if (std::isinf(hi) || hi > 1e3) {
      auto tail = [&](double s) {
        const double m1 = macro ? 1.0 / (1.0 + s * geo.k) : 1.0 / (1.0 + s / geo.k);
        const double sv = macro ? s * geo.r4 / p_ : s * geo.r_pico4 / p_pico_;
        return m1 * laplace_z(sv, geo.r, geo.r_pico) * (1.0 + std::log2(1.0 + s));
      };
      double s = std::max(lo, 1.0);
      while (s < upper && tail(s) > 1e-16) s *= 4.0;
      upper = std::min(upper, s);
    }
    auto outer_axis = [&](double s) {
      double bound = macro ? std::min(1.0 / s, s / tau) : std::min(tau * s, 1.0 / s);
      if (inner_cap) bound = std::min(bound, inner_cap(s));
      if (!(bound > 0.0)) return 0.0;
      const double mass = macro ? dgamma(s, bound, geo) - dgamma(s, 0.0, geo)
                                : dgamma_pico(bound, s, geo) - dgamma_pico(0.0, s, geo);
      return gfun(s) * mass;
    };
    return integrate_log_axis(outer_axis, lo, upper, {kink}, inner, "SIR quadrature (outer)");
  });
}

PerCategory<double> AnalyticEngine::category_probabilities() const {
  PerCategory<double> p;
  const Integrand1 one = [](double) { return 1.0; };
  for (auto c : kAllCategories) p[c] = region_integral_outer(one, region_of(c));
  return p;
}

PerCategory<double> AnalyticEngine::mean_counts(const PerCategory<double>& prob) const {
  PerCategory<double> n;
  for (auto c : kAllCategories) {
    const double tier = is_macro(c) ? rp_.lambda_macro : rp_.lambda_pico;
    n[c] = prob[c] * rp_.lambda_ue / tier;
  }
  return n;
}

PerCategory<double> AnalyticEngine::mean_counts() const {
  return mean_counts(category_probabilities());
}

AnalyticEngine::SeReport AnalyticEngine::se_report() const {
  SeReport rep;
  rep.probability = category_probabilities();
  rep.mean_count = mean_counts(rep.probability);
  const double alpha = lin_.alpha;
  for (auto c : kAllCategories) {
    const double p = rep.probability[c];
    if (!(p >= kMinCategoryProbability)) continue;
    const double duty = duty_cycle(c, lin_.beta);
    double g = 0.0;
    if (duty > 0.0) {
      switch (c) {
        case UeCategory::UsfMue:
          g = region_integral_outer([](double s) { return std::log2(1.0 + s); }, Region::R2);
          break;
        case UeCategory::CsfMue:
          if (alpha > 0.0) {
            g = region_integral_outer([alpha](double s) { return std::log2(1.0 + alpha * s); },
                                      Region::R1);
          }
          break;
        case UeCategory::UsfPue:
          g = region_integral_outer([](double s) { return std::log2(1.0 + s); }, Region::R4);
          break;
        case UeCategory::CsfPue:
          g = region_integral(
              [alpha](double gm, double gpv) {
                return std::log2(1.0 + csf_sirs_from_usf(gm, gpv, alpha).gamma_pico_csf);
              },
              Region::R3);
          break;
      }
    }
    const double agg = duty * g / p;
    rep.aggregate[c] = agg;
    rep.per_user[c] = agg / rep.mean_count[c];
  }
  return rep;
}

PerCategory<std::optional<double>> AnalyticEngine::aggregate_se() const {
  return se_report().aggregate;
}

PerCategory<std::optional<double>> AnalyticEngine::per_user_se() const {
  return se_report().per_user;
}

double AnalyticEngine::throughput_cdf(UeCategory cat, double c) const {
  const Integrand1 one = [](double) { return 1.0; };
  return throughput_cdf(cat, c, region_integral_outer(one, region_of(cat)));
}

double AnalyticEngine::throughput_cdf(UeCategory cat, double c, double prob) const {
  if (!(prob >= kMinCategoryProbability)) return std::numeric_limits<double>::quiet_NaN();
  if (cat == UeCategory::CsfMue && lin_.alpha == 0.0) return c >= 0.0 ? 1.0 : 0.0;
  if (!(c > 0.0)) return 0.0;
  const double x = std::expm1(c * std::numbers::ln2);
  const Integrand1 one = [](double) { return 1.0; };
  double mass = 0.0;
  switch (cat) {
    case UeCategory::UsfMue: mass = region_integral_outer(one, Region::R2, x); break;
    case UeCategory::CsfMue: mass = region_integral_outer(one, Region::R1, x / lin_.alpha); break;
    case UeCategory::UsfPue: mass = region_integral_outer(one, Region::R4, x); break;
    case UeCategory::CsfPue: {
      // Gamma'_csf grows with gamma for fixed gamma', from gamma' at gamma = 0
      // towards gamma' / a when a = alpha (1 + gamma') - gamma' > 0.
      const double alpha = lin_.alpha;
      const Integrand1 cap = [x, alpha](double gp) {
        if (x < gp) return 0.0;
        const double a = alpha * (1.0 + gp) - gp;
        const double den = gp - x * a;
        if (den <= 0.0) return std::numeric_limits<double>::infinity();
        return (x - gp) / den;
      };
      mass = region_integral_outer(one, Region::R3, std::numeric_limits<double>::infinity(), cap);
      break;
    }
  }
  return std::clamp(mass / prob, 0.0, 1.0);
}

PercentileResult AnalyticEngine::percentile(UeCategory cat, double q) const {
  if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("percentile: q must lie in (0, 1)");
  const Integrand1 one = [](double) { return 1.0; };
  const double prob = region_integral_outer(one, region_of(cat));
  PercentileResult res;
  if (!(prob >= kMinCategoryProbability)) {
    res.converged = false;
    res.value = res.lo = res.hi = std::numeric_limits<double>::quiet_NaN();
    return res;
  }
  auto cdf = [&](double c) { return throughput_cdf(cat, c, prob); };
  double lo = 0.0;
  double hi = 0.0;
  if (cat == UeCategory::UsfMue) {
    hi = std::log2(1.0 + lin_.rho);
  } else {
    hi = 1.0;
    while (cdf(hi) < q && hi < 64.0) {
      lo = hi;
      hi *= 2.0;
    }
  }
  if (cdf(lo) >= q) {
    res.value = res.lo = res.hi = lo;
    return res;
  }
  if (cdf(hi) < q) {
    res.converged = false;
    res.lo = lo;
    res.hi = hi;
    res.value = hi;
    return res;
  }
  while (hi - lo > 1e-4) {
    const double mid = 0.5 * (lo + hi);
    if (cdf(mid) >= q) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  res.lo = lo;
  res.hi = hi;
  res.value = 0.5 * (lo + hi);
  return res;
}

double laplace_z(double s, double r, double r_pico, const RadioParams& rp,
                 const IcicParams& icic) {
  return AnalyticEngine(rp, icic).laplace_z(s, r, r_pico);
}

double jccdf_cond(double g, double gp, double r, double r_pico, const RadioParams& rp,
                  const IcicParams& icic) {
  return AnalyticEngine(rp, icic).jccdf_cond(g, gp, r, r_pico);
}

double jpdf_cond(double g, double gp, double r, double r_pico, const RadioParams& rp,
                 const IcicParams& icic) {
  return AnalyticEngine(rp, icic).jpdf_cond(g, gp, r, r_pico);
}

double jpdf_uncond(double g, double gp, const RadioParams& rp, const IcicParams& icic,
                   const IntegrationConfig& cfg) {
  return AnalyticEngine(rp, icic, cfg).jpdf_uncond(g, gp);
}

PerCategory<double> category_probabilities(const RadioParams& rp, const IcicParams& icic,
                                           const IntegrationConfig& cfg) {
  return AnalyticEngine(rp, icic, cfg).category_probabilities();
}

PerCategory<double> mean_counts(const RadioParams& rp, const IcicParams& icic,
                                const IntegrationConfig& cfg) {
  return AnalyticEngine(rp, icic, cfg).mean_counts();
}

PerCategory<std::optional<double>> per_user_se(const RadioParams& rp, const IcicParams& icic,
                                               const IntegrationConfig& cfg) {
  return AnalyticEngine(rp, icic, cfg).per_user_se();
}

double throughput_cdf(UeCategory cat, double c, const RadioParams& rp,
                      const IcicParams& icic, const IntegrationConfig& cfg) {
  return AnalyticEngine(rp, icic, cfg).throughput_cdf(cat, c);
}

PercentileResult percentile(UeCategory cat, double q, const RadioParams& rp,
                            const IcicParams& icic, const IntegrationConfig& cfg) {
  return AnalyticEngine(rp, icic, cfg).percentile(cat, q);
}

}  // namespace hetnet
