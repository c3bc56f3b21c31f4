#include "hetnet/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hetnet {

void RadioParams::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("RadioParams: ") + what);
  };
  require(std::isfinite(p_macro_dbm) && std::isfinite(p_pico_dbm),
          "transmit powers must be finite");
  require(std::isfinite(k_macro_db) && std::isfinite(k_pico_db),
          "geometry factors must be finite");
  require(delta > 2.0 && std::isfinite(delta), "path-loss exponent must exceed 2");
  require(lambda_macro > 0 && lambda_pico > 0 && lambda_ue > 0,
          "intensities must be positive");
  require(d_min_macro >= 0 && d_min_pico >= 0, "minimum distances must be >= 0");
}

void IcicParams::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("IcicParams: ") + what);
  };
  require(alpha >= 0.0 && alpha <= 1.0, "alpha must lie in [0, 1]");
  require(beta >= 0.0 && beta <= 1.0, "beta must lie in [0, 1]");
  require(std::isfinite(tau_db), "tau must be finite");
  require(!std::isnan(rho_db) && !std::isnan(rho_pico_db),
          "scheduling thresholds must not be NaN");
}

IcicLinear IcicLinear::from(const IcicParams& p) {
  return {p.alpha, p.beta, db_to_linear(p.tau_db), db_to_linear(p.rho_db),
          db_to_linear(p.rho_pico_db)};
}

std::string_view to_string(UeCategory c) {
  switch (c) {
    case UeCategory::UsfMue: return "usf_mue";
    case UeCategory::CsfMue: return "csf_mue";
    case UeCategory::UsfPue: return "usf_pue";
    case UeCategory::CsfPue: return "csf_pue";
  }
  return "unknown";
}

UeCategory category_from_string(std::string_view name) {
  for (auto c : kAllCategories) {
    if (to_string(c) == name) return c;
  }
  throw std::invalid_argument("unknown UE category '" + std::string(name) + "'");
}

double duty_cycle(UeCategory c, double beta) { return is_usf(c) ? beta : 1.0 - beta; }

double db_to_linear(double x_db) { return std::pow(10.0, x_db / 10.0); }

double linear_to_db(double x) { return 10.0 * std::log10(x); }

EffectivePowers effective_powers(const RadioParams& rp, const IcicParams& icic) {
  const double p = db_to_linear(rp.p_macro_dbm + rp.k_macro_db);
  const double p_pico = db_to_linear(rp.p_pico_dbm + rp.k_pico_db);
  return {p, icic.alpha * p, p_pico};
}

SirSample sir_quadruple(double sig_macro, double sig_pico, double z, double alpha) {
  if (sig_macro < 0 || sig_pico < 0 || z < 0 || alpha < 0) {
    throw std::domain_error("sir_quadruple: negative input");
  }
  const double den_macro = sig_pico + z;
  const double den_pico = sig_macro + z;
  const double den_pico_csf = alpha * sig_macro + z;
  if (den_macro <= 0 || den_pico <= 0 || den_pico_csf <= 0) {
    throw std::domain_error("sir_quadruple: zero denominator");
  }
  SirSample s;
  s.gamma = sig_macro / den_macro;
  s.gamma_pico = sig_pico / den_pico;
  s.gamma_csf = alpha * sig_macro / den_macro;
  s.gamma_pico_csf = sig_pico / den_pico_csf;
  return s;
}

CsfSirs csf_sirs_from_usf(double gamma, double gamma_pico, double alpha) {
  const double den = 1.0 + gamma * (alpha * (gamma_pico + 1.0) - gamma_pico);
  if (!(den > 0.0)) {
    throw std::domain_error("csf_sirs_from_usf: requires gamma * gamma_pico < 1");
  }
  return {alpha * gamma, gamma_pico * (1.0 + gamma) / den};
}

UeCategory classify_ue(double gamma, double gamma_pico, const IcicLinear& icic) {
  if (gamma > icic.tau * gamma_pico) {
    return gamma <= icic.rho ? UeCategory::UsfMue : UeCategory::CsfMue;
  }
  return gamma_pico > icic.rho_pico ? UeCategory::UsfPue : UeCategory::CsfPue;
}

UeCategory classify_ue(double gamma, double gamma_pico, const IcicParams& icic) {
  return classify_ue(gamma, gamma_pico, IcicLinear::from(icic));
}

double shannon_se(double sir) { return std::log2(1.0 + sir); }

}  // namespace hetnet
