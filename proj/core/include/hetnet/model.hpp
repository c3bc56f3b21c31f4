#pragma once

// System model of the two-tier network: configuration records, the four
// per-UE SIRs, association/scheduling rules and Shannon spectral efficiency.
//
// Units: powers in mW (dBm at the configuration boundary), distances in
// metres, tier intensities in points per km^2.

#include <array>
#include <string_view>

namespace hetnet {

struct RadioParams {
  double p_macro_dbm = 46.0;
  double p_pico_dbm = 30.0;
  double k_macro_db = -11.0;
  double k_pico_db = -11.0;
  double delta = 4.0;             // path-loss exponent
  double lambda_macro = 4.6;      // per km^2
  double lambda_pico = 13.8;      // per km^2
  double lambda_ue = 200.0;       // per km^2
  double d_min_macro = 35.0;      // m
  double d_min_pico = 10.0;       // m

  // Throws std::invalid_argument when an invariant is violated.
  void validate() const;

  friend bool operator==(const RadioParams&, const RadioParams&) = default;
};

struct IcicParams {
  double alpha = 0.5;        // CSF power reduction factor, linear in [0, 1]
  double beta = 0.5;         // USF duty cycle in [0, 1]
  double tau_db = 6.0;       // range expansion bias
  double rho_db = 4.0;       // macro scheduling threshold
  double rho_pico_db = 0.0;  // pico scheduling threshold

  void validate() const;

  friend bool operator==(const IcicParams&, const IcicParams&) = default;
};

// IcicParams with the dB knobs converted once.
struct IcicLinear {
  double alpha;
  double beta;
  double tau;
  double rho;
  double rho_pico;

  static IcicLinear from(const IcicParams& p);
};

enum class UeCategory { UsfMue = 0, CsfMue = 1, UsfPue = 2, CsfPue = 3 };

inline constexpr std::array<UeCategory, 4> kAllCategories = {
    UeCategory::UsfMue, UeCategory::CsfMue, UeCategory::UsfPue,
    UeCategory::CsfPue};

constexpr std::size_t index_of(UeCategory c) { return static_cast<std::size_t>(c); }
constexpr bool is_macro(UeCategory c) {
  return c == UeCategory::UsfMue || c == UeCategory::CsfMue;
}
constexpr bool is_usf(UeCategory c) {
  return c == UeCategory::UsfMue || c == UeCategory::UsfPue;
}

std::string_view to_string(UeCategory c);
// Accepts the names produced by to_string; throws std::invalid_argument otherwise.
UeCategory category_from_string(std::string_view name);

// Fraction of subframes a category is scheduled in: beta for USF, 1-beta for CSF.
double duty_cycle(UeCategory c, double beta);

struct SirSample {
  double gamma = 0.0;           // USF SIR from the nearest macro
  double gamma_pico = 0.0;      // USF SIR from the nearest pico
  double gamma_csf = 0.0;       // CSF SIR from the nearest macro
  double gamma_pico_csf = 0.0;  // CSF SIR from the nearest pico
  UeCategory category = UeCategory::UsfMue;
};

struct EffectivePowers {
  double macro_usf_mw;  // P = P_tx K
  double macro_csf_mw;  // alpha P
  double pico_mw;       // P' = P'_tx K'
};

double db_to_linear(double x_db);
double linear_to_db(double x);

EffectivePowers effective_powers(const RadioParams& rp, const IcicParams& icic);

// SIRs from received macro power S, pico power S' and external interference Z.
// Categories are left unset. Throws std::domain_error on a zero denominator.
SirSample sir_quadruple(double sig_macro, double sig_pico, double z, double alpha);

struct CsfSirs {
  double gamma_csf;
  double gamma_pico_csf;
};

// CSF SIRs expressed through the USF pair (requires gamma * gamma_pico < 1).
CsfSirs csf_sirs_from_usf(double gamma, double gamma_pico, double alpha);

// Cell selection by range-expanded USF SIRs followed by threshold scheduling.
// A tie gamma == tau * gamma_pico goes to the pico tier.
UeCategory classify_ue(double gamma, double gamma_pico, const IcicLinear& icic);
UeCategory classify_ue(double gamma, double gamma_pico, const IcicParams& icic);

double shannon_se(double sir);

}  // namespace hetnet
