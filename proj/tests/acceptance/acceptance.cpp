// Acceptance checks 1-9. Prints detail lines and one "criterion N: PASS|FAIL"
// line per criterion; exits nonzero if any criterion fails.
//
//   hetnet_acceptance [N ...]   run only the listed criteria

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hetnet/analytic.hpp"
#include "hetnet/config.hpp"
#include "hetnet/optimizer.hpp"
#include "hetnet/report.hpp"
#include "hetnet/simulation.hpp"

using namespace hetnet;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void note(const char* fmt, auto... args) {
  std::printf("    ");
  std::printf(fmt, args...);
  std::printf("\n");
  std::fflush(stdout);
}

const char* name(UeCategory c) {
  static const char* n[] = {"usf_mue", "csf_mue", "usf_pue", "csf_pue"};
  return n[index_of(c)];
}

IcicParams icic_at(double tau_db, double alpha) {
  IcicParams p;
  p.tau_db = tau_db;
  p.alpha = alpha;
  return p;
}

// ---------------------------------------------------------------------------
// Shared default-parameter data: the analytic grid and 50 Monte Carlo trials on the
// same (tau, alpha) points. Built once, used by criteria 3, 4, 5, 7, 9.

const std::vector<double> kTau = {0.0, 6.0, 12.0};
const std::vector<double> kAlpha = {0.0, 0.25, 0.5, 1.0};

struct SharedRuns {
  std::map<std::pair<double, double>, AnalyticEngine::SeReport> analytic;
  std::map<std::pair<double, double>, CapacityReport> mc;
  CapacityReport base;  // tau = 6, alpha = 0.5 (default settings)
  SimConfig sim;
  double analytic_s = 0.0, mc_s = 0.0;
};

const SharedRuns& shared_runs() {
  static std::optional<SharedRuns> data;
  if (data) return *data;
  SharedRuns d;
  d.sim.trials = 50;  // A_u = 5 x 5 km inside a 15 x 15 km window
  const RadioParams rp;

  auto t0 = Clock::now();
  const auto drops = drop_networks(rp, 0.5, d.sim);
  for (double tau : kTau) {
    for (double a : kAlpha) d.mc[{tau, a}] = estimate(drops, icic_at(tau, a), d.sim);
  }
  d.base = estimate(drops, IcicParams{}, d.sim);
  d.mc_s = seconds_since(t0);

  t0 = Clock::now();
  for (double tau : kTau) {
    for (double a : kAlpha) d.analytic[{tau, a}] = AnalyticEngine(rp, icic_at(tau, a)).se_report();
  }
  d.analytic_s = seconds_since(t0);
  note("[shared] 50 trials: %.1f s MC, %.1f s analytic for %zu grid points", d.mc_s, d.analytic_s,
         d.analytic.size());
  data = std::move(d);
  return *data;
}

// ---------------------------------------------------------------------------

bool criterion1() {
  const auto t0 = Clock::now();
  const RadioParams rp;
  const AnalyticEngine e(rp, IcicParams{});
  std::mt19937_64 eng(20240601);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int bad = 0, n = 0;
  double worst = 0.0;
  while (n < 100) {
    const double g = std::pow(10.0, -2.0 + 4.0 * u(eng));
    const double gp = std::pow(10.0, -2.0 + 4.0 * u(eng));
    if (g * gp >= 0.95) continue;  // the density vanishes beyond g gp = 1
    const double r = rp.d_min_macro + (600.0 - rp.d_min_macro) * u(eng);
    const double rpi = rp.d_min_pico + (400.0 - rp.d_min_pico) * u(eng);
    const double h = 1e-4 * g, k = 1e-4 * gp;
    const double fd = (e.jccdf_cond(g + h, gp + k, r, rpi) - e.jccdf_cond(g + h, gp - k, r, rpi) -
                       e.jccdf_cond(g - h, gp + k, r, rpi) + e.jccdf_cond(g - h, gp - k, r, rpi)) /
                      (4.0 * h * k);
    const double an = e.jpdf_cond(g, gp, r, rpi);
    const double tol = std::max(1e-6, 1e-3 * std::abs(fd));
    worst = std::max(worst, std::abs(an - fd) / tol);
    if (std::abs(an - fd) > tol) ++bad;
    ++n;
  }
  const double t = seconds_since(t0);
  note("%d/100 points outside max(1e-6, 1e-3 rel); worst error/tolerance %.3g; %.2f s", bad, worst, t);
  return bad == 0 && t < 60.0;
}

// Monte Carlo E[exp(-sZ)] over independent Poisson fields outside the serving discs.
bool criterion2() {
  const auto t0 = Clock::now();
  const RadioParams rp;
  const IcicParams ic;
  const AnalyticEngine e(rp, ic);
  const double r = 200.0, rpi = 100.0, outer = 10000.0;
  const double p = db_to_linear(rp.p_macro_dbm + rp.k_macro_db);
  const double pp = db_to_linear(rp.p_pico_dbm + rp.k_pico_db);
  const double lam = rp.lambda_macro * 1e-6, lam_p = rp.lambda_pico * 1e-6;
  const std::vector<double> s_values = {1e3, 3.16e4, 1e6};  // 1/mW
  const std::size_t fields = 100000;

  std::mt19937_64 eng(77);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::exponential_distribution<double> fade(1.0);
  std::poisson_distribution<long> n_macro(lam * std::numbers::pi * (outer * outer - r * r));
  std::poisson_distribution<long> n_pico(lam_p * std::numbers::pi * (outer * outer - rpi * rpi));
  std::vector<double> acc(s_values.size(), 0.0);
  auto sample_d4 = [&](double inner) {
    const double d2 = inner * inner + (outer * outer - inner * inner) * u(eng);
    return d2 * d2;
  };
  for (std::size_t f = 0; f < fields; ++f) {
    double z = 0.0;
    for (long i = n_macro(eng); i > 0; --i) {
      const double power = u(eng) < ic.beta ? p : ic.alpha * p;
      z += power * fade(eng) / sample_d4(r);
    }
    for (long i = n_pico(eng); i > 0; --i) z += pp * fade(eng) / sample_d4(rpi);
    for (std::size_t k = 0; k < s_values.size(); ++k) acc[k] += std::exp(-s_values[k] * z);
  }
  bool ok = true;
  for (std::size_t k = 0; k < s_values.size(); ++k) {
    const double mc = acc[k] / static_cast<double>(fields);
    const double an = e.laplace_z(s_values[k], r, rpi);
    const double rel = std::abs(an - mc) / mc;
    note("s = %.3g /mW: analytic %.6f, MC %.6f, rel diff %.2e", s_values[k], an, mc, rel);
    ok = ok && rel < 0.01;
  }
  note("%zu fields, %.1f s", fields, seconds_since(t0));
  return ok;
}

bool criterion3() {
  const RadioParams rp;
  bool ok = true;
  double worst = 0.0;
  for (double tau : {0.0, 6.0, 12.0}) {
    for (double a : {0.0, 0.5, 1.0}) {
      for (double beta : {0.1, 0.5, 0.9}) {
        IcicParams ic = icic_at(tau, a);
        ic.beta = beta;
        const auto p = category_probabilities(rp, ic);
        double sum = 0.0;
        for (double v : p.values) sum += v;
        worst = std::max(worst, std::abs(sum - 1.0));
        ok = ok && std::abs(sum - 1.0) <= 2e-3;
      }
    }
  }
  note("27-point (tau, alpha, beta) grid: max |sum - 1| = %.2e", worst);

  const auto& d = shared_runs();
  const auto p = category_probabilities(rp, IcicParams{});
  const double n = static_cast<double>(d.base.classified_total);
  note("classification frequencies at tau = 6 dB, alpha = 0.5 over %.0f UEs", n);
  for (auto c : kAllCategories) {
    const double freq = static_cast<double>(d.base.classified[c]) / n;
    const double half = 2.5758 * std::sqrt(p[c] * (1.0 - p[c]) / n);
    const bool in = std::abs(freq - p[c]) <= half;
    note("  %s: analytic %.5f, simulated %.5f, 99%% half-width %.5f %s", name(c), p[c], freq, half,
           in ? "" : "<- outside");
    ok = ok && in;
  }
  return ok && n >= 1e5;
}

bool criterion4() {
  const auto& d = shared_runs();
  bool ok = true;
  double worst = 0.0;
  for (double tau : kTau) {
    for (double a : kAlpha) {
      const auto& an = d.analytic.at({tau, a});
      const auto& mc = d.mc.at({tau, a});
      std::string line;
      char buf[96];
      for (auto c : kAllCategories) {
        const double x = an.per_user[c].value_or(NAN);
        const double y = mc.per_user_se[c].value_or(NAN);
        double rel;
        if (x == 0.0 && y == 0.0) {
          rel = 0.0;
        } else {
          rel = (y - x) / x;
        }
        const bool pass = std::abs(rel) <= 0.10;
        ok = ok && pass;
        if (std::isfinite(rel)) worst = std::max(worst, std::abs(rel));
        std::snprintf(buf, sizeof buf, " %s %.4f/%.4f(%+.1f%%)%s", name(c), x, y, 100.0 * rel, pass ? "" : "*");
        line += buf;
      }
      note("tau %2.0f alpha %.2f analytic/MC:%s", tau, a, line.c_str());
    }
  }
  note("worst relative gap %.1f%% (* = beyond 10%%); runtime %.1f s", 100.0 * worst, d.mc_s + d.analytic_s);
  return ok;
}

// Paired difference of per-trial SE between two settings on the same drops.
struct Paired {
  double diff = 0.0;  // mean(b - a)
  double band = 0.0;  // 95% half-width
};

Paired paired(const CapacityReport& a, const CapacityReport& b, UeCategory c) {
  std::vector<double> d;
  const auto& x = a.per_trial_se[c];
  const auto& y = b.per_trial_se[c];
  for (std::size_t t = 0; t < x.size(); ++t) {
    if (std::isfinite(x[t]) && std::isfinite(y[t])) d.push_back(y[t] - x[t]);
  }
  Paired p;
  if (d.size() < 2) return p;
  for (double v : d) p.diff += v;
  p.diff /= static_cast<double>(d.size());
  double ss = 0.0;
  for (double v : d) ss += (v - p.diff) * (v - p.diff);
  p.band = 1.96 * std::sqrt(ss / (d.size() - 1.0) / d.size());
  return p;
}

bool criterion5() {
  const auto& d = shared_runs();
  int checks = 0, failed = 0;
  auto an = [&](double tau, double a, UeCategory c) { return d.analytic.at({tau, a}).per_user[c].value_or(NAN); };
  auto mcv = [&](double tau, double a, UeCategory c) { return d.mc.at({tau, a}).per_user_se[c].value_or(NAN); };

  // sign: +1 increasing, -1 decreasing from (t0, a0) to (t1, a1)
  auto trend = [&](UeCategory c, double t0, double a0, double t1, double a1, int sign) {
    const double x0 = an(t0, a0, c), x1 = an(t1, a1, c);
    const auto p = paired(d.mc.at({t0, a0}), d.mc.at({t1, a1}), c);
    const bool ok_an = sign * (x1 - x0) > 0.0;
    const bool ok_mc = sign * p.diff > p.band;
    ++checks;
    if (!(ok_an && ok_mc)) {
      ++failed;
      note("  %s %s: (tau %g, alpha %g) -> (tau %g, alpha %g): analytic %+.4g, MC %+.4g +- %.3g", name(c),
             sign > 0 ? "increase" : "decrease", t0, a0, t1, a1, x1 - x0, p.diff, p.band);
    }
  };
  auto flat = [&](UeCategory c, double t0, double t1, double a) {
    auto relvar = [](double x, double y) {
      if (x == 0.0 && y == 0.0) return 0.0;
      return std::abs(y - x) / (0.5 * (std::abs(x) + std::abs(y)));
    };
    const double ra = relvar(an(t0, a, c), an(t1, a, c));
    const double rm = relvar(mcv(t0, a, c), mcv(t1, a, c));
    ++checks;
    if (!(ra < 0.03 && rm < 0.03)) {
      ++failed;
      note("  %s flat in tau %g -> %g at alpha %g: analytic %.2f%%, MC %.2f%%", name(c), t0, t1, a, 100 * ra,
             100 * rm);
    }
  };

  const double rho = db_to_linear(IcicParams{}.rho_db);
  const double rho_p = db_to_linear(IcicParams{}.rho_pico_db);
  for (std::size_t i = 0; i + 1 < kAlpha.size(); ++i) {
    const double a0 = kAlpha[i], a1 = kAlpha[i + 1];
    for (double tau : kTau) {
      trend(UeCategory::UsfMue, tau, a0, tau, a1, -1);
      trend(UeCategory::CsfMue, tau, a0, tau, a1, +1);
      trend(UeCategory::UsfPue, tau, a0, tau, a1, +1);
      trend(UeCategory::CsfPue, tau, a0, tau, a1, -1);
    }
  }
  for (std::size_t j = 0; j + 1 < kTau.size(); ++j) {
    const double t0 = kTau[j], t1 = kTau[j + 1];
    for (double a : kAlpha) {
      trend(UeCategory::UsfMue, t0, a, t1, a, +1);
      trend(UeCategory::CsfPue, t0, a, t1, a, -1);
      // flat regions: both endpoints inside the condition
      if (std::sqrt(db_to_linear(t1)) <= rho) flat(UeCategory::CsfMue, t0, t1, a);
      if (rho_p > 1.0 / std::sqrt(db_to_linear(t0))) flat(UeCategory::UsfPue, t0, t1, a);
    }
  }
  note("%d of %d pairwise trend/flatness checks failed", failed, checks);
  return failed == 0;
}

bool criterion6() {
  const auto t0 = Clock::now();
  GridSpec g = GridSpec::defaults();  // rho, rho' -5..20 dB; alpha, tau, beta as in the figures
  g.sim.trials = 20;
  g.common_seed = 11;
  const RadioParams rp;
  const auto drops = drop_networks(rp, g.reference_beta, g.backend());
  const auto t = sweep_alpha_tau(drops, g);
  const auto betas = sweep_beta(rp, g, t);
  auto at = [&](double tau, double a) -> const ThresholdOptimum& {
    for (const auto& o : t) {
      if (o.tau_db == tau && o.alpha == a) return o;
    }
    throw std::logic_error("missing grid point");
  };
  for (const auto& o : t) {
    note("tau %2.0f alpha %.3f: rho* %5.1f dB, rho'* %5.1f dB, C_log %8.3f, C_sum %.4f", o.tau_db, o.alpha,
           o.rho_star_db, o.rho_pico_star_db, o.c_log, o.c_sum);
  }

  bool a_ok = true, b_ok = true, c_ok = true, d_ok = true, e_ok = true;
  for (double tau : g.tau_grid_db) {
    for (std::size_t i = 0; i + 1 < g.alpha_grid.size(); ++i) {
      const auto& x = at(tau, g.alpha_grid[i]);
      const auto& y = at(tau, g.alpha_grid[i + 1]);
      if (y.rho_star_db > x.rho_star_db || y.rho_pico_star_db > x.rho_pico_star_db) {
        a_ok = false;
        note("(a) tau %g: alpha %g -> %g raises a threshold", tau, x.alpha, y.alpha);
      }
    }
    double best = -INFINITY, arg = NAN;
    for (double a : g.alpha_grid) {
      if (at(tau, a).c_log > best) {
        best = at(tau, a).c_log;
        arg = a;
      }
    }
    if (!(arg >= 0.125 && arg <= 0.5)) c_ok = false;
    note("(c) tau %g: argmax_alpha C_log = %g", tau, arg);
  }
  for (double a : g.alpha_grid) {
    for (std::size_t j = 0; j + 1 < g.tau_grid_db.size(); ++j) {
      const auto& lo = at(g.tau_grid_db[j], a);
      const auto& hi = at(g.tau_grid_db[j + 1], a);
      const bool log_up = hi.c_log > lo.c_log;
      const bool sum_down = hi.c_sum < lo.c_sum;
      if (!log_up || !sum_down) {
        b_ok = false;
        note("(b) alpha %g, tau %g -> %g: dC_log %+.4f, dC_sum %+.4f", a, lo.tau_db, hi.tau_db,
               hi.c_log - lo.c_log, hi.c_sum - lo.c_sum);
      }
    }
  }
  for (const auto& o : t) {
    double best = -INFINITY, arg = NAN, c03 = NAN, c05 = NAN;
    for (const auto& b : betas) {
      if (b.alpha != o.alpha || b.tau_db != o.tau_db) continue;
      if (b.c_sum > best) {
        best = b.c_sum;
        arg = b.beta;
      }
      if (std::abs(b.beta - 0.3) < 1e-12) c03 = b.c_log;
      if (std::abs(b.beta - 0.5) < 1e-12) c05 = b.c_log;
    }
    if (!(arg >= 0.33 && arg <= 0.53)) {
      d_ok = false;
      note("(d) tau %g alpha %g: argmax_beta C_sum = %g", o.tau_db, o.alpha, arg);
    }
    if (o.alpha == 0.0) {
      note("(e) tau %g: C_log(beta 0.3) = %.3f, C_log(beta 0.5) = %.3f", o.tau_db, c03, c05);
      e_ok = e_ok && c03 < c05;
    }
  }
  note("(a) %s (b) %s (c) %s (d) %s (e) %s; %zu trials, %zu x %zu threshold grid, %.1f s", a_ok ? "pass" : "FAIL",
         b_ok ? "pass" : "FAIL", c_ok ? "pass" : "FAIL", d_ok ? "pass" : "FAIL", e_ok ? "pass" : "FAIL",
         g.sim.trials, g.rho_grid_db.size(), g.rho_pico_grid_db.size(), seconds_since(t0));
  return a_ok && b_ok && c_ok && d_ok && e_ok;
}

double ecdf(const std::vector<double>& sorted, double x) {
  return static_cast<double>(std::upper_bound(sorted.begin(), sorted.end(), x) - sorted.begin()) /
         static_cast<double>(sorted.size());
}

bool criterion7() {
  const auto t0 = Clock::now();
  const auto& d = shared_runs();
  const RadioParams rp;
  const AnalyticEngine e(rp, IcicParams{});
  bool ok = true;
  for (auto c : kAllCategories) {
    std::vector<double> v = d.base.pooled_link_se[c];
    std::sort(v.begin(), v.end());
    const double prob = e.category_probabilities()[c];
    double sup = 0.0;
    // Compare at the empirical quantiles; both CDFs are continuous there.
    for (int k = 1; k < 100; ++k) {
      const double x = v[static_cast<std::size_t>(k / 100.0 * (v.size() - 1))];
      sup = std::max(sup, std::abs(e.throughput_cdf(c, x, prob) - ecdf(v, x)));
    }
    const auto p5 = e.percentile(c, 0.05);
    const double m5 = percentile_mc(v, 0.05);
    const double rel = std::abs(p5.value - m5) / m5;
    note("%s: sup |F - F_n| = %.4f over %zu UEs; 5th pct analytic %.4f, MC %.4f (%.1f%%)", name(c), sup,
           v.size(), p5.value, m5, 100 * rel);
    ok = ok && sup < 0.02 && rel < 0.05;
  }

  // 5th percentile versus alpha at tau = 6 dB.
  for (auto c : kAllCategories) {
    std::vector<double> pct;
    for (double a : kAlpha) pct.push_back(AnalyticEngine(rp, icic_at(6.0, a)).percentile(c, 0.05).value);
    const int sign = c == UeCategory::CsfMue ? +1 : -1;
    bool mono = true;
    for (std::size_t i = 0; i + 1 < pct.size(); ++i) mono = mono && sign * (pct[i + 1] - pct[i]) > 0.0;
    note("%s 5th pct vs alpha {0, .25, .5, 1}: %.4f %.4f %.4f %.4f (%s expected) %s", name(c), pct[0], pct[1],
           pct[2], pct[3], sign > 0 ? "increasing" : "decreasing", mono ? "" : "<- violated");
    ok = ok && mono;
  }
  note("%.1f s", seconds_since(t0));
  return ok;
}

bool criterion8() {
  const auto t0 = Clock::now();
  SimConfig sim;  // 15 x 15 km window
  sim.trials = 20;
  sim.rng_seed = 5;
  IcicParams ic = icic_at(6.0, 0.5);
  ic.rho_pico_db = 12.0;
  const double lm = 1.53;
  const std::vector<double> lp = {2.0, 4.0, 8.0, 16.0};
  const std::vector<double> pw = {10.0, 30.0};
  const MacroLayout ppp{};
  const MacroLayout hex{Provenance::Hex, gen_hex(lm, sim.window.side_a)};

  // Synthetic "real" deployment written and read back through the importer.
  const auto dir = std::filesystem::temp_directory_path() / "hetnet_acceptance";
  std::filesystem::create_directories(dir);
  write_deployment_csv(dir / "sites.csv", gen_jittered_hex(lm, sim.window.side_a, 0.3, 17));
  const auto imp = import_deployment(dir / "sites.csv", sim.window.side_a);
  const MacroLayout imported{Provenance::Imported, imp.points};
  note("imported density %.4f /km^2 (target %.2f)", imp.density_km2, lm);

  std::map<std::tuple<int, double, double>, double> se5;
  const MacroLayout* layouts[] = {&ppp, &hex, &imported};
  for (int m = 0; m < 3; ++m) {
    for (double p : pw) {
      for (double l : lp) {
        RadioParams rp;
        rp.lambda_macro = m == 2 ? imp.density_km2 : lm;
        rp.lambda_pico = l;
        rp.p_pico_dbm = p;
        const auto rep = estimate(rp, ic, sim, *layouts[m]);
        se5[{m, p, l}] = percentile_mc(rep.pooled_all_se, 0.05);
      }
    }
  }
  bool ok = true;
  int between = 0, points = 0;
  for (double p : pw) {
    for (double l : lp) {
      const double a = se5[{0, p, l}], h = se5[{1, p, l}], i = se5[{2, p, l}];
      note("P' %2.0f dBm, lambda' %4.1f: ppp %.5f  imported %.5f  hex %.5f", p, l, a, i, h);
      ok = ok && h >= a;
      ++points;
      if (i >= std::min(a, h) && i <= std::max(a, h)) ++between;
    }
  }
  const char* names[] = {"ppp", "hex", "imported"};
  for (int m = 0; m < 3; ++m) {
    for (double p : pw) {
      for (std::size_t k = 0; k + 1 < lp.size(); ++k) {
        if (!(se5[{m, p, lp[k + 1]}] > se5[{m, p, lp[k]}])) {
          ok = false;
          note("%s: no increase with density at P' %g, lambda' %g -> %g", names[m], p, lp[k], lp[k + 1]);
        }
      }
    }
    for (double l : lp) {
      if (!(se5[{m, 30.0, l}] > se5[{m, 10.0, l}])) {
        ok = false;
        note("%s: no increase with pico power at lambda' %g", names[m], l);
      }
    }
  }
  note("imported between hex and ppp at %d of %d points; %.1f s", between, points, seconds_since(t0));
  return ok && between >= 0.8 * points;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool criterion9() {
  const auto dir = std::filesystem::temp_directory_path() / "hetnet_acceptance_det";
  std::filesystem::remove_all(dir);
  bool same = true;
  std::size_t files = 0;
  for (auto cmd : {cmd_simulate, cmd_optimize, cmd_compare}) {
    std::vector<std::string> outs;
    for (const char* run : {"a", "b"}) {
      const auto cfg = default_config(
          {"run.seed=3", "sim.trials=2", "grids.tau_db=0,6", "grids.alpha=0,0.5", "grids.rho_db=0:8:4",
           "grids.rho_pico_db=-4:4:4", "grids.beta=0.3,0.5", "compare.trials=1", "compare.lambda_pico=4,8",
           "run.output_dir=" + (dir / run).string()});
      const auto res = cmd(cfg);
      std::string all;
      for (const auto& f : res.files) all += f.filename().string() + "\n" + slurp(f);
      outs.push_back(all);
      files += res.files.size();
    }
    same = same && outs[0] == outs[1] && !outs[0].empty();
  }
  std::filesystem::remove_all(dir);
  note("simulate/optimize/compare re-run with the same seed: %s (%zu files)", same ? "byte-identical" : "DIFFER",
         files / 2);

  const auto& d = shared_runs();
  double residual = d.base.conservation_residual;
  for (const auto& [k, rep] : d.mc) residual = std::max(residual, rep.conservation_residual);
  const double expected = RadioParams{}.lambda_ue / RadioParams{}.lambda_macro;
  note("mean UEs per macro cell %.3f (expected %.3f +- 1) over %zu trials", d.base.mean_ues_per_macro_cell,
         expected, d.base.trials);
  note("max per-cell conservation residual %.2e", residual);
  return same && std::abs(d.base.mean_ues_per_macro_cell - 43.478) <= 1.0 && residual <= 1e-9;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<bool()>> checks = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                                     criterion6, criterion7, criterion8, criterion9};
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  const auto start = Clock::now();
  int failed = 0;
  std::vector<std::string> summary;
  for (int i = 0; i < static_cast<int>(checks.size()); ++i) {
    if (!only.empty() && !only.count(i + 1)) continue;
    std::printf("criterion %d ...\n", i + 1);
    std::fflush(stdout);
    bool ok = false;
    try {
      ok = checks[i]();
    } catch (const std::exception& e) {
      note("exception: %s", e.what());
    }
    const std::string line = "criterion " + std::to_string(i + 1) + ": " + (ok ? "PASS" : "FAIL");
    std::printf("%s\n", line.c_str());
    summary.push_back(line);
    if (!ok) ++failed;
  }
  std::printf("\nsummary (%.0f s)\n", seconds_since(start));
  for (const auto& s : summary) std::printf("%s\n", s.c_str());
  return failed == 0 ? 0 : 1;
}
