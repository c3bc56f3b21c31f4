#include "hetnet/report.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <stdexcept>

namespace hetnet {

namespace fs = std::filesystem;

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";  // no "-0"
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 9);
  return std::string(buf, r.ptr);
}

std::string render_csv(const CsvTable& table) {
  std::string out;
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  line(table.header);
  for (const auto& row : table.rows) {
    if (row.size() != table.header.size()) throw std::logic_error("render_csv: ragged row");
    line(row);
  }
  return out;
}

fs::path write_csv(const fs::path& dir, const std::string& name, const CsvTable& table) {
  fs::create_directories(dir);
  const fs::path target = dir / name;
  const fs::path tmp = dir / (name + ".tmp");
  const std::string text = render_csv(table);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw std::runtime_error("write failed: " + tmp.string());
  }
  fs::rename(tmp, target);
  return target;
}

CsvTable thresholds_table(const OptimumThresholds& t) {
  CsvTable tab{{"alpha", "tau_db", "beta", "rho_star_db", "rho_pico_star_db", "c_log", "c_sum"}, {}};
  for (const auto& o : t) {
    tab.rows.push_back({format_number(o.alpha), format_number(o.tau_db), format_number(o.beta),
                        format_number(o.rho_star_db), format_number(o.rho_pico_star_db),
                        format_number(o.c_log), format_number(o.c_sum)});
  }
  return tab;
}

CsvTable beta_sweep_table(const std::vector<BetaPoint>& points) {
  CsvTable tab{{"beta", "alpha", "tau_db", "c_log", "c_sum"}, {}};
  for (const auto& p : points) {
    tab.rows.push_back({format_number(p.beta), format_number(p.alpha), format_number(p.tau_db),
                        format_number(p.c_log), format_number(p.c_sum)});
  }
  return tab;
}

CsvTable frontier_table(const std::vector<FrontierPoint>& points) {
  CsvTable tab{{"alpha", "tau_db", "se5_bpshz", "se50_bpshz"}, {}};
  for (const auto& p : points) {
    tab.rows.push_back({format_number(p.alpha), format_number(p.tau_db), format_number(p.se5),
                        format_number(p.se50)});
  }
  return tab;
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

IcicParams with_tau_alpha(IcicParams p, double tau_db, double alpha) {
  p.tau_db = tau_db;
  p.alpha = alpha;
  return p;
}

double or_nan(const std::optional<double>& v) { return v ? *v : kNaN; }

}  // namespace

CommandResult cmd_analytic(const RunConfig& cfg) {
  cfg.validate();
  CommandResult res;
  CsvTable se{{"tau_db", "alpha", "category", "per_user_se_bpshz"}, {}};
  for (double tau : cfg.grids.tau_grid_db) {
    for (double alpha : cfg.grids.alpha_grid) {
      const AnalyticEngine eng(cfg.radio, with_tau_alpha(cfg.icic, tau, alpha), cfg.integration);
      PerCategory<double> v;
      try {
        const auto rep = eng.se_report();
        for (auto c : kAllCategories) v[c] = or_nan(rep.per_user[c]);
      } catch (const QuadratureError&) {
        v.values.fill(kNaN);
        res.numeric_failures += 4;
      } catch (const std::domain_error&) {
        v.values.fill(kNaN);
        res.numeric_failures += 4;
      }
      for (auto c : kAllCategories) {
        se.rows.push_back({format_number(tau), format_number(alpha), std::string(to_string(c)),
                           format_number(v[c])});
      }
    }
  }

  CsvTable pct{{"category", "q", "se_bpshz"}, {}};
  const AnalyticEngine base(cfg.radio, cfg.icic, cfg.integration);
  for (auto c : kAllCategories) {
    for (double q : cfg.sweep.quantiles) {
      double value = kNaN;
      try {
        const auto p = base.percentile(c, q);
        if (p.converged) {
          value = p.value;
        } else {
          ++res.numeric_failures;
        }
      } catch (const QuadratureError&) {
        ++res.numeric_failures;
      } catch (const std::domain_error&) {
        ++res.numeric_failures;
      }
      pct.rows.push_back({std::string(to_string(c)), format_number(q), format_number(value)});
    }
  }

  res.files.push_back(write_csv(cfg.output_dir, "per_user_se.csv", se));
  res.files.push_back(write_csv(cfg.output_dir, "percentiles_analytic.csv", pct));
  return res;
}

CommandResult cmd_simulate(const RunConfig& cfg) {
  cfg.validate();
  CommandResult res;
  const SimConfig sim = cfg.sim_backend();
  const auto drops = drop_networks(cfg.radio, cfg.icic.beta, sim);

  CsvTable se{{"tau_db", "alpha", "category", "per_user_se_bpshz", "ci95"}, {}};
  CsvTable fair{{"alpha", "tau_db", "beta", "c_sum", "c_log"}, {}};
  for (double tau : cfg.grids.tau_grid_db) {
    for (double alpha : cfg.grids.alpha_grid) {
      const auto rep = estimate(drops, with_tau_alpha(cfg.icic, tau, alpha), sim);
      for (auto c : kAllCategories) {
        se.rows.push_back({format_number(tau), format_number(alpha), std::string(to_string(c)),
                           format_number(or_nan(rep.per_user_se[c])),
                           format_number(rep.per_user_ci95[c])});
      }
      fair.rows.push_back({format_number(alpha), format_number(tau), format_number(cfg.icic.beta),
                           format_number(rep.c_sum), format_number(rep.c_log)});
    }
  }

  // Link SE, the quantity the analytic throughput CDF describes.
  CsvTable pct{{"category", "q", "se_bpshz"}, {}};
  const auto base = estimate(drops, cfg.icic, sim);
  for (auto c : kAllCategories) {
    for (double q : cfg.sweep.quantiles) {
      const auto& pool = base.pooled_link_se[c];
      const double v = pool.empty() ? kNaN : percentile_mc(pool, q);
      pct.rows.push_back({std::string(to_string(c)), format_number(q), format_number(v)});
    }
  }

  res.files.push_back(write_csv(cfg.output_dir, "per_user_se_mc.csv", se));
  res.files.push_back(write_csv(cfg.output_dir, "fairness.csv", fair));
  res.files.push_back(write_csv(cfg.output_dir, "percentiles_mc.csv", pct));
  return res;
}

CommandResult cmd_optimize(const RunConfig& cfg) {
  cfg.validate();
  CommandResult res;
  const GridSpec grid = cfg.grid_backend();
  const auto thresholds = sweep_alpha_tau(cfg.radio, grid);
  const auto betas = sweep_beta(cfg.radio, grid, thresholds);
  const auto frontier = percentile_frontier(cfg.radio, grid, thresholds);
  res.files.push_back(write_csv(cfg.output_dir, "thresholds_opt.csv", thresholds_table(thresholds)));
  res.files.push_back(write_csv(cfg.output_dir, "beta_sweep.csv", beta_sweep_table(betas)));
  res.files.push_back(write_csv(cfg.output_dir, "frontier_5_50.csv", frontier_table(frontier)));
  return res;
}

CommandResult cmd_compare(const RunConfig& cfg) {
  cfg.validate();
  CommandResult res;
  SimConfig sim = cfg.sim_backend();
  sim.trials = cfg.compare.trials;
  const double side = sim.window.side_a;

  // An imported file fixes the macro density; the generated models match it.
  MacroLayout imported{Provenance::Imported, {}};
  double lambda_macro = cfg.compare.lambda_macro;
  if (!cfg.compare.imported.empty()) {
    auto imp = import_deployment(cfg.compare.imported, side);
    if (imp.points.empty()) throw ConfigError("no imported site inside the window: " + cfg.compare.imported);
    lambda_macro = imp.density_km2;
    imported.points = std::move(imp.points);
  } else {
    imported.points = gen_jittered_hex(lambda_macro, side, cfg.compare.jitter_fraction, cfg.seed);
  }
  const MacroLayout ppp{};
  const MacroLayout hex{Provenance::Hex, gen_hex(lambda_macro, side)};

  IcicParams icic = cfg.icic;
  icic.rho_pico_db = cfg.compare.rho_pico_db;

  CsvTable tab{{"model", "lambda_pico", "p_pico_dbm", "se5_bpshz", "backend"}, {}};
  const std::pair<const char*, const MacroLayout*> models[] = {
      {"ppp", &ppp}, {"hex", &hex}, {"imported", &imported}};
  for (const auto& [name, layout] : models) {
    for (double p_pico : cfg.compare.p_pico_dbm) {
      for (double lambda_pico : cfg.compare.lambda_pico) {
        RadioParams rp = cfg.radio;
        rp.lambda_macro = lambda_macro;
        rp.lambda_pico = lambda_pico;
        rp.p_pico_dbm = p_pico;
        const auto rep = estimate(rp, icic, sim, *layout);
        // Per-UE SE after subframe sharing, pooled over every core UE.
        const double se5 = rep.pooled_all_se.empty() ? kNaN : percentile_mc(rep.pooled_all_se, 0.05);
        if (std::isnan(se5)) ++res.numeric_failures;
        tab.rows.push_back({name, format_number(lambda_pico), format_number(p_pico),
                            format_number(se5), "simulation"});
      }
    }
  }
  res.files.push_back(write_csv(cfg.output_dir, "compare_5pct.csv", tab));
  return res;
}

}  // namespace hetnet
