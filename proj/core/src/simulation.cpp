#include "hetnet/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hetnet/random.hpp"

namespace hetnet {

void SimConfig::validate() const {
  window.validate();
  if (trials < 1) throw std::invalid_argument("SimConfig: trials must be >= 1");
  if (!(capacity_floor > 0.0)) throw std::invalid_argument("SimConfig: capacity_floor must be > 0");
  if (!(guard_m >= 0.0) || !(2.0 * guard_m < window.side_au)) {
    throw std::invalid_argument("SimConfig: guard_m must lie in [0, side_au / 2)");
  }
}

namespace {

// Per-trial random streams.
enum Stream : std::uint64_t { kMacro = 0, kPico, kUe, kFading, kSubframe, kStreams = 8 };

inline double exp1(std::mt19937_64& eng) {
  // u in (0, 1]
  const double u = (static_cast<double>(eng() >> 11) + 1.0) * 0x1.0p-53;
  return -std::log(u);
}

inline double path_gain(double d2, double delta) {
  if (delta == 4.0) return 1.0 / (d2 * d2);
  return std::pow(d2, -0.5 * delta);
}

std::vector<char> core_flags(const std::vector<Point>& pts, const SimConfig& sim) {
  const double side = sim.window.side_au - 2.0 * sim.guard_m;
  std::vector<char> out(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) out[i] = in_centered_square(pts[i], side) ? 1 : 0;
  return out;
}

double sir_of(UeCategory c, const SirSample& s) {
  switch (c) {
    case UeCategory::UsfMue: return s.gamma;
    case UeCategory::CsfMue: return s.gamma_csf;
    case UeCategory::UsfPue: return s.gamma_pico;
    case UeCategory::CsfPue: return s.gamma_pico_csf;
  }
  return 0.0;
}

// Per-UE classification and shared SE for one drop.
struct Assignment {
  std::vector<SirSample> sir;
  std::vector<double> link;
  std::vector<double> se;
  std::vector<std::uint32_t> macro_count;  // [cell * 4 + category]
  std::vector<std::uint32_t> pico_count;
};

void assign(const Drop& d, const IcicLinear& lin, Assignment& a) {
  const std::size_t n = d.ues.size();
  a.sir.resize(n);
  a.link.resize(n);
  a.se.resize(n);
  a.macro_count.assign(d.macros.size() * 4, 0);
  a.pico_count.assign(d.picos.size() * 4, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const UeLink& u = d.ues[i];
    SirSample s = sir_quadruple(u.s, u.s_pico, u.z(lin.alpha), lin.alpha);
    s.category = classify_ue(s.gamma, s.gamma_pico, lin);
    a.sir[i] = s;
    a.link[i] = shannon_se(sir_of(s.category, s));
    const auto k = index_of(s.category);
    if (is_macro(s.category)) {
      ++a.macro_count[u.moi * 4 + k];
    } else {
      ++a.pico_count[u.poi * 4 + k];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const UeLink& u = d.ues[i];
    const UeCategory c = a.sir[i].category;
    const auto k = index_of(c);
    const std::uint32_t members = is_macro(c) ? a.macro_count[u.moi * 4 + k] : a.pico_count[u.poi * 4 + k];
    a.se[i] = duty_cycle(c, lin.beta) * a.link[i] / members;
  }
}

}  // namespace

Drop drop_network(const RadioParams& rp, double beta, const SimConfig& sim, std::size_t trial,
                  const MacroLayout& layout) {
  rp.validate();
  sim.validate();
  if (!(beta >= 0.0 && beta <= 1.0)) throw std::invalid_argument("drop_network: beta must lie in [0, 1]");
  const std::uint64_t base = static_cast<std::uint64_t>(trial) * kStreams;
  auto eng_macro = make_engine(sim.rng_seed, base + kMacro);
  auto eng_pico = make_engine(sim.rng_seed, base + kPico);
  auto eng_ue = make_engine(sim.rng_seed, base + kUe);
  auto eng_fade = make_engine(sim.rng_seed, base + kFading);
  auto eng_sub = make_engine(sim.rng_seed, base + kSubframe);

  Drop d;
  d.beta = beta;
  if (layout.kind == Provenance::Ppp) {
    d.macros = gen_ppp(rp.lambda_macro, sim.window.side_a, eng_macro);
  } else {
    for (const auto& p : layout.points) {
      if (sim.window.contains(p)) d.macros.push_back(p);
    }
  }
  d.picos = gen_ppp(rp.lambda_pico, sim.window.side_a, eng_pico);
  if (d.macros.empty()) throw std::invalid_argument("drop_network: no macro BS inside the window");
  if (d.picos.empty()) throw std::invalid_argument("drop_network: no pico BS inside the window");
  const auto ues = gen_ppp(rp.lambda_ue, sim.window.side_au, eng_ue);
  d.generated_ues = ues.size();
  d.macro_core = core_flags(d.macros, sim);
  d.pico_core = core_flags(d.picos, sim);
  d.voronoi_population.assign(d.macros.size(), 0);

  std::vector<char> usf(d.macros.size());
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (auto& s : usf) s = u01(eng_sub) < beta ? 1 : 0;

  const double p_macro = db_to_linear(rp.p_macro_dbm + rp.k_macro_db);
  const double p_pico = db_to_linear(rp.p_pico_dbm + rp.k_pico_db);
  const GridIndex macro_index(d.macros);
  const GridIndex pico_index(d.picos);
  d.ues.reserve(ues.size());
  for (const Point& pos : ues) {
    const auto m = macro_index.nearest(pos);
    ++d.voronoi_population[m.index];
    if (m.distance < rp.d_min_macro) continue;
    const auto p = pico_index.nearest(pos);
    if (p.distance < rp.d_min_pico) continue;

    UeLink u;
    u.pos = pos;
    u.moi = static_cast<std::uint32_t>(m.index);
    u.poi = static_cast<std::uint32_t>(p.index);
    u.r = m.distance;
    u.r_pico = p.distance;
    u.s = p_macro * exp1(eng_fade) * path_gain(m.distance * m.distance, rp.delta);
    u.s_pico = p_pico * exp1(eng_fade) * path_gain(p.distance * p.distance, rp.delta);
    for (std::size_t j = 0; j < d.macros.size(); ++j) {
      if (j == m.index) continue;
      const double c = p_macro * exp1(eng_fade) * path_gain(squared_distance(pos, d.macros[j]), rp.delta);
      (usf[j] ? u.z_usf : u.z_csf) += c;
    }
    for (std::size_t j = 0; j < d.picos.size(); ++j) {
      if (j == p.index) continue;
      u.z_pico += p_pico * exp1(eng_fade) * path_gain(squared_distance(pos, d.picos[j]), rp.delta);
    }
    d.ues.push_back(u);
  }
  return d;
}

std::vector<Drop> drop_networks(const RadioParams& rp, double beta, const SimConfig& sim,
                                const MacroLayout& layout) {
  std::vector<Drop> drops;
  drops.reserve(sim.trials);
  for (std::size_t t = 0; t < sim.trials; ++t) drops.push_back(drop_network(rp, beta, sim, t, layout));
  return drops;
}

TrialOutcome evaluate(const Drop& d, const IcicParams& icic, const SimConfig& sim) {
  icic.validate();
  if (icic.beta != d.beta) {
    throw std::invalid_argument("evaluate: drop was generated for a different beta");
  }
  const IcicLinear lin = IcicLinear::from(icic);
  Assignment a;
  assign(d, lin, a);

  TrialOutcome out;
  out.generated_ues = d.generated_ues;
  out.records.resize(d.ues.size());
  const std::size_t nm = d.macros.size();
  out.cells.resize(nm + d.picos.size());
  for (std::size_t c = 0; c < nm; ++c) {
    out.cells[c].cell = c;
    out.cells[c].tier = Tier::Macro;
    out.cells[c].core = d.macro_core[c];
    if (d.macro_core[c]) {
      ++out.core_macro_cells;
      out.voronoi_population_core += d.voronoi_population[c];
    }
  }
  for (std::size_t c = 0; c < d.picos.size(); ++c) {
    out.cells[nm + c].cell = c;
    out.cells[nm + c].tier = Tier::Pico;
    out.cells[nm + c].core = d.pico_core[c];
  }
  for (std::size_t i = 0; i < d.ues.size(); ++i) {
    const UeLink& u = d.ues[i];
    UeRecord& r = out.records[i];
    r.pos = u.pos;
    r.moi = u.moi;
    r.poi = u.poi;
    r.r = u.r;
    r.r_pico = u.r_pico;
    r.sir = a.sir[i];
    r.category = a.sir[i].category;
    r.link_se = a.link[i];
    r.se = a.se[i];
    CellStats& serving = is_macro(r.category) ? out.cells[u.moi] : out.cells[nm + u.poi];
    r.core = serving.core;
    ++serving.count[r.category];
    serving.aggregate[r.category] += r.se;

    CellStats& region = sim.fairness_cells == FairnessCells::Serving ? serving : out.cells[u.moi];
    ++region.members;
    region.c_sum += r.se;
    region.c_log += std::log(std::max(r.se, sim.capacity_floor));
  }
  return out;
}

TrialOutcome run_trial(const RadioParams& rp, const IcicParams& icic, const SimConfig& sim,
                       std::size_t trial, const MacroLayout& layout) {
  return evaluate(drop_network(rp, icic.beta, sim, trial, layout), icic, sim);
}

FairnessMetrics fairness_metrics(std::span<const CellStats> cells) {
  FairnessMetrics f;
  for (const auto& c : cells) {
    if (!c.core || c.members == 0) continue;
    f.c_sum += c.c_sum;
    f.c_log += c.c_log;
    ++f.cells;
  }
  if (f.cells > 0) {
    f.c_sum /= static_cast<double>(f.cells);
    f.c_log /= static_cast<double>(f.cells);
  }
  return f;
}

FairnessMetrics fairness_metrics(std::span<const UeRecord> records, std::span<const CellStats> cells,
                                 double floor, FairnessCells grouping) {
  if (!(floor > 0.0)) throw std::invalid_argument("fairness_metrics: floor must be > 0");
  std::vector<CellStats> copy(cells.begin(), cells.end());
  std::size_t nm = 0;
  for (auto& c : copy) {
    if (c.tier == Tier::Macro) ++nm;
    c.members = 0;
    c.c_sum = 0.0;
    c.c_log = 0.0;
  }
  for (const auto& r : records) {
    const bool by_moi = grouping == FairnessCells::MacroVoronoi || is_macro(r.category);
    const std::size_t k = by_moi ? r.moi : nm + r.poi;
    if (k >= copy.size() || (copy[k].tier == Tier::Macro) != by_moi) {
      throw std::invalid_argument("fairness_metrics: record refers to an unknown cell");
    }
    CellStats& c = copy[k];
    ++c.members;
    c.c_sum += r.se;
    c.c_log += std::log(std::max(r.se, floor));
  }
  return fairness_metrics(copy);
}

double percentile_mc(std::span<const double> values, double q) {
  if (values.empty()) throw std::invalid_argument("percentile_mc: empty sample");
  if (!(q > 0.0 && q <= 1.0)) throw std::invalid_argument("percentile_mc: q must lie in (0, 1]");
  std::vector<double> v(values.begin(), values.end());
  const double n = static_cast<double>(v.size());
  auto k = static_cast<std::size_t>(std::ceil(q * n * (1.0 - 1e-12)));
  k = std::clamp<std::size_t>(k, 1, v.size()) - 1;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k), v.end());
  return v[k];
}

void ReportBuilder::add(const TrialOutcome& t) {
  Totals tot;
  double by_category = 0.0;
  double by_region = 0.0;
  for (const auto& c : t.cells) {
    for (auto k : kAllCategories) by_category += c.aggregate[k];
    by_region += c.c_sum;
    if (!c.core) continue;
    for (auto k : kAllCategories) {
      if (is_macro(k) != (c.tier == Tier::Macro)) continue;
      tot.aggregate[k] += c.aggregate[k];
      tot.count[k] += c.count[k];
      ++cells_[k];
    }
    if (c.members > 0) {
      fair_sum_ += c.c_sum;
      fair_log_ += c.c_log;
      ++fair_cells_;
    }
  }
  const double scale = std::max(std::abs(by_region), 1e-300);
  acc_.conservation_residual = std::max(acc_.conservation_residual, std::abs(by_category - by_region) / scale);
  per_trial_.push_back(tot);

  for (const auto& r : t.records) {
    ++acc_.classified[r.category];
    ++acc_.classified_total;
    if (!r.core) continue;
    acc_.pooled_se[r.category].push_back(r.se);
    acc_.pooled_link_se[r.category].push_back(r.link_se);
    acc_.pooled_all_se.push_back(r.se);
    acc_.pooled_all_link_se.push_back(r.link_se);
  }
  voronoi_pop_ += t.voronoi_population_core;
  voronoi_cells_ += t.core_macro_cells;
  ++acc_.trials;
}

CapacityReport ReportBuilder::finish() const {
  CapacityReport rep = acc_;
  for (auto k : kAllCategories) {
    double agg = 0.0;
    double cnt = 0.0;
    std::vector<double> ratios;
    for (const auto& t : per_trial_) {
      agg += t.aggregate[k];
      cnt += static_cast<double>(t.count[k]);
      const double ratio = t.count[k] > 0 ? t.aggregate[k] / static_cast<double>(t.count[k])
                                          : std::numeric_limits<double>::quiet_NaN();
      rep.per_trial_se[k].push_back(ratio);
      if (t.count[k] > 0) ratios.push_back(ratio);
    }
    const double cells = static_cast<double>(cells_[k]);
    rep.mean_count[k] = cells > 0 ? cnt / cells : 0.0;
    rep.mean_aggregate[k] = cells > 0 ? agg / cells : 0.0;
    if (cnt > 0) rep.per_user_se[k] = agg / cnt;
    rep.per_user_ci95[k] = std::numeric_limits<double>::quiet_NaN();
    if (ratios.size() >= 2) {
      double mean = 0.0;
      for (double x : ratios) mean += x;
      mean /= static_cast<double>(ratios.size());
      double ss = 0.0;
      for (double x : ratios) ss += (x - mean) * (x - mean);
      const double n = static_cast<double>(ratios.size());
      rep.per_user_ci95[k] = 1.96 * std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
    }
  }
  if (fair_cells_ > 0) {
    rep.c_sum = fair_sum_ / static_cast<double>(fair_cells_);
    rep.c_log = fair_log_ / static_cast<double>(fair_cells_);
  }
  if (voronoi_cells_ > 0) {
    rep.mean_ues_per_macro_cell = static_cast<double>(voronoi_pop_) / static_cast<double>(voronoi_cells_);
  }
  return rep;
}

CapacityReport estimate(std::span<const Drop> drops, const IcicParams& icic, const SimConfig& sim) {
  if (drops.empty()) throw std::invalid_argument("estimate: no drops");
  ReportBuilder b;
  for (const auto& d : drops) b.add(evaluate(d, icic, sim));
  return b.finish();
}

CapacityReport estimate(const RadioParams& rp, const IcicParams& icic, const SimConfig& sim,
                        const MacroLayout& layout) {
  sim.validate();
  ReportBuilder b;
  for (std::size_t t = 0; t < sim.trials; ++t) b.add(run_trial(rp, icic, sim, t, layout));
  return b.finish();
}

FairnessMetrics fairness_on_drops(std::span<const Drop> drops, const IcicParams& icic,
                                  const SimConfig& sim) {
  sim.validate();
  icic.validate();
  const IcicLinear lin = IcicLinear::from(icic);
  const bool serving = sim.fairness_cells == FairnessCells::Serving;
  Assignment a;
  FairnessMetrics f;
  std::vector<double> c_sum, c_log;
  std::vector<std::uint32_t> members;
  for (const auto& d : drops) {
    if (icic.beta != d.beta) {
      throw std::invalid_argument("fairness_on_drops: drop was generated for a different beta");
    }
    assign(d, lin, a);
    const std::size_t nm = d.macros.size();
    const std::size_t n = nm + d.picos.size();
    c_sum.assign(n, 0.0);
    c_log.assign(n, 0.0);
    members.assign(n, 0);
    for (std::size_t i = 0; i < d.ues.size(); ++i) {
      const std::size_t k = (!serving || is_macro(a.sir[i].category)) ? d.ues[i].moi : nm + d.ues[i].poi;
      ++members[k];
      c_sum[k] += a.se[i];
      c_log[k] += std::log(std::max(a.se[i], sim.capacity_floor));
    }
    for (std::size_t k = 0; k < n; ++k) {
      const bool core = k < nm ? d.macro_core[k] : d.pico_core[k - nm];
      if (!core || members[k] == 0) continue;
      f.c_sum += c_sum[k];
      f.c_log += c_log[k];
      ++f.cells;
    }
  }
  if (f.cells > 0) {
    f.c_sum /= static_cast<double>(f.cells);
    f.c_log /= static_cast<double>(f.cells);
  }
  return f;
}

}  // namespace hetnet
