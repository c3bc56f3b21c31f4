#pragma once

// Monte Carlo counterpart of the analytic engine: drop finite networks, compute
// the SIRs of every UE, classify, share subframes inside each cell and average
// over cells and trials.
//
// A Drop keeps everything that does not depend on (alpha, tau, rho, rho'):
// positions, fading, serving powers and the interference split by the
// subframe state of each interfering MBS. Re-evaluating a cached drop under
// other ICIC settings therefore reuses the same random numbers.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hetnet/analytic.hpp"
#include "hetnet/model.hpp"
#include "hetnet/pointfields.hpp"

namespace hetnet {

enum class InterfererModel { IndependentPerInterferer };

// Which UEs form a "cell" for C_sum / C_log. Serving: the MUEs of one MBS or
// the PUEs of one PBS (the grouping used for resource sharing). MacroVoronoi:
// every UE located in the Voronoi region of one MBS, PUEs included.
enum class FairnessCells { Serving, MacroVoronoi };

struct SimConfig {
  Window window;
  std::size_t trials = 50;
  std::uint64_t rng_seed = 1;
  double capacity_floor = 1e-9;  // bps/Hz, only inside ln() of C_log
  // Cells whose BS lies closer than this to the edge of the UE square are
  // dropped from per-cell statistics; their UE populations are truncated.
  double guard_m = 1000.0;
  InterfererModel interferer_model = InterfererModel::IndependentPerInterferer;
  FairnessCells fairness_cells = FairnessCells::Serving;

  void validate() const;

  friend bool operator==(const SimConfig&, const SimConfig&) = default;
};

// Where the macro tier comes from. Ppp draws a fresh pattern per trial; the
// other kinds reuse the given points in every trial.
struct MacroLayout {
  Provenance kind = Provenance::Ppp;
  std::vector<Point> points;
};

struct UeLink {
  Point pos;
  std::uint32_t moi = 0;
  std::uint32_t poi = 0;
  double r = 0.0;        // m
  double r_pico = 0.0;   // m
  double s = 0.0;        // serving macro power at full power (mW)
  double s_pico = 0.0;   // serving pico power
  double z_usf = 0.0;    // interfering MBSs in USF
  double z_csf = 0.0;    // interfering MBSs in CSF, at full power (scaled by alpha later)
  double z_pico = 0.0;   // interfering PBSs

  double z(double alpha) const { return z_usf + alpha * z_csf + z_pico; }
};

struct Drop {
  std::vector<Point> macros;
  std::vector<Point> picos;
  std::vector<UeLink> ues;  // survivors of the minimum-distance filter
  std::vector<char> macro_core;
  std::vector<char> pico_core;
  // Every generated UE (before the filter) counted in its macro Voronoi cell.
  std::vector<std::uint32_t> voronoi_population;
  std::size_t generated_ues = 0;
  double beta = 0.5;
};

// Throws std::invalid_argument when a tier is empty after clipping.
Drop drop_network(const RadioParams& rp, double beta, const SimConfig& sim,
                  std::size_t trial, const MacroLayout& layout = {});

struct UeRecord {
  Point pos;
  std::uint32_t moi = 0;
  std::uint32_t poi = 0;
  double r = 0.0;
  double r_pico = 0.0;
  SirSample sir;
  UeCategory category = UeCategory::UsfMue;
  double link_se = 0.0;  // log2(1 + SIR of the category)
  double se = 0.0;       // duty * link_se / (category members in the serving cell)
  bool core = false;     // serving cell of its tier is a core cell
};

enum class Tier { Macro, Pico };

struct CellStats {
  std::size_t cell = 0;
  Tier tier = Tier::Macro;
  bool core = false;
  // Macro cells carry the MUE categories, pico cells the PUE categories.
  PerCategory<std::size_t> count;
  PerCategory<double> aggregate;
  // Fairness over the UEs the cell holds under SimConfig::fairness_cells.
  std::size_t members = 0;
  double c_sum = 0.0;
  double c_log = 0.0;
};

struct TrialOutcome {
  std::vector<UeRecord> records;
  std::vector<CellStats> cells;
  std::size_t generated_ues = 0;
  std::size_t voronoi_population_core = 0;  // generated UEs in core macro cells
  std::size_t core_macro_cells = 0;
};

TrialOutcome evaluate(const Drop& drop, const IcicParams& icic, const SimConfig& sim);

TrialOutcome run_trial(const RadioParams& rp, const IcicParams& icic, const SimConfig& sim,
                       std::size_t trial, const MacroLayout& layout = {});

struct FairnessMetrics {
  double c_sum = 0.0;
  double c_log = 0.0;
  std::size_t cells = 0;
};

// Mean C_sum and C_log over non-empty core cells.
FairnessMetrics fairness_metrics(std::span<const CellStats> cells);
// Recomputes C_sum/C_log per cell from UE capacities with the given floor.
// Macro cells must precede pico cells, each indexed by BS id (as evaluate emits them).
FairnessMetrics fairness_metrics(std::span<const UeRecord> records,
                                 std::span<const CellStats> cells, double floor,
                                 FairnessCells grouping = FairnessCells::Serving);

// Order statistic at ceil(q n) (1-based). Throws std::invalid_argument on an
// empty pool or q outside (0, 1].
double percentile_mc(std::span<const double> values, double q);

struct CapacityReport {
  PerCategory<std::optional<double>> per_user_se;
  PerCategory<double> per_user_ci95;  // NaN with fewer than two usable trials
  // Per-trial aggregate/count ratios (NaN where a trial has no member), for
  // paired comparisons between settings evaluated on the same drops.
  PerCategory<std::vector<double>> per_trial_se;
  PerCategory<double> mean_count;     // per cell of the category's tier
  PerCategory<double> mean_aggregate;
  double c_sum = 0.0;
  double c_log = 0.0;
  // Pooled over UEs served by core cells.
  PerCategory<std::vector<double>> pooled_se;
  PerCategory<std::vector<double>> pooled_link_se;
  std::vector<double> pooled_all_se;
  std::vector<double> pooled_all_link_se;
  // Classification frequencies over every simulated UE.
  PerCategory<std::size_t> classified;
  std::size_t classified_total = 0;
  double mean_ues_per_macro_cell = 0.0;
  // Largest relative mismatch, over trials, between the category aggregates
  // summed over cells and C_sum summed over cells.
  double conservation_residual = 0.0;
  std::size_t trials = 0;
};

class ReportBuilder {
 public:
  void add(const TrialOutcome& t);
  CapacityReport finish() const;

 private:
  struct Totals {
    PerCategory<double> aggregate;
    PerCategory<std::size_t> count;
  };
  std::vector<Totals> per_trial_;
  PerCategory<std::size_t> cells_;  // core cells of the category's tier
  CapacityReport acc_;
  double fair_sum_ = 0.0, fair_log_ = 0.0;
  std::size_t fair_cells_ = 0;
  std::size_t voronoi_pop_ = 0, voronoi_cells_ = 0;
};

CapacityReport estimate(const RadioParams& rp, const IcicParams& icic, const SimConfig& sim,
                        const MacroLayout& layout = {});
CapacityReport estimate(std::span<const Drop> drops, const IcicParams& icic,
                        const SimConfig& sim);

// Drops for trials 0 .. sim.trials-1.
std::vector<Drop> drop_networks(const RadioParams& rp, double beta, const SimConfig& sim,
                                const MacroLayout& layout = {});

// Mean C_sum/C_log over all drops, without materialising UE records.
FairnessMetrics fairness_on_drops(std::span<const Drop> drops, const IcicParams& icic,
                                  const SimConfig& sim);

}  // namespace hetnet
