#include "hetnet/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

namespace hetnet {

namespace pt = boost::property_tree;

SimConfig RunConfig::sim_backend() const {
  SimConfig s = sim;
  s.rng_seed = seed;
  return s;
}

GridSpec RunConfig::grid_backend() const {
  GridSpec g = grids;
  g.sim = sim;
  g.common_seed = seed;
  return g;
}

bool operator==(const RunConfig& a, const RunConfig& b) {
  return a.radio == b.radio && a.icic == b.icic && a.integration == b.integration &&
         a.sim == b.sim && a.grids == b.grids && a.sweep == b.sweep && a.compare == b.compare &&
         a.output_dir == b.output_dir && a.seed == b.seed;
}

void RunConfig::validate() const {
  try {
    radio.validate();
    icic.validate();
    integration.validate();
    sim.validate();
    grid_backend().validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  for (double q : sweep.quantiles) {
    if (!(q > 0.0 && q < 1.0)) throw ConfigError("sweep.quantiles must lie in (0, 1)");
  }
  if (sweep.quantiles.empty()) throw ConfigError("sweep.quantiles is empty");
  if (!(compare.lambda_macro > 0.0)) throw ConfigError("compare.lambda_macro must be > 0");
  if (compare.lambda_pico.empty() || compare.p_pico_dbm.empty()) {
    throw ConfigError("compare.lambda_pico and compare.p_pico_dbm must be nonempty");
  }
  for (double l : compare.lambda_pico) {
    if (!(l > 0.0)) throw ConfigError("compare.lambda_pico values must be > 0");
  }
  if (!(compare.jitter_fraction >= 0.0)) throw ConfigError("compare.jitter_fraction must be >= 0");
  if (compare.trials < 1) throw ConfigError("compare.trials must be >= 1");
  if (output_dir.empty()) throw ConfigError("run.output_dir is empty");
}

namespace {

std::string fmt(double v) {
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, v);  // shortest round-trip form
  return std::string(buf, r.ptr);
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double to_double(const std::string& key, const std::string& raw) {
  const std::string s = trim(raw);
  double v = 0.0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw ConfigError(key + ": expected a number, got '" + raw + "'");
  }
  return v;
}

std::uint64_t to_uint(const std::string& key, const std::string& raw) {
  const std::string s = trim(raw);
  std::uint64_t v = 0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end) {
    throw ConfigError(key + ": expected a non-negative integer, got '" + raw + "'");
  }
  return v;
}

bool to_bool(const std::string& key, const std::string& raw) {
  const std::string s = trim(raw);
  if (s == "true" || s == "1") return true;
  if (s == "false" || s == "0") return false;
  throw ConfigError(key + ": expected true or false, got '" + raw + "'");
}

// Comma-separated numbers, or lo:hi:step.
std::vector<double> to_list(const std::string& key, const std::string& raw) {
  const std::string s = trim(raw);
  std::vector<double> out;
  if (s.empty()) return out;
  if (s.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() != 3) throw ConfigError(key + ": range must be lo:hi:step");
    const double lo = to_double(key, parts[0]);
    const double hi = to_double(key, parts[1]);
    const double step = to_double(key, parts[2]);
    if (!(step > 0.0) || hi < lo) throw ConfigError(key + ": bad range '" + raw + "'");
    const auto n = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
    for (long i = 0; i <= n; ++i) out.push_back(lo + static_cast<double>(i) * step);
    return out;
  }
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_double(key, item));
  return out;
}

std::string list_str(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += fmt(v[i]);
  }
  return s;
}

struct Field {
  std::string key;  // section.name
  std::function<void(RunConfig&, const std::string&)> set;
  std::function<std::string(const RunConfig&)> get;
};

template <class M>
Field num(std::string key, M member) {
  return {key,
          [member, key](RunConfig& c, const std::string& v) { member(c) = to_double(key, v); },
          [member](const RunConfig& c) { return fmt(member(const_cast<RunConfig&>(c))); }};
}

template <class M>
Field count(std::string key, M member) {
  return {key,
          [member, key](RunConfig& c, const std::string& v) {
            member(c) = static_cast<std::remove_reference_t<decltype(member(c))>>(to_uint(key, v));
          },
          [member](const RunConfig& c) { return std::to_string(member(const_cast<RunConfig&>(c))); }};
}

template <class M>
Field list(std::string key, M member) {
  return {key, [member, key](RunConfig& c, const std::string& v) { member(c) = to_list(key, v); },
          [member](const RunConfig& c) { return list_str(member(const_cast<RunConfig&>(c))); }};
}

const std::vector<Field>& fields() {
  static const std::vector<Field> f = {
      count("run.seed", [](RunConfig& c) -> std::uint64_t& { return c.seed; }),
      {"run.output_dir", [](RunConfig& c, const std::string& v) { c.output_dir = trim(v); },
       [](const RunConfig& c) { return c.output_dir; }},

      num("radio.p_macro_dbm", [](RunConfig& c) -> double& { return c.radio.p_macro_dbm; }),
      num("radio.p_pico_dbm", [](RunConfig& c) -> double& { return c.radio.p_pico_dbm; }),
      num("radio.k_macro_db", [](RunConfig& c) -> double& { return c.radio.k_macro_db; }),
      num("radio.k_pico_db", [](RunConfig& c) -> double& { return c.radio.k_pico_db; }),
      num("radio.delta", [](RunConfig& c) -> double& { return c.radio.delta; }),
      num("radio.lambda_macro", [](RunConfig& c) -> double& { return c.radio.lambda_macro; }),
      num("radio.lambda_pico", [](RunConfig& c) -> double& { return c.radio.lambda_pico; }),
      num("radio.lambda_ue", [](RunConfig& c) -> double& { return c.radio.lambda_ue; }),
      num("radio.d_min_macro", [](RunConfig& c) -> double& { return c.radio.d_min_macro; }),
      num("radio.d_min_pico", [](RunConfig& c) -> double& { return c.radio.d_min_pico; }),

      num("icic.alpha", [](RunConfig& c) -> double& { return c.icic.alpha; }),
      num("icic.beta", [](RunConfig& c) -> double& { return c.icic.beta; }),
      num("icic.tau_db", [](RunConfig& c) -> double& { return c.icic.tau_db; }),
      num("icic.rho_db", [](RunConfig& c) -> double& { return c.icic.rho_db; }),
      num("icic.rho_pico_db", [](RunConfig& c) -> double& { return c.icic.rho_pico_db; }),

      num("integration.rel_tol", [](RunConfig& c) -> double& { return c.integration.rel_tol; }),
      num("integration.inner_rel_tol", [](RunConfig& c) -> double& { return c.integration.inner_rel_tol; }),
      num("integration.abs_tol", [](RunConfig& c) -> double& { return c.integration.abs_tol; }),
      num("integration.r_trunc_quantile", [](RunConfig& c) -> double& { return c.integration.r_trunc_quantile; }),
      count("integration.max_subdivisions", [](RunConfig& c) -> std::size_t& { return c.integration.max_subdivisions; }),

      num("sim.side_a_m", [](RunConfig& c) -> double& { return c.sim.window.side_a; }),
      num("sim.side_au_m", [](RunConfig& c) -> double& { return c.sim.window.side_au; }),
      count("sim.trials", [](RunConfig& c) -> std::size_t& { return c.sim.trials; }),
      num("sim.capacity_floor", [](RunConfig& c) -> double& { return c.sim.capacity_floor; }),
      num("sim.guard_m", [](RunConfig& c) -> double& { return c.sim.guard_m; }),
      {"sim.fairness_cells",
       [](RunConfig& c, const std::string& v) {
         const std::string s = trim(v);
         if (s == "serving") {
           c.sim.fairness_cells = FairnessCells::Serving;
         } else if (s == "macro_voronoi") {
           c.sim.fairness_cells = FairnessCells::MacroVoronoi;
         } else {
           throw ConfigError("sim.fairness_cells: expected serving or macro_voronoi, got '" + v + "'");
         }
       },
       [](const RunConfig& c) {
         return std::string(c.sim.fairness_cells == FairnessCells::Serving ? "serving" : "macro_voronoi");
       }},
      {"sim.interferer_model",
       [](RunConfig&, const std::string& v) {
         if (trim(v) != "independent") {
           throw ConfigError("sim.interferer_model: only 'independent' is supported, got '" + v + "'");
         }
       },
       [](const RunConfig&) { return std::string("independent"); }},

      list("grids.rho_db", [](RunConfig& c) -> std::vector<double>& { return c.grids.rho_grid_db; }),
      list("grids.rho_pico_db", [](RunConfig& c) -> std::vector<double>& { return c.grids.rho_pico_grid_db; }),
      list("grids.alpha", [](RunConfig& c) -> std::vector<double>& { return c.grids.alpha_grid; }),
      list("grids.tau_db", [](RunConfig& c) -> std::vector<double>& { return c.grids.tau_grid_db; }),
      list("grids.beta", [](RunConfig& c) -> std::vector<double>& { return c.grids.beta_grid; }),
      num("grids.reference_beta", [](RunConfig& c) -> double& { return c.grids.reference_beta; }),
      {"grids.smooth_thresholds",
       [](RunConfig& c, const std::string& v) { c.grids.smooth_thresholds = to_bool("grids.smooth_thresholds", v); },
       [](const RunConfig& c) { return std::string(c.grids.smooth_thresholds ? "true" : "false"); }},

      list("sweep.quantiles", [](RunConfig& c) -> std::vector<double>& { return c.sweep.quantiles; }),

      num("compare.lambda_macro", [](RunConfig& c) -> double& { return c.compare.lambda_macro; }),
      list("compare.lambda_pico", [](RunConfig& c) -> std::vector<double>& { return c.compare.lambda_pico; }),
      list("compare.p_pico_dbm", [](RunConfig& c) -> std::vector<double>& { return c.compare.p_pico_dbm; }),
      num("compare.rho_pico_db", [](RunConfig& c) -> double& { return c.compare.rho_pico_db; }),
      {"compare.imported", [](RunConfig& c, const std::string& v) { c.compare.imported = trim(v); },
       [](const RunConfig& c) { return c.compare.imported; }},
      num("compare.jitter_fraction", [](RunConfig& c) -> double& { return c.compare.jitter_fraction; }),
      count("compare.trials", [](RunConfig& c) -> std::size_t& { return c.compare.trials; }),
  };
  return f;
}

const Field* find_field(const std::string& key) {
  for (const auto& f : fields()) {
    if (f.key == key) return &f;
  }
  return nullptr;
}

void apply(RunConfig& cfg, const std::string& key, const std::string& value) {
  const Field* f = find_field(key);
  if (!f) throw ConfigError("unknown configuration key '" + key + "'");
  f->set(cfg, value);
}

}  // namespace

RunConfig parse_config(const std::string& ini_text, const std::vector<std::string>& overrides) {
  RunConfig cfg;
  pt::ptree tree;
  try {
    std::istringstream in(ini_text);
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("config syntax: ") + e.what());
  }
  for (const auto& [section, body] : tree) {
    if (body.empty()) throw ConfigError("key '" + section + "' outside a section");
    for (const auto& [name, leaf] : body) apply(cfg, section + "." + name, leaf.data());
  }
  for (const auto& o : overrides) {
    const auto eq = o.find('=');
    if (eq == std::string::npos || eq == 0) throw ConfigError("override '" + o + "' is not key=value");
    apply(cfg, trim(o.substr(0, eq)), o.substr(eq + 1));
  }
  cfg.validate();
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path, const std::vector<std::string>& overrides) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), overrides);
}

RunConfig default_config(const std::vector<std::string>& overrides) {
  return parse_config("", overrides);
}

std::string serialize_config(const RunConfig& cfg) {
  std::string out;
  std::string section;
  for (const auto& f : fields()) {
    const auto dot = f.key.find('.');
    const std::string s = f.key.substr(0, dot);
    if (s != section) {
      if (!section.empty()) out += '\n';
      out += "[" + s + "]\n";
      section = s;
    }
    out += f.key.substr(dot + 1) + " = " + f.get(cfg) + "\n";
  }
  return out;
}

}  // namespace hetnet
