#include "hetnet/pointfields.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>

#include "hetnet/random.hpp"

namespace hetnet {

void Window::validate() const {
  if (!(side_a > 0.0) || !(side_au > 0.0)) {
    throw std::invalid_argument("Window: sides must be positive");
  }
  if (!(side_au < side_a)) {
    throw std::invalid_argument("Window: UE square must be smaller than the outer square");
  }
}

bool Window::contains(Point p) const { return in_centered_square(p, side_a); }
bool Window::contains_ue(Point p) const { return in_centered_square(p, side_au); }

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Ppp: return "ppp";
    case Provenance::Hex: return "hex";
    case Provenance::Imported: return "imported";
  }
  return "unknown";
}

std::size_t ppp_count(double intensity_km2, double area_km2) {
  const double n = std::round(intensity_km2 * area_km2);
  return n > 0 ? static_cast<std::size_t>(n) : 0;
}

std::vector<Point> gen_ppp(double intensity_km2, double side_m, std::uint64_t seed) {
  auto eng = make_engine(seed, 0);
  return gen_ppp(intensity_km2, side_m, eng);
}

std::vector<Point> gen_ppp(double intensity_km2, double side_m, std::mt19937_64& eng) {
  if (!(side_m > 0.0)) throw std::invalid_argument("gen_ppp: zero-area window");
  if (intensity_km2 < 0.0) throw std::invalid_argument("gen_ppp: negative intensity");
  const std::size_t n = ppp_count(intensity_km2, side_m * side_m * 1e-6);
  std::uniform_real_distribution<double> u(-0.5 * side_m, 0.5 * side_m);
  std::vector<Point> pts(n);
  for (auto& p : pts) {
    p.x = u(eng);
    p.y = u(eng);
  }
  return pts;
}

double hex_spacing_m(double intensity_km2) {
  if (!(intensity_km2 > 0.0)) throw std::invalid_argument("hex_spacing_m: intensity must be positive");
  return 1000.0 * std::sqrt(2.0 / (std::numbers::sqrt3 * intensity_km2));
}

namespace {

template <class Jitter>
std::vector<Point> lattice(double intensity_km2, double side_m, Jitter&& jitter) {
  if (!(side_m > 0.0)) throw std::invalid_argument("gen_hex: zero-area window");
  const double s = hex_spacing_m(intensity_km2);
  const double row = s * std::numbers::sqrt3 / 2.0;
  const double h = 0.5 * side_m;
  const long rows = static_cast<long>(std::ceil(h / row)) + 1;
  const long cols = static_cast<long>(std::ceil(h / s)) + 1;
  std::vector<Point> pts;
  for (long j = -rows; j <= rows; ++j) {
    const double offset = (j % 2 == 0) ? 0.0 : 0.5 * s;
    for (long i = -cols; i <= cols; ++i) {
      Point p{i * s + offset, j * row};
      jitter(p, s);
      if (in_centered_square(p, side_m)) pts.push_back(p);
    }
  }
  if (pts.empty()) throw std::invalid_argument("gen_hex: window too small for one site");
  return pts;
}

}  // namespace

std::vector<Point> gen_hex(double intensity_km2, double side_m) {
  return lattice(intensity_km2, side_m, [](Point&, double) {});
}

std::vector<Point> gen_jittered_hex(double intensity_km2, double side_m,
                                    double jitter_fraction, std::uint64_t seed) {
  auto eng = make_engine(seed, 1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return lattice(intensity_km2, side_m, [&](Point& p, double s) {
    const double rad = jitter_fraction * s * std::sqrt(u(eng));
    const double phi = 2.0 * std::numbers::pi * u(eng);
    p.x += rad * std::cos(phi);
    p.y += rad * std::sin(phi);
  });
}

ImportError::ImportError(const std::string& file, std::size_t line, const std::string& what)
    : std::runtime_error(file + ":" + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

bool parse_double(std::string_view s, double& out) {
  s = trim(s);
  if (s.empty()) return false;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end && std::isfinite(out);
}

}  // namespace

ImportedPoints import_deployment(const std::filesystem::path& path, double side_m) {
  const std::string name = path.string();
  std::ifstream in(path);
  if (!in) throw ImportError(name, 0, "cannot open file");
  std::string line;
  if (!std::getline(in, line)) throw ImportError(name, 1, "empty file");
  if (trim(line) != "x_m,y_m") throw ImportError(name, 1, "expected header 'x_m,y_m'");

  ImportedPoints out;
  std::size_t lineno = 1;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view v = trim(line);
    if (v.empty()) continue;
    const auto comma = v.find(',');
    Point p;
    if (comma == std::string_view::npos || v.find(',', comma + 1) != std::string_view::npos ||
        !parse_double(v.substr(0, comma), p.x) || !parse_double(v.substr(comma + 1), p.y)) {
      throw ImportError(name, lineno, "malformed row '" + std::string(v) + "'");
    }
    ++rows;
    if (in_centered_square(p, side_m)) out.points.push_back(p);
  }
  if (rows == 0) throw ImportError(name, lineno, "no data rows");
  out.density_km2 = static_cast<double>(out.points.size()) / (side_m * side_m * 1e-6);
  return out;
}

void write_deployment_csv(const std::filesystem::path& path, std::span<const Point> pts) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "x_m,y_m\n";
  char buf[64];
  for (const auto& p : pts) {
    auto r = std::to_chars(buf, buf + sizeof buf, p.x);
    *r.ptr++ = ',';
    r = std::to_chars(r.ptr, buf + sizeof buf, p.y);
    out.write(buf, r.ptr - buf);
    out.put('\n');
  }
}

GridIndex::GridIndex(std::span<const Point> points, double bucket_size_m) : points_(points) {
  if (points.empty()) return;
  double x1 = points[0].x, y1 = points[0].y;
  x0_ = x1;
  y0_ = y1;
  for (const auto& p : points) {
    x0_ = std::min(x0_, p.x);
    y0_ = std::min(y0_, p.y);
    x1 = std::max(x1, p.x);
    y1 = std::max(y1, p.y);
  }
  const double w = std::max(x1 - x0_, 1.0);
  const double h = std::max(y1 - y0_, 1.0);
  cell_ = bucket_size_m > 0 ? bucket_size_m
                            : std::sqrt(w * h / static_cast<double>(points.size()));
  cell_ = std::max(cell_, 1e-6);
  nx_ = std::clamp<long>(static_cast<long>(w / cell_) + 1, 1, 1 << 14);
  ny_ = std::clamp<long>(static_cast<long>(h / cell_) + 1, 1, 1 << 14);

  std::vector<std::uint32_t> counts(static_cast<std::size_t>(nx_ * ny_) + 1, 0);
  for (const auto& p : points) ++counts[static_cast<std::size_t>(cy(p.y) * nx_ + cx(p.x)) + 1];
  for (std::size_t i = 1; i < counts.size(); ++i) counts[i] += counts[i - 1];
  start_ = counts;
  items_.resize(points.size());
  for (std::uint32_t i = 0; i < points.size(); ++i) {
    const auto b = static_cast<std::size_t>(cy(points[i].y) * nx_ + cx(points[i].x));
    items_[counts[b]++] = i;
  }
}

long GridIndex::cx(double x) const {
  return std::clamp<long>(static_cast<long>(std::floor((x - x0_) / cell_)), 0, nx_ - 1);
}
long GridIndex::cy(double y) const {
  return std::clamp<long>(static_cast<long>(std::floor((y - y0_) / cell_)), 0, ny_ - 1);
}

GridIndex::Hit GridIndex::nearest(Point q) const {
  if (points_.empty()) throw std::logic_error("GridIndex::nearest: empty point set");
  const long qx = cx(q.x);
  const long qy = cy(q.y);
  double best = std::numeric_limits<double>::infinity();
  std::size_t best_i = 0;
  auto visit = [&](long bx, long by) {
    if (bx < 0 || by < 0 || bx >= nx_ || by >= ny_) return;
    const auto b = static_cast<std::size_t>(by * nx_ + bx);
    for (auto k = start_[b]; k < start_[b + 1]; ++k) {
      const std::uint32_t i = items_[k];
      const double d = squared_distance(points_[i], q);
      if (d < best || (d == best && i < best_i)) {
        best = d;
        best_i = i;
      }
    }
  };
  const long max_ring = std::max(nx_, ny_);
  for (long ring = 0; ring <= max_ring; ++ring) {
    if (ring == 0) {
      visit(qx, qy);
    } else {
      for (long i = -ring; i <= ring; ++i) {
        visit(qx + i, qy - ring);
        visit(qx + i, qy + ring);
      }
      for (long j = -ring + 1; j <= ring - 1; ++j) {
        visit(qx - ring, qy + j);
        visit(qx + ring, qy + j);
      }
    }
    // Every point in rings beyond this one is at least ring * cell away.
    const double reach = static_cast<double>(ring) * cell_;
    if (best < reach * reach) break;
  }
  return {best_i, std::sqrt(best)};
}

std::optional<NearestServing> nearest_serving(Point ue, const GridIndex& macro,
                                              const GridIndex& pico,
                                              const RadioParams& rp) {
  if (macro.size() == 0 || pico.size() == 0) {
    throw std::invalid_argument("nearest_serving: empty base-station tier");
  }
  const auto m = macro.nearest(ue);
  if (m.distance < rp.d_min_macro) return std::nullopt;
  const auto p = pico.nearest(ue);
  if (p.distance < rp.d_min_pico) return std::nullopt;
  return NearestServing{m.index, m.distance, p.index, p.distance};
}

std::optional<NearestServing> nearest_serving(Point ue, const Deployment& dep,
                                              const RadioParams& rp) {
  if (dep.macro_points.empty() || dep.pico_points.empty()) {
    throw std::invalid_argument("nearest_serving: empty base-station tier");
  }
  return nearest_serving(ue, GridIndex(dep.macro_points), GridIndex(dep.pico_points), rp);
}

}  // namespace hetnet
