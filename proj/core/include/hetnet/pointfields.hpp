#pragma once

// Planar point patterns for base stations and UEs, and nearest-BS queries.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hetnet/model.hpp"

namespace hetnet {

struct Point {
  double x = 0.0;  // m
  double y = 0.0;  // m

  friend bool operator==(const Point&, const Point&) = default;
};

inline double squared_distance(Point a, Point b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

// Square of side side_a with the UE square (side side_au) centred inside it.
// Both squares are centred on the origin.
struct Window {
  double side_a = 15000.0;
  double side_au = 5000.0;

  void validate() const;
  double area_km2() const { return side_a * side_a * 1e-6; }
  double ue_area_km2() const { return side_au * side_au * 1e-6; }
  bool contains(Point p) const;
  bool contains_ue(Point p) const;

  friend bool operator==(const Window&, const Window&) = default;
};

// Axis-aligned square centred on the origin.
inline bool in_centered_square(Point p, double side) {
  const double h = 0.5 * side;
  return p.x >= -h && p.x <= h && p.y >= -h && p.y <= h;
}

enum class Provenance { Ppp, Hex, Imported };

std::string_view to_string(Provenance p);

struct Deployment {
  std::vector<Point> macro_points;
  std::vector<Point> pico_points;
  std::vector<Point> ue_points;
  Provenance provenance = Provenance::Ppp;
  Window window;
};

// Number of points the fixed-count generator places: round(intensity * area).
std::size_t ppp_count(double intensity_km2, double area_km2);

// round(intensity * side^2) points i.i.d. uniform on the centred square of the
// given side. Deterministic in the seed.
std::vector<Point> gen_ppp(double intensity_km2, double side_m, std::uint64_t seed);
std::vector<Point> gen_ppp(double intensity_km2, double side_m, std::mt19937_64& eng);

// Lattice spacing (m) of a triangular lattice with the given density.
double hex_spacing_m(double intensity_km2);

// Triangular lattice sites (hexagonal cells) clipped to the centred square.
// Throws std::invalid_argument if no site fits.
std::vector<Point> gen_hex(double intensity_km2, double side_m);

// Same lattice with every site displaced uniformly within a disc of radius
// jitter_fraction * spacing; used to synthesise planned-but-irregular layouts.
std::vector<Point> gen_jittered_hex(double intensity_km2, double side_m,
                                    double jitter_fraction, std::uint64_t seed);

struct ImportedPoints {
  std::vector<Point> points;
  double density_km2 = 0.0;  // realised density over the clipping square
};

// Reads a CSV with header "x_m,y_m" (planar metres) and keeps rows inside the
// centred square of the given side. Throws ImportError with the line number on
// malformed input.
ImportedPoints import_deployment(const std::filesystem::path& path, double side_m);

void write_deployment_csv(const std::filesystem::path& path, std::span<const Point> pts);

class ImportError : public std::runtime_error {
 public:
  ImportError(const std::string& file, std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Uniform bucket grid supporting exact nearest-neighbour queries. The index
// views the caller's points; they must outlive it.
class GridIndex {
 public:
  explicit GridIndex(std::span<const Point> points, double bucket_size_m = 0.0);

  struct Hit {
    std::size_t index;
    double distance;
  };

  // Throws std::logic_error on an empty point set.
  Hit nearest(Point q) const;
  std::size_t size() const { return points_.size(); }

 private:
  std::span<const Point> points_;
  double x0_ = 0, y0_ = 0, cell_ = 1;
  long nx_ = 1, ny_ = 1;
  std::vector<std::uint32_t> start_;
  std::vector<std::uint32_t> items_;

  long cx(double x) const;
  long cy(double y) const;
};

struct NearestServing {
  std::size_t moi_index;
  double moi_distance;
  std::size_t poi_index;
  double poi_distance;
};

// Nearest macro and pico BS by Euclidean distance; std::nullopt when the UE
// violates either minimum distance.
std::optional<NearestServing> nearest_serving(Point ue, const GridIndex& macro,
                                              const GridIndex& pico,
                                              const RadioParams& rp);
std::optional<NearestServing> nearest_serving(Point ue, const Deployment& dep,
                                              const RadioParams& rp);

}  // namespace hetnet
