#pragma once

// Globally adaptive 15-point Gauss-Kronrod quadrature (QUADPACK QAG scheme):
// the interval with the largest error estimate is bisected until the summed
// error meets max(abs_tol, rel_tol * |I|) or the subdivision cap is reached.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace hetnet {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  bool converged = true;
};

struct QuadOptions {
  double rel_tol = 1e-6;
  double abs_tol = 1e-12;
  std::size_t max_subdivisions = 200;
};

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& where, double estimate, double error_bound);
  double estimate() const { return estimate_; }
  double error_bound() const { return error_bound_; }

 private:
  double estimate_;
  double error_bound_;
};

namespace detail {

inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error;
};

template <class F>
Segment gk15(F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  double resabs = std::abs(resk);
  std::array<double, 7> fv1{}, fv2{};
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    fv1[j] = f(center - dx);
    fv2[j] = f(center + dx);
    const double sum = fv1[j] + fv2[j];
    resk += kWgk[j] * sum;
    resabs += kWgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
    if (j % 2 == 1) resg += kWg[j / 2] * sum;
  }
  const double reskh = 0.5 * resk;
  double resasc = kWgk[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j) {
    resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
  }
  const double result = resk * half;
  resabs *= std::abs(half);
  resasc *= std::abs(half);
  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) {
    err = std::max(50.0 * eps * resabs, err);
  }
  return {a, b, result, err};
}

}  // namespace detail

template <class F>
QuadResult integrate_adaptive(F&& f, double a, double b, const QuadOptions& opt) {
  if (!(b > a)) return {0.0, 0.0, true};
  using detail::Segment;
  auto by_error = [](const Segment& x, const Segment& y) { return x.error < y.error; };
  std::vector<Segment> heap;
  heap.reserve(std::min<std::size_t>(opt.max_subdivisions, 256) + 1);
  heap.push_back(detail::gk15(f, a, b));
  double total = heap.front().value;
  double total_err = heap.front().error;
  std::size_t used = 1;
  auto tolerance = [&] { return std::max(opt.abs_tol, opt.rel_tol * std::abs(total)); };
  while (total_err > tolerance() && used < opt.max_subdivisions) {
    std::pop_heap(heap.begin(), heap.end(), by_error);
    const Segment worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      heap.push_back(worst);
      std::push_heap(heap.begin(), heap.end(), by_error);
      break;
    }
    const Segment left = detail::gk15(f, worst.a, mid);
    const Segment right = detail::gk15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end(), by_error);
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end(), by_error);
    ++used;
  }
  QuadResult r;
  for (const auto& s : heap) {
    r.value += s.value;
    r.error += s.error;
  }
  r.converged = r.error <= std::max(opt.abs_tol, opt.rel_tol * std::abs(r.value));
  return r;
}

// As integrate_adaptive, but throws QuadratureError when the tolerance is not met.
template <class F>
double integrate_or_throw(F&& f, double a, double b, const QuadOptions& opt,
                          const char* where) {
  const QuadResult r = integrate_adaptive(std::forward<F>(f), a, b, opt);
  if (!r.converged) throw QuadratureError(where, r.value, r.error);
  return r.value;
}

}  // namespace hetnet
