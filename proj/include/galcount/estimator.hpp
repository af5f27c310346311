#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "galcount/fieldcount.hpp"
#include "galcount/fraction.hpp"
#include "galcount/group.hpp"

namespace galcount {

/// Too few usable samples for a fit.
class InsufficientSamples : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The regression design is (numerically) singular.
class DegenerateDesign : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Geometrically spaced integer cutoffs from x_min to x_max inclusive, deduplicated.
inline std::vector<std::uint64_t> geometric_grid(std::uint64_t x_min, std::uint64_t x_max, std::size_t points) {
  if (x_min < 1 || x_min >= x_max) throw std::invalid_argument("geometric grid needs 1 <= x_min < x_max");
  if (points < 2) throw std::invalid_argument("geometric grid needs at least 2 points");
  std::vector<std::uint64_t> grid;
  long double lo = std::log(static_cast<long double>(x_min));
  long double step = (std::log(static_cast<long double>(x_max)) - lo) / static_cast<long double>(points - 1);
  grid.push_back(x_min);
  for (std::size_t i = 1; i + 1 < points; ++i) {
    auto v = static_cast<std::uint64_t>(std::llround(std::exp(lo + step * static_cast<long double>(i))));
    v = std::clamp(v, x_min, x_max);
    if (v > grid.back()) grid.push_back(v);
  }
  if (x_max > grid.back()) grid.push_back(x_max);
  return grid;
}

struct FitResult {
  double a_hat;
  double c_hat;
  double b;              // log power, fixed or fitted
  bool b_fitted;
  double rms_residual;   // in log space
  std::size_t sample_count;
  std::size_t dropped;   // samples removed before fitting (Z = 0, or x <= 1 when a log power is used)
  double loo_sensitivity;  // max change in a_hat when one sample is left out
};

namespace detail {

/// loglogx is all zero when no log power is in play.
struct Design {
  std::vector<long double> logx, loglogx, logz;
};

struct RawFit {
  long double a, logc, b, rms;
};

/// Least squares for log Z = log c + a log x + b log log x, b fixed unless `log_power` is empty.
inline RawFit solve_fit(const Design& d, std::optional<double> log_power, std::size_t skip = SIZE_MAX) {
  std::size_t n = 0;
  long double mx = 0, ml = 0, my = 0;
  auto target = [&](std::size_t i) {
    return log_power ? d.logz[i] - static_cast<long double>(*log_power) * d.loglogx[i] : d.logz[i];
  };
  for (std::size_t i = 0; i < d.logx.size(); ++i) {
    if (i == skip) continue;
    ++n;
    mx += d.logx[i];
    ml += d.loglogx[i];
    my += target(i);
  }
  mx /= n;
  ml /= n;
  my /= n;
  long double sxx = 0, sll = 0, sxl = 0, sxy = 0, sly = 0;
  for (std::size_t i = 0; i < d.logx.size(); ++i) {
    if (i == skip) continue;
    long double dx = d.logx[i] - mx, dl = d.loglogx[i] - ml, dy = target(i) - my;
    sxx += dx * dx;
    sll += dl * dl;
    sxl += dx * dl;
    sxy += dx * dy;
    sly += dl * dy;
  }
  RawFit r{};
  if (log_power) {
    if (!(sxx > 0)) throw DegenerateDesign("all samples share one x");
    r.a = sxy / sxx;
    r.b = *log_power;
    r.logc = my - r.a * mx;
  } else {
    long double det = sxx * sll - sxl * sxl;
    if (!(det > 1e-12L * sxx * sll)) throw DegenerateDesign("log x and log log x are collinear on these samples");
    r.a = (sxy * sll - sly * sxl) / det;
    r.b = (sly * sxx - sxy * sxl) / det;
    r.logc = my - r.a * mx - r.b * ml;
  }
  long double ss = 0;
  for (std::size_t i = 0; i < d.logx.size(); ++i) {
    if (i == skip) continue;
    long double pred = r.logc + r.a * d.logx[i] + r.b * d.loglogx[i];
    long double e = d.logz[i] - pred;
    ss += e * e;
  }
  r.rms = std::sqrt(ss / n);
  return r;
}

}  // namespace detail

/**
 * Ordinary least squares in log space for Z(x) ~ c x^a (log x)^b.
 *
 * `log_power` fixes b; std::nullopt fits it. Samples with Z = 0 are dropped,
 * as are samples with x <= 1 whenever b is nonzero or free. Needs at least
 * three distinct x after dropping.
 */
inline FitResult fit_exponent(std::span<const Sample> samples, std::optional<double> log_power) {
  bool uses_loglog = !log_power || *log_power != 0.0;
  detail::Design d;
  std::set<std::uint64_t> distinct;
  std::size_t dropped = 0;
  for (const auto& s : samples) {
    if (s.count == 0 || s.x == 0 || (uses_loglog && s.x <= 1)) {
      ++dropped;
      continue;
    }
    long double lx = std::log(static_cast<long double>(s.x));
    d.logx.push_back(lx);
    d.loglogx.push_back(uses_loglog ? std::log(lx) : 0.0L);
    d.logz.push_back(std::log(static_cast<long double>(s.count)));
    distinct.insert(s.x);
  }
  if (distinct.size() < 3)
    throw InsufficientSamples("need at least 3 usable samples with distinct x, have " +
                              std::to_string(distinct.size()));
  auto full = detail::solve_fit(d, log_power);

  long double sensitivity = 0;
  for (std::size_t i = 0; i < d.logx.size(); ++i) {
    try {
      auto part = detail::solve_fit(d, log_power, i);
      sensitivity = std::max(sensitivity, std::fabs(part.a - full.a));
    } catch (const DegenerateDesign&) {
      // leaving this sample out leaves too little spread; no contribution
    }
  }
  return {static_cast<double>(full.a),
          static_cast<double>(std::exp(full.logc)),
          static_cast<double>(full.b),
          !log_power,
          static_cast<double>(full.rms),
          d.logx.size(),
          dropped,
          static_cast<double>(sensitivity)};
}

struct Verdict {
  Fraction predicted;
  FitResult fitted;
  bool within_tolerance;
  double tolerance;
};

/// Compares the fitted exponent with a(G). Evidence only: the growth law is conjectural.
inline Verdict conjecture_verdict(const PermGroup& group, std::span<const Sample> samples, double tolerance,
                                  std::optional<double> log_power = std::nullopt,
                                  std::size_t cap = kDefaultCap) {
  if (!(tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
  Fraction a = a_invariant(group, cap);
  FitResult fit = fit_exponent(samples, log_power);
  return {a, fit, std::fabs(fit.a_hat - a.to_double()) <= tolerance, tolerance};
}

}  // namespace galcount
