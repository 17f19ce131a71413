#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace oracle {

std::vector<std::size_t> pairwise_filter(const std::vector<Point>& pts) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool beaten = false;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (i == j) continue;
      std::size_t no_worse = 0, better = 0;
      for (std::size_t k = 0; k < pts[i].size(); ++k) {
        no_worse += pts[j][k] <= pts[i][k];
        better += pts[j][k] < pts[i][k];
      }
      if (no_worse == pts[i].size() && better > 0) {
        beaten = true;
        break;
      }
    }
    if (!beaten) out.push_back(i);
  }
  return out;
}

double nearest_squared(const Point& q, const std::vector<Point>& ref) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& r : ref) {
    double s = 0.0;
    for (std::size_t k = 0; k < q.size(); ++k) s += (q[k] - r[k]) * (q[k] - r[k]);
    best = std::min(best, s);
  }
  return best;
}

double front_error(const std::vector<Point>& est, const std::vector<Point>& ref) {
  double total = 0.0;
  for (const auto& p : est) total += nearest_squared(p, ref);
  return total;
}

std::vector<double> welded_beam(double w, double len, double d, double h) {
  const double sigma = 504000.0 / (h * d * d);
  const double q = 6000.0 * (14.0 + len / 2.0);
  const double big_d = 0.5 * std::sqrt(len * len + (w + d) * (w + d));
  const double j = std::sqrt(2.0) * w * len * (len * len / 6.0 + (w + d) * (w + d) / 2.0);
  const double delta = 65856.0 / (30000.0 * h * d * d * d);
  const double beta = q * big_d / j;
  const double alpha = 6000.0 / (std::sqrt(2.0) * w * len);
  const double tau = std::sqrt(alpha * alpha + alpha * beta * len / big_d + beta * beta);
  const double p = 0.61423e6 * d * h * h * h / 6.0 * (1.0 - d * std::sqrt(30.0 / 48.0) / 28.0);
  return {
      1.10471 * w * w * len + 0.04811 * d * h * (14.0 + len),
      delta,
      w - h,
      delta - 0.25,
      tau - 13600.0,
      sigma - 30000.0,
      0.10471 * w * w + 0.04811 * h * d * (14.0 + len) - 5.0,
      0.125 - w,
      6000.0 - p,
  };
}

std::vector<double> disc_brake(double r, double big_r, double force, double s) {
  const double r2 = big_r * big_r - r * r;
  const double r3 = big_r * big_r * big_r - r * r * r;
  return {
      4.9e-5 * r2 * (s - 1.0),
      9.82e6 * r2 / (force * s * r3),
      20.0 - (big_r - r),
      2.5 * (s + 1.0) - 30.0,
      force / (3.14 * r2) - 0.4,
      2.22e-3 * force * r3 / (r2 * r2) - 1.0,
      900.0 - 0.0266 * force * s * r3 / r2,
  };
}

std::vector<Point> random_points(std::size_t n, std::size_t k, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> grid(0, 9);
  std::vector<Point> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double mode = unit(rng);
    Point p(k);
    if (mode < 0.1 && !pts.empty()) {
      p = pts[std::uniform_int_distribution<std::size_t>(0, pts.size() - 1)(rng)];
    } else if (mode < 0.4) {
      for (auto& v : p) v = grid(rng) / 10.0;
    } else {
      for (auto& v : p) v = unit(rng);
    }
    pts.push_back(std::move(p));
  }
  return pts;
}

double relative_error(double got, double want) {
  const double scale = std::max(std::abs(want), 1e-300);
  return std::abs(got - want) / scale;
}

}  // namespace oracle
