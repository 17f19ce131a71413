#include "mofa/problems.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mofa/pareto.hpp"

namespace mofa {

bool ProblemDefinition::feasible(std::span<const double> x, double tolerance) const {
  if (!constraints) return true;
  const auto g = constraints(x);
  return std::all_of(g.begin(), g.end(), [tolerance](double v) { return v <= tolerance; });
}

namespace problems {

namespace {

constexpr double kPi = std::numbers::pi;

void require_in(const BoundsBox& box, std::span<const double> x, const char* name) {
  if (x.size() != box.dimension()) {
    throw std::invalid_argument(std::string(name) + ": expected " + std::to_string(box.dimension()) +
                                " variables, got " + std::to_string(x.size()));
  }
  if (!box.contains(x)) throw std::invalid_argument(std::string(name) + ": design outside bounds");
}

const BoundsBox& sch_box() {
  static const BoundsBox box = BoundsBox::uniform(1, -1000.0, 1000.0);
  return box;
}

const BoundsBox& zdt_box() {
  static const BoundsBox box = BoundsBox::uniform(kZdtDimension, 0.0, 1.0);
  return box;
}

BoundsBox lz_box(std::size_t d) {
  std::vector<double> lo(d, -1.0);
  std::vector<double> hi(d, 1.0);
  lo[0] = 0.0;
  return BoundsBox(std::move(lo), std::move(hi));
}

const BoundsBox& beam_box() {
  static const BoundsBox box({0.125, 0.1, 0.1, 0.125}, {2.0, 10.0, 10.0, 2.0});
  return box;
}

const BoundsBox& brake_box() {
  static const BoundsBox box({55.0, 75.0, 1000.0, 2.0}, {80.0, 110.0, 3000.0, 20.0});
  return box;
}

double zdt_g(std::span<const double> x) {
  double tail = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) tail += x[i];
  return 1.0 + 9.0 * tail / static_cast<double>(x.size() - 1);
}

struct BeamTerms {
  double cost;
  double deflection;
  double shear;
  double bending;
  double buckling;
};

BeamTerms beam_terms(std::span<const double> x) {
  const double w = x[0], len = x[1], d = x[2], h = x[3];
  const double sqrt2 = std::numbers::sqrt2;
  const double q = 6000.0 * (14.0 + len / 2.0);
  const double radius = 0.5 * std::sqrt(len * len + (w + d) * (w + d));
  const double inertia = sqrt2 * w * len * (len * len / 6.0 + (w + d) * (w + d) / 2.0);
  const double primary = 6000.0 / (sqrt2 * w * len);
  const double secondary = q * radius / inertia;
  BeamTerms t{};
  t.cost = 1.10471 * w * w * len + 0.04811 * d * h * (14.0 + len);
  t.deflection = 65856.0 / (30000.0 * h * d * d * d);
  t.shear = std::sqrt(primary * primary + primary * secondary * len / radius + secondary * secondary);
  t.bending = 504000.0 / (h * d * d);
  t.buckling = 0.61423e6 * (d * h * h * h / 6.0) * (1.0 - d * std::sqrt(30.0 / 48.0) / 28.0);
  return t;
}

struct BrakeTerms {
  double area;   // R^2 - r^2
  double cubes;  // R^3 - r^3
  double force;
  double surfaces;
};

BrakeTerms brake_terms(std::span<const double> x) {
  const double r = x[0], big_r = x[1];
  return {big_r * big_r - r * r, big_r * big_r * big_r - r * r * r, x[2], std::round(x[3])};
}

std::vector<ObjectiveVector> sample_curve(std::size_t m, double (*f2)(double)) {
  std::vector<ObjectiveVector> out;
  out.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    const double f1 = static_cast<double>(k) / static_cast<double>(m - 1);
    out.push_back({f1, f2(f1)});
  }
  return out;
}

}  // namespace

ObjectiveVector sch_evaluate(std::span<const double> x) {
  require_in(sch_box(), x, "sch");
  return {x[0] * x[0], (x[0] - 2.0) * (x[0] - 2.0)};
}

ObjectiveVector zdt1_evaluate(std::span<const double> x) {
  require_in(zdt_box(), x, "zdt1");
  const double g = zdt_g(x);
  return {x[0], g * (1.0 - std::sqrt(x[0] / g))};
}

ObjectiveVector zdt2_evaluate(std::span<const double> x) {
  require_in(zdt_box(), x, "zdt2");
  const double g = zdt_g(x);
  const double ratio = x[0] / g;
  return {x[0], g * (1.0 - ratio * ratio)};
}

ObjectiveVector zdt3_evaluate(std::span<const double> x) {
  require_in(zdt_box(), x, "zdt3");
  const double g = zdt_g(x);
  const double ratio = x[0] / g;
  return {x[0], g * (1.0 - std::sqrt(ratio) - ratio * std::sin(10.0 * kPi * x[0]))};
}

ObjectiveVector lz_evaluate(std::span<const double> x) {
  if (x.size() < 3) throw std::invalid_argument("lz: need at least 3 variables");
  require_in(lz_box(x.size()), x, "lz");
  const double d = static_cast<double>(x.size());
  double odd_sum = 0.0, even_sum = 0.0;
  std::size_t odd_count = 0, even_count = 0;
  for (std::size_t j = 2; j <= x.size(); ++j) {
    const double residual = x[j - 1] - std::sin(6.0 * kPi * x[0] + static_cast<double>(j) * kPi / d);
    if (j % 2 == 1) {
      odd_sum += residual * residual;
      ++odd_count;
    } else {
      even_sum += residual * residual;
      ++even_count;
    }
  }
  return {x[0] + 2.0 / static_cast<double>(odd_count) * odd_sum,
          1.0 - std::sqrt(x[0]) + 2.0 / static_cast<double>(even_count) * even_sum};
}

ObjectiveVector welded_beam_evaluate(std::span<const double> x) {
  require_in(beam_box(), x, "beam");
  const auto t = beam_terms(x);
  return {t.cost, t.deflection};
}

std::vector<double> welded_beam_constraints(std::span<const double> x) {
  require_in(beam_box(), x, "beam");
  const double w = x[0], len = x[1], d = x[2], h = x[3];
  const auto t = beam_terms(x);
  return {
      w - h,
      t.deflection - 0.25,
      t.shear - 13600.0,
      t.bending - 30000.0,
      0.10471 * w * w + 0.04811 * h * d * (14.0 + len) - 5.0,
      0.125 - w,
      6000.0 - t.buckling,
  };
}

// At R == r the mass term vanishes and the braking time is 0/0; such designs
// violate g1 anyway and the engine discards non-finite evaluations.
ObjectiveVector disc_brake_evaluate(std::span<const double> x) {
  require_in(brake_box(), x, "brake");
  const auto t = brake_terms(x);
  return {4.9e-5 * t.area * (t.surfaces - 1.0), 9.82e6 * t.area / (t.force * t.surfaces * t.cubes)};
}

std::vector<double> disc_brake_constraints(std::span<const double> x) {
  require_in(brake_box(), x, "brake");
  const auto t = brake_terms(x);
  return {
      20.0 - (x[1] - x[0]),
      2.5 * (t.surfaces + 1.0) - 30.0,
      t.force / (3.14 * t.area) - 0.4,
      2.22e-3 * t.force * t.cubes / (t.area * t.area) - 1.0,
      900.0 - 0.0266 * t.force * t.surfaces * t.cubes / t.area,
  };
}

ProblemDefinition sch() {
  return {"sch", 1, 2, sch_box(), sch_evaluate, {}, [](std::size_t m) {
            std::vector<ObjectiveVector> out;
            out.reserve(m);
            for (std::size_t k = 0; k < m; ++k) {
              const double x = 2.0 * static_cast<double>(k) / static_cast<double>(m - 1);
              out.push_back({x * x, (x - 2.0) * (x - 2.0)});
            }
            return out;
          }};
}

ProblemDefinition zdt1() {
  return {"zdt1", kZdtDimension, 2, zdt_box(), zdt1_evaluate, {},
          [](std::size_t m) { return sample_curve(m, [](double f1) { return 1.0 - std::sqrt(f1); }); }};
}

ProblemDefinition zdt2() {
  return {"zdt2", kZdtDimension, 2, zdt_box(), zdt2_evaluate, {},
          [](std::size_t m) { return sample_curve(m, [](double f1) { return 1.0 - f1 * f1; }); }};
}

ProblemDefinition zdt3() {
  return {"zdt3", kZdtDimension, 2, zdt_box(), zdt3_evaluate, {}, [](std::size_t m) {
            std::vector<ObjectiveVector> grid;
            grid.reserve(m);
            for (std::size_t k = 0; k < m; ++k) {
              const double x1 = static_cast<double>(k) / static_cast<double>(m - 1);
              grid.push_back({x1, 1.0 - std::sqrt(x1) - x1 * std::sin(10.0 * kPi * x1)});
            }
            std::vector<ObjectiveVector> out;
            for (std::size_t i : non_dominated_filter(grid)) out.push_back(std::move(grid[i]));
            return out;
          }};
}

ProblemDefinition lz(std::size_t dimension) {
  if (dimension < 3) throw std::invalid_argument("lz: dimension must be at least 3");
  return {"lz", dimension, 2, lz_box(dimension), lz_evaluate, {},
          [](std::size_t m) { return sample_curve(m, [](double f1) { return 1.0 - std::sqrt(f1); }); }};
}

ProblemDefinition welded_beam() {
  return {"beam", 4, 2, beam_box(), welded_beam_evaluate, welded_beam_constraints, {}};
}

ProblemDefinition disc_brake() {
  return {"brake", 4, 2, brake_box(), disc_brake_evaluate, disc_brake_constraints, {}};
}

const std::vector<std::string>& registry_names() {
  static const std::vector<std::string> names{"sch", "zdt1", "zdt2", "zdt3", "lz", "beam", "brake"};
  return names;
}

ProblemDefinition make(std::string_view name) {
  if (name == "sch") return sch();
  if (name == "zdt1") return zdt1();
  if (name == "zdt2") return zdt2();
  if (name == "zdt3") return zdt3();
  if (name == "lz") return lz();
  if (name == "beam") return welded_beam();
  if (name == "brake") return disc_brake();
  throw std::out_of_range("unknown problem '" + std::string(name) + "'");
}

bool exists(std::string_view name) {
  const auto& names = registry_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

}  // namespace problems

std::vector<ObjectiveVector> reference_front(const ProblemDefinition& problem, std::size_t m) {
  if (!problem.has_reference_front()) {
    throw UnsupportedOperation("problem '" + problem.name + "' has no analytic reference front");
  }
  if (m < 2) throw std::invalid_argument("reference_front: need at least 2 samples");
  return problem.reference_front(m);
}

}  // namespace mofa
