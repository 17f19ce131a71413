/**
 * @file problems.hpp
 * @brief Benchmark suite: SCH, ZDT1-3 and LZ with analytic fronts, plus the
 *        welded-beam and disc-brake constrained design problems.
 *
 * Evaluators are pure and throw std::invalid_argument for designs outside
 * their box or of the wrong dimension.
 */

#ifndef MOFA_PROBLEMS_HPP
#define MOFA_PROBLEMS_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mofa/types.hpp"

namespace mofa {

/// Thrown when an operation needs an analytic front the problem does not have.
class UnsupportedOperation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct ProblemDefinition {
  using Evaluator = std::function<ObjectiveVector(std::span<const double>)>;
  using ConstraintMap = std::function<std::vector<double>(std::span<const double>)>;
  using FrontSampler = std::function<std::vector<ObjectiveVector>(std::size_t)>;

  std::string name;
  std::size_t dimension;
  std::size_t objective_count;
  BoundsBox bounds;
  Evaluator evaluate;
  ConstraintMap constraints;     ///< empty function for unconstrained problems
  FrontSampler reference_front;  ///< empty function when no analytic front exists

  [[nodiscard]] bool constrained() const noexcept { return static_cast<bool>(constraints); }
  [[nodiscard]] bool has_reference_front() const noexcept { return static_cast<bool>(reference_front); }

  /// All g_i(x) <= tolerance; unconstrained problems are always feasible.
  [[nodiscard]] bool feasible(std::span<const double> x, double tolerance = 0.0) const;
};

namespace problems {

inline constexpr std::size_t kZdtDimension = 30;
inline constexpr std::size_t kLzDefaultDimension = 30;

// Raw evaluators. x must lie inside the corresponding box.
[[nodiscard]] ObjectiveVector sch_evaluate(std::span<const double> x);
[[nodiscard]] ObjectiveVector zdt1_evaluate(std::span<const double> x);
[[nodiscard]] ObjectiveVector zdt2_evaluate(std::span<const double> x);
[[nodiscard]] ObjectiveVector zdt3_evaluate(std::span<const double> x);
[[nodiscard]] ObjectiveVector lz_evaluate(std::span<const double> x);

/// Design (w, L, d, h); returns (fabrication cost, end deflection).
[[nodiscard]] ObjectiveVector welded_beam_evaluate(std::span<const double> x);
/// g1..g7, feasible iff all <= 0.
[[nodiscard]] std::vector<double> welded_beam_constraints(std::span<const double> x);

/// Design (r, R, F, s); s is rounded to the nearest integer before use.
[[nodiscard]] ObjectiveVector disc_brake_evaluate(std::span<const double> x);
/// g1..g5, feasible iff all <= 0.
[[nodiscard]] std::vector<double> disc_brake_constraints(std::span<const double> x);

[[nodiscard]] ProblemDefinition sch();
[[nodiscard]] ProblemDefinition zdt1();
[[nodiscard]] ProblemDefinition zdt2();
[[nodiscard]] ProblemDefinition zdt3();
[[nodiscard]] ProblemDefinition lz(std::size_t dimension = kLzDefaultDimension);
[[nodiscard]] ProblemDefinition welded_beam();
[[nodiscard]] ProblemDefinition disc_brake();

/// Registry names in listing order: sch, zdt1, zdt2, zdt3, lz, beam, brake.
[[nodiscard]] const std::vector<std::string>& registry_names();

/// Throws std::out_of_range for unknown names.
[[nodiscard]] ProblemDefinition make(std::string_view name);

[[nodiscard]] bool exists(std::string_view name);

}  // namespace problems

/**
 * @brief m points of the analytic Pareto front, sorted by f1.
 *
 * Throws UnsupportedOperation for problems without an analytic front and
 * std::invalid_argument for m < 2.
 */
[[nodiscard]] std::vector<ObjectiveVector> reference_front(const ProblemDefinition& problem, std::size_t m);

}  // namespace mofa

#endif  // MOFA_PROBLEMS_HPP
