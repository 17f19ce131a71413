/**
 * @file pareto.hpp
 * @brief Dominance relations, non-dominated filtering, the bounded Pareto archive,
 *        random weights, weighted scalarization and front-quality metrics.
 *
 * All objectives are minimized. Every function validates its inputs and throws
 * std::invalid_argument on length mismatch, empty input or non-finite values.
 */

#ifndef MOFA_PARETO_HPP
#define MOFA_PARETO_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "mofa/types.hpp"

namespace mofa {

/// True iff u is no worse than v everywhere and strictly better somewhere.
[[nodiscard]] bool dominates(std::span<const double> u, std::span<const double> v);

/// u dominates v, or u equals v componentwise.
[[nodiscard]] bool dominates_or_equal(std::span<const double> u, std::span<const double> v);

/**
 * @brief Indices of the points not dominated by any other point, ascending.
 *
 * Duplicated objective vectors are all kept. Two-objective inputs use an
 * O(n log n) sweep; higher dimensions fall back to pairwise comparison.
 */
[[nodiscard]] std::vector<std::size_t> non_dominated_filter(std::span<const ObjectiveVector> points);

/// Non-negative weights summing to one.
class WeightVector {
 public:
  /// Validates the simplex invariant to within 1e-12.
  explicit WeightVector(std::vector<double> weights);

  [[nodiscard]] std::size_t size() const noexcept { return weights_.size(); }
  [[nodiscard]] double operator[](std::size_t k) const noexcept { return weights_[k]; }
  [[nodiscard]] const std::vector<double>& values() const noexcept { return weights_; }

 private:
  std::vector<double> weights_;
};

/// Normalizes raw non-negative draws p_k to p_k / sum(p).
[[nodiscard]] WeightVector normalize_weights(std::span<const double> draws);

/// K uniform draws on [0,1], normalized; redrawn if they sum to zero.
[[nodiscard]] WeightVector random_weights(std::size_t objective_count, std::mt19937_64& rng);

/// psi = sum_k w_k f_k.
[[nodiscard]] double weighted_scalarize(std::span<const double> objectives, const WeightVector& w);

struct ArchiveEntry {
  DesignVector design;
  ObjectiveVector objectives;
};

enum class InsertOutcome : std::uint8_t {
  kAdded,      ///< entry stored (possibly evicting dominated entries or a crowded one)
  kDominated,  ///< an existing entry dominates the candidate
  kDuplicate,  ///< identical objective vector already stored
};

/**
 * @brief Mutually non-dominated set of (design, objectives) pairs with a size cap.
 *
 * Entries are kept in insertion order. When an insertion exceeds the capacity
 * the entry with the smallest crowding distance is evicted; per-objective
 * extremes have infinite crowding distance and survive. Among equal minimal
 * distances the entry stored last goes first.
 */
class ParetoArchive {
 public:
  static constexpr std::size_t kDefaultCapacity = 100;

  explicit ParetoArchive(std::size_t capacity = kDefaultCapacity);

  /// Throws std::invalid_argument on non-finite objectives, leaving the archive unchanged.
  InsertOutcome insert(DesignVector design, ObjectiveVector objectives);

  [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
  [[nodiscard]] bool empty() const noexcept { return entries_.empty(); }
  [[nodiscard]] std::size_t capacity() const noexcept { return capacity_; }
  [[nodiscard]] const std::vector<ArchiveEntry>& entries() const noexcept { return entries_; }

  [[nodiscard]] std::vector<ObjectiveVector> objective_vectors() const;

 private:
  void truncate_one();

  std::size_t capacity_;
  std::vector<ArchiveEntry> entries_;
};

/// NSGA-II crowding distance of each point; extremes get +infinity.
[[nodiscard]] std::vector<double> crowding_distances(std::span<const ObjectiveVector> points);

/// Index of the point to drop when thinning a set: smallest crowding
/// distance, the last such index on ties.
[[nodiscard]] std::size_t most_crowded(std::span<const ObjectiveVector> points);

/**
 * @brief Reference front indexed for exact nearest-point queries.
 *
 * points() stays sorted lexicographically; queries run against a flat k-d tree
 * built over a copy, so fronts with millions of samples stay cheap.
 */
class ReferenceFront {
 public:
  explicit ReferenceFront(std::vector<ObjectiveVector> points);

  [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }
  [[nodiscard]] std::size_t objective_count() const noexcept { return objective_count_; }
  [[nodiscard]] const std::vector<ObjectiveVector>& points() const noexcept { return points_; }

  /// Squared Euclidean distance to the closest reference point.
  [[nodiscard]] double nearest_squared_distance(std::span<const double> query) const;

 private:
  void build(std::vector<std::size_t>& order, std::size_t lo, std::size_t hi, std::size_t depth);
  void search(std::span<const double> query, std::size_t lo, std::size_t hi, std::size_t depth, double& best) const;

  std::vector<ObjectiveVector> points_;
  std::size_t objective_count_;
  std::vector<double> tree_;  // row-major, objective_count_ values per node
};

/// E_f: sum over estimated points of the squared distance to the nearest reference point.
[[nodiscard]] double front_error(std::span<const ObjectiveVector> estimated, const ReferenceFront& reference);
[[nodiscard]] double front_error(std::span<const ObjectiveVector> estimated,
                                 std::span<const ObjectiveVector> reference);

/// D_g = sqrt(E_f) / N with N the number of estimated points.
[[nodiscard]] double generational_distance(std::span<const ObjectiveVector> estimated,
                                           const ReferenceFront& reference);
[[nodiscard]] double generational_distance(std::span<const ObjectiveVector> estimated,
                                           std::span<const ObjectiveVector> reference);

}  // namespace mofa

#endif  // MOFA_PARETO_HPP
