/**
 * @file types.hpp
 * @brief Vocabulary types shared by the Pareto toolkit, the engine and the problem suite.
 */

#ifndef MOFA_TYPES_HPP
#define MOFA_TYPES_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace mofa {

/// Point in the box-bounded search space.
using DesignVector = std::vector<double>;

/// Objective values of one design, all minimized.
using ObjectiveVector = std::vector<double>;

/**
 * @brief Axis-aligned search box.
 *
 * Construction validates lower[i] < upper[i] with finite side lengths.
 */
class BoundsBox {
 public:
  BoundsBox(std::vector<double> lower, std::vector<double> upper);

  /// Same interval on every axis.
  static BoundsBox uniform(std::size_t dimension, double lower, double upper);

  [[nodiscard]] std::size_t dimension() const noexcept { return lower_.size(); }
  [[nodiscard]] const std::vector<double>& lower() const noexcept { return lower_; }
  [[nodiscard]] const std::vector<double>& upper() const noexcept { return upper_; }

  /// Side length upper[i] - lower[i].
  [[nodiscard]] double side(std::size_t i) const noexcept { return upper_[i] - lower_[i]; }

  [[nodiscard]] bool contains(std::span<const double> x) const noexcept;

  /// Componentwise projection onto the box.
  void clamp(std::span<double> x) const noexcept;

 private:
  std::vector<double> lower_;
  std::vector<double> upper_;
};

}  // namespace mofa

#endif  // MOFA_TYPES_HPP
