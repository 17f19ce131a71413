#include "mofa/types.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mofa {

BoundsBox::BoundsBox(std::vector<double> lower, std::vector<double> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.empty()) throw std::invalid_argument("bounds: dimension must be positive");
  if (lower_.size() != upper_.size()) throw std::invalid_argument("bounds: lower/upper length mismatch");
  for (std::size_t i = 0; i < lower_.size(); ++i) {
    const double len = upper_[i] - lower_[i];
    if (!(lower_[i] < upper_[i]) || !std::isfinite(len)) {
      throw std::invalid_argument("bounds: invalid interval on axis " + std::to_string(i));
    }
  }
}

BoundsBox BoundsBox::uniform(std::size_t dimension, double lower, double upper) {
  return BoundsBox(std::vector<double>(dimension, lower), std::vector<double>(dimension, upper));
}

bool BoundsBox::contains(std::span<const double> x) const noexcept {
  if (x.size() != lower_.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] >= lower_[i] && x[i] <= upper_[i])) return false;
  }
  return true;
}

void BoundsBox::clamp(std::span<double> x) const noexcept {
  for (std::size_t i = 0; i < x.size() && i < lower_.size(); ++i) {
    x[i] = std::clamp(x[i], lower_[i], upper_[i]);
  }
}

}  // namespace mofa
