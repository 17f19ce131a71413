#include "mofa/pareto.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mofa {

namespace {

void require_finite(std::span<const double> v, const char* what) {
  for (double x : v) {
    if (!std::isfinite(x)) throw std::invalid_argument(std::string(what) + ": non-finite objective value");
  }
}

void require_comparable(std::span<const double> u, std::span<const double> v) {
  if (u.empty() || u.size() != v.size()) throw std::invalid_argument("dominance: objective vector length mismatch");
  require_finite(u, "dominance");
  require_finite(v, "dominance");
}

// Assumes validated inputs.
bool dominates_unchecked(std::span<const double> u, std::span<const double> v) noexcept {
  bool strictly_better = false;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] > v[i]) return false;
    if (u[i] < v[i]) strictly_better = true;
  }
  return strictly_better;
}

std::size_t validate_set(std::span<const ObjectiveVector> points, const char* what) {
  if (points.empty()) throw std::invalid_argument(std::string(what) + ": empty point set");
  const std::size_t k = points.front().size();
  if (k == 0) throw std::invalid_argument(std::string(what) + ": zero-length objective vector");
  for (const auto& p : points) {
    if (p.size() != k) throw std::invalid_argument(std::string(what) + ": objective vector length mismatch");
    require_finite(p, what);
  }
  return k;
}

std::vector<std::size_t> filter_two_objectives(std::span<const ObjectiveVector> points) {
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (points[a][0] != points[b][0]) return points[a][0] < points[b][0];
    if (points[a][1] != points[b][1]) return points[a][1] < points[b][1];
    return a < b;
  });

  std::vector<std::size_t> kept;
  double best_f2_before = std::numeric_limits<double>::infinity();  // over strictly smaller f1
  std::size_t g = 0;
  while (g < order.size()) {
    std::size_t end = g;
    while (end < order.size() && points[order[end]][0] == points[order[g]][0]) ++end;
    const double group_min = points[order[g]][1];
    for (std::size_t k = g; k < end; ++k) {
      const double f2 = points[order[k]][1];
      if (best_f2_before <= f2) continue;
      if (group_min < f2) continue;
      kept.push_back(order[k]);
    }
    best_f2_before = std::min(best_f2_before, group_min);
    g = end;
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace

bool dominates(std::span<const double> u, std::span<const double> v) {
  require_comparable(u, v);
  return dominates_unchecked(u, v);
}

bool dominates_or_equal(std::span<const double> u, std::span<const double> v) {
  require_comparable(u, v);
  return std::equal(u.begin(), u.end(), v.begin()) || dominates_unchecked(u, v);
}

std::vector<std::size_t> non_dominated_filter(std::span<const ObjectiveVector> points) {
  const std::size_t k = validate_set(points, "non_dominated_filter");
  if (k == 2) return filter_two_objectives(points);

  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < points.size() && !dominated; ++j) {
      dominated = j != i && dominates_unchecked(points[j], points[i]);
    }
    if (!dominated) kept.push_back(i);
  }
  return kept;
}

WeightVector::WeightVector(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.size() < 2) throw std::invalid_argument("weights: need at least two objectives");
  double sum = 0.0;
  for (double w : weights_) {
    if (!(w >= 0.0 && w <= 1.0)) throw std::invalid_argument("weights: component outside [0,1]");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12) throw std::invalid_argument("weights: components do not sum to one");
}

WeightVector normalize_weights(std::span<const double> draws) {
  if (draws.size() < 2) throw std::invalid_argument("weights: need at least two objectives");
  double sum = 0.0;
  for (double p : draws) {
    if (!(p >= 0.0) || !std::isfinite(p)) throw std::invalid_argument("weights: draws must be finite and non-negative");
    sum += p;
  }
  if (!(sum > 0.0)) throw std::invalid_argument("weights: draws sum to zero");
  std::vector<double> w(draws.size());
  std::transform(draws.begin(), draws.end(), w.begin(), [sum](double p) { return p / sum; });
  return WeightVector(std::move(w));
}

WeightVector random_weights(std::size_t objective_count, std::mt19937_64& rng) {
  if (objective_count < 2) throw std::invalid_argument("random_weights: need at least two objectives");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> draws(objective_count);
  for (;;) {
    double sum = 0.0;
    for (double& p : draws) {
      p = unit(rng);
      sum += p;
    }
    if (sum > 0.0) return normalize_weights(draws);
  }
}

double weighted_scalarize(std::span<const double> objectives, const WeightVector& w) {
  if (objectives.size() != w.size()) throw std::invalid_argument("weighted_scalarize: length mismatch");
  double psi = 0.0;
  for (std::size_t k = 0; k < objectives.size(); ++k) psi += w[k] * objectives[k];
  return psi;
}

// ---------------------------------------------------------------------------

std::vector<double> crowding_distances(std::span<const ObjectiveVector> points) {
  std::vector<double> distance(points.size(), 0.0);
  if (points.empty()) return distance;
  const std::size_t k_count = points.front().size();
  std::vector<std::size_t> order(points.size());
  for (std::size_t k = 0; k < k_count; ++k) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return points[a][k] < points[b][k]; });
    const double lo = points[order.front()][k];
    const double hi = points[order.back()][k];
    if (!(hi > lo)) continue;
    distance[order.front()] = std::numeric_limits<double>::infinity();
    distance[order.back()] = std::numeric_limits<double>::infinity();
    for (std::size_t r = 1; r + 1 < order.size(); ++r) {
      distance[order[r]] += (points[order[r + 1]][k] - points[order[r - 1]][k]) / (hi - lo);
    }
  }
  return distance;
}

ParetoArchive::ParetoArchive(std::size_t capacity) : capacity_(capacity) {
  if (capacity_ == 0) throw std::invalid_argument("archive: capacity must be positive");
}

InsertOutcome ParetoArchive::insert(DesignVector design, ObjectiveVector objectives) {
  require_finite(objectives, "archive_insert");
  if (objectives.empty()) throw std::invalid_argument("archive_insert: empty objective vector");
  if (!entries_.empty() && entries_.front().objectives.size() != objectives.size()) {
    throw std::invalid_argument("archive_insert: objective vector length mismatch");
  }

  for (const auto& e : entries_) {
    if (e.objectives == objectives) return InsertOutcome::kDuplicate;
    if (dominates_unchecked(e.objectives, objectives)) return InsertOutcome::kDominated;
  }
  std::erase_if(entries_, [&](const ArchiveEntry& e) { return dominates_unchecked(objectives, e.objectives); });
  entries_.push_back({std::move(design), std::move(objectives)});
  if (entries_.size() > capacity_) truncate_one();
  return InsertOutcome::kAdded;
}

std::vector<ObjectiveVector> ParetoArchive::objective_vectors() const {
  std::vector<ObjectiveVector> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.objectives);
  return out;
}

std::size_t most_crowded(std::span<const ObjectiveVector> points) {
  if (points.empty()) throw std::invalid_argument("most_crowded: empty point set");
  const auto distance = crowding_distances(points);
  std::size_t victim = 0;
  for (std::size_t i = 1; i < distance.size(); ++i) {
    if (distance[i] <= distance[victim]) victim = i;
  }
  return victim;
}

void ParetoArchive::truncate_one() {
  const auto victim = most_crowded(objective_vectors());
  entries_.erase(entries_.begin() + static_cast<std::ptrdiff_t>(victim));
}

// ---------------------------------------------------------------------------

ReferenceFront::ReferenceFront(std::vector<ObjectiveVector> points)
    : points_(std::move(points)), objective_count_(validate_set(points_, "reference front")) {
  std::sort(points_.begin(), points_.end());
  std::vector<std::size_t> order(points_.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  build(order, 0, order.size(), 0);
  tree_.reserve(points_.size() * objective_count_);
  for (std::size_t i : order) tree_.insert(tree_.end(), points_[i].begin(), points_[i].end());
}

// Implicit k-d tree: the median of [lo, hi) along axis depth % K sits at the midpoint.
void ReferenceFront::build(std::vector<std::size_t>& order, std::size_t lo, std::size_t hi, std::size_t depth) {
  if (hi - lo <= 1) return;
  const std::size_t mid = lo + (hi - lo) / 2;
  const std::size_t axis = depth % objective_count_;
  std::nth_element(order.begin() + static_cast<std::ptrdiff_t>(lo), order.begin() + static_cast<std::ptrdiff_t>(mid),
                   order.begin() + static_cast<std::ptrdiff_t>(hi),
                   [&](std::size_t a, std::size_t b) { return points_[a][axis] < points_[b][axis]; });
  build(order, lo, mid, depth + 1);
  build(order, mid + 1, hi, depth + 1);
}

void ReferenceFront::search(std::span<const double> query, std::size_t lo, std::size_t hi, std::size_t depth,
                            double& best) const {
  if (lo >= hi) return;
  const std::size_t mid = lo + (hi - lo) / 2;
  const double* p = tree_.data() + mid * objective_count_;
  double s = 0.0;
  for (std::size_t k = 0; k < objective_count_; ++k) {
    const double d = p[k] - query[k];
    s += d * d;
  }
  best = std::min(best, s);
  if (hi - lo == 1) return;
  const std::size_t axis = depth % objective_count_;
  const double gap = query[axis] - p[axis];
  if (gap < 0.0) {
    search(query, lo, mid, depth + 1, best);
    if (gap * gap < best) search(query, mid + 1, hi, depth + 1, best);
  } else {
    search(query, mid + 1, hi, depth + 1, best);
    if (gap * gap < best) search(query, lo, mid, depth + 1, best);
  }
}

double ReferenceFront::nearest_squared_distance(std::span<const double> query) const {
  if (query.size() != objective_count_) throw std::invalid_argument("front metric: objective count mismatch");
  require_finite(query, "front metric");
  double best = std::numeric_limits<double>::infinity();
  search(query, 0, points_.size(), 0, best);
  return best;
}

double front_error(std::span<const ObjectiveVector> estimated, const ReferenceFront& reference) {
  if (estimated.empty()) throw std::invalid_argument("front_error: empty estimated front");
  double sum = 0.0;
  for (const auto& p : estimated) sum += reference.nearest_squared_distance(p);
  return sum;
}

double front_error(std::span<const ObjectiveVector> estimated, std::span<const ObjectiveVector> reference) {
  if (estimated.empty()) throw std::invalid_argument("front_error: empty estimated front");
  return front_error(estimated, ReferenceFront({reference.begin(), reference.end()}));
}

double generational_distance(std::span<const ObjectiveVector> estimated, const ReferenceFront& reference) {
  return std::sqrt(front_error(estimated, reference)) / static_cast<double>(estimated.size());
}

double generational_distance(std::span<const ObjectiveVector> estimated,
                             std::span<const ObjectiveVector> reference) {
  return std::sqrt(front_error(estimated, reference)) / static_cast<double>(estimated.size());
}

}  // namespace mofa
