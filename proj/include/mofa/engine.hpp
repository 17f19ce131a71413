/**
 * @file engine.hpp
 * @brief Multiobjective firefly iteration: pairwise attraction moves, random
 *        walks of undominated fireflies, randomness decay, constraint-aware
 *        acceptance and archive updates.
 *
 * A run is sequential and fully determined by (problem, config). Several runs
 * with different seeds share nothing and may execute concurrently.
 */

#ifndef MOFA_ENGINE_HPP
#define MOFA_ENGINE_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "mofa/pareto.hpp"
#include "mofa/problems.hpp"
#include "mofa/types.hpp"

namespace mofa {

/// Where an undominated firefly's random walk is centred.
enum class WalkCentre : std::uint8_t {
  kSelf,            ///< its own position
  kScalarizedBest,  ///< the iteration's scalarized best g*
};

/**
 * @brief Algorithm parameters.
 *
 * The random perturbation is a standard Gaussian per dimension. Its effective
 * per-axis scale at iteration t is max(alpha0 * decay_theta^t, alpha_min) *
 * walk_scale * L_i, with L_i the box side. The attraction exponent is
 * gamma_base * mean_i(0.5 / L_i^2); 1/sqrt(gamma) is the distance over which
 * attractiveness falls by a factor e.
 *
 * With walk_scale 0.01 and decay_theta 0.9 the noise is gone after a few dozen
 * iterations and the swarm stalls inside its initial hull, so the defaults use
 * a wider, slower-decaying walk.
 */
struct MofaConfig {
  std::size_t population = 50;
  std::size_t iterations = 2500;
  double alpha0 = 0.25;
  double beta0 = 1.0;
  double gamma_base = 1.0;
  double decay_theta = 0.982;
  double walk_scale = 0.1;
  double alpha_min = 0.0;
  std::size_t archive_capacity = ParetoArchive::kDefaultCapacity;
  std::size_t feasibility_retries = 10;
  WalkCentre walk_centre = WalkCentre::kSelf;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument naming the first offending field.
  void validate() const;
};

struct Firefly {
  DesignVector position;
  ObjectiveVector objectives;
  bool feasible = true;
};

struct RunDiagnostics {
  std::size_t evaluations = 0;
  std::size_t attraction_moves = 0;
  std::size_t random_walks = 0;
  std::size_t infeasible_moves = 0;    ///< moves that landed outside the feasible region
  std::size_t retries = 0;             ///< uniform redraws attempted after infeasible moves
  std::size_t reverts = 0;             ///< moves abandoned after all redraws failed
  std::size_t nonfinite_rollbacks = 0; ///< evaluations returning NaN/inf, position restored
};

struct EngineState {
  std::vector<Firefly> population;
  ParetoArchive archive;
  std::size_t iteration = 0;
  DesignVector best_scalarized;
  std::mt19937_64 rng;
  RunDiagnostics diagnostics;
  double best_psi = 0.0;   ///< min psi over candidates in the last step
  double worst_psi = 0.0;  ///< max psi over candidates in the last step
};

class InitializationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// beta0 * exp(-gamma r^2).
[[nodiscard]] double attractiveness(double r, double beta0, double gamma);

struct ScaledParams {
  std::vector<double> alpha;  ///< walk_scale * L_i
  std::vector<double> gamma;  ///< 0.5 / L_i^2
  double gamma_eff;           ///< gamma_base * mean(gamma), used by attractiveness
};

[[nodiscard]] ScaledParams scale_params(const BoundsBox& bounds, const MofaConfig& config);

/// alpha0 * theta^t.
[[nodiscard]] double decay_alpha(double alpha0, std::size_t t, double theta);

/// Attraction of xi towards xj plus Gaussian noise scaled by alpha_t * alpha_vec, clamped to bounds.
[[nodiscard]] DesignVector move_towards(std::span<const double> xi, std::span<const double> xj, double alpha_t,
                                        std::span<const double> alpha_vec, double gamma, double beta0,
                                        const BoundsBox& bounds, std::mt19937_64& rng);

/// centre plus Gaussian noise scaled by alpha_t * alpha_vec, clamped to bounds.
[[nodiscard]] DesignVector random_walk_best(std::span<const double> centre, double alpha_t,
                                            std::span<const double> alpha_vec, const BoundsBox& bounds,
                                            std::mt19937_64& rng);

/// Position minimizing psi; feasible fireflies only when any exist. Ties go to the lowest index.
[[nodiscard]] DesignVector find_best_scalarized(std::span<const Firefly> population, const WeightVector& w);

/// Uniform initial population, evaluated and offered to a fresh archive.
[[nodiscard]] EngineState initialize(const ProblemDefinition& problem, const MofaConfig& config);

/// One full iteration; advances state.iteration by one.
void step(EngineState& state, const ProblemDefinition& problem, const MofaConfig& config);

struct TraceRecord {
  std::size_t iteration = 0;
  double dg = 0.0;
  double ef = 0.0;
  double best_psi = 0.0;
  double worst_psi = 0.0;
};

struct RunResult {
  ParetoArchive archive;
  std::vector<TraceRecord> trace;
  bool has_reference = false;  ///< trace carries dg/ef rather than psi
  RunDiagnostics diagnostics;
  double wall_seconds = 0.0;
  std::uint64_t seed = 0;
};

/// Iterations recorded in the trace: every one up to 1000, then every 10th, plus the last.
[[nodiscard]] bool is_trace_checkpoint(std::size_t iteration, std::size_t total);

/**
 * @brief Initialize and iterate config.iterations times.
 *
 * With a reference front the trace holds D_g and E_f of the archive at each
 * checkpoint (iteration 0 included); otherwise it holds the best and worst
 * scalarized objective of each iteration.
 */
[[nodiscard]] RunResult run(const ProblemDefinition& problem, const MofaConfig& config,
                            const ReferenceFront* reference = nullptr);

}  // namespace mofa

#endif  // MOFA_ENGINE_HPP
