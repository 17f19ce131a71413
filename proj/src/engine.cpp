#include "mofa/engine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace mofa {

namespace {

struct Evaluation {
  ObjectiveVector objectives;
  bool feasible = false;
  bool finite = false;
};

Evaluation evaluate(const ProblemDefinition& problem, std::span<const double> x, RunDiagnostics& diag) {
  ++diag.evaluations;
  Evaluation e;
  e.objectives = problem.evaluate(x);
  e.finite = std::all_of(e.objectives.begin(), e.objectives.end(), [](double v) { return std::isfinite(v); });
  if (e.finite && problem.constrained()) {
    const auto g = problem.constraints(x);
    e.feasible = std::all_of(g.begin(), g.end(), [](double v) { return v <= 0.0; });
  } else {
    e.feasible = e.finite;
  }
  return e;
}

DesignVector uniform_point(const BoundsBox& bounds, std::mt19937_64& rng) {
  DesignVector x(bounds.dimension());
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = std::uniform_real_distribution<double>(bounds.lower()[i], bounds.upper()[i])(rng);
  }
  bounds.clamp(x);
  return x;
}

void offer(ParetoArchive& archive, const DesignVector& x, const Evaluation& e) {
  if (e.feasible) archive.insert(x, e.objectives);
}

void perturb(std::span<double> x, double alpha_t, std::span<const double> alpha_vec, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (std::size_t k = 0; k < x.size(); ++k) x[k] += alpha_t * alpha_vec[k] * gauss(rng);
}

// Moves firefly `f` to `candidate`, applying the non-finite rollback and the
// infeasible-move redraw policy. Returns true if the firefly changed.
bool relocate(Firefly& f, DesignVector candidate, const ProblemDefinition& problem, const MofaConfig& config,
              EngineState& state) {
  auto& diag = state.diagnostics;
  Evaluation e = evaluate(problem, candidate, diag);
  if (!e.finite) {
    ++diag.nonfinite_rollbacks;
    return false;
  }
  if (!e.feasible) {
    ++diag.infeasible_moves;
    bool found = false;
    for (std::size_t r = 0; r < config.feasibility_retries && !found; ++r) {
      ++diag.retries;
      candidate = uniform_point(problem.bounds, state.rng);
      e = evaluate(problem, candidate, diag);
      if (!e.finite) ++diag.nonfinite_rollbacks;
      found = e.feasible;
    }
    if (!found) {
      ++diag.reverts;
      return false;
    }
  }
  offer(state.archive, candidate, e);
  f.position = std::move(candidate);
  f.objectives = std::move(e.objectives);
  f.feasible = e.feasible;
  return true;
}

}  // namespace

void MofaConfig::validate() const {
  auto fail = [](const char* field, const char* rule) {
    throw std::invalid_argument(std::string("config: ") + field + " " + rule);
  };
  if (population == 0) fail("population", "must be positive");
  if (!(alpha0 >= 0.0 && alpha0 <= 1.0)) fail("alpha0", "must lie in [0,1]");
  if (!(beta0 >= 0.0 && beta0 <= 1.0)) fail("beta0", "must lie in [0,1]");
  if (!(gamma_base > 0.0) || !std::isfinite(gamma_base)) fail("gamma_base", "must be positive");
  if (!(decay_theta > 0.0 && decay_theta < 1.0)) fail("decay_theta", "must lie in (0,1)");
  if (!(walk_scale > 0.0) || !std::isfinite(walk_scale)) fail("walk_scale", "must be positive");
  if (!(alpha_min >= 0.0) || !std::isfinite(alpha_min)) fail("alpha_min", "must be non-negative");
  if (archive_capacity == 0) fail("archive_capacity", "must be positive");
}

double attractiveness(double r, double beta0, double gamma) {
  if (!(r >= 0.0)) throw std::invalid_argument("attractiveness: distance must be non-negative");
  return beta0 * std::exp(-gamma * r * r);
}

ScaledParams scale_params(const BoundsBox& bounds, const MofaConfig& config) {
  ScaledParams p;
  p.alpha.resize(bounds.dimension());
  p.gamma.resize(bounds.dimension());
  for (std::size_t i = 0; i < bounds.dimension(); ++i) {
    const double len = bounds.side(i);
    p.alpha[i] = config.walk_scale * len;
    p.gamma[i] = 0.5 / (len * len);
  }
  p.gamma_eff = config.gamma_base * std::accumulate(p.gamma.begin(), p.gamma.end(), 0.0) /
                static_cast<double>(p.gamma.size());
  return p;
}

double decay_alpha(double alpha0, std::size_t t, double theta) {
  return alpha0 * std::pow(theta, static_cast<double>(t));
}

DesignVector move_towards(std::span<const double> xi, std::span<const double> xj, double alpha_t,
                          std::span<const double> alpha_vec, double gamma, double beta0, const BoundsBox& bounds,
                          std::mt19937_64& rng) {
  if (xi.size() != xj.size() || xi.size() != alpha_vec.size() || xi.size() != bounds.dimension()) {
    throw std::invalid_argument("move_towards: dimension mismatch");
  }
  double r2 = 0.0;
  for (std::size_t k = 0; k < xi.size(); ++k) r2 += (xi[k] - xj[k]) * (xi[k] - xj[k]);
  const double beta = attractiveness(std::sqrt(r2), beta0, gamma);

  DesignVector out(xi.begin(), xi.end());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += beta * (xj[k] - xi[k]);
  perturb(out, alpha_t, alpha_vec, rng);
  bounds.clamp(out);
  return out;
}

DesignVector random_walk_best(std::span<const double> centre, double alpha_t, std::span<const double> alpha_vec,
                              const BoundsBox& bounds, std::mt19937_64& rng) {
  if (centre.size() != alpha_vec.size() || centre.size() != bounds.dimension()) {
    throw std::invalid_argument("random_walk_best: dimension mismatch");
  }
  DesignVector out(centre.begin(), centre.end());
  perturb(out, alpha_t, alpha_vec, rng);
  bounds.clamp(out);
  return out;
}

DesignVector find_best_scalarized(std::span<const Firefly> population, const WeightVector& w) {
  if (population.empty()) throw std::invalid_argument("find_best_scalarized: empty population");
  const bool any_feasible = std::any_of(population.begin(), population.end(), [](const Firefly& f) { return f.feasible; });
  std::size_t best = population.size();
  double best_psi = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < population.size(); ++i) {
    if (any_feasible && !population[i].feasible) continue;
    const double psi = weighted_scalarize(population[i].objectives, w);
    if (best == population.size() || psi < best_psi) {
      best = i;
      best_psi = psi;
    }
  }
  return population[best].position;
}

EngineState initialize(const ProblemDefinition& problem, const MofaConfig& config) {
  config.validate();
  EngineState state{.population = {},
                    .archive = ParetoArchive(config.archive_capacity),
                    .iteration = 0,
                    .best_scalarized = {},
                    .rng = std::mt19937_64(config.seed),
                    .diagnostics = {}};
  state.population.reserve(config.population);

  for (std::size_t i = 0; i < config.population; ++i) {
    Firefly f;
    Evaluation e;
    for (std::size_t attempt = 0; attempt <= config.feasibility_retries; ++attempt) {
      f.position = uniform_point(problem.bounds, state.rng);
      e = evaluate(problem, f.position, state.diagnostics);
      if (e.feasible) break;
    }
    if (!e.finite) {
      // Keep the population well defined; a non-finite firefly is never compared.
      ++state.diagnostics.nonfinite_rollbacks;
      e.objectives.assign(problem.objective_count, std::numeric_limits<double>::max());
    }
    f.objectives = std::move(e.objectives);
    f.feasible = e.feasible;
    offer(state.archive, f.position, {f.objectives, f.feasible, true});
    state.population.push_back(std::move(f));
  }

  if (state.archive.empty()) {
    throw InitializationError("problem '" + problem.name + "': no feasible point found in " +
                              std::to_string(config.population * (config.feasibility_retries + 1)) +
                              " initial draws");
  }
  state.best_scalarized = state.population.front().position;
  return state;
}

void step(EngineState& state, const ProblemDefinition& problem, const MofaConfig& config) {
  const auto params = scale_params(problem.bounds, config);
  const double alpha_t = std::max(decay_alpha(config.alpha0, state.iteration, config.decay_theta), config.alpha_min);
  auto& pop = state.population;
  const std::size_t n = pop.size();

  const WeightVector w = random_weights(problem.objective_count, state.rng);
  state.best_scalarized = find_best_scalarized(pop, w);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !pop[i].feasible || !pop[j].feasible) continue;
      if (!dominates(pop[j].objectives, pop[i].objectives)) continue;
      ++state.diagnostics.attraction_moves;
      auto candidate = move_towards(pop[i].position, pop[j].position, alpha_t, params.alpha, params.gamma_eff,
                                    config.beta0, problem.bounds, state.rng);
      relocate(pop[i], std::move(candidate), problem, config, state);
    }
  }

  // Infeasible fireflies are never compared, so they count as undominated here.
  std::vector<char> dominated(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!pop[i].feasible) continue;
    for (std::size_t j = 0; j < n && !dominated[i]; ++j) {
      dominated[i] = static_cast<char>(j != i && pop[j].feasible && dominates(pop[j].objectives, pop[i].objectives));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (dominated[i]) continue;
    ++state.diagnostics.random_walks;
    const DesignVector& centre = config.walk_centre == WalkCentre::kSelf ? pop[i].position : state.best_scalarized;
    auto candidate = random_walk_best(centre, alpha_t, params.alpha, problem.bounds, state.rng);
    relocate(pop[i], std::move(candidate), problem, config, state);
  }

  const bool any_feasible = std::any_of(pop.begin(), pop.end(), [](const Firefly& f) { return f.feasible; });
  state.best_psi = std::numeric_limits<double>::infinity();
  state.worst_psi = -std::numeric_limits<double>::infinity();
  for (const auto& f : pop) {
    if (any_feasible && !f.feasible) continue;
    const double psi = weighted_scalarize(f.objectives, w);
    state.best_psi = std::min(state.best_psi, psi);
    state.worst_psi = std::max(state.worst_psi, psi);
  }
  ++state.iteration;
}

bool is_trace_checkpoint(std::size_t iteration, std::size_t total) {
  return iteration <= 1000 || iteration % 10 == 0 || iteration == total;
}

RunResult run(const ProblemDefinition& problem, const MofaConfig& config, const ReferenceFront* reference) {
  const auto started = std::chrono::steady_clock::now();
  EngineState state = initialize(problem, config);
  RunResult result{.archive = ParetoArchive(config.archive_capacity),
                   .trace = {},
                   .has_reference = reference != nullptr,
                   .diagnostics = {},
                   .wall_seconds = 0.0,
                   .seed = config.seed};

  auto record = [&] {
    TraceRecord rec;
    rec.iteration = state.iteration;
    if (reference != nullptr) {
      const auto objectives = state.archive.objective_vectors();
      rec.ef = front_error(objectives, *reference);
      rec.dg = std::sqrt(rec.ef) / static_cast<double>(objectives.size());
    } else {
      rec.best_psi = state.best_psi;
      rec.worst_psi = state.worst_psi;
    }
    result.trace.push_back(rec);
  };

  if (reference != nullptr) record();
  while (state.iteration < config.iterations) {
    step(state, problem, config);
    if (is_trace_checkpoint(state.iteration, config.iterations)) record();
  }

  result.archive = std::move(state.archive);
  result.diagnostics = state.diagnostics;
  result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

}  // namespace mofa
