#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "mofa/engine.hpp"
#include "mofa/experiment.hpp"
#include "mofa/pareto.hpp"
#include "mofa/problems.hpp"

namespace p = mofa::problems;

namespace {

mofa::MofaConfig small_config(std::size_t n, std::size_t iters, std::uint64_t seed) {
  mofa::MofaConfig c;
  c.population = n;
  c.iterations = iters;
  c.seed = seed;
  return c;
}

bool same_archive(const mofa::ParetoArchive& a, const mofa::ParetoArchive& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.entries()[i].design != b.entries()[i].design) return false;
    if (a.entries()[i].objectives != b.entries()[i].objectives) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("attractiveness") {
  CHECK(mofa::attractiveness(1.0, 1.0, 1.0) == doctest::Approx(std::exp(-1.0)));
  CHECK(mofa::attractiveness(0.0, 0.7, 3.0) == doctest::Approx(0.7));
  CHECK_THROWS_AS((void)mofa::attractiveness(-1.0, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("scale_params follows the box") {
  mofa::MofaConfig c;
  c.walk_scale = 0.01;
  auto s = mofa::scale_params(mofa::BoundsBox::uniform(3, 0.0, 1.0), c);
  CHECK(s.alpha[0] == doctest::Approx(0.01));
  CHECK(s.gamma[0] == doctest::Approx(0.5));
  s = mofa::scale_params(p::sch().bounds, c);
  CHECK(s.alpha[0] == doctest::Approx(20.0));
  CHECK(s.gamma[0] == doctest::Approx(1.25e-7));
  s = mofa::scale_params(mofa::BoundsBox::uniform(2, 0.0, 2.0), c);
  CHECK(s.alpha[1] == doctest::Approx(0.02));
  CHECK(s.gamma[1] == doctest::Approx(0.125));
  CHECK(s.gamma_eff == doctest::Approx(0.125));
}

TEST_CASE("decay") {
  CHECK(mofa::decay_alpha(0.25, 2, 0.9) == doctest::Approx(0.2025));
  CHECK(mofa::decay_alpha(0.25, 0, 0.9) == 0.25);
  for (std::size_t t = 0; t < 100; ++t) CHECK(mofa::decay_alpha(0.25, t + 1, 0.95) < mofa::decay_alpha(0.25, t, 0.95));
}

TEST_CASE("move_towards and random walk") {
  std::mt19937_64 rng(1);
  const auto box = mofa::BoundsBox::uniform(1, -10.0, 10.0);
  const std::vector<double> xi{0.0}, xj{1.0}, a{1.0};
  CHECK(mofa::move_towards(xi, xj, 0.0, a, 0.0, 1.0, box, rng)[0] == doctest::Approx(1.0));
  CHECK(mofa::move_towards(xi, xj, 0.0, a, 1.0, 1.0, box, rng)[0] == doctest::Approx(std::exp(-1.0)));
  const std::vector<double> far{100.0};
  CHECK(mofa::move_towards(xi, far, 0.0, a, 0.0, 1.0, box, rng)[0] == 10.0);

  const auto wide = mofa::BoundsBox::uniform(2, -100.0, 100.0);
  const std::vector<double> centre{1.0, -2.0}, scale{1.0, 2.0};
  double m0 = 0, m1 = 0, v1 = 0;
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) {
    const auto x = mofa::random_walk_best(centre, 0.5, scale, wide, rng);
    m0 += x[0];
    m1 += x[1];
    v1 += (x[1] + 2.0) * (x[1] + 2.0);
  }
  CHECK(m0 / draws == doctest::Approx(1.0).epsilon(0.01));
  CHECK(m1 / draws == doctest::Approx(-2.0).epsilon(0.01));
  CHECK(std::sqrt(v1 / draws) == doctest::Approx(1.0).epsilon(0.02));

  const auto unit = mofa::BoundsBox::uniform(2, 0.0, 1.0);
  for (int i = 0; i < 1000; ++i) CHECK(unit.contains(mofa::random_walk_best(std::vector<double>{0.9, 0.1}, 1.0, scale, unit, rng)));
}

TEST_CASE("find_best_scalarized") {
  std::vector<mofa::Firefly> pop{{{0.0}, {1, 1}, true}, {{1.0}, {2, 2}, true}};
  CHECK(mofa::find_best_scalarized(pop, mofa::WeightVector({0.5, 0.5})) == std::vector<double>{0.0});
  pop[0].feasible = false;
  CHECK(mofa::find_best_scalarized(pop, mofa::WeightVector({0.5, 0.5})) == std::vector<double>{1.0});
}

TEST_CASE("config validation") {
  mofa::MofaConfig c;
  CHECK_NOTHROW(c.validate());
  c.population = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = {};
  c.decay_theta = 1.0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = {};
  c.alpha0 = 1.5;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}

TEST_CASE("single firefly and identical population") {
  const auto prob = p::zdt1();
  auto state = mofa::initialize(prob, small_config(1, 10, 3));
  for (int t = 0; t < 10; ++t) mofa::step(state, prob, small_config(1, 10, 3));
  CHECK(state.archive.size() >= 1);
  CHECK(state.iteration == 10);

  mofa::MofaConfig still = small_config(5, 10, 3);
  still.alpha0 = 0.0;
  auto clones = mofa::initialize(prob, still);
  for (auto& f : clones.population) f = clones.population.front();
  mofa::ParetoArchive fresh;
  for (const auto& f : clones.population) (void)fresh.insert(f.position, f.objectives);
  CHECK(fresh.size() == 1);
  clones.archive = fresh;
  mofa::step(clones, prob, still);
  CHECK(clones.archive.size() == 1);
}

TEST_CASE("zero iterations keeps the non-dominated subset of the initial population") {
  const auto prob = p::zdt1();
  const auto cfg = small_config(40, 0, 9);
  const auto state = mofa::initialize(prob, cfg);
  const auto result = mofa::run(prob, cfg);
  std::vector<mofa::ObjectiveVector> objs;
  for (const auto& f : state.population) objs.push_back(f.objectives);
  const auto keep = mofa::non_dominated_filter(objs);
  REQUIRE(result.archive.size() == keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) CHECK(result.archive.entries()[i].objectives == objs[keep[i]]);
}

TEST_CASE("with alpha0 = beta0 = 0 the population never moves") {
  const auto prob = p::zdt1();
  auto cfg = small_config(20, 5, 4);
  cfg.alpha0 = 0.0;
  cfg.beta0 = 0.0;
  auto state = mofa::initialize(prob, cfg);
  const auto before = state.population;
  for (int t = 0; t < 5; ++t) mofa::step(state, prob, cfg);
  for (std::size_t i = 0; i < before.size(); ++i) CHECK(state.population[i].position == before[i].position);
}

TEST_CASE("archive stays feasible, bounded and non-dominated during a run") {
  for (const char* name : {"beam", "brake", "zdt3"}) {
    const auto prob = p::make(name);
    auto cfg = small_config(20, 60, 2);
    cfg.archive_capacity = 30;
    const auto r = mofa::run(prob, cfg);
    CHECK(r.archive.size() <= 30);
    for (const auto& e : r.archive.entries()) {
      CHECK(prob.bounds.contains(e.design));
      CHECK(prob.feasible(e.design));
      CHECK(prob.evaluate(e.design) == e.objectives);
    }
    const auto objs = r.archive.objective_vectors();
    CHECK(mofa::non_dominated_filter(objs).size() == objs.size());
  }
}

TEST_CASE("runs are reproducible from the seed") {
  const auto prob = p::zdt2();
  const auto a = mofa::run(prob, small_config(15, 40, 42));
  const auto b = mofa::run(prob, small_config(15, 40, 42));
  const auto c = mofa::run(prob, small_config(15, 40, 43));
  CHECK(same_archive(a.archive, b.archive));
  CHECK_FALSE(same_archive(a.archive, c.archive));
}

TEST_CASE("trace cadence and a shorter run equal to the trace prefix") {
  const auto prob = p::zdt1();
  const mofa::ReferenceFront ref(mofa::reference_front(prob, 2000));
  const auto long_run = mofa::run(prob, small_config(20, 1205, 6), &ref);
  const auto short_run = mofa::run(prob, small_config(20, 500, 6), &ref);
  REQUIRE(long_run.trace.front().iteration == 0);
  CHECK(long_run.trace.back().iteration == 1205);
  CHECK(long_run.trace.size() == 1001 + 20 + 1);
  const auto at500 = std::find_if(long_run.trace.begin(), long_run.trace.end(),
                                  [](const mofa::TraceRecord& r) { return r.iteration == 500; });
  REQUIRE(at500 != long_run.trace.end());
  CHECK(at500->dg == short_run.trace.back().dg);
  CHECK(at500->ef == short_run.trace.back().ef);
  CHECK(mofa::is_trace_checkpoint(999, 2500));
  CHECK_FALSE(mofa::is_trace_checkpoint(1001, 2500));
  CHECK(mofa::is_trace_checkpoint(1001, 1001));
}

TEST_CASE("without a reference the trace carries scalarized objectives") {
  const auto r = mofa::run(p::welded_beam(), small_config(10, 15, 1));
  CHECK_FALSE(r.has_reference);
  REQUIRE(r.trace.size() == 15);
  for (const auto& rec : r.trace) CHECK(rec.best_psi <= rec.worst_psi);
}

TEST_CASE("ZDT1 improves over the first hundred iterations") {
  const auto prob = p::zdt1();
  const mofa::ReferenceFront ref(mofa::reference_front(prob, 10000));
  const auto r = mofa::run(prob, small_config(50, 100, 0), &ref);
  CHECK(r.trace.back().dg < r.trace.front().dg);
}

TEST_CASE("SCH reaches the front within 500 iterations on most seeds") {
  const auto prob = p::sch();
  const mofa::ReferenceFront ref(mofa::bench::sample_front("sch", mofa::bench::kDefaultReferenceSamples));
  int good = 0;
  for (std::uint64_t seed = 0; seed < 11; ++seed) {
    const auto r = mofa::run(prob, small_config(50, 500, seed), &ref);
    good += r.trace.back().dg <= 5e-5;
  }
  CHECK(good >= 8);
}
