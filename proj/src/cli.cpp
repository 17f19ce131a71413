#include "mofa/cli.hpp"

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mofa/experiment.hpp"
#include "mofa/io.hpp"
#include "mofa/problems.hpp"

namespace mofa::cli {

namespace {

struct Options {
  std::string problem = "zdt1";
  std::vector<std::string> suite;
  MofaConfig config;
  std::size_t runs = 1;
  std::size_t samples = bench::kDefaultReferenceSamples;
  std::size_t front_samples = 1000;
  std::string out = "out";
  std::string front_out;
  bench::OutputFormat format = bench::OutputFormat::kCsv;
  std::string walk = "self";
  bool trace = true;
  bool timing = false;
};

const std::map<std::string, bench::OutputFormat> kFormats{{"csv", bench::OutputFormat::kCsv},
                                                          {"json", bench::OutputFormat::kJson}};

void add_engine_options(CLI::App& cmd, Options& o) {
  cmd.add_option("--pop", o.config.population, "Population size n")->check(CLI::PositiveNumber);
  cmd.add_option("--iters", o.config.iterations, "Iterations T");
  cmd.add_option("--runs", o.runs, "Independent runs with seeds seed, seed+1, ...")->check(CLI::PositiveNumber);
  cmd.add_option("--seed", o.config.seed, "Base seed");
  cmd.add_option("--alpha0", o.config.alpha0, "Initial randomness factor");
  cmd.add_option("--beta0", o.config.beta0, "Attractiveness at zero distance");
  cmd.add_option("--gamma", o.config.gamma_base, "Light absorption before box rescaling");
  cmd.add_option("--theta", o.config.decay_theta, "Randomness decay base");
  cmd.add_option("--walk-scale", o.config.walk_scale, "Random step as a fraction of each box side");
  cmd.add_option("--alpha-min", o.config.alpha_min, "Floor for the decayed randomness factor");
  cmd.add_option("--walk", o.walk, "Random-walk centre for undominated fireflies")
      ->check(CLI::IsMember({"self", "best"}));
  cmd.add_option("--retries", o.config.feasibility_retries, "Uniform redraws after an infeasible move");
  cmd.add_option("--archive-max", o.config.archive_capacity, "Archive capacity")->check(CLI::PositiveNumber);
  cmd.add_option("--samples", o.samples, "Reference-front samples used by D_g and E_f")->check(CLI::PositiveNumber);
  cmd.add_option("--out", o.out, "Output directory");
  cmd.add_option("--format", o.format, "Front and trace file format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  cmd.add_flag("--timing", o.timing, "Record wall-clock seconds in the summary (output is no longer byte-stable)");
}

void finish_config(Options& o) {
  o.config.walk_centre = o.walk == "best" ? WalkCentre::kScalarizedBest : WalkCentre::kSelf;
}

int cmd_run(Options& o, std::ostream& out) {
  finish_config(o);
  bench::ExperimentSpec spec;
  spec.problem = o.problem;
  spec.config = o.config;
  spec.runs = o.runs;
  spec.reference_samples = o.samples;
  spec.output_dir = o.out;
  spec.format = o.format;
  spec.write_trace = o.trace;
  spec.record_timing = o.timing;
  spec.validate();

  const auto outcome = bench::run_experiment(spec);
  bench::write_outputs(spec, outcome);
  const auto& s = outcome.summary;
  out << s.problem << ": " << s.runs << " run(s), n=" << s.population << ", T=" << s.iterations
      << ", pooled front " << s.pooled_size << " points";
  if (s.dg_median) out << ", median D_g " << io::format_real(*s.dg_median);
  out << "\nwrote " << bench::summary_path(spec).string() << '\n';
  return kExitSuccess;
}

int cmd_front(const Options& o, std::ostream& out) {
  const auto points = bench::sample_front(o.problem, o.front_samples);
  if (o.front_out.empty()) {
    io::write_front_csv(out, points);
  } else {
    io::write_file(o.front_out, [&](std::ostream& file) { io::write_front_csv(file, points); });
  }
  return kExitSuccess;
}

int cmd_bench(Options& o, std::ostream& out) {
  finish_config(o);
  bench::BenchSpec spec;
  spec.problems.clear();
  for (const auto& p : o.suite) {
    if (!p.empty()) spec.problems.push_back(p);
  }
  if (o.suite.empty()) spec.problems = bench::BenchSpec{}.problems;
  spec.config = o.config;
  spec.runs = o.runs;
  spec.reference_samples = o.samples;
  spec.output_dir = o.out;
  spec.format = o.format;
  spec.record_timing = o.timing;
  spec.validate();

  const auto rows = bench::run_bench(spec);
  bench::write_bench_outputs(spec, rows);
  out << bench::bench_table_text(rows);
  return kExitSuccess;
}

}  // namespace

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multiobjective firefly algorithm: runs, reference fronts and benchmark tables"};
  app.require_subcommand(1);
  Options o;

  auto* run = app.add_subcommand("run", "Seeded runs of one problem; writes fronts, traces and a summary");
  run->add_option("--problem", o.problem, "Problem name")->required();
  add_engine_options(*run, o);
  run->add_flag("--trace,!--no-trace", o.trace, "Write per-run trace files");

  auto* front = app.add_subcommand("front", "Write a sampled analytic reference front as CSV");
  front->add_option("--problem", o.problem, "Problem name")->required();
  front->add_option("--samples", o.front_samples, "Number of samples")->check(CLI::PositiveNumber);
  front->add_option("--out", o.front_out, "Output file (default: standard output)");

  auto* suite = app.add_subcommand("bench", "Median and best D_g per problem next to the published values");
  suite->add_option("--problem", o.suite, "Comma-separated suite (default sch,zdt1,zdt2,zdt3,lz)")->delimiter(',');
  add_engine_options(*suite, o);
  o.runs = 11;

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitSuccess;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*run) {
      if (run->count("--runs") == 0) o.runs = 1;
      return cmd_run(o, out);
    }
    if (*front) return cmd_front(o, out);
    return cmd_bench(o, out);
  } catch (const bench::UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnsupportedOperation& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
}

}  // namespace mofa::cli
