/**
 * @file experiment.hpp
 * @brief Seeded multi-run experiments, pooled fronts, summaries and the
 *        benchmark table behind the `run`, `front` and `bench` commands.
 */

#ifndef MOFA_EXPERIMENT_HPP
#define MOFA_EXPERIMENT_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mofa/engine.hpp"
#include "mofa/pareto.hpp"

namespace mofa::bench {

/// Bad user input: unknown problem, empty suite, invalid parameter.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class OutputFormat : std::uint8_t { kCsv, kJson };

/// Fine enough that the sampling error stays below the SCH E_f target of 1e-8.
inline constexpr std::size_t kDefaultReferenceSamples = 1'000'000;

struct ExperimentSpec {
  std::string problem;
  MofaConfig config;
  std::size_t runs = 1;
  std::size_t reference_samples = kDefaultReferenceSamples;
  std::filesystem::path output_dir = ".";
  OutputFormat format = OutputFormat::kCsv;
  bool write_trace = true;
  bool record_timing = false;  ///< wall_seconds is null otherwise, keeping outputs byte-stable

  /// Throws UsageError.
  void validate() const;
};

struct RunSummary {
  std::uint64_t seed = 0;
  std::size_t archive_size = 0;
  std::optional<double> dg;
  std::optional<double> ef;
  std::optional<double> dg_500;
  std::optional<double> ef_1000;
  std::optional<double> ef_2500;
  RunDiagnostics diagnostics;
  double wall_seconds = 0.0;
};

struct ExperimentSummary {
  std::string problem;
  std::size_t population = 0;
  std::size_t iterations = 0;
  std::size_t runs = 0;
  std::vector<RunSummary> per_run;
  std::optional<double> dg_median;
  std::optional<double> dg_best;
  std::optional<double> dg_worst;
  std::optional<double> dg_500_median;
  std::optional<double> ef_1000_median;
  std::optional<double> ef_2500_median;
  std::size_t pooled_size = 0;
  std::optional<double> pooled_dg;
  double wall_seconds = 0.0;
};

struct ExperimentOutcome {
  std::vector<RunResult> runs;
  std::vector<ArchiveEntry> pooled;
  ExperimentSummary summary;
};

/// Median; the mean of the two central values for even counts.
[[nodiscard]] double median(std::vector<double> values);

/**
 * @brief Union of the archives, reduced to its non-dominated members.
 *
 * Repeated objective vectors keep their first occurrence. If more than
 * max_points remain, the most crowded point is removed until max_points are left.
 */
[[nodiscard]] std::vector<ArchiveEntry> pool_archives(std::span<const ParetoArchive> archives,
                                                      std::size_t max_points);

/// Runs seeds seed, seed+1, ... and summarizes. Writes nothing.
[[nodiscard]] ExperimentOutcome run_experiment(const ExperimentSpec& spec);

/// The summary as a JSON object.
[[nodiscard]] std::string summary_json(const ExperimentSummary& summary, bool include_timing);

std::filesystem::path front_path(const ExperimentSpec& spec, std::uint64_t seed);
std::filesystem::path trace_path(const ExperimentSpec& spec, std::uint64_t seed);
std::filesystem::path pooled_path(const ExperimentSpec& spec);
std::filesystem::path summary_path(const ExperimentSpec& spec);

/// Per-run fronts and traces, the pooled front and the summary. Throws io::IoError.
void write_outputs(const ExperimentSpec& spec, const ExperimentOutcome& outcome);

/// Reference front of a registered problem sorted by f1. Throws UsageError or UnsupportedOperation.
[[nodiscard]] std::vector<ObjectiveVector> sample_front(std::string_view problem, std::size_t samples);

/// Published MOFA values: D_g at t=500 and E_f at t=1000 and t=2500.
struct LiteratureRow {
  std::string_view problem;
  double dg_500;
  double ef_1000;
  double ef_2500;
};

[[nodiscard]] std::span<const LiteratureRow> literature_values();
[[nodiscard]] const LiteratureRow* find_literature(std::string_view problem);

struct BenchSpec {
  std::vector<std::string> problems{"sch", "zdt1", "zdt2", "zdt3", "lz"};
  MofaConfig config;
  std::size_t runs = 11;
  std::size_t reference_samples = kDefaultReferenceSamples;
  std::filesystem::path output_dir = ".";
  OutputFormat format = OutputFormat::kCsv;
  bool record_timing = false;

  void validate() const;
};

/// One summary per problem, in suite order.
[[nodiscard]] std::vector<ExperimentSummary> run_bench(const BenchSpec& spec);

/// Measured and literature columns, one row per problem.
[[nodiscard]] std::string bench_table_csv(std::span<const ExperimentSummary> rows);
[[nodiscard]] std::string bench_table_json(std::span<const ExperimentSummary> rows, bool include_timing);
/// Fixed-width table for the terminal.
[[nodiscard]] std::string bench_table_text(std::span<const ExperimentSummary> rows);

/// bench_table.{csv,json}. Throws io::IoError.
void write_bench_outputs(const BenchSpec& spec, std::span<const ExperimentSummary> rows);

}  // namespace mofa::bench

#endif  // MOFA_EXPERIMENT_HPP
