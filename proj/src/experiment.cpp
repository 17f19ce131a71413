#include "mofa/experiment.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <memory>
#include <sstream>

#include <json.hpp>

#include "mofa/io.hpp"
#include "mofa/problems.hpp"

namespace mofa::bench {

namespace {

using Json = nlohmann::ordered_json;

Json optional_real(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

const TraceRecord* record_at(const RunResult& r, std::size_t iteration) {
  for (const auto& rec : r.trace) {
    if (rec.iteration == iteration) return &rec;
  }
  return nullptr;
}

std::optional<double> ef_at(const RunResult& r, std::size_t iteration) {
  const auto* rec = record_at(r, iteration);
  return rec ? std::optional<double>(rec->ef) : std::nullopt;
}

std::optional<double> dg_at(const RunResult& r, std::size_t iteration) {
  const auto* rec = record_at(r, iteration);
  return rec ? std::optional<double>(rec->dg) : std::nullopt;
}

std::optional<double> median_of(const std::vector<std::optional<double>>& values) {
  std::vector<double> present;
  for (const auto& v : values) {
    if (!v) return std::nullopt;
    present.push_back(*v);
  }
  if (present.empty()) return std::nullopt;
  return median(std::move(present));
}

void validate_common(const MofaConfig& config, std::size_t runs, std::size_t reference_samples) {
  if (runs == 0) throw UsageError("runs must be at least 1");
  if (reference_samples < 2) throw UsageError("reference samples must be at least 2");
  try {
    config.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::string registry_listing() {
  std::string out;
  for (const auto& name : problems::registry_names()) out += (out.empty() ? "" : ", ") + name;
  return out;
}

void require_problem(std::string_view name) {
  if (!problems::exists(name)) {
    throw UsageError("unknown problem '" + std::string(name) + "'; available: " + registry_listing());
  }
}

const char* extension(OutputFormat format) { return format == OutputFormat::kCsv ? ".csv" : ".json"; }

std::string format_cell(const std::optional<double>& v) { return v ? io::format_real(*v) : std::string(); }

std::string short_real(const std::optional<double>& v) {
  if (!v) return "-";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", *v);
  return buf;
}

}  // namespace

void ExperimentSpec::validate() const {
  require_problem(problem);
  validate_common(config, runs, reference_samples);
}

void BenchSpec::validate() const {
  if (problems.empty()) throw UsageError("bench suite is empty");
  for (const auto& p : problems) require_problem(p);
  validate_common(config, runs, reference_samples);
}

double median(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median: no values");
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 == 1 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

std::vector<ArchiveEntry> pool_archives(std::span<const ParetoArchive> archives, std::size_t max_points) {
  if (max_points == 0) throw std::invalid_argument("pool_archives: max_points must be positive");
  std::vector<ArchiveEntry> all;
  for (const auto& a : archives) all.insert(all.end(), a.entries().begin(), a.entries().end());
  if (all.empty()) return all;

  std::vector<ObjectiveVector> objectives;
  objectives.reserve(all.size());
  for (const auto& e : all) objectives.push_back(e.objectives);

  std::vector<ArchiveEntry> pooled;
  std::vector<ObjectiveVector> pooled_objectives;
  for (std::size_t i : non_dominated_filter(objectives)) {
    if (std::find(pooled_objectives.begin(), pooled_objectives.end(), objectives[i]) != pooled_objectives.end()) {
      continue;
    }
    pooled_objectives.push_back(objectives[i]);
    pooled.push_back(all[i]);
  }
  while (pooled.size() > max_points) {
    const auto victim = static_cast<std::ptrdiff_t>(most_crowded(pooled_objectives));
    pooled.erase(pooled.begin() + victim);
    pooled_objectives.erase(pooled_objectives.begin() + victim);
  }
  return pooled;
}

ExperimentOutcome run_experiment(const ExperimentSpec& spec) {
  spec.validate();
  const auto started = std::chrono::steady_clock::now();
  const ProblemDefinition problem = problems::make(spec.problem);
  std::unique_ptr<ReferenceFront> reference;
  if (problem.has_reference_front()) {
    reference = std::make_unique<ReferenceFront>(reference_front(problem, spec.reference_samples));
  }

  ExperimentOutcome outcome;
  auto& summary = outcome.summary;
  summary.problem = spec.problem;
  summary.population = spec.config.population;
  summary.iterations = spec.config.iterations;
  summary.runs = spec.runs;

  std::vector<ParetoArchive> archives;
  for (std::size_t k = 0; k < spec.runs; ++k) {
    MofaConfig config = spec.config;
    config.seed = spec.config.seed + k;
    RunResult result = run(problem, config, reference.get());

    RunSummary rs;
    rs.seed = config.seed;
    rs.archive_size = result.archive.size();
    if (reference) {
      rs.dg = result.trace.back().dg;
      rs.ef = result.trace.back().ef;
      rs.dg_500 = dg_at(result, 500);
      rs.ef_1000 = ef_at(result, 1000);
      rs.ef_2500 = ef_at(result, 2500);
    }
    rs.diagnostics = result.diagnostics;
    rs.wall_seconds = result.wall_seconds;
    summary.per_run.push_back(rs);
    archives.push_back(result.archive);
    outcome.runs.push_back(std::move(result));
  }

  outcome.pooled = pool_archives(archives, spec.runs * spec.config.population);
  summary.pooled_size = outcome.pooled.size();
  if (reference) {
    std::vector<double> dgs;
    std::vector<std::optional<double>> dg500, ef1000, ef2500;
    for (const auto& rs : summary.per_run) {
      dgs.push_back(*rs.dg);
      dg500.push_back(rs.dg_500);
      ef1000.push_back(rs.ef_1000);
      ef2500.push_back(rs.ef_2500);
    }
    summary.dg_median = median(dgs);
    summary.dg_best = *std::min_element(dgs.begin(), dgs.end());
    summary.dg_worst = *std::max_element(dgs.begin(), dgs.end());
    summary.dg_500_median = median_of(dg500);
    summary.ef_1000_median = median_of(ef1000);
    summary.ef_2500_median = median_of(ef2500);
    std::vector<ObjectiveVector> pooled_objectives;
    for (const auto& e : outcome.pooled) pooled_objectives.push_back(e.objectives);
    summary.pooled_dg = generational_distance(pooled_objectives, *reference);
  }
  summary.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return outcome;
}

namespace {

Json summary_object(const ExperimentSummary& s, bool include_timing) {
  Json runs = Json::array();
  for (const auto& r : s.per_run) {
    runs.push_back(Json{{"seed", r.seed},
                        {"archive_size", r.archive_size},
                        {"dg", optional_real(r.dg)},
                        {"ef", optional_real(r.ef)},
                        {"dg_500", optional_real(r.dg_500)},
                        {"ef_1000", optional_real(r.ef_1000)},
                        {"ef_2500", optional_real(r.ef_2500)},
                        {"evaluations", r.diagnostics.evaluations},
                        {"infeasible_moves", r.diagnostics.infeasible_moves},
                        {"retries", r.diagnostics.retries},
                        {"reverts", r.diagnostics.reverts},
                        {"nonfinite_rollbacks", r.diagnostics.nonfinite_rollbacks},
                        {"wall_seconds", include_timing ? Json(r.wall_seconds) : Json(nullptr)}});
  }
  return Json{{"problem", s.problem},
              {"n", s.population},
              {"iters", s.iterations},
              {"runs", s.runs},
              {"dg_median", optional_real(s.dg_median)},
              {"dg_best", optional_real(s.dg_best)},
              {"dg_worst", optional_real(s.dg_worst)},
              {"dg_500_median", optional_real(s.dg_500_median)},
              {"ef_1000_median", optional_real(s.ef_1000_median)},
              {"ef_2500_median", optional_real(s.ef_2500_median)},
              {"pooled_size", s.pooled_size},
              {"pooled_dg", optional_real(s.pooled_dg)},
              {"wall_seconds", include_timing ? Json(s.wall_seconds) : Json(nullptr)},
              {"per_run", std::move(runs)}};
}

}  // namespace

std::string summary_json(const ExperimentSummary& summary, bool include_timing) {
  return summary_object(summary, include_timing).dump(2) + "\n";
}

std::filesystem::path front_path(const ExperimentSpec& spec, std::uint64_t seed) {
  return spec.output_dir / (spec.problem + "_seed" + std::to_string(seed) + "_front" + extension(spec.format));
}

std::filesystem::path trace_path(const ExperimentSpec& spec, std::uint64_t seed) {
  return spec.output_dir / (spec.problem + "_seed" + std::to_string(seed) + "_trace" + extension(spec.format));
}

std::filesystem::path pooled_path(const ExperimentSpec& spec) {
  return spec.output_dir / (spec.problem + "_pooled_front" + extension(spec.format));
}

std::filesystem::path summary_path(const ExperimentSpec& spec) {
  return spec.output_dir / (spec.problem + "_summary.json");
}

namespace {

void ensure_directory(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) {
    throw io::IoError("cannot create output directory '" + dir.string() + "'");
  }
}

void write_front(const std::filesystem::path& path, OutputFormat format, std::span<const ObjectiveVector> points) {
  io::write_file(path, [&](std::ostream& out) {
    if (format == OutputFormat::kCsv) {
      io::write_front_csv(out, points);
    } else {
      io::write_front_json(out, points);
    }
  });
}

}  // namespace

void write_outputs(const ExperimentSpec& spec, const ExperimentOutcome& outcome) {
  ensure_directory(spec.output_dir);
  for (const auto& r : outcome.runs) {
    write_front(front_path(spec, r.seed), spec.format, r.archive.objective_vectors());
    if (spec.write_trace) {
      io::write_file(trace_path(spec, r.seed), [&](std::ostream& out) {
        if (spec.format == OutputFormat::kCsv) {
          io::write_trace_csv(out, r.trace, r.has_reference);
        } else {
          io::write_trace_json(out, r.trace, r.has_reference);
        }
      });
    }
  }
  std::vector<ObjectiveVector> pooled;
  for (const auto& e : outcome.pooled) pooled.push_back(e.objectives);
  write_front(pooled_path(spec), spec.format, pooled);
  io::write_text_file(summary_path(spec), summary_json(outcome.summary, spec.record_timing));
}

std::vector<ObjectiveVector> sample_front(std::string_view problem, std::size_t samples) {
  require_problem(problem);
  if (samples < 2) throw UsageError("samples must be at least 2");
  auto points = reference_front(problems::make(problem), samples);
  std::stable_sort(points.begin(), points.end(),
                   [](const ObjectiveVector& a, const ObjectiveVector& b) { return a[0] < b[0]; });
  return points;
}

std::span<const LiteratureRow> literature_values() {
  static constexpr std::array<LiteratureRow, 5> rows{{
      {"zdt1", 1.90e-4, 2.3e-6, 5.4e-19},
      {"zdt2", 1.52e-4, 8.9e-6, 1.7e-14},
      {"zdt3", 1.97e-4, 3.7e-5, 2.5e-11},
      {"sch", 4.55e-6, 5.5e-9, 4.0e-22},
      {"lz", 8.70e-4, 2.0e-6, 7.7e-12},
  }};
  return rows;
}

const LiteratureRow* find_literature(std::string_view problem) {
  for (const auto& row : literature_values()) {
    if (row.problem == problem) return &row;
  }
  return nullptr;
}

std::vector<ExperimentSummary> run_bench(const BenchSpec& spec) {
  spec.validate();
  std::vector<ExperimentSummary> rows;
  for (const auto& name : spec.problems) {
    ExperimentSpec one;
    one.problem = name;
    one.config = spec.config;
    one.runs = spec.runs;
    one.reference_samples = spec.reference_samples;
    one.record_timing = spec.record_timing;
    rows.push_back(run_experiment(one).summary);
  }
  return rows;
}

std::string bench_table_csv(std::span<const ExperimentSummary> rows) {
  std::ostringstream out;
  out << "problem,n,iters,runs,dg_median,dg_best,dg_worst,dg_500_median,ef_1000_median,ef_2500_median,"
         "literature_dg_500,literature_ef_1000,literature_ef_2500\n";
  for (const auto& s : rows) {
    const LiteratureRow* lit = find_literature(s.problem);
    out << s.problem << ',' << s.population << ',' << s.iterations << ',' << s.runs << ','
        << format_cell(s.dg_median) << ',' << format_cell(s.dg_best) << ',' << format_cell(s.dg_worst) << ','
        << format_cell(s.dg_500_median) << ',' << format_cell(s.ef_1000_median) << ',' << format_cell(s.ef_2500_median) << ','
        << (lit ? io::format_real(lit->dg_500) : "") << ',' << (lit ? io::format_real(lit->ef_1000) : "") << ','
        << (lit ? io::format_real(lit->ef_2500) : "") << '\n';
  }
  return out.str();
}

std::string bench_table_json(std::span<const ExperimentSummary> rows, bool include_timing) {
  Json doc = Json::array();
  for (const auto& s : rows) {
    Json row = summary_object(s, include_timing);
    const LiteratureRow* lit = find_literature(s.problem);
    row["literature"] = lit ? Json{{"dg_500", lit->dg_500}, {"ef_1000", lit->ef_1000}, {"ef_2500", lit->ef_2500}}
                            : Json(nullptr);
    doc.push_back(std::move(row));
  }
  return doc.dump(2) + "\n";
}

std::string bench_table_text(std::span<const ExperimentSummary> rows) {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof line, "%-8s %5s %6s %5s  %-10s %-10s %-10s %-10s %-10s | %-10s %-10s %-10s\n", "problem",
                "n", "iters", "runs", "dg_median", "dg_best", "dg_500", "ef_1000", "ef_2500", "lit_dg", "lit_ef1000", "lit_ef2500");
  out << line;
  for (const auto& s : rows) {
    const LiteratureRow* lit = find_literature(s.problem);
    std::snprintf(line, sizeof line, "%-8s %5zu %6zu %5zu  %-10s %-10s %-10s %-10s %-10s | %-10s %-10s %-10s\n",
                  s.problem.c_str(), s.population, s.iterations, s.runs, short_real(s.dg_median).c_str(),
                  short_real(s.dg_best).c_str(), short_real(s.dg_500_median).c_str(),
                  short_real(s.ef_1000_median).c_str(),
                  short_real(s.ef_2500_median).c_str(),
                  short_real(lit ? std::optional<double>(lit->dg_500) : std::nullopt).c_str(),
                  short_real(lit ? std::optional<double>(lit->ef_1000) : std::nullopt).c_str(),
                  short_real(lit ? std::optional<double>(lit->ef_2500) : std::nullopt).c_str());
    out << line;
  }
  out << "lit_* columns: published MOFA values (literature), not measured here\n";
  return out.str();
}

void write_bench_outputs(const BenchSpec& spec, std::span<const ExperimentSummary> rows) {
  ensure_directory(spec.output_dir);
  if (spec.format == OutputFormat::kCsv) {
    io::write_text_file(spec.output_dir / "bench_table.csv", bench_table_csv(rows));
  } else {
    io::write_text_file(spec.output_dir / "bench_table.json", bench_table_json(rows, spec.record_timing));
  }
}

}  // namespace mofa::bench
