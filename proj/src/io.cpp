#include "mofa/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace mofa::io {

namespace {

using Json = nlohmann::ordered_json;

double parse_real(const std::string& token, std::size_t line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line) + ": not a number: '" + token + "'");
  }
}

// JSON has no representation for inf/nan; they are written as null.
Json real_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

}  // namespace

std::string format_real(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_front_csv(std::ostream& out, std::span<const ObjectiveVector> points) {
  const std::size_t k = points.empty() ? 2 : points.front().size();
  for (std::size_t j = 0; j < k; ++j) out << (j ? ",f" : "f") << j + 1;
  out << '\n';
  for (const auto& p : points) {
    for (std::size_t j = 0; j < p.size(); ++j) out << (j ? "," : "") << format_real(p[j]);
    out << '\n';
  }
}

std::vector<ObjectiveVector> read_front_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("f1", 0) != 0) throw ParseError("front: missing f1,... header");
  const auto columns = static_cast<std::size_t>(std::count(line.begin(), line.end(), ',')) + 1;
  std::vector<ObjectiveVector> points;
  std::size_t number = 1;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    std::stringstream row(line);
    std::string cell;
    ObjectiveVector p;
    while (std::getline(row, cell, ',')) p.push_back(parse_real(cell, number));
    if (p.size() != columns) throw ParseError("line " + std::to_string(number) + ": wrong column count");
    points.push_back(std::move(p));
  }
  return points;
}

void write_front_json(std::ostream& out, std::span<const ObjectiveVector> points) {
  Json doc = Json::array();
  for (const auto& p : points) doc.push_back(p);
  out << doc.dump(1) << '\n';
}

std::vector<ObjectiveVector> read_front_json(std::istream& in) {
  try {
    return Json::parse(in).get<std::vector<ObjectiveVector>>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("front: ") + e.what());
  }
}

void write_trace_csv(std::ostream& out, std::span<const TraceRecord> trace, bool has_reference) {
  out << (has_reference ? "iter,dg,ef\n" : "iter,best_psi\n");
  for (const auto& r : trace) {
    out << r.iteration << ',';
    if (has_reference) {
      out << format_real(r.dg) << ',' << format_real(r.ef) << '\n';
    } else {
      out << format_real(r.best_psi) << '\n';
    }
  }
}

void write_trace_json(std::ostream& out, std::span<const TraceRecord> trace, bool has_reference) {
  Json doc = Json::array();
  for (const auto& r : trace) {
    Json row{{"iter", r.iteration}};
    if (has_reference) {
      row["dg"] = real_or_null(r.dg);
      row["ef"] = real_or_null(r.ef);
    } else {
      row["best_psi"] = real_or_null(r.best_psi);
    }
    doc.push_back(std::move(row));
  }
  out << doc.dump(1) << '\n';
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  write_file(path, [&](std::ostream& out) { out << text; });
}

}  // namespace mofa::io
