/**
 * @file io.hpp
 * @brief Front and trace serialization (CSV and JSON) and their readers.
 *
 * Reals are written with 17 significant digits so every double round-trips
 * exactly. Writers throw IoError when the target cannot be opened or written.
 */

#ifndef MOFA_IO_HPP
#define MOFA_IO_HPP

#include <filesystem>
#include <fstream>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mofa/engine.hpp"
#include "mofa/types.hpp"

namespace mofa::io {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown by readers on malformed content.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "%.17g".
[[nodiscard]] std::string format_real(double value);

/// Header f1,...,fK then one point per row.
void write_front_csv(std::ostream& out, std::span<const ObjectiveVector> points);
void write_front_json(std::ostream& out, std::span<const ObjectiveVector> points);
[[nodiscard]] std::vector<ObjectiveVector> read_front_csv(std::istream& in);
[[nodiscard]] std::vector<ObjectiveVector> read_front_json(std::istream& in);

/// iter,dg,ef with a reference front, iter,best_psi without.
void write_trace_csv(std::ostream& out, std::span<const TraceRecord> trace, bool has_reference);
void write_trace_json(std::ostream& out, std::span<const TraceRecord> trace, bool has_reference);

void write_text_file(const std::filesystem::path& path, const std::string& text);

/// Opens path for writing, calls fill, and checks the stream afterwards.
template <typename Fill>
void write_file(const std::filesystem::path& path, Fill&& fill) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  fill(out);
  out.flush();
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

}  // namespace mofa::io

#endif  // MOFA_IO_HPP
