#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "mofa/io.hpp"

using mofa::ObjectiveVector;

TEST_CASE("reals round-trip through text") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> exponent(-300.0, 300.0);
  for (int i = 0; i < 5000; ++i) {
    const double v = std::pow(10.0, exponent(rng)) * (i % 2 ? -1.0 : 1.0);
    CHECK(std::stod(mofa::io::format_real(v)) == v);
  }
  CHECK(mofa::io::format_real(0.0) == "0");
  CHECK(mofa::io::format_real(1.0) == "1");
}

TEST_CASE("front CSV round-trip") {
  const std::vector<ObjectiveVector> pts{{0.0, 1.0}, {0.1, 0.6837722339831621}, {1.0 / 3.0, 1e-17}};
  std::ostringstream out;
  mofa::io::write_front_csv(out, pts);
  CHECK(out.str().rfind("f1,f2\n0,1\n", 0) == 0);
  std::istringstream in(out.str());
  CHECK(mofa::io::read_front_csv(in) == pts);

  std::ostringstream empty;
  mofa::io::write_front_csv(empty, std::vector<ObjectiveVector>{});
  CHECK(empty.str() == "f1,f2\n");
}

TEST_CASE("front JSON round-trip") {
  const std::vector<ObjectiveVector> pts{{0.25, 0.5, 0.125}, {1e-300, 2.0, 3.0}};
  std::ostringstream out;
  mofa::io::write_front_json(out, pts);
  std::istringstream in(out.str());
  CHECK(mofa::io::read_front_json(in) == pts);
}

TEST_CASE("malformed fronts are rejected") {
  std::istringstream no_header("0,1\n");
  CHECK_THROWS_AS((void)mofa::io::read_front_csv(no_header), mofa::io::ParseError);
  std::istringstream bad_cell("f1,f2\n0,abc\n");
  CHECK_THROWS_AS((void)mofa::io::read_front_csv(bad_cell), mofa::io::ParseError);
  std::istringstream short_row("f1,f2\n0\n");
  CHECK_THROWS_AS((void)mofa::io::read_front_csv(short_row), mofa::io::ParseError);
  std::istringstream bad_json("[[0,1],");
  CHECK_THROWS_AS((void)mofa::io::read_front_json(bad_json), mofa::io::ParseError);
}

TEST_CASE("trace writers") {
  std::vector<mofa::TraceRecord> trace(2);
  trace[0] = {0, 0.5, 0.25, 0, 0};
  trace[1] = {10, 0.125, std::numeric_limits<double>::infinity(), 0, 0};
  std::ostringstream csv;
  mofa::io::write_trace_csv(csv, trace, true);
  CHECK(csv.str() == "iter,dg,ef\n0,0.5,0.25\n10,0.125,inf\n");
  std::ostringstream json;
  mofa::io::write_trace_json(json, trace, true);
  CHECK(json.str().find("null") != std::string::npos);
  std::ostringstream psi;
  trace[0].best_psi = 3.0;
  mofa::io::write_trace_csv(psi, std::span(trace).first(1), false);
  CHECK(psi.str() == "iter,best_psi\n0,3\n");
}

TEST_CASE("unwritable paths raise IoError") {
  CHECK_THROWS_AS(mofa::io::write_text_file("/nonexistent-dir/x/y.txt", "z"), mofa::io::IoError);
}
