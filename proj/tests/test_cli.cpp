#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "mofa/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(std::initializer_list<std::string> args) {
  std::vector<std::string> store{"mofa"};
  store.insert(store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : store) argv.push_back(s.c_str());
  std::ostringstream out, err;
  const int code = mofa::cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("front subcommand") {
  auto r = invoke({"front", "--problem", "zdt1", "--samples", "200"});
  REQUIRE(r.code == mofa::cli::kExitSuccess);
  CHECK(count_lines(r.out) == 201);
  CHECK(r.out.rfind("f1,f2\n0,1\n", 0) == 0);
  CHECK(r.out.size() >= 4);
  CHECK(r.out.substr(r.out.size() - 4) == "1,0\n");

  r = invoke({"front", "--problem", "zdt3", "--samples", "200"});
  CHECK(r.code == 0);
  CHECK(count_lines(r.out) <= 201);

  r = invoke({"front", "--problem", "brake"});
  CHECK(r.code == mofa::cli::kExitUsage);
  CHECK(r.err.find("brake") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(invoke({}).code == mofa::cli::kExitUsage);
  CHECK(invoke({"run"}).code == mofa::cli::kExitUsage);
  CHECK(invoke({"run", "--problem", "nosuch"}).code == mofa::cli::kExitUsage);
  CHECK(invoke({"run", "--problem", "zdt1", "--format", "xml"}).code == mofa::cli::kExitUsage);
  CHECK(invoke({"run", "--problem", "zdt1", "--theta", "1.5"}).code == mofa::cli::kExitUsage);
  CHECK(invoke({"bench", "--problem", ","}).code == mofa::cli::kExitUsage);
  CHECK(invoke({"--help"}).code == mofa::cli::kExitSuccess);
}

TEST_CASE("run writes byte-identical files on repeat") {
  const auto base = fs::temp_directory_path() / "mofa_cli_test";
  fs::remove_all(base);
  const auto a = (base / "a").string(), b = (base / "b").string();
  for (const auto& dir : {a, b}) {
    const auto r = invoke({"run", "--problem", "zdt1", "--pop", "10", "--iters", "25", "--runs", "2", "--samples",
                           "3000", "--seed", "5", "--out", dir});
    REQUIRE(r.code == 0);
  }
  for (const char* name : {"zdt1_seed5_front.csv", "zdt1_seed6_trace.csv", "zdt1_pooled_front.csv", "zdt1_summary.json"}) {
    INFO(name);
    REQUIRE(fs::exists(fs::path(a) / name));
    CHECK(slurp(fs::path(a) / name) == slurp(fs::path(b) / name));
  }
  const auto r = invoke({"run", "--problem", "beam", "--pop", "8", "--iters", "5", "--no-trace", "--format", "json",
                         "--out", (base / "c").string()});
  CHECK(r.code == 0);
  CHECK(fs::exists(base / "c" / "beam_seed0_front.json"));
  CHECK_FALSE(fs::exists(base / "c" / "beam_seed0_trace.json"));
  fs::remove_all(base);
}

TEST_CASE("unwritable output directory is a runtime error") {
  const auto r = invoke({"run", "--problem", "sch", "--iters", "1", "--out", "/proc/mofa_no_such/dir"});
  CHECK(r.code == mofa::cli::kExitRuntime);
}
