// Runs the installed command-line tool as a subprocess.
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "wedderburn/serialization.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int exit_code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(WEDDERBURN_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("wedderburn_cli_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

const std::string data_dir = WEDDERBURN_DATA_DIR;

}  // namespace

TEST_CASE("gen and decompose group algebras") {
  TempDir tmp;
  REQUIRE(run("gen group --cayley " + data_dir + "/c3.cayley -p 7 -o " + tmp / "c3.json").exit_code == 0);
  const Run c3 = run("decompose " + tmp / "c3.json --seed 1");
  CHECK(c3.exit_code == 0);
  CHECK(c3.out == "block 0: M_1(D), dim D = 1\nblock 1: M_1(D), dim D = 1\nblock 2: M_1(D), dim D = 1\n");

  REQUIRE(run("gen group --named S3 -p 5 -o " + tmp / "s3.json").exit_code == 0);
  const Run s3 = run("decompose " + tmp / "s3.json");
  CHECK(s3.exit_code == 0);
  CHECK(s3.out == "block 0: M_1(D), dim D = 1\nblock 1: M_1(D), dim D = 1\nblock 2: M_2(D), dim D = 1\n");

  const auto doc = wedderburn::read_json_file(tmp / "s3.json");
  CHECK(doc["dim"] == 6);
}

TEST_CASE("decompose exit codes") {
  TempDir tmp;
  {
    std::ofstream(tmp / "tri.json") << wedderburn::dump(wedderburn::algebra_to_json(*wedderburn::upper_triangular(5)));
  }
  const Run tri = run("decompose " + tmp / "tri.json");
  CHECK(tri.exit_code == 2);
  CHECK(tri.out.find("radical dimension 1") != std::string::npos);

  REQUIRE(run("gen matrix -n 3 -p 3 -o " + tmp / "m3.json").exit_code == 0);
  CHECK(run("decompose " + tmp / "m3.json").exit_code == 3);

  { std::ofstream(tmp / "junk.json") << "{\"p\": 5}"; }
  CHECK(run("decompose " + tmp / "junk.json").exit_code == 4);
  CHECK(run("decompose " + tmp / "missing.json").exit_code == 4);
  CHECK(run("decompose").exit_code == 4);

  REQUIRE(run("gen matrix -n 3 -p 7 --scramble --seed 2 -o " + tmp / "m3s.json").exit_code == 0);
  const Run capped = run("decompose " + tmp / "m3s.json --max-split-iters 1 --seed 0");
  if (capped.exit_code != 0) {
    CHECK(capped.exit_code == 5);
    CHECK(capped.out.find("seed") != std::string::npos);
  }
}

TEST_CASE("decompose then verify") {
  TempDir tmp;
  REQUIRE(run("gen matrix -n 2 -p 5 --scramble --seed 9 -o " + tmp / "m2.json").exit_code == 0);
  CHECK(fs::exists(tmp / "m2.json.scramble.json"));
  REQUIRE(run("decompose " + tmp / "m2.json --seed 4 -o " + tmp / "r.json").exit_code == 0);
  const Run ok = run("verify " + tmp / "r.json " + tmp / "m2.json");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("multiplicative: ok") != std::string::npos);

  SUBCASE("altered matrix unit") {
    auto report = wedderburn::read_json_file(tmp / "r.json");
    auto& entry = report["blocks"][0]["matrix_units"][1][0];
    entry = (entry.get<int>() + 1) % 5;
    wedderburn::write_json_file(tmp / "bad.json", report);
    const Run bad = run("verify " + tmp / "bad.json " + tmp / "m2.json");
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("first counterexample: matrix_units") != std::string::npos);
  }
  SUBCASE("different field") {
    REQUIRE(run("gen matrix -n 2 -p 7 -o " + tmp / "m2p7.json").exit_code == 0);
    CHECK(run("verify " + tmp / "r.json " + tmp / "m2p7.json").exit_code == 4);
  }
  SUBCASE("malformed report") {
    { std::ofstream(tmp / "broken.json") << "[1, 2"; }
    CHECK(run("verify " + tmp / "broken.json " + tmp / "m2.json").exit_code == 4);
  }
}

TEST_CASE("structured output is deterministic") {
  TempDir tmp;
  REQUIRE(run("gen matrix -n 2 -p 7 -o " + tmp / "a.json").exit_code == 0);
  REQUIRE(run("gen group --named C4 -p 7 -o " + tmp / "b.json").exit_code == 0);
  REQUIRE(run("gen sum " + tmp / "a.json " + tmp / "b.json --scramble --seed 5 -o " + tmp / "sum.json").exit_code == 0);
  const Run first = run("decompose " + tmp / "sum.json --seed 8 --format structured");
  const Run second = run("decompose " + tmp / "sum.json --seed 8 --format structured");
  CHECK(first.exit_code == 0);
  CHECK(first.out == second.out);
  const auto doc = wedderburn::parse_json(first.out);
  CHECK(doc["verification"]["multiplicative"] == true);
  CHECK(doc["blocks"].size() == 4);  // F_7[C4] = F_7 + F_7 + F_49, plus M_2(F_7)

  REQUIRE(run("gen sum " + tmp / "a.json " + tmp / "b.json --scramble --seed 5 -o " + tmp / "sum2.json").exit_code == 0);
  CHECK(slurp(tmp / "sum.json") == slurp(tmp / "sum2.json"));
  CHECK(slurp(tmp / "sum.json.scramble.json") == slurp(tmp / "sum2.json.scramble.json"));
}

TEST_CASE("gen argument errors") {
  TempDir tmp;
  CHECK(run("gen matrix -n 2 -p 5 --ext-poly 1,0,1 -o " + tmp / "x.json").exit_code == 4);
  CHECK(run("gen matrix -n 2 -p 6 -o " + tmp / "x.json").exit_code == 4);
  CHECK(run("gen group --named A5 -p 7").exit_code == 4);
  CHECK(run("gen matrix -n 2 -p 5 --scramble --seed 1").exit_code == 4);  // stdout without a sidecar path
  const Run f25 = run("gen matrix -n 1 -p 5 --ext-poly 1,1,1");
  CHECK(f25.exit_code == 0);
  CHECK(wedderburn::parse_json(f25.out)["dim"] == 2);
  REQUIRE(run("gen matrix -n 1 -p 7 -o " + tmp / "p7.json").exit_code == 0);
  REQUIRE(run("gen matrix -n 1 -p 5 -o " + tmp / "p5.json").exit_code == 0);
  CHECK(run("gen sum " + tmp / "p7.json " + tmp / "p5.json").exit_code == 4);
}
