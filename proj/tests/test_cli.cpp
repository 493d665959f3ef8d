#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cadorder::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("cadorder-test-" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("suggest prints one ordering line") {
  auto r = run({"suggest", CADORDER_SAMPLES "/circle.prob", "--heuristic", "brown"});
  CHECK(r.code == 0);
  CHECK(r.out == "z>x>y\n");
}

TEST_CASE("suggest --all prints every heuristic") {
  auto r = run({"suggest", CADORDER_SAMPLES "/circle.prob", "--all"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 12);
  CHECK(r.out.find("newh-ext: ") != std::string::npos);
}

TEST_CASE("bad input exit codes") {
  auto dir = scratch("bad");
  write(dir / "bad.prob", "vars: x\nqff: x^^2 = 0\n");
  auto parse = run({"suggest", (dir / "bad.prob").string()});
  CHECK(parse.code == 2);
  CHECK(parse.err.find("bad.prob:2:8") != std::string::npos);
  CHECK(run({"suggest", CADORDER_SAMPLES "/circle.prob", "-H", "nope"}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
}

TEST_CASE("eval names a missing cost row") {
  auto dir = scratch("eval");
  write(dir / "costs.csv", "problem_id,ordering,cells,time_s\np,x>y,100,1\np,y>x,300,3\n");
  write(dir / "choices.csv",
        "problem_id,heuristic,ordering,heuristic_time_s,fallback_lex,status\n"
        "q,brown,x>y,0.1,0,ok\n");
  auto r = run({"eval", "--costs", (dir / "costs.csv").string(), "--choices",
                (dir / "choices.csv").string(), "--out", (dir / "savings.csv").string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("'q'") != std::string::npos);
  CHECK(r.err.find("'x>y'") != std::string::npos);
}

TEST_CASE("measure prints the cascade") {
  auto r = run({"measure", CADORDER_SAMPLES "/circle.prob", "--ordering", "z>x>y"});
  CHECK(r.code == 0);
  CHECK(r.out.find("sotd: 16\n") != std::string::npos);
  CHECK(r.out.find("ndrr: 3\n") != std::string::npos);
}
