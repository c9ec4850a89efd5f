#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>

#include "lqw/csv.hpp"
#include "lqw/experiment.hpp"

namespace fs = std::filesystem;

namespace {

const fs::path kDir = fs::temp_directory_path() / "lqw_test_cli";

int run(const std::string& args) {
  fs::create_directories(kDir);
  const std::string cmd = std::string(LQW_CLI_PATH) + " " + args + " >" + (kDir / "stdout").string() +
                          " 2>" + (kDir / "stderr").string();
  const int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::string out() { return slurp(kDir / "stdout"); }
std::string err() { return slurp(kDir / "stderr"); }

}  // namespace

TEST_CASE("simulate writes a reproducible csv") {
  const auto a = kDir / "a.csv";
  REQUIRE(run("simulate --graph complete --n 256 --weights homog:1 --steps 60 --out " + a.string()) == 0);
  const auto first = slurp(a);
  REQUIRE(run("simulate --graph complete:256 --weights homog:1 --steps 60 --out " + a.string()) == 0);
  CHECK(slurp(a) == first);
  const auto table = lqw::read_curve_table(a);
  CHECK(table.columns == std::vector<std::string>{"p"});
  CHECK(table.comment_value("weights") == "homog:1");
  const auto config = lqw::ExperimentConfig::from_header(table);
  CHECK(config.steps == 60);
  CHECK(config.graph.to_string() == "complete:256");
  CHECK(err().find("simulate:") != std::string::npos);
}

TEST_CASE("simulate to stdout and graph flags") {
  REQUIRE(run("simulate --graph johnson --n 10 --k 5 --weights homog:0.099206 --steps 0") == 0);
  CHECK(out().find("# graph: johnson:10,5\n") != std::string::npos);
  CHECK(out().find("t,p\n0,") != std::string::npos);
  CHECK(run("simulate --graph paley --q 13 --steps 3") == 0);
  CHECK(run("simulate --graph lattice --dims 4,5 --steps 3") == 0);
  CHECK(run("simulate --graph hypercube --n 4 --weights rand:0.25,0,1 --seed 3 --initial stationary --steps 3") == 0);
  CHECK(out().find("# seed: 3\n") != std::string::npos);
  CHECK(run("simulate --graph bipartite --dims 4,4 --steps 3") == 0);
}

TEST_CASE("usage and validation errors exit with 2") {
  CHECK(run("") == 2);
  CHECK(run("frobnicate") == 2);
  CHECK(run("simulate --graph johnson --n 10") == 2);
  CHECK(run("simulate --graph bipartite --dims 2,3") == 2);
  CHECK(err().find("regular") != std::string::npos);
  CHECK(run("simulate --graph complete --n 8 --marked 8") == 2);
  CHECK(run("simulate --graph complete --n 8 --weights homog:-1") == 2);
  CHECK(run("simulate --graph complete --n 8 --initial sideways") == 2);
  CHECK(run("simulate --graph lattice --dims 2,4") == 2);
  CHECK(run("simulate --graph complete --n 8 --steps many") == 2);
  CHECK(run("compare --n 8 --M 1 --loop 1 --other-loop 1 --steps 10") == 2);
  CHECK(run("figure nonexistent") == 2);
  CHECK(run("sweep --graph complete --n 8 --param ell --values , --out " + (kDir / "empty").string()) == 2);
  CHECK(run("--help") == 0);
}

TEST_CASE("unwritable output exits with 4") {
  CHECK(run("simulate --graph complete --n 8 --out /nonexistent/dir/x.csv") == 4);
  CHECK(run("plot /nonexistent/curve.csv") == 4);
  CHECK(err().find("/nonexistent/curve.csv") != std::string::npos);
}

TEST_CASE("figure presets") {
  REQUIRE(run("figure --list") == 0);
  CHECK(out().find("hypercube_14\n") != std::string::npos);
  const auto f = kDir / "paley.csv";
  REQUIRE(run("figure paley_257 --out " + f.string()) == 0);
  const auto t = lqw::read_curve_table(f);
  CHECK(t.columns == std::vector<std::string>{"p_loopless", "p_homog", "p_rand10"});
  CHECK(t.comment_value("series p_homog").rfind("homog:0.498054 ", 0) == 0);
}

TEST_CASE("compare reports deviations") {
  REQUIRE(run("compare --n 64 --M 16 --loop 1 --other-loop 3 --steps 100") == 0);
  const auto text = out();
  const auto pos = text.find("max_full_vs_subspace,");
  REQUIRE(pos != std::string::npos);
  CHECK(std::stod(text.substr(pos + 21)) < 1e-9);
}

TEST_CASE("sweep writes cells and summary") {
  const auto d = kDir / "sweep";
  fs::remove_all(d);
  REQUIRE(run("sweep --graph complete --n 256 --weights homog:0 --steps 40 --param ell --values 0,0.3,1,2 --jobs 2 "
              "--out " + d.string()) == 0);
  const auto summary = slurp(d / "summary.csv");
  CHECK(summary.find("cell,value,peak_t,peak_p,status\n") != std::string::npos);
  CHECK(summary.find("2,1,") != std::string::npos);
  CHECK(fs::exists(d / "cell_003.csv"));
  CHECK(run("sweep --graph complete --n 16 --param marked --values 0,99 --out " + d.string()) == 2);
}

TEST_CASE("plot emits a script and rejects malformed input") {
  const auto f = kDir / "one.csv";
  REQUIRE(run("simulate --graph complete --n 16 --weights homog:1 --steps 5 --out " + f.string()) == 0);
  const auto script = kDir / "plot.py";
  REQUIRE(run("plot " + f.string() + " --out " + script.string()) == 0);
  CHECK(slurp(script).find("savefig") != std::string::npos);

  const auto bad = kDir / "bad.csv";
  std::ofstream(bad) << "t,p\n0,0.5\nnot,a,row\n";
  CHECK(run("plot " + bad.string()) == 2);
  CHECK(err().find(bad.string() + ":3:") != std::string::npos);
}
