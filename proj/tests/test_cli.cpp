#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"

using jsobolev::cli::parse_degrees;
using jsobolev::cli::parse_reals;
using jsobolev::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "jsobolev_cli_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("degree ladders") {
  CHECK(parse_degrees("16,32,64") == std::vector<int>{16, 32, 64});
  CHECK(parse_degrees("16:128:*2") == std::vector<int>{16, 32, 64, 128});
  CHECK(parse_degrees("2:10:4") == std::vector<int>{2, 6, 10});
  CHECK(parse_degrees("0:3") == std::vector<int>{0, 1, 2, 3});
  CHECK(parse_degrees("16,32,...,1024") == std::vector<int>{16, 32, 64, 128, 256, 512, 1024});
  CHECK(parse_degrees("10,20,...,50") == std::vector<int>{10, 20, 30, 40, 50});
  CHECK_THROWS(parse_degrees("16,32,...,1000"));
  CHECK_THROWS(parse_degrees("8,4"));
  CHECK_THROWS(parse_degrees("a:b"));
  CHECK_THROWS(parse_degrees(""));
}

TEST_CASE("real grids") {
  const std::vector<double> grid = parse_reals("1.4:3.0:0.1");
  REQUIRE(grid.size() == 17);
  CHECK(grid[3] == 1.7);
  CHECK(grid.back() == 3.0);
  CHECK(parse_reals("2,2.5") == std::vector<double>{2.0, 2.5});
  CHECK_THROWS(parse_reals("1:2:0"));
  CHECK_THROWS(parse_reals("x"));
}

TEST_CASE("window prints the critical exponents") {
  const Outcome o = invoke({"window", "--alpha", "0", "--beta", "0", "--m", "1"});
  CHECK(o.code == 0);
  CHECK(o.out == "p_lower=1.6 p_upper=2.6666666666666665\n");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"window", "--alpha", "-1"}).code == 2);
  CHECK(invoke({"window", "--alpha", "zero"}).code == 2);
  CHECK(invoke({"window", "--bogus", "1"}).code == 2);
  CHECK(invoke({"coeffs", "--f", "nope"}).code == 2);
  CHECK(invoke({"norms", "--format", "xml"}).code == 2);
  CHECK(invoke({"kernel-check", "--r", "1.2"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("unwritable output exits with 1") {
  const Outcome o = invoke({"window", "--out", "/nonexistent-dir/x/out.csv"});
  CHECK(o.code == 1);
}

TEST_CASE("partial sums of a basis element") {
  const Outcome o = invoke({"partial-sum", "--alpha", "0", "--beta", "0", "--m", "1", "--f", "q7", "--n", "10", "--p", "2"});
  REQUIRE(o.code == 0);
  std::istringstream in(o.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "n,error");
  int rows = 0;
  while (std::getline(in, line)) {
    const auto comma = line.find(',');
    const int n = std::stoi(line.substr(0, comma));
    const double error = std::stod(line.substr(comma + 1));
    if (n >= 7) CHECK(error < 1e-8);
    ++rows;
  }
  CHECK(rows == 11);
}

TEST_CASE("sweep-p schema and window flags") {
  const auto path = scratch("sweep.csv");
  const Outcome o = invoke({"sweep-p", "--p-grid", "1.4,2.0,3.0", "--degrees", "16,32,...,256", "--out", path.string()});
  REQUIRE(o.code == 0);
  const std::string csv = slurp(path);
  CHECK(csv.rfind("p,n,value,slope_window_flag\n", 0) == 0);
  CHECK(csv.find("window=in") != std::string::npos);
  CHECK(csv.find("window=out") != std::string::npos);
  CHECK(csv.find('\r') == std::string::npos);
}

TEST_CASE("byte-identical reruns") {
  const auto a = scratch("run_a.csv");
  const auto b = scratch("run_b.csv");
  const std::vector<std::string> base = {"coeffs", "--alpha", "0.5", "--m", "2", "--f", "onemx:1.3", "--n", "12", "--out"};
  auto args_a = base;
  args_a.push_back(a.string());
  auto args_b = base;
  args_b.push_back(b.string());
  REQUIRE(invoke(args_a).code == 0);
  REQUIRE(invoke(args_b).code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK_FALSE(slurp(a).empty());
}

TEST_CASE("config file merge and precedence") {
  const auto cfg = scratch("config.json");
  {
    std::ofstream out(cfg);
    out << R"({"alpha": 0.5, "beta": "0", "m": 2})";
  }
  const Outcome from_file = invoke({"window", "--config", cfg.string()});
  CHECK(from_file.code == 0);
  CHECK(from_file.out == "p_lower=1.75 p_upper=2.3333333333333335\n");
  const Outcome flag_wins = invoke({"window", "--config", cfg.string(), "--m", "1"});
  CHECK(flag_wins.out == "p_lower=1.6666666666666667 p_upper=2.5\n");

  const auto bad = scratch("bad.json");
  {
    std::ofstream out(bad);
    out << R"({"alpah": 0.5})";
  }
  CHECK(invoke({"window", "--config", bad.string()}).code == 2);
  CHECK(invoke({"window", "--config", scratch("missing.json").string()}).code == 2);
}

TEST_CASE("resolution from the environment") {
  ::setenv("JSOBOLEV_RESOLUTION", "12", 1);
  const Outcome env = invoke({"kernel-check", "--alpha", "1", "--beta", "1", "--r", "0.95", "--format", "json"});
  ::unsetenv("JSOBOLEV_RESOLUTION");
  REQUIRE(env.code == 0);
  CHECK(env.out.find("\"n_theta\": 12") != std::string::npos);
}

TEST_CASE("json summaries") {
  const Outcome o = invoke({"norms", "--degrees", "16:256:*2", "--p", "3", "--format", "json"});
  REQUIRE(o.code == 0);
  CHECK(o.out.find("\"experiment\": \"norms\"") != std::string::npos);
  CHECK(o.out.find("\"slope\"") != std::string::npos);
  const Outcome e = invoke({"eval", "--n", "3", "--x", "0.5", "--ell", "1"});
  REQUIRE(e.code == 0);
  CHECK(e.out.rfind("j,ell,x,value\n", 0) == 0);
  const Outcome h = invoke({"hardy-check", "--alpha", "1", "--beta", "1", "--resolution", "20"});
  REQUIRE(h.code == 0);
  CHECK(h.out.find("standard,") != std::string::npos);
  CHECK(h.out.find("adjoint,") != std::string::npos);
  const Outcome a = invoke({"asym", "--m", "2", "--k", "1", "--ell", "2", "--degrees", "10:1000:*10"});
  CHECK(a.code == 0);
}

}  // TEST_SUITE
