#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "cheblab/commands.hpp"

using namespace cheblab::cli;

namespace {

struct CommandResult {
  int exit_code;
  std::string out;
  std::string err;
};

CommandResult run(int (*command)(const RunConfig&, std::ostream&, std::ostream&),
                  const RunConfig& config) {
  std::ostringstream out;
  std::ostringstream err;
  int code = command(config, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp_catalog(const std::string& name, const std::string& body) {
  std::string path = std::string("/tmp/cheblab-test-") + name + ".json";
  std::ofstream file(path);
  file << body;
  return path;
}

int count_lines(const std::string& text) {
  int lines = 0;
  for (char c : text) {
    if (c == '\n') ++lines;
  }
  return lines;
}

}  // namespace

TEST_CASE("verify passes on the builtin catalog") {
  RunConfig config;
  config.quick = true;
  CommandResult result = run(cmd_verify, config);
  CHECK(result.exit_code == kExitOk);
  CHECK(result.err.find("[FAIL]") == std::string::npos);
  CHECK(result.err.find("all suites passed") != std::string::npos);
}

TEST_CASE("verify rejects an ambiguous cycle-type catalog") {
  RunConfig config;
  config.quick = true;
  config.catalog = write_temp_catalog("d4", R"json({
    "entries": [{
      "name": "d4-on-4",
      "poly": [2, 0, 0, 0, 1],
      "resolver": "cycle-type",
      "generators": ["(1 2 3 4)", "(1 3)"],
      "badPrimes": [2]
    }]
  })json");
  CommandResult result = run(cmd_verify, config);
  CHECK(result.exit_code == kExitAssertionFailure);
  CHECK(result.err.find("ambiguous cycle type") != std::string::npos);
  std::remove(config.catalog.c_str());
}

TEST_CASE("density emits one row per class and checkpoint") {
  RunConfig config;
  config.entry = "cyclo-5";
  config.x = 5000;
  config.checkpoints = 4;
  CommandResult result = run(cmd_density, config);
  CHECK(result.exit_code == kExitOk);
  CHECK(result.out.rfind("x,label,exact_sum,li_x,ratio,theoretical,abs_error\n", 0) == 0);
  CHECK(count_lines(result.out) == 1 + 4 * 4);

  config.x = 1000;  // single checkpoint after deduplication; rows still exist
  result = run(cmd_density, config);
  CHECK(result.exit_code == kExitOk);
  CHECK(count_lines(result.out) == 1 + 4 * 1);

  // Rows exist even for classes with zero count (only 4 good primes here, 7
  // classes in S5).
  config.entry = "s5";
  config.x = 10;
  result = run(cmd_density, config);
  CHECK(result.exit_code == kExitOk);
  CHECK(count_lines(result.out) == 1 + 7 * 1);
  CHECK(result.out.find(",0/1,") != std::string::npos);
}

TEST_CASE("density writes to a file when asked") {
  RunConfig config;
  config.entry = "cyclo-5";
  config.x = 2000;
  config.checkpoints = 2;
  config.out = "/tmp/cheblab-test-density.csv";
  CommandResult result = run(cmd_density, config);
  CHECK(result.exit_code == kExitOk);
  CHECK(result.out.empty());
  std::ifstream file(config.out);
  REQUIRE(file.good());
  std::string header;
  std::getline(file, header);
  CHECK(header == "x,label,exact_sum,li_x,ratio,theoretical,abs_error");
  std::remove(config.out.c_str());
}

TEST_CASE("induction asserts the exact identity and reports the mean") {
  RunConfig config;
  config.entry = "s3-cbrt2";
  config.phi = "sigma-phi:(1 2 3)";
  config.x = 10000;
  config.checkpoints = 4;
  CommandResult result = run(cmd_induction, config);
  CHECK(result.exit_code == kExitOk);
  CHECK(result.err.find("exact equality") != std::string::npos);
  CHECK(result.err.find("1/2") != std::string::npos);  // mean of the worked example
  CHECK(count_lines(result.out) == 1 + 2 * 4);

  // Declared subgroup must match the cyclic group of the sigma-phi element.
  config.subgroup = "quadratic";  // A3 = <(1 2 3)> : consistent
  CHECK(run(cmd_induction, config).exit_code == kExitOk);
  config.subgroup = "root-field";  // <(2 3)> : different subgroup
  CHECK_THROWS_AS(run(cmd_induction, config), UsageError);
}

TEST_CASE("induction with plain phi specs") {
  RunConfig config;
  config.entry = "s3-cbrt2";
  config.subgroup = "root-field";
  config.x = 5000;
  for (const char* spec : {"one", "zero", "delta:(2 3)", "indicator:1"}) {
    config.phi = spec;
    CHECK(run(cmd_induction, config).exit_code == kExitOk);
  }
  config.phi = "delta:(1 2 3)";  // not in <(2 3)>
  CHECK_THROWS_AS(run(cmd_induction, config), UsageError);
  config.phi = "indicator:7";
  CHECK_THROWS_AS(run(cmd_induction, config), UsageError);
  config.phi = "nonsense";
  CHECK_THROWS_AS(run(cmd_induction, config), UsageError);
}

TEST_CASE("usage errors") {
  RunConfig config;
  CHECK_THROWS_AS(run(cmd_density, config), UsageError);  // no entry
  config.entry = "unknown-entry";
  CHECK_THROWS_AS(run(cmd_density, config), UsageError);
  config.entry = "cyclo-5";
  config.x = 1;
  CHECK_THROWS_AS(run(cmd_density, config), UsageError);
  config.x = 1000;
  config.workers = 0;
  CHECK_THROWS_AS(run(cmd_density, config), UsageError);

  RunConfig analytic;
  analytic.entry = "cyclo-5";
  analytic.subgroup = "real-quadratic";
  analytic.s_values = {0.99};
  CHECK_THROWS_AS(run(cmd_analytic, analytic), UsageError);
}

TEST_CASE("crosscheck agrees on the builtin catalog and catches a wrong wiring") {
  RunConfig config;
  config.entry = "s3-cbrt2";
  config.x = 20000;
  CommandResult result = run(cmd_crosscheck, config);
  CHECK(result.exit_code == kExitOk);
  CHECK(result.err.find("root-field: OK") != std::string::npos);
  CHECK(result.err.find("quadratic: OK") != std::string::npos);

  // A deliberately wrong subfield polynomial (the real cubic of conductor 7)
  // wired to the cube-root field: the first disagreeing prime is reported.
  config.catalog = write_temp_catalog("wrong-wiring", R"json({
    "entries": [{
      "name": "s3-cbrt2",
      "poly": [-2, 0, 0, 1],
      "resolver": "cycle-type",
      "generators": ["(1 2 3)", "(1 2)"],
      "badPrimes": [2, 3, 7],
      "subfields": [
        {"name": "root-field", "subgroupGenerators": ["(2 3)"], "subfieldPoly": [-1, -2, 1, 1]}
      ]
    }]
  })json");
  result = run(cmd_crosscheck, config);
  CHECK(result.exit_code == kExitAssertionFailure);
  CHECK(result.err.find("MISMATCH") != std::string::npos);
  CHECK(result.err.find("p = 5") != std::string::npos);
  std::remove(config.catalog.c_str());
}

TEST_CASE("reduce reports exact and empirical densities") {
  RunConfig config;
  config.entry = "s3-cbrt2";
  config.x = 50000;
  config.workers = 2;
  CommandResult result = run(cmd_reduce, config);
  CHECK(result.exit_code == kExitOk);
  CHECK(result.out.rfind("class,order,class_size,theoretical,empirical,abs_error\n", 0) == 0);
  CHECK(count_lines(result.out) == 1 + 3);
  CHECK(result.out.find("1/6") != std::string::npos);
  CHECK(result.out.find("1/2") != std::string::npos);
  CHECK(result.out.find("1/3") != std::string::npos);
}

TEST_CASE("analytic emits both sides per s value") {
  RunConfig config;
  config.entry = "cyclo-5";
  config.subgroup = "real-quadratic";
  config.phi = "delta:(1 4)(2 3)";
  config.s_values = {1.1, 1.05};
  config.cutoff = 100000;
  CommandResult result = run(cmd_analytic, config);
  CHECK(result.exit_code == kExitOk);
  CHECK(result.out.rfind("s,side,value,theoretical\n", 0) == 0);
  CHECK(count_lines(result.out) == 1 + 2 * 2);
  CHECK(result.err.find("termwise equality") != std::string::npos);

  config.phi = "zero";
  result = run(cmd_analytic, config);
  CHECK(result.exit_code == kExitOk);
  CHECK(result.out.find(",E,0,") != std::string::npos);
  CHECK(result.out.find(",K,0,") != std::string::npos);
}
