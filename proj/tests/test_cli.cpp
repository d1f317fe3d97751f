#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "peakpoly");
  std::ostringstream out, err;
  const int code = peakpoly::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("triangle") {
  const Outcome csv = run({"triangle", "--family", "R", "--nmax", "3", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out == "1\n1,1\n1,2,1\n1,4,5,2\n");
  const Outcome json = run({"triangle", "--family", "W", "--nmax", "4"});
  CHECK(json.out == "[[\"1\"],[\"2\"],[\"4\",\"2\"],[\"8\",\"16\"]]\n");
  CHECK(run({"triangle", "--family", "WL", "--nmax", "0"}).code == 2);
  CHECK(run({"triangle", "--family", "R", "--nmax", "100000"}).code == 3);
  CHECK(run({"triangle", "--family", "X", "--nmax", "3"}).code == 2);
}

TEST_CASE("poly") {
  CHECK(run({"poly", "--family", "G", "--n", "5"}).out == "1,13,16\n");
  CHECK(run({"poly", "--family", "Q", "--n", "0"}).out == "1\n");
  CHECK(run({"poly", "--family", "A", "--n", "3"}).out == "1,4,1\n");
  CHECK(run({"poly", "--family", "A", "--n", "3", "--format", "json"}).out == "[\"1\",\"4\",\"1\"]\n");
  CHECK(run({"poly", "--family", "C", "--n", "3"}).out == "1,23,23,1\n");
  CHECK(run({"poly", "--family", "C", "--n", "3", "--source", "gf"}).out == "1,23,23,1\n");
  CHECK(run({"poly", "--family", "T", "--n", "9"}).code == 0);
  CHECK(run({"poly", "--family", "A", "--n", "0"}).code == 2);
  CHECK(run({"poly"}).code == 2);
}

TEST_CASE("oracle") {
  CHECK(run({"oracle", "--stat", "alt", "--n", "4"}).out == "5\n");
  CHECK(run({"oracle", "--stat", "pk", "--n", "3"}).out == "4,2\n");
  CHECK(run({"oracle", "--stat", "ades", "--n", "1"}).out == "0,2\n");
  CHECK(run({"oracle", "--stat", "pk", "--n", "11"}).code == 3);
  CHECK(run({"oracle", "--stat", "desb", "--n", "8"}).code == 3);
}

TEST_CASE("verify") {
  const Outcome clt = run({"verify", "--suite", "clt", "--nmax", "30"});
  CHECK(clt.code == 0);
  std::size_t results = 0;
  for (std::size_t at = clt.out.find("\"check_id\""); at != std::string::npos;
       at = clt.out.find("\"check_id\"", at + 1)) {
    ++results;
  }
  CHECK(results == 27);
  CHECK(run({"verify", "--suite", "roots", "--nmax", "0"}).code == 2);
  CHECK(run({"verify", "--suite", "identities", "--nmax", "8", "--inject-fault", "4,1"}).code == 1);
  CHECK(run({"verify", "--suite", "oracle", "--nmax", "12"}).code == 3);
  CHECK(run({"verify", "--suite", "nope"}).code == 2);
}

TEST_CASE("job count from the environment does not change output") {
  setenv("PEAKPOLY_JOBS", "3", 1);
  const Outcome env = run({"verify", "--suite", "oracle", "--nmax", "7"});
  unsetenv("PEAKPOLY_JOBS");
  const Outcome flag = run({"verify", "--suite", "oracle", "--nmax", "7", "--jobs", "1"});
  CHECK(env.code == 0);
  CHECK(env.out == flag.out);
}
