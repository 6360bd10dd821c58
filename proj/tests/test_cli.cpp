#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  const char* bin = std::getenv("BICENSUS_BIN");
  REQUIRE(bin != nullptr);
  std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("census csv") {
  RunResult r = run("census --k 1 --max-n 6 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("r,s,k,count\n", 0) == 0);
  CHECK(r.out.find("\n2,2,1,1\n") != std::string::npos);
  CHECK(r.out.find("\n2,3,1,6\n") != std::string::npos);
}

TEST_CASE("census json uses decimal strings") {
  RunResult r = run("census --k 0 --max-n 4 --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("{\"r\":2,\"s\":2,\"k\":0,\"count\":\"4\"}") != std::string::npos);
}

TEST_CASE("diagonal table") {
  RunResult r = run("diagonal --k 1 --max-n 8 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\n6,1,2280\n") != std::string::npos);
  CHECK(r.out.find("\n8,1,1026480\n") != std::string::npos);
}

TEST_CASE("series routes agree") {
  RunResult census = run("series --k 2 --order 6 --route census --format csv");
  RunResult closed = run("series --k 2 --order 6 --route closed --format csv");
  RunResult pde = run("series --k 2 --order 6 --route pde --format csv");
  CHECK(census.exit_code == 0);
  CHECK(census.out == closed.out);
  CHECK(census.out == pde.out);
  CHECK(census.out.find("2,3,") != std::string::npos);
}

TEST_CASE("oracle prints the bare count") {
  RunResult r = run("oracle --r 2 --s 2 --q 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1\n");
}

TEST_CASE("verify suites exit zero") {
  for (const char* suite : {"identities", "sec6", "bg2"}) {
    RunResult r = run(std::string("verify --suite ") + suite + " --order 8");
    INFO(suite);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
  }
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("nonsense").exit_code == 2);
  CHECK(run("census --k -3").exit_code == 2);
  CHECK(run("series --route sideways").exit_code == 2);
  CHECK(run("").exit_code == 2);
}

TEST_CASE("output is byte-deterministic") {
  RunResult a = run("census --k 1 --max-n 7 --format json");
  RunResult b = run("census --k 1 --max-n 7 --format json");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}
