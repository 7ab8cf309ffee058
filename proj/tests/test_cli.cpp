#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string command = std::string(LEXT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buffer{};
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.append(buffer.data(), got);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

}  // namespace

TEST_CASE("extensions lists N_{3,2}") {
  const auto r = run("extensions --poset rect:3,2 --avoid 1243");
  CHECK(r.status == 0);
  CHECK(r.out == "5 3 1 6 4 2\n5 3 6 1 4 2\n5 3 6 4 1 2\n5 6 3 1 4 2\n5 6 3 4 1 2\n");
}

TEST_CASE("json output is byte-stable") {
  CHECK(run("extensions --poset rect:3,2 --avoid 1243 --format json").out ==
        "{\"avoid\":\"1243\",\"extensions\":[[5,3,1,6,4,2],[5,3,6,1,4,2],[5,3,6,4,1,2],[5,6,3,1,4,2],"
        "[5,6,3,4,1,2]],\"poset\":\"rect:3,2\"}\n");
  CHECK(run("extensions --poset rect:3,2 --avoid 1243 --mode polynomial --format json").out ==
        "{\"avoid\":\"1243\",\"polynomial\":[[9,1],[10,1],[11,2],[12,1]],\"poset\":\"rect:3,2\"}\n");
  CHECK(run("heaps --poset heap:5,2 --avoid 321 --mode count --format json").out ==
        "{\"avoid\":\"321\",\"count\":7,\"poset\":\"heap:5,2\"}\n");
  CHECK(run("poly thm3 2 --format json").out == "{\"index\":2,\"kind\":\"thm3\",\"polynomial\":[[3,1],[4,1]]}\n");
  const auto a = run("extensions --poset heap:7,2 --avoid 321 --format json");
  const auto b = run("extensions --poset heap:7,2 --avoid 321 --format json");
  CHECK(a.out == b.out);
}

TEST_CASE("growth csv") {
  const auto r = run("growth --avoid 321 --max-n 5");
  CHECK(r.status == 0);
  CHECK(r.out == "n,count,b_n\n1,1,1.000000\n2,1,1.000000\n3,2,1.259921\n4,3,1.316074\n5,7,1.475773\n");
}

TEST_CASE("dump") {
  const auto r = run("extensions --poset rect:2,2 --dump");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("poset rectangular s=2,t=2 n=4\n1<2\n3<1\n3<4\n4<2\n", 0) == 0);
}

TEST_CASE("exit codes") {
  CHECK(run("--help").status == 0);
  CHECK(run("extensions --poset rect:0,2").status == 2);
  CHECK(run("extensions --poset bogus").status == 2);
  CHECK(run("extensions --poset rect:3,2 --avoid 12a").status == 2);
  CHECK(run("heaps --poset heap:5,1").status == 2);
  CHECK(run("oeis fetch XYZ --offline").status == 2);
  CHECK(run("oeis fetch A134465 --offline").status == 1);
  CHECK(run("oeis fetch A000108 --offline").status == 0);
  CHECK(run("no-such-command").status == 2);
  CHECK(run("verify thm3 --max-s 4").status == 0);
  CHECK(run("verify claim --max-n 5").status == 0);
}

TEST_CASE("verify report format") {
  const auto r = run("verify thm3 --max-s 2");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("PASS thm3 s=1 enumeration == closed form", 0) == 0);
  CHECK(r.out.size() >= 5);
  CHECK(r.out.substr(r.out.size() - 5) == "PASS\n");
}
