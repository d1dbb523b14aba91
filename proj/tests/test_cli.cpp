#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "catch_amalgamated.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  bool has(const std::string& s) const { return out.find(s) != std::string::npos; }
};

Run cli(const std::string& args) {
  std::string cmd = std::string(TILTKIT_CLI_PATH) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  int rc = pclose(p);
  return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

std::string fixture(const std::string& name) { return std::string(TILTKIT_FIXTURE_DIR) + "/" + name; }

std::filesystem::path scratch(const std::string& name, const std::string& content) {
  auto dir = std::filesystem::temp_directory_path() / "tiltkit_cli_test";
  std::filesystem::create_directories(dir);
  auto path = dir / name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("check-algebra", "[cli]") {
  Run r = cli("check-algebra example1");
  CHECK(r.code == 0);
  CHECK(r.has("dim 4, rad 3, Cartan [4], det 4"));
  CHECK(cli("check-algebra " + fixture("example1.alg.json")).has("dim 4, rad 3"));
  auto pt = scratch("pt.alg.json",
                    R"({"name":"pt","field":{"kind":"gf","p":10007},"quiver":{"vertices":["1"],"arrows":[]},"relations":[]})");
  Run p = cli("--json check-algebra " + pt.string());
  CHECK(p.code == 0);
  CHECK(p.has("\"dim\": 1"));
}

TEST_CASE("input errors exit 2", "[cli][negative]") {
  auto loop = scratch("loop.alg.json",
                      R"({"name":"loop","field":{"kind":"gf","p":10007},)"
                      R"("quiver":{"vertices":["1"],"arrows":[{"name":"x","from":"1","to":"1"}]},"relations":[]})");
  Run l = cli("check-algebra " + loop.string());
  CHECK(l.code == 2);
  CHECK(l.has("closure cap"));
  auto bad = scratch("bad.json", "garbage");
  CHECK(cli("check-algebra " + bad.string()).code == 2);
  CHECK(cli("check-algebra no-such-algebra").code == 2);
  CHECK(cli("ar-sequence star3 P1").code == 2);
  CHECK(cli("frobnicate").code != 0);
}

TEST_CASE("verify-sequence names failing clauses", "[cli][negative]") {
  Run s = cli("verify-sequence star3 " + fixture("star3.split.seq.json"));
  CHECK(s.code == 1);
  CHECK(s.has("failing: right-approximation, kernel, cokernel"));
  Run a = cli("verify-sequence a2 " + fixture("a2.broken.seq.json"));
  CHECK(a.code == 1);
  CHECK(a.has("failing: right-approximation"));
  CHECK_FALSE(a.has("FAIL kernel"));
  CHECK(cli("verify-sequence star3 " + fixture("star3.ar.seq.json")).code == 0);
}

TEST_CASE("tilting and BB recognition", "[cli]") {
  Run t = cli("tilting example1 " + fixture("example1.seq.json") + " --bb");
  CHECK(t.code == 0);
  CHECK(t.has("verdict true"));
  CHECK(t.has("dims 7/19"));
  Run c = cli("tilting a3 " + fixture("a3.chain.seq.json") + " --n 2");
  CHECK(c.code == 0);
  CHECK(c.has("verdict true"));
}

TEST_CASE("example1 golden run", "[cli]") {
  CHECK(cli("example1").code == 0);
  CHECK(cli("--field rational example1").code == 0);
  CHECK(cli("example1 --golden " + fixture("example1.golden.json")).code == 0);
  auto tampered = scratch("tampered.golden.json",
                          R"({"end_ny_dim": 7, "end_nx_dim": 19, "end_ny_gl_dim": 2, "end_nx_gl_dim": 4,)"
                          R"( "end_ny_cartan_det": 1, "end_nx_cartan_det": 1})");
  Run r = cli("example1 --golden " + tampered.string());
  CHECK(r.code == 1);
  CHECK(r.has("!= golden"));
}

TEST_CASE("invariant commands", "[cli]") {
  Run s = cli("syzygy-chain example1 Y --steps 2");
  CHECK(s.code == 0);
  CHECK(s.has("chain: ok"));
  Run c = cli("compare example1 N,Y N,X --n 1");
  CHECK(c.code == 0);
  CHECK(c.has("compare: ok"));
  CHECK(cli("compare example1 N,Y N,X --n 0").code == 1);
  CHECK(cli("invariants example1 N Y").has("dim 7, simples 2"));
  CHECK(cli("stable-end star3 I1").has("dim stable End 1"));
  Run b = cli("n-bb star3 P1 --n 1");
  CHECK(b.code == 0);
  CHECK(b.has("1-BB construction: ok"));
}

TEST_CASE("JSON output is deterministic for a fixed seed", "[cli]") {
  std::string args = "--seed 3 --json tilting example1 " + fixture("example1.seq.json");
  Run a = cli(args), b = cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.front() == '{');
}
