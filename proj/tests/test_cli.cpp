#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "spinalg/cli.hpp"
#include "spinalg/clifford.hpp"

using namespace spinalg;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("reduce") {
  CHECK(run({"reduce", "--d", "2", "[A(1),M(1)] - i*T"}).out == "0\n");
  CHECK(run({"reduce", "--d", "3", "Q2"}).out == "-5/4\n");
  CHECK(run({"reduce", "--d", "3", "(g1 x1 + g2 x2 + g3 x3)^2"}).out == "x1^2+x2^2+x3^2\n");
  CHECK(run({"reduce", "--d", "2", "x1 p1", "--adjoint"}).out == "-i+x1*p1\n");
  CHECK(run({"reduce", "--d", "2", "alpha*E*x1", "--sub", "alpha=2,E=1/2"}).out == "x1\n");
  const Run bad = run({"reduce", "--d", "3", "J(1,4)"});
  CHECK(bad.code == kExitUsage);
  CHECK(bad.err.find("1:5: index 4 out of range 1..3") != std::string::npos);
  CHECK(run({"reduce", "--d", "3", "x1 +"}).code == kExitUsage);
  CHECK(run({"reduce", "--d", "9", "x1"}).code == kExitUsage);
  CHECK(run({"reduce", "--d", "2..4", "x1"}).code == kExitUsage);
  CHECK(run({"reduce", "--d", "4", "Jvec(1)"}).code == kExitUsage);
}

TEST_CASE("matrices") {
  const Run m5 = run({"matrices", "--d", "5"});
  CHECK(m5.code == kExitOk);
  CHECK(m5.out == read_file(std::string(SPINALG_SOURCE_DIR) + "/fixtures/matrices_d5.txt"));
  const Run m6 = run({"matrices", "--d", "6"});
  CHECK(m6.code == kExitOk);
  std::istringstream in(m6.out);
  const auto blocks = parse_fixture(in);
  REQUIRE(blocks.size() == 6 + 15);
  const Matrix id = Matrix::identity(8);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      CHECK(blocks[i].matrix * blocks[j].matrix + blocks[j].matrix * blocks[i].matrix == id * GaussianRational(i == j ? 2 : 0));
}

TEST_CASE("verify") {
  const Run ok = run({"verify", "--d", "3", "--suite", "core", "--format", "json", "--no-timing"});
  CHECK(ok.code == kExitOk);
  const auto j = nlohmann::json::parse(ok.out);
  CHECK(j["suite"] == "core");
  // a transcription-tier mismatch fails only under --strict
  CHECK(run({"verify", "--d", "3", "--suite", "core", "--strict"}).code == kExitFailure);
  CHECK(run({"verify", "--d", "3", "--suite", "sturm", "--strict"}).code == kExitOk);
  const Run range = run({"verify", "--d", "2..4", "--suite", "d3", "--format", "markdown", "--no-timing"});
  CHECK(range.code == kExitOk);
  CHECK(count(range.out, "## ") == 3);
  const auto arr = nlohmann::json::parse(run({"verify", "--d", "2..4", "--suite", "d3", "--format", "json"}).out);
  CHECK(arr.is_array());
  CHECK(arr.size() == 3);
  CHECK(run({"verify", "--d", "3", "--suite", "nonsense"}).code == kExitUsage);
  CHECK(run({"verify", "--d", "4..2"}).code == kExitUsage);
  // byte-identical reruns
  const std::vector<std::string> args{"verify", "--d", "2", "--suite", "sturm", "--oracle", "--trials", "3", "--no-timing"};
  const Run a = run(args), b = run(args);
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  std::vector<std::string> one_job = args;
  one_job.insert(one_job.end(), {"--jobs", "1"});
  CHECK(run(one_job).out == a.out);
}

TEST_CASE("oracle") {
  const Run yes = run({"oracle", "--d", "3", "[LRL(1),H]", "0"});
  CHECK(yes.code == kExitOk);
  CHECK(yes.out.starts_with("confirmed: 20 of 20 test functions agree (d=3, seed=0)"));
  const Run no = run({"oracle", "--d", "2", "[x1,p1]", "0", "--seed", "5"});
  CHECK(no.code == kExitFailure);
  CHECK(no.out.starts_with("witness (trial "));
  CHECK(no.out.find("\n  f   = ") != std::string::npos);
  CHECK(no.out == run({"oracle", "--d", "2", "[x1,p1]", "0", "--seed", "5"}).out);
  CHECK(run({"oracle", "--d", "2", "x1", "0", "--trials", "4", "--max-degree", "0", "--min-k", "0"}).code == kExitFailure);
  CHECK(run({"oracle", "--d", "2", "x1"}).code == kExitUsage);
}

TEST_CASE("list") {
  const Run text = run({"list"});
  CHECK(text.code == kExitOk);
  CHECK(text.out.find("SO-COM-AM\tcore") != std::string::npos);
  const auto j = nlohmann::json::parse(run({"list", "--format", "json"}).out);
  REQUIRE(j.is_array());
  CHECK(j.size() == static_cast<std::size_t>(std::count(text.out.begin(), text.out.end(), '\n')));
}

TEST_CASE("version, usage and output files") {
  CHECK(run({"--version"}).out.find("1.0.0") != std::string::npos);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  const auto dir = std::filesystem::temp_directory_path() / "spinalg_cli_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  ::setenv("SPINALG_OUTPUT_DIR", dir.c_str(), 1);
  const Run w = run({"verify", "--d", "3", "--suite", "d3", "--format", "text", "--no-timing", "--output", "report.txt"});
  ::unsetenv("SPINALG_OUTPUT_DIR");
  CHECK(w.code == kExitOk);
  CHECK(w.out.empty());
  CHECK(read_file(dir / "report.txt") == run({"verify", "--d", "3", "--suite", "d3", "--format", "text", "--no-timing"}).out);
  CHECK(run({"verify", "--d", "3", "--suite", "d3", "--output", "/nonexistent/dir/x.json"}).code == kExitIo);
  std::filesystem::remove_all(dir);
}

TEST_CASE("installed binary") {
  const char* bin = std::getenv("SPINALG_BIN");
  if (!bin) return;
  const std::string cmd = std::string(bin) + " reduce --d 3 Q2";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  char buf[256];
  std::string out;
  while (std::fgets(buf, sizeof buf, pipe)) out += buf;
  const int status = ::pclose(pipe);
  CHECK(out == "-5/4\n");
  CHECK(WEXITSTATUS(status) == 0);
  CHECK(WEXITSTATUS(std::system((std::string(bin) + " reduce --d 3 'J(1,4)' 2>/dev/null").c_str())) == kExitUsage);
}
