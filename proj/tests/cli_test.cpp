#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "genusforge/cli.hpp"
#include "genusforge/report.hpp"
#include "json.hpp"

using namespace genusforge;

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

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("arithmetic commands") {
  unsetenv("GENUSFORGE_CACHE");
  CHECK(run({"bernoulli", "20"}).out == "B_20 = -174611/330\n");
  CHECK(run({"lcoeff", "3"}).out == "s_{3} = 62/945\n");
  CHECK(run({"lcoeff", "5,5"}).out == "s_{5,5} = -527062321/4593988395871875\n");
  CHECK(run({"lpoly", "2"}).out == "L_2 = 7/45 p2 - 1/45 p1^2\n");
  CHECK(run({"--factored", "bernoulli", "20"}).out == "B_20 = -(283 * 617) / (2 * 3 * 5 * 11)\n");
  const Run a = run({"apoly", "1"});
  CHECK(a.code == kExitVerdict);
  CHECK(a.out == "A_1 = -1/24 p1\n");
}

TEST_CASE("exit codes") {
  CHECK(run({"rpp", "64"}).code == kExitVerdict);
  CHECK(run({"rpp", "128"}).code == kExitVerdict);
  CHECK(run({"opm", "4"}).code == kExitInconclusive);
  CHECK(run({"bernoulli", "8194"}).code == kExitInconclusive);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"bernoulli", "x"}).code == kExitUsage);
  CHECK(run({"lcoeff", "1,0"}).code == kExitUsage);
  CHECK(run({"e8", "10"}).code == kExitUsage);
  CHECK(run({"opm", "2"}).code == kExitUsage);
  CHECK(run({"witness", "36"}).code == kExitUsage);
  CHECK(run({"--tables", "/nonexistent.txt", "rpp", "64"}).code == kExitInternal);
  CHECK(run({"--version"}).out.find("genusforge") == 0);
}

TEST_CASE("json output parses and agrees with text") {
  for (const std::vector<std::string> cmd :
       {std::vector<std::string>{"rpp", "40"}, {"rpp", "128"}, {"spin32"}, {"e8", "504"}, {"e8", "8"}, {"opm", "3"},
        {"opm", "4", "--candidate", "0,20688922800,0,1606120797592276875"}, {"witness", "64"}}) {
    const Run text = run(cmd);
    std::vector<std::string> jcmd = {"--json"};
    jcmd.insert(jcmd.end(), cmd.begin(), cmd.end());
    const Run js = run(jcmd);
    CHECK(js.code == text.code);
    const nlohmann::json j = nlohmann::json::parse(js.out);
    REQUIRE(j.contains("config"));
    REQUIRE(j.contains("result"));
    CHECK(j["config"]["output_format"] == "json");
    const std::string subject = j["result"]["subject"];
    std::string verdict = j["result"]["verdict"];
    std::replace(verdict.begin(), verdict.end(), '-', ' ');
    CHECK(first_line(text.out).rfind(subject + ": " + verdict, 0) == 0);
    std::size_t certs = 0;
    for (const auto& e : j["result"]["evidence"]) certs += e["certificates"].size();
    CHECK(certs > 0);
  }
  const nlohmann::json b = nlohmann::json::parse(run({"--json", "bernoulli", "20"}).out);
  CHECK(b["result"]["numer"] == "-174611");
  CHECK(b["result"]["denom"] == "330");
}

TEST_CASE("cache directory") {
  const auto dir = std::filesystem::temp_directory_path() / "genusforge_cli_cache";
  std::filesystem::remove_all(dir);
  CHECK(run({"--cache-dir", dir.string(), "lcoeff", "4,4"}).code == kExitVerdict);
  CHECK(std::filesystem::exists(dir / "bernoulli.tsv"));
  CHECK(std::filesystem::exists(dir / "genus.tsv"));
  setenv("GENUSFORGE_CACHE", dir.string().c_str(), 1);
  const Run r = run({"--json", "lcoeff", "4,4"});
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["config"]["cache_dir"] == dir.string());
  unsetenv("GENUSFORGE_CACHE");
  std::filesystem::remove_all(dir);
}
