#include <doctest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Result {
  int code;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(WILSONFF_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("eval command") {
  auto r = run("eval \"T 1 3 -- @ p=13\" --json");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["closed"] == "2");
  CHECK(j["brute"] == "2");
  CHECK(j["match"] == true);

  CHECK(run("eval \"S1 0 + @ p=13\"").out.find("closed       12") != std::string::npos);
  CHECK(run("eval \"T 2 2 -+\" --p 5").code == 0);
  CHECK(run("eval \"T 2 2 -+ @ p=5\" --p 7").code == 2);
  CHECK(run("eval \"T 2 2 -+\"").code == 2);
  CHECK(run("eval \"T 2 2 -* @ p=5\"").code == 2);
  CHECK(run("eval \"T 2 3 -+ @ p=5\"").code == 2);
  CHECK(run("eval \"T 2 2 -+ @ p=9\"").code == 2);
  CHECK(run("eval \"A 1,1 2 -+ @ q=9\"").code == 0);
}

TEST_CASE("table command") {
  auto r = run("table 1 --p 13 --json");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["rows"][0]["closed"]["++"] == "3");
  CHECK(j["rows"][0]["closed"]["+-"] == "12");
  CHECK(j["rows"][0]["closed"]["-+"] == "6");
  CHECK(j["rows"][0]["closed"]["--"] == "11");
  CHECK(run("table 2 --p 3").out.find("skipped") != std::string::npos);
  CHECK(run("table 5 --p 7").code == 2);
  CHECK(run("table 2").code == 2);
}

TEST_CASE("verify command") {
  const std::string path = "cli_verify_report.jsonl";
  auto r = run("verify --qmin 3 --qmax 40 --workers 2 --out " + path);
  CHECK(r.code == 0);
  std::ifstream in(path);
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j.size() == 6);
    CHECK(j["ok"] == true);
    CHECK(j.contains("expected"));
    ++n;
  }
  CHECK(n > 0);
  std::remove(path.c_str());

  auto empty = run("verify --qmin 50 --qmax 10");
  CHECK(empty.code == 0);
  CHECK(empty.out.empty());
  auto dickson = run("verify --qmin 3 --qmax 100 --suites dickson");
  CHECK(dickson.code == 0);
  CHECK(std::count(dickson.out.begin(), dickson.out.end(), '\n') == 2 * 28);
  CHECK(run("verify --suites nope").code == 2);
  CHECK(run("verify --qmin 2").code == 2);
  CHECK(run("verify --qmin x").code == 2);
  CHECK(run("frobnicate").code == 2);
}
