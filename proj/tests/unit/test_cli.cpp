#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "sixj/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "sixj");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = sixj::cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("cli eval") {
  const Run r = run({"eval", "--kind", "su2", "1", "1", "1", "1", "1", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("coeff 1/6") != std::string::npos);
  CHECK(r.out.find("radicand 1\n") != std::string::npos);

  const Run s = run({"eval", "1/2", "1/2", "1/2", "1/2", "1/2", "1/2"});
  CHECK(s.code == 0);
  CHECK(s.out.find("parity gamma") != std::string::npos);
}

TEST_CASE("cli classify and geometry") {
  const Run c = run({"classify", "1/2", "1/2", "1/2", "1/2", "1/2", "1/2"});
  CHECK(c.code == 0);
  CHECK(c.out.rfind("gamma\n", 0) == 0);

  const Run b = run({"classify", "0.5", "1", "1", "1", "1", "1"});
  CHECK(b.out.find("jstar j1") != std::string::npos);

  const Run g = run({"geometry", "1", "1", "1", "1", "1", "1"});
  CHECK(g.code == 0);
  CHECK(g.out.find("volume 0.1178511") != std::string::npos);
}

TEST_CASE("cli asym") {
  const Run a = run({"asym", "--k", "21", "1/2", "1/2", "1/2", "1/2", "1/2", "1/2"});
  CHECK(a.code == 0);
  CHECK(a.out.find("formula gamma") != std::string::npos);
  const Run e = run({"asym", "--k", "22", "1/2", "1/2", "1/2", "1/2", "1/2", "1/2"});
  CHECK(e.out.find("formula alpha") != std::string::npos);
}

TEST_CASE("cli scan and slope") {
  const Run s = run({"scan", "--kind", "super", "--k-from", "1", "--k-to", "9", "--k-step", "2", "1/2", "1/2", "1/2",
                     "1/2", "1/2", "1/2"});
  CHECK(s.code == 0);
  CHECK(count_lines(s.out) == 6);

  const auto path = std::filesystem::temp_directory_path() / "sixj_cli_scan.csv";
  const Run w = run({"scan", "--kind", "su2", "--k-from", "10", "--k-to", "80", "--out", path.string(), "1", "1", "1",
                     "1", "1", "1"});
  CHECK(w.code == 0);
  CHECK(w.out.empty());
  const Run f = run({"slope", path.string()});
  CHECK(f.code == 0);
  CHECK(f.out.find("slope -1.") != std::string::npos);
  std::filesystem::remove(path);

  const Run j = run({"scan", "--format", "json", "--k-from", "1", "--k-to", "3", "1", "1", "1", "1", "1", "1"});
  CHECK(j.code == 0);
  CHECK(j.out.find("\"exact_mantissa\"") != std::string::npos);
}

TEST_CASE("cli exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"eval", "1", "1", "1"}).code == 2);
  CHECK(run({"eval", "0.25", "1", "1", "1", "1", "1"}).code == 2);
  CHECK(run({"eval", "--kind", "su3", "1", "1", "1", "1", "1", "1"}).code == 2);
  CHECK(run({"eval", "--kind", "su2", "1", "1", "3", "1", "1", "1"}).code == 3);
  CHECK(run({"eval", "--kind", "su2", "1/2", "1/2", "1/2", "1/2", "1/2", "1/2"}).code == 3);
  CHECK(run({"geometry", "1/2", "1", "1", "1", "1", "1/2"}).code == 4);
  CHECK(run({"slope", "/nonexistent/file.csv"}).code == 1);
  CHECK(run({"--help"}).code == 0);
  const Run e = run({"geometry", "1/2", "1", "1", "1", "1", "1/2"});
  CHECK(e.err.find("NonEuclidean") != std::string::npos);
}

#ifdef SIXJ_CLI_PATH
TEST_CASE("cli binary runs") {
  const std::string cmd = std::string(SIXJ_CLI_PATH) + " eval --kind su2 1 1 1 1 1 1 > /dev/null";
  CHECK(std::system(cmd.c_str()) == 0);
  const std::string bad = std::string(SIXJ_CLI_PATH) + " eval --kind su2 1 1 3 1 1 1 2> /dev/null";
  const int status = std::system(bad.c_str());
  CHECK(WEXITSTATUS(status) == 3);
}
#endif
