#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "covenum/cli.hpp"

using covenum::run_cli;

namespace {

struct CliResult {
  int status;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"covenum"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int status =
      run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::string write_file(const std::string& name, const std::string& content) {
  std::ofstream f(name);
  f << content;
  return name;
}

const std::string kP3 = write_file("cli_p3.txt", "3 2\n0 1\n1 2\n");
const std::string kK3 =
    write_file("cli_k3.txt", "3 3\n0 1\n0 2\n1 2\n");
const std::string kC5 =
    write_file("cli_c5.txt", "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
const std::string kK2 = write_file("cli_k2.txt", "2 1\n0 1\n");
const std::string kDisconnected =
    write_file("cli_disc.txt", "4 2\n0 1\n2 3\n");
const std::string kInstance =
    write_file("cli_minaug.txt", "2 2 3\n0 0\n1 0\n1 1\n");
const std::string kHyper = write_file("cli_hyper.txt", "4 2\n1 2\n2 3\n");
const std::string kCaps1 = write_file("cli_caps1.txt", "0 1\n1 1\n2 1\n");

}  // namespace

TEST_CASE("cvc prints the unique cover of a path") {
  auto r = run({"cvc", kP3});
  CHECK(r.status == 0);
  CHECK(r.out == "1\n");
  CHECK(r.err.empty());
}

TEST_CASE("all cvc modes agree on the cycle") {
  auto degree = run({"cvc", kC5});
  CHECK(degree.status == 0);
  for (const char* mode : {"quasipoly", "budget:4", "claw:3"}) {
    auto other = run({"cvc", kC5, "--mode", mode});
    CHECK(other.status == 0);
    CHECK(other.out == degree.out);
  }
  CHECK(run({"cvc", kC5, "--mode", "bogus"}).status == 2);
  CHECK(run({"cvc", kC5, "--mode", "claw:x"}).status == 2);
}

TEST_CASE("capacitated cover of the triangle") {
  auto r = run({"capvc", kK3, "--capacity-all", "1"});
  CHECK(r.status == 0);
  CHECK(r.out == "0 1 2\n");

  auto file = run({"capvc", kK3, "--capacity-file", kCaps1});
  CHECK(file.out == r.out);

  auto both = run({"capvc", kK3, "--capacity-all", "1", "--capacity-file",
                   kCaps1});
  CHECK(both.status == 2);
  auto neither = run({"capvc", kK3});
  CHECK(neither.status == 2);
}

TEST_CASE("assignment witnesses follow each solution") {
  auto r = run({"capvc", kK3, "--capacity-all", "2", "--emit-assignment"});
  CHECK(r.status == 0);
  std::istringstream lines(r.out);
  std::string line;
  int solutions = 0, witnesses = 0;
  bool last_was_solution = false;
  while (std::getline(lines, line)) {
    if (line.rfind("# alpha", 0) == 0) {
      ++witnesses;
      CHECK(last_was_solution);
      last_was_solution = false;
    } else {
      ++solutions;
      last_was_solution = true;
    }
  }
  CHECK(solutions == 3);
  CHECK(witnesses == 3);

  auto ds = run({"capds", kK3, "--capacity-all", "2", "--emit-assignment"});
  CHECK(ds.status == 0);
  CHECK(ds.out.find("# beta") != std::string::npos);
}

TEST_CASE("empty capacitated family exits with status one") {
  auto r = run({"capvc", kK2, "--capacity-all", "0"});
  CHECK(r.status == 1);
  CHECK(r.out.empty());
}

TEST_CASE("disconnected graphs are an input error") {
  auto r = run({"cvc", kDisconnected});
  CHECK(r.status == 2);
  CHECK(r.err.find("connected") != std::string::npos);
  CHECK(run({"cds", kDisconnected}).status == 2);
  CHECK(run({"capcvc", kDisconnected, "--capacity-all", "2"}).status == 2);
}

TEST_CASE("stats trailer is one machine readable line") {
  auto r = run({"cds", kC5, "--stats"});
  CHECK(r.status == 0);
  auto last_newline = r.out.find_last_of('\n');
  auto prev_newline = r.out.find_last_of('\n', last_newline - 1);
  std::string trailer = r.out.substr(prev_newline + 1,
                                     last_newline - prev_newline - 1);
  auto j = nlohmann::json::parse(trailer);
  CHECK(j["outputs"] == 5);
  CHECK(j.contains("max_gap"));
  CHECK(j.contains("mean_gap"));
  CHECK(j.contains("neighborhood_calls"));
}

TEST_CASE("max solutions truncates") {
  auto r = run({"cvc", kC5, "--max-solutions", "2"});
  CHECK(r.status == 0);
  int lines = 0;
  for (char ch : r.out)
    if (ch == '\n') ++lines;
  CHECK(lines == 2);
}

TEST_CASE("minaug reads the bipartite instance format") {
  auto r = run({"minaug", kInstance});
  CHECK(r.status == 0);
  CHECK(r.out == "0\n");
}

TEST_CASE("reduce emits gadget and capacities that parse back") {
  auto plain = run({"reduce", "--kind", "cvc", kK2});
  CHECK(plain.status == 0);
  CHECK(plain.out.rfind("6 6\n", 0) == 0);  // 2 originals + w,w',r,r'

  // graph block then one capacity line per gadget vertex
  auto cap = run({"reduce", "--kind", "capvc", kK2});
  CHECK(cap.status == 0);
  CHECK(cap.out == "4 3\n0 2\n1 2\n2 3\n0 1\n1 1\n2 2\n3 0\n");

  auto files = run({"reduce", "--kind", "capvc", kK2, "--graph-out",
                    "cli_gadget.txt", "--capacity-out", "cli_gadget_caps.txt"});
  CHECK(files.status == 0);
  CHECK(files.out.empty());
  std::ifstream gin("cli_gadget.txt");
  CHECK(gin.good());
  std::ifstream cin_("cli_gadget_caps.txt");
  CHECK(cin_.good());

  CHECK(run({"reduce", "--kind", "cvc", kK2, "--capacity-out", "x.txt"})
            .status == 2);
  CHECK(run({"reduce", "--kind", "nope", kK2}).status == 2);
}

TEST_CASE("verify reports pass and fail through the exit status") {
  auto r = run({"verify", "--kind", "cvc-2deg", kHyper});
  CHECK(r.status == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(r.out.find("degeneracy") != std::string::npos);
}

TEST_CASE("oracle subcommand prints reference families") {
  auto t = run({"oracle", "--problem", "transversal", kHyper});
  CHECK(t.status == 0);
  CHECK(t.out == "2\n1 3\n");

  auto c = run({"oracle", "--problem", "cvc", kP3});
  CHECK(c.status == 0);
  CHECK(c.out == "1\n");

  auto m = run({"oracle", "--problem", "minaug", kInstance});
  CHECK(m.status == 0);
  CHECK(m.out == "0\n");

  auto cap = run({"oracle", "--problem", "capvc", kK3, "--capacity-all", "1"});
  CHECK(cap.status == 0);
  CHECK(cap.out == "0 1 2\n");

  CHECK(run({"oracle", "--problem", "nope", kP3}).status == 2);
}

TEST_CASE("usage errors exit with status two") {
  CHECK(run({}).status == 2);
  CHECK(run({"cvc"}).status == 2);               // missing file
  CHECK(run({"cvc", "no_such_file.txt"}).status == 2);
  CHECK(run({"cvc", kP3, "--frobnicate"}).status == 2);
  auto help = run({"--help"});
  CHECK(help.status == 0);
  CHECK(help.out.find("cvc") != std::string::npos);
}

TEST_CASE("malformed graph file reports the line") {
  write_file("cli_bad.txt", "2 1\n0 2\n");
  auto r = run({"cvc", "cli_bad.txt"});
  CHECK(r.status == 2);
  CHECK(r.err.find("line") != std::string::npos);
}
