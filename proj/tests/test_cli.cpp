// End to end contract of the command line tool: formats, exit codes,
// diagnostics on stderr, byte determinism.

#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Runs the tool with the given arguments, capturing stdout, stderr and the
// exit code.
RunResult run_cli(const std::string& args) {
  static int counter = 0;
  const std::string err_path =
      "cli_stderr_" + std::to_string(counter++) + ".tmp";
  const std::string cmd =
      std::string(HMS_CLI_PATH) + " " + args + " 2>" + err_path;
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = slurp(err_path);
  std::remove(err_path.c_str());
  return r;
}

}  // namespace

TEST_CASE("table output matches the committed golden files byte for byte") {
  const RunResult md = run_cli("table 6 33 --format markdown");
  CHECK(md.code == 0);
  CHECK(md.out == slurp(std::string(HMS_GOLDEN_DIR) + "/table_6_33.md"));

  const RunResult csv = run_cli("table 6 33 --format csv");
  CHECK(csv.code == 0);
  CHECK(csv.out == slurp(std::string(HMS_GOLDEN_DIR) + "/table11.csv"));
}

TEST_CASE("repeated runs are byte identical") {
  const RunResult a = run_cli("invariants 17 1 --format json");
  const RunResult b = run_cli("invariants 17 1 --format json");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const RunResult c = run_cli("diagram 16 5 21 --format svg");
  const RunResult d = run_cli("diagram 16 5 21 --format svg");
  CHECK(c.code == 0);
  CHECK(c.out == d.out);
}

TEST_CASE("table range outside the bundled data is rejected") {
  const RunResult r = run_cli("table 5 33");
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("6 <= MIN <= MAX <= 33") != std::string::npos);
}

TEST_CASE("one level gives one markdown row per class") {
  const RunResult r = run_cli("table 17 17 --format markdown");
  CHECK(r.code == 0);
  std::istringstream ss(r.out);
  std::string line;
  int rows = 0;
  while (std::getline(ss, line))
    if (line.rfind("| 17 |", 0) == 0) ++rows;
  CHECK(rows == 2);
}

TEST_CASE("non-normalized r is reduced with a notice") {
  const RunResult r = run_cli("invariants 17 4 --format json");
  CHECK(r.code == 0);
  CHECK(r.err.find("normalized representative") != std::string::npos);
  CHECK(r.out.find("\"r\": 1") != std::string::npos);
  CHECK(r.out.find("\"r_input\": 4") != std::string::npos);
  // Same surface, so the same invariants as the normalized call.
  const RunResult canon = run_cli("invariants 17 1 --format json");
  CHECK(r.out.substr(r.out.find("classification")) ==
        canon.out.substr(canon.out.find("classification")));
}

TEST_CASE("levels outside the seed table name the missing dependency") {
  const RunResult r = run_cli("invariants 40 1");
  CHECK(r.code == 3);
  CHECK(r.err.find("Kani-Schanz") != std::string::npos);
}

TEST_CASE("invariants json carries the headline values") {
  const RunResult r = run_cli("invariants 17 1 --format json");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"pg_W\": 1") != std::string::npos);
  CHECK(r.out.find("\"KW_sq\": -20") != std::string::npos);
  CHECK(r.out.find("\"Ksmall_sq\": -2") != std::string::npos);
  CHECK(r.out.find("\"KWbar_Cinf\": 3") != std::string::npos);

  const RunResult csv = run_cli("invariants 17 1 --format csv");
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("key,value\n", 0) == 0);
  CHECK(csv.out.find("invariants.KW_sq,-20\n") != std::string::npos);

  const RunResult md = run_cli("invariants 17 1");
  CHECK(md.code == 0);
  CHECK(md.out.rfind("# W(17, 1)", 0) == 0);
}

TEST_CASE("classify prints one line per surface") {
  const RunResult r = run_cli("classify 17 1");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "Z(17, 1): general_type (kappa = 2)\n"
        "W(17, 1): blown_up_elliptic_K3 (kappa = 0)\n");
  const RunResult w = run_cli("classify 24 23 --surface w");
  CHECK(w.code == 0);
  CHECK(w.out == "W(24, 23): rational (kappa = -1)\n");
}

TEST_CASE("resolve prints the chain and its conjugate") {
  const RunResult r = run_cli("resolve 17 9 --level 17");
  CHECK(r.code == 0);
  CHECK(r.out.find("type (17; 9) = [[2, 9]]") != std::string::npos);
  CHECK(r.out.find("conjugate type: (17; 2) = [[9, 2]]") != std::string::npos);
  CHECK(r.out.find("a:  17 9 1 0") != std::string::npos);
  CHECK(r.out.find("a': 0 1 2 17") != std::string::npos);

  CHECK(run_cli("resolve 17 34").code == 2);
  CHECK(run_cli("resolve 17 9 --level 35").code == 2);
}

TEST_CASE("diagram text marks the expected components") {
  const RunResult a = run_cli("diagram 16 5 21 --format text");
  CHECK(a.code == 0);
  CHECK(a.out.find("chain (16; 5): [[4, 2, 2, 2, 2]]") != std::string::npos);
  CHECK(a.out.find("[1:1] widths (21, 1): B1 x1, C1 x1") != std::string::npos);
  CHECK(a.out.find("[1:7] widths (3, 7): C3 x1") != std::string::npos);

  const RunResult b = run_cli("diagram 17 1 9 --format text");
  CHECK(b.code == 0);
  CHECK(b.out.find("chain (17; 9): [[2, 9]]") != std::string::npos);
  CHECK(b.out.find("[1:1] widths (9, 1): C1 x1") != std::string::npos);

  const RunResult c = run_cli("diagram 17 1 15 --format text");
  CHECK(c.code == 0);
  int chains = 0;
  size_t pos = 0;
  while ((pos = c.out.find("chain (17; ", pos)) != std::string::npos) {
    ++chains;
    ++pos;
  }
  CHECK(chains == 4);

  CHECK(run_cli("diagram 17 1 5").code == 2);
}

TEST_CASE("diagram renders self-contained svg and dot") {
  const RunResult svg = run_cli("diagram 16 5 21 --format svg");
  CHECK(svg.code == 0);
  CHECK(svg.out.rfind("<svg xmlns=\"http://www.w3.org/2000/svg\"", 0) == 0);
  CHECK(svg.out.find("viewBox=\"0 0 ") != std::string::npos);
  CHECK(svg.out.find("href") == std::string::npos);

  const RunResult dot = run_cli("diagram 16 5 21 --format dot");
  CHECK(dot.code == 0);
  CHECK(dot.out.rfind("graph incidence {", 0) == 0);
  CHECK(dot.out.find("q5_n0 -- q5_n1") != std::string::npos);

  const std::string path = "diagram_out.tmp";
  const RunResult file = run_cli("diagram 16 5 21 --format svg -o " + path);
  CHECK(file.code == 0);
  CHECK(file.out.empty());
  CHECK(slurp(path) == svg.out);
  std::remove(path.c_str());
}

TEST_CASE("oracle verification reports checks and guards resources") {
  const RunResult r = run_cli("oracle-verify --max-level 7");
  CHECK(r.code == 0);
  int checks = 0;
  size_t pos = 0;
  while ((pos = r.out.find(" ok", pos)) != std::string::npos) {
    ++checks;
    ++pos;
  }
  CHECK(checks >= 6);
  CHECK(r.out.find("(7, 1): scalar ok, weyl ok") != std::string::npos);

  CHECK(run_cli("oracle-verify --max-level 30").code == 4);

  const RunResult fault = run_cli("oracle-verify --max-level 10 --inject-fault weyl");
  CHECK(fault.code == 1);
  CHECK(fault.out.find("counterexample") != std::string::npos);
  CHECK(fault.out.find("weyl") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("table six 33").code == 2);
  CHECK(run_cli("invariants 17 1 --format yaml").code == 2);
  CHECK(run_cli("nonsense").code == 2);
  CHECK(run_cli("invariants 17").code == 2);
  CHECK(run_cli("--help").code == 0);
}
