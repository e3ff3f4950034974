#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

// Drives the installed command-line binary end to end through a shell,
// checking exit codes, report format, and determinism guarantees.

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(REPRING_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) {
    result.output.append(buf, got);
  }
  const int status = ::pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  REQUIRE(out.good());
  out << content;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

const char* const kD8Spec = R"({
  "group": "D8",
  "subgroup": [0, 1, 2, 3],
  "alpha": [
    ["0", "0", "0", "0"],
    ["0", "0", "0", "0"],
    ["0", "1/2", "0", "1/2"],
    ["0", "1/2", "0", "1/2"]
  ]
})";

}  // namespace

TEST_CASE("ring recovery subcommands report and match") {
  const RunResult order = run_cli("ring-order D8");
  CHECK(order.exit_code == 0);
  CHECK(contains(order.output, "8"));
  CHECK(contains(order.output, "match"));

  const RunResult exponent = run_cli("ring-exponent D8");
  CHECK(exponent.exit_code == 0);
  CHECK(contains(exponent.output, "4"));
}

TEST_CASE("chartable pretty output names the group and degrees") {
  const RunResult r = run_cli("chartable D8");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "group D8 (order 8), 5 conjugacy classes"));
  CHECK(contains(r.output, "degree 2"));
  CHECK(contains(r.output, "elapsed:"));
}

TEST_CASE("json reports are byte-identical across runs and omit timing") {
  const RunResult a = run_cli("chartable D8 --json cli_tmp_a.json");
  const RunResult b = run_cli("chartable D8 --json cli_tmp_b.json");
  CHECK(a.exit_code == 0);
  CHECK(b.exit_code == 0);
  const std::string report_a = read_file("cli_tmp_a.json");
  CHECK(report_a == read_file("cli_tmp_b.json"));
  CHECK(contains(report_a, "\"command\": \"chartable\""));
  CHECK(contains(report_a, "\"digest\""));
  CHECK(!contains(report_a, "elapsed"));

  // A different output path must not change the report bytes.
  const RunResult c = run_cli("chartable D8 --json cli_tmp_c.json");
  CHECK(c.exit_code == 0);
  CHECK(report_a == read_file("cli_tmp_c.json"));
}

TEST_CASE("input errors exit 2 with a one-line diagnostic") {
  const RunResult unknown = run_cli("chartable NoSuchGroup");
  CHECK(unknown.exit_code == 2);
  CHECK(contains(unknown.output, "unknown group name"));

  const RunResult missing_flag = run_cli("adams D8");
  CHECK(missing_flag.exit_code == 2);

  const RunResult no_subcommand = run_cli("");
  CHECK(no_subcommand.exit_code == 2);

  const RunResult bad_file = run_cli("twist cli_no_such_file.json");
  CHECK(bad_file.exit_code == 2);
  CHECK(contains(bad_file.output, "cannot read file"));

  const RunResult bad_example = run_cli("example d9");
  CHECK(bad_example.exit_code == 2);
}

TEST_CASE("adams and fs emit the expected dihedral values") {
  const RunResult adams = run_cli("adams D8 --k 2");
  CHECK(adams.exit_code == 0);
  CHECK(contains(adams.output, "1  1  1 -1  0"));

  const RunResult fs = run_cli("fs D8 --k 2");
  CHECK(fs.exit_code == 0);
  CHECK(contains(fs.output, "1 1 1 1 1"));

  const RunResult fs_q8 = run_cli("fs Q8 --k 2");
  CHECK(fs_q8.exit_code == 0);
  CHECK(contains(fs_q8.output, "1 1 1 1 -1"));

  const RunResult lambda = run_cli("lambda D8 --irr 4 --n 2");
  CHECK(lambda.exit_code == 0);
  CHECK(contains(lambda.output, "0 0 0 1 0"));
}

TEST_CASE("ring-iso reports the separation between the two order-8 rings") {
  const RunResult r = run_cli("ring-iso D8 Q8 --check-adams 2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "based ring isomorphisms D8 -> Q8: 6"));
  CHECK(contains(r.output, "no isomorphism commutes at k=2"));
}

TEST_CASE("twist pipeline commands work from a spec file") {
  write_file("cli_tmp_spec.json", kD8Spec);

  const RunResult twist =
      run_cli("twist cli_tmp_spec.json --emit-group cli_tmp_twisted.json");
  CHECK(twist.exit_code == 0);
  CHECK(contains(twist.output, "b(q, q)") == false);  // only example prints it
  CHECK(contains(twist.output, "twisted group D8_b"));
  CHECK(contains(twist.output, "1 y"));  // quotient cocycle bottom row

  // The emitted group file round-trips through the table command.
  const RunResult emitted = run_cli("chartable cli_tmp_twisted.json");
  CHECK(emitted.exit_code == 0);
  CHECK(contains(emitted.output, "group D8_b (order 8), 5 conjugacy"));

  const RunResult odd = run_cli("verify-odd-adams cli_tmp_spec.json --kmax 7");
  CHECK(odd.exit_code == 0);
  CHECK(contains(odd.output, "k=7: equal"));
  CHECK(contains(odd.output, "all odd operations agree"));

  const RunResult compare = run_cli("compare-adams cli_tmp_spec.json --k 2");
  CHECK(compare.exit_code == 0);
  CHECK(contains(compare.output, "NOT equal"));
  CHECK(contains(compare.output, "0  0  2 -2  0"));

  // A spec whose cocycle fails validation is an input error.
  write_file("cli_tmp_bad_spec.json", R"({
    "group": "D8",
    "subgroup": [0, 1, 2, 3],
    "alpha": [
      ["1/2", "0", "0", "0"],
      ["0", "0", "0", "0"],
      ["0", "0", "0", "0"],
      ["0", "0", "0", "0"]
    ]
  })");
  const RunResult bad = run_cli("twist cli_tmp_bad_spec.json");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("examples run their golden pipelines") {
  const RunResult d8 = run_cli("example d8");
  CHECK(d8.exit_code == 0);
  CHECK(contains(d8.output, "b(q, q) = y"));
  CHECK(contains(d8.output, "original: 1 1 1 -1 0"));
  CHECK(contains(d8.output, "twisted:  1 1 -1 1 0"));
  CHECK(contains(d8.output, "k=7: equal"));
  CHECK(contains(d8.output, "example checks passed"));

  const RunResult klein = run_cli("example klein");
  CHECK(klein.exit_code == 0);
  CHECK(contains(klein.output, "k=3: twisted equals plain"));
  CHECK(contains(klein.output, "example checks passed"));
}

TEST_CASE("permutation group files load") {
  // The dihedral group of order 8 acting on the square's corners.
  write_file("cli_tmp_perm.json", R"({
    "name": "square",
    "degree": 4,
    "perm_gens": [[1, 2, 3, 0], [1, 0, 3, 2]]
  })");
  const RunResult r = run_cli("chartable cli_tmp_perm.json");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "group square (order 8), 5 conjugacy classes"));

  const RunResult capped =
      run_cli("chartable cli_tmp_perm.json --limit-order 4");
  CHECK(capped.exit_code == 2);
  CHECK(contains(capped.output, "order exceeds limit"));
}
