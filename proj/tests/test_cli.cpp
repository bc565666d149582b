#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <string>
#include <vector>

// NCGAUSS_BIN is injected by the build with the path of the CLI binary.

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Each argument is single-quoted for the shell, so '|', '{' and '"' in
// partition strings and inline JSON pass through untouched.
RunResult run(const std::vector<std::string>& args) {
  std::string cmd = NCGAUSS_BIN;
  for (const auto& a : args) cmd += " '" + a + "'";
  cmd += " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("documented examples, byte-identical across runs") {
  const std::vector<std::pair<std::vector<std::string>, std::string>> cases{
      {{"partitions", "enum", "--family", "pair", "--n", "6", "--count-only"},
       "{\"count\":15}\n"},
      {{"wick", "--weight", "q:1/2", "--word", "X,X,X,X"}, "{\"value\":\"5/2\"}\n"},
      {{"partitions", "mobius", "--p", "1,2|3"}, "{\"mobius\":\"-1/1\"}\n"},
      {{"partitions", "kernel", "--word", "1,2,1"}, "{\"kernel\":\"1,3|2\"}\n"},
  };
  for (const auto& [args, expected] : cases) {
    const auto first = run(args);
    CHECK(first.exit_code == 0);
    CHECK(first.out == expected);
    const auto second = run(args);
    CHECK(second.out == first.out);
  }
}

TEST_CASE("check subcommand exit codes") {
  const auto pass = run({"check", "skitovic", "--eps", "1/1", "--max-order", "8"});
  CHECK(pass.exit_code == 0);
  CHECK(pass.out.find("\"verdict\":\"pass\"") != std::string::npos);

  // a failing check exits 1 and still prints the report
  const auto fail = run({"check", "lukacs", "--n-vars", "2", "--family", "classical",
                         "--kx", R"({"2":"1","4":"1"})", "--max-order", "4"});
  CHECK(fail.exit_code == 1);
  CHECK(fail.out.find("\"verdict\":\"fail\"") != std::string::npos);

  // invalid input exits 2
  CHECK(run({"check", "skitovic", "--eps", "0", "--max-order", "8"}).exit_code == 2);
  CHECK(run({"partitions", "mobius", "--p", "3,1|2"}).exit_code == 2);
  CHECK(run({"wick", "--weight", "gauss", "--word", "X,X"}).exit_code == 2);
  CHECK(run({"frobnicate"}).exit_code == 2);
}

TEST_CASE("every operation is reachable from exactly one subcommand") {
  // the full command table; --help must succeed for each leaf
  const std::vector<std::vector<std::string>> table{
      {"partitions", "enum"},     {"partitions", "mobius"},
      {"partitions", "kernel"},   {"partitions", "connect"},
      {"cumulants", "to-moments"}, {"cumulants", "from-moments"},
      {"cumulants", "linear-form"}, {"wick"}, {"clt"},
      {"qform", "single"},        {"qform", "joint"},
      {"qform", "independence"},  {"qform", "lq"},
      {"qform", "shifted"},       {"check", "stability"},
      {"check", "maxwell"},       {"check", "bernstein"},
      {"check", "skitovic"},      {"check", "cramer"},
      {"check", "sd-identity"},   {"check", "lukacs"},
      {"matrix", "orthogonal"},   {"matrix", "irreducible"}};
  for (auto leaf : table) {
    leaf.push_back("--help");
    CHECK(run(leaf).exit_code == 0);
  }
  auto sorted = table;
  std::sort(sorted.begin(), sorted.end());
  CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
}

TEST_CASE("transform subcommands") {
  const auto enumerated = run({"partitions", "enum", "--family", "noncrossing",
                               "--n", "4"});
  CHECK(enumerated.out.find("\"count\":14") != std::string::npos);
  CHECK(enumerated.out.find("\"1,3|2,4\"") == std::string::npos);  // the crossing one

  const auto connect =
      run({"partitions", "connect", "--grouping", "1,2|3,4", "--family", "pair"});
  CHECK(connect.out == "{\"count\":2,\"partitions\":[\"1,3|2,4\",\"1,4|2,3\"]}\n");

  const auto moments = run(
      {"cumulants", "to-moments", "--spec",
       R"({"family":"classical","entries":[{"args":["X","X"],"value":"1"}]})",
       "--word", "X,X,X,X"});
  CHECK(moments.out == "{\"value\":\"3/1\"}\n");

  const auto inverted = run(
      {"cumulants", "from-moments", "--json",
       R"({"family":"free","labels":["X"],"max_degree":4,"moments":[)"
       R"({"args":["X","X"],"value":"1"},)"
       R"({"args":["X","X","X","X"],"value":"2"}]})"});
  CHECK(inverted.exit_code == 0);
  CHECK(inverted.out.find("\"family\":\"free\"") != std::string::npos);
  CHECK(inverted.out.find(R"({"args":["X","X"],"value":"1/1"})") !=
        std::string::npos);

  const auto clt = run({"clt", "--N", "2", "--n", "4", "--moments", "0,1,0,1"});
  CHECK(clt.out == "{\"coefficient\":\"2/1\",\"half_power\":false}\n");
  const auto limit = run({"clt", "--n", "4", "--moments", "0,1,0,1", "--limit"});
  CHECK(limit.out == "{\"value\":\"3/1\"}\n");

  const auto lf = run(
      {"cumulants", "linear-form", "--matrix",
       R"({"rows":2,"cols":3,"entries":[["2","-1","2"],["2","2","-1"]]})",
       "--xdiag",
       R"([{"2":"1","3":"1/4"},{"2":"1","3":"1"},{"2":"1","3":"1"}])",
       "--args", "1,1,2"});
  CHECK(lf.out == "{\"value\":\"0/1\"}\n");
}

TEST_CASE("qform and matrix subcommands") {
  const std::string identity2 =
      R"({"rows":2,"cols":2,"entries":[["1","0"],["0","1"]]})";
  const auto single = run({"qform", "single", "--matrix", identity2, "--weight",
                           "free", "--order", "3"});
  CHECK(single.out == "{\"value\":\"2/1\"}\n");

  const auto joint = run({"qform", "joint", "--matrices",
                          "[" + identity2 + "," + identity2 + "]", "--weight",
                          "classical"});
  CHECK(joint.out == "{\"value\":\"4/1\"}\n");

  const std::string e11 = R"({"rows":2,"cols":2,"entries":[["1","0"],["0","0"]]})";
  const std::string e22 = R"({"rows":2,"cols":2,"entries":[["0","0"],["0","1"]]})";
  const auto indep = run({"qform", "independence", "--a", e11, "--b", e22,
                          "--weight", "classical", "--max-order", "4"});
  CHECK(indep.exit_code == 0);
  CHECK(indep.out.find("\"ab_zero\":true") != std::string::npos);
  CHECK(indep.out.find("\"all_mixed_zero\":true") != std::string::npos);

  const auto lq = run({"qform", "lq", "--matrix", e22, "--vec", "1,0", "--weight",
                       "classical", "--max-order", "4"});
  CHECK(lq.out.find("\"ab_zero\":true") != std::string::npos);

  const auto shifted =
      run({"qform", "shifted", "--vec", "1,0", "--weight", "classical", "--order", "1"});
  CHECK(shifted.out == "{\"value\":\"3/1\"}\n");

  const std::string rot =
      R"({"rows":2,"cols":2,"entries":[["3/5","4/5"],["-4/5","3/5"]]})";
  CHECK(run({"matrix", "orthogonal", "--matrix", rot}).out ==
        "{\"orthogonal\":true}\n");
  CHECK(run({"matrix", "irreducible", "--matrix", rot}).out ==
        "{\"irreducible\":true}\n");
  const std::string swap =
      R"({"rows":2,"cols":2,"entries":[["0","1"],["1","0"]]})";
  CHECK(run({"matrix", "irreducible", "--matrix", swap}).out ==
        "{\"irreducible\":false}\n");
}

TEST_CASE("pretty flag and custom weights") {
  const auto pretty =
      run({"--pretty", "partitions", "enum", "--family", "pair", "--n", "2",
           "--count-only"});
  CHECK(pretty.out == "{\n  \"count\": 1\n}\n");

  // custom weight table from a temp file
  const std::string path = "/tmp/ncgauss_custom_weight.json";
  {
    FILE* f = fopen(path.c_str(), "w");
    REQUIRE(f != nullptr);
    fputs(R"({"1,2":"2","1,2|3,4":"1","1,3|2,4":"1/2","1,4|2,3":"1"})", f);
    fclose(f);
  }
  const auto custom = run({"wick", "--weight", "custom:" + path, "--word", "X,X,X,X"});
  CHECK(custom.out == "{\"value\":\"5/2\"}\n");
}
