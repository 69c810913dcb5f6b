#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string binary_path() {
  const char* env = std::getenv("GCDMAT_BIN");
  REQUIRE_MESSAGE(env != nullptr, "GCDMAT_BIN must point at the CLI binary");
  return env;
}

RunResult run(const std::string& args) {
  const std::string cmd = binary_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("analyze reports the structural profile") {
  const RunResult r = run("analyze --set \"1,2,3,5,6,10,15,30\"");
  CHECK(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["gcd_closed"] == true);
  CHECK(doc["factor_closed"] == true);
  CHECK(doc["max_gtd"] == 3);
  CHECK(doc["condition_g"] == true);
  CHECK(doc["violation_witness"].is_null());
  CHECK(doc["gtd"]["30"] == json({6, 10, 15}));
}

TEST_CASE("analyze reports the first violation witness") {
  const RunResult r = run("analyze --set \"1,2,3,12\"");
  CHECK(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["condition_g"] == false);
  CHECK(doc["violation_witness"]["x"] == 12);
  CHECK(doc["violation_witness"]["y1"] == 2);
  CHECK(doc["violation_witness"]["y2"] == 3);
}

TEST_CASE("analyze of a singleton") {
  const json doc = json::parse(run("analyze --set \"5\"").out);
  CHECK(doc["gcd_closed"] == true);
  CHECK(doc["max_gtd"] == 0);
}

TEST_CASE("parse errors exit 2 naming the token") {
  CHECK(run("analyze --set \"1,x,3\"").exit_code == 2);
  CHECK(run("analyze --set \"2,2\"").exit_code == 2);
  CHECK(run("divides --set \"1,2\" --a 1 --b 2 --kind nonsense").exit_code == 2);
  CHECK(run("divides --set \"1,2\" --a 0 --b 2 --kind gcd-gcd").exit_code == 2);
  CHECK(run("divides --set \"1,2\" --a 1 --b 99 --kind gcd-gcd").exit_code == 2);
}

TEST_CASE("divides exit codes follow the verdict") {
  const RunResult yes = run("divides --set \"1,2\" --a 1 --b 2 --kind gcd-gcd");
  CHECK(yes.exit_code == 0);
  const json ydoc = json::parse(yes.out);
  CHECK(ydoc["integral"] == true);
  CHECK(ydoc["status"] == "decided");
  CHECK(ydoc["witness"].is_null());

  const RunResult no = run("divides --set \"1,2\" --a 2 --b 3 --kind gcd-gcd");
  CHECK(no.exit_code == 1);
  const json ndoc = json::parse(no.out);
  CHECK(ndoc["integral"] == false);
  CHECK(ndoc["witness"]["row"] == 2);
  CHECK(ndoc["witness"]["col"] == 1);
  CHECK(ndoc["witness"]["value"] == "-4/3");

  const RunResult one = run("divides --set \"1\" --a 7 --b 7 --kind lcm-lcm");
  CHECK(one.exit_code == 0);
  CHECK(json::parse(one.out)["integral"] == true);
}

TEST_CASE("divides can include the quotient matrix") {
  const json doc =
      json::parse(run("divides --set \"1,2\" --a 1 --b 2 --kind gcd-lcm --quotient").out);
  CHECK(doc["quotient"] ==
        json::array({json::array({"-2", "3"}), json::array({"4", "0"})}));
}

TEST_CASE("matrix command emits both formats") {
  const json doc = json::parse(run("matrix --set \"1,2,4\" --kind lcm --a 1").out);
  CHECK(doc["matrix"] == json({{"1", "2", "4"}, {"2", "2", "4"}, {"4", "4", "4"}}));

  const RunResult text = run("matrix --set \"1,2\" --kind lcm --a 1 --format text");
  CHECK(text.out == "1\t2\n2\t2\n");
}

TEST_CASE("det command cross-checks oracle and structured routes") {
  const json doc = json::parse(run("det --set \"1,2,3,6\" --kind gcd --a 1 --method both").out);
  CHECK(doc["det"] == "4");
  CHECK(doc["oracle"] == "4");
  CHECK(doc["structured"] == "4");
  CHECK(doc["agree"] == true);

  const json lcm = json::parse(run("det --set \"1,2\" --kind lcm --a 1").out);
  CHECK(lcm["det"] == "-2");
}

TEST_CASE("inverse command emits the exact inverse") {
  const json doc = json::parse(run("inverse --set \"1,2\" --kind gcd --a 1").out);
  CHECK(doc["inverse"] ==
        json::array({json::array({"2", "-1"}), json::array({"-1", "1"})}));
  const json lcm = json::parse(run("inverse --set \"1,2\" --kind lcm --a 1 --method oracle").out);
  CHECK(lcm["inverse"] ==
        json::array({json::array({"-1", "1"}), json::array({"1", "-1/2"})}));
}

TEST_CASE("validate campaign exits clean on a proven stratum") {
  const RunResult r = run("validate --max-element 8 --max-size 4 --powers 1:2 --kinds all");
  CHECK(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["violations"] == json::array());
  CHECK(doc["sets_examined"].get<long>() > 0);
}

TEST_CASE("validate separates informational findings from violations") {
  const RunResult normal = run("validate --max-element 4 --powers 2:3");
  CHECK(normal.exit_code == 0);  // a does not divide b: informational only
  const json doc = json::parse(normal.out);
  CHECK(doc["info_findings"].get<long>() > 0);
  CHECK(doc["violations"] == json::array());

  const RunResult strict = run("validate --max-element 4 --powers 2:3 --strict-all");
  CHECK(strict.exit_code == 1);
}

TEST_CASE("validate reads set files and writes findings") {
  const std::string dir = "/tmp/gcdmat_cli_test";
  std::filesystem::create_directories(dir);
  const std::string set_path = dir + "/chains.txt";
  const std::string out_path = dir + "/findings.jsonl";
  std::remove(out_path.c_str());
  {
    std::ofstream f(set_path);
    f << "# divisor chains\n1,2,4\n1 3 9 27\n\n1,2\n";
  }
  const RunResult r = run("validate --set-file " + set_path + " --powers 1:2,2:4 --out " +
                          out_path);
  CHECK(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["sets_examined"] == 3);
  CHECK(doc["violations"] == json::array());

  // clean run, nothing persisted
  std::ifstream out_file(out_path);
  REQUIRE(out_file.good());
  std::string line;
  CHECK_FALSE(std::getline(out_file, line));

  // now a negative stratum writes one JSON object per line
  const RunResult neg = run("validate --set-file " + set_path + " --powers 2:3 --out " +
                            out_path);
  CHECK(neg.exit_code == 0);
  std::ifstream neg_file(out_path);
  bool parsed_any = false;
  while (std::getline(neg_file, line)) {
    const json f = json::parse(line);
    CHECK(f.contains("set"));
    CHECK(f["severity"] == "INFO");
    parsed_any = true;
  }
  CHECK(parsed_any);
}

TEST_CASE("search runs the frontier strata") {
  const RunResult r = run("search --max-element 12 --max-size 4 --powers 1:2");
  CHECK(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["critical"] == 0);

  CHECK(run("search --max-element 4 --powers 2:3").exit_code == 2);  // a must divide b
}

TEST_CASE("validate rejects bad configuration with exit 2") {
  CHECK(run("validate --powers 1:2").exit_code == 2);  // no universe, no file
  CHECK(run("validate --max-element 4 --powers nonsense").exit_code == 2);
  CHECK(run("validate --max-element 4 --powers 1:2 --kinds bogus").exit_code == 2);
}
