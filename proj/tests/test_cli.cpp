#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <fstream>

#include "doctest.h"
#include "surfbraid/json_io.hpp"
#include "test_support.hpp"

using surfbraid::Json;
using testsupport::CommandResult;
using testsupport::runCommand;

namespace {

std::string cli() { return SURFBRAID_CLI_PATH; }

Json parsed(const CommandResult& r) {
  REQUIRE(r.exitCode == 0);
  return Json::parse(r.output);
}

void writeFile(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  REQUIRE(out.good());
  out << text;
}

}  // namespace

TEST_CASE("present emits the expected generator set") {
  Json p = parsed(runCommand(cli() + " present --surface sphere:2 --strands 2"));
  REQUIRE(p.contains("generators"));
  REQUIRE(p["generators"].is_array());
  CHECK(p["generators"].size() == 3);
  CHECK(p["generators"][0] == "A[1,2]");
  CHECK(p["generators"][1] == "A[1,3]");
  CHECK(p["generators"][2] == "A[2,3]");
  CHECK(p["relators"].is_array());
  CHECK(p["provenance"].is_string());
}

TEST_CASE("classify renders verdict and trace") {
  Json no = parsed(
      runCommand(cli() + " classify --surface o:0,0 --strands 3 --flavor pure"));
  CHECK(no["verdict"] == "No");
  REQUIRE(no["trace"].is_array());
  REQUIRE_FALSE(no["trace"].empty());
  for (const Json& step : no["trace"]) {
    CHECK(step.contains("kind"));
    CHECK(step.contains("rule"));
    CHECK(step.contains("statement"));
  }

  Json yes = parsed(
      runCommand(cli() + " classify --surface o:2,1 --strands 2 --flavor full"));
  CHECK(yes["verdict"] == "Yes");

  Json open = parsed(
      runCommand(cli() + " classify --surface o:1,0 --strands 2 --flavor pure"));
  CHECK(open["verdict"] == "Unknown");
}

TEST_CASE("goldberg-verify succeeds on a small orientable case") {
  CommandResult r = runCommand(
      cli() + " goldberg-verify --surface o:1,1 --strands 2 --require-verified");
  Json cert = parsed(r);
  CHECK(cert["status"] == "Verified");
  CHECK(cert["checks"]["phi_well_defined"] == true);
  CHECK(cert["checks"]["psi_well_defined"] == true);
  CHECK(cert["checks"]["composites_fix_generators"] == true);
  CHECK(cert["witness"].is_null());
  CHECK(cert["quotient_abelian"] == cert["target_abelian"]);
}

TEST_CASE("require-verified downgrades exhaustion to exit 3") {
  CommandResult strict = runCommand(
      cli() + " goldberg-verify --surface o:1,1 --strands 2 "
              "--kb-max-rules 2 --require-verified");
  CHECK(strict.exitCode == 3);
  Json cert = Json::parse(strict.output);
  CHECK(cert["status"] == "Unverified");
  CHECK(cert["reason"].is_string());

  CommandResult lax = runCommand(
      cli() + " goldberg-verify --surface o:1,1 --strands 2 --kb-max-rules 2");
  CHECK(lax.exitCode == 0);
  CHECK(Json::parse(lax.output)["status"] == "Unverified");
}

TEST_CASE("table output is byte-identical across runs") {
  std::string command = cli() + " table --max-g 1 --max-p 1 --max-n 2";
  CommandResult first = runCommand(command);
  CommandResult second = runCommand(command);
  REQUIRE(first.exitCode == 0);
  CHECK(first.output == second.output);
  Json t = Json::parse(first.output);
  REQUIRE(t.contains("cells"));
  CHECK(t["cells"].size() == 8);
  for (const Json& cell : t["cells"]) {
    CHECK(cell.contains("surface"));
    CHECK(cell.contains("strands"));
    CHECK(cell.contains("pure"));
    CHECK(cell.contains("full"));
  }
}

TEST_CASE("presentations round-trip through the json commands") {
  Json ab = parsed(runCommand(cli() + " present --surface sphere:3 --strands 1 | " +
                              cli() + " abelianize --presentation -"));
  CHECK(ab["free_rank"] == 2);
  CHECK(ab["torsion"].is_array());
  CHECK(ab["torsion"].empty());

  // The full two-strand presentation does not complete in reasonable time,
  // so cap the budget: the pipe itself is what is under test here.
  Json kb = parsed(runCommand(cli() + " present --surface sphere:2 --strands 2 | " +
                              cli() + " kb-complete --presentation - --max-rules 50"));
  CHECK(kb["confluent"] == false);
  CHECK(kb["exhausted"]["dimension"].is_string());

  std::string z3 = R"({"generators":["a"],"relators":["a^3"]})";
  Json done = parsed(runCommand("echo '" + z3 + "' | " + cli() +
                                " kb-complete --presentation -"));
  CHECK(done["confluent"] == true);
  CHECK(done["rules"].is_array());
  CHECK_FALSE(done["rules"].empty());
}

TEST_CASE("kb-complete reports exhaustion as data") {
  Json kb = parsed(runCommand(
      cli() + " present --surface o:1,1 --strands 2 | " + cli() +
      " kb-complete --presentation - --max-rules 2"));
  CHECK(kb["confluent"] == false);
  CHECK(kb["exhausted"]["dimension"].is_string());
}

TEST_CASE("enumerate closes finite presentations and reports overflow") {
  std::string s3 =
      R"({"generators":["a","b"],"relators":["a^2","b^2","a b a b a b"]})";
  Json closed = parsed(runCommand("echo '" + s3 + "' | " + cli() +
                                  " enumerate --presentation -"));
  CHECK(closed["closed"] == true);
  CHECK(closed["cosets"] == 6);
  CHECK(closed["group"]["order"] == 6);
  CHECK(closed["group"]["identity"] == 0);

  std::string z = R"({"generators":["a"],"relators":[]})";
  Json overflow = parsed(runCommand("echo '" + z + "' | " + cli() +
                                    " enumerate --presentation - --max-cosets 500"));
  CHECK(overflow["closed"] == false);
  CHECK(overflow["max_cosets"] == 500);
}

TEST_CASE("reidemeister orbit mode on a cyclic group") {
  std::string groupPath = "/tmp/surfbraid_cli_z4.json";
  writeFile(groupPath,
            R"({"table":[[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]]})");
  std::string idPath = "/tmp/surfbraid_cli_z4_id.json";
  writeFile(idPath, "[0,1,2,3]");
  std::string invPath = "/tmp/surfbraid_cli_z4_inv.json";
  writeFile(invPath, "[0,3,2,1]");

  Json idr = parsed(runCommand(cli() + " reidemeister --group " + groupPath +
                               " --endo " + idPath));
  CHECK(idr["R"] == 4);
  CHECK(idr["method"] == "orbit");

  Json invr = parsed(runCommand(cli() + " reidemeister --group " + groupPath +
                                " --endo " + invPath));
  CHECK(invr["R"] == 2);
}

TEST_CASE("reidemeister abelian mode") {
  writeFile("/tmp/surfbraid_cli_neg1.json", "[[-1]]");
  Json two = parsed(
      runCommand(cli() + " reidemeister --matrix /tmp/surfbraid_cli_neg1.json"));
  CHECK(two["R"] == 2);
  CHECK(two["method"] == "abelian");

  writeFile("/tmp/surfbraid_cli_id1.json", "[[1]]");
  Json inf = parsed(
      runCommand(cli() + " reidemeister --matrix /tmp/surfbraid_cli_id1.json"));
  CHECK(inf["R"] == "inf");
}

TEST_CASE("reidemeister certificate mode") {
  writeFile("/tmp/surfbraid_cli_f2.json",
            R"({"generators":["x","y"],"relators":[]})");
  writeFile("/tmp/surfbraid_cli_theta.json",
            R"({"x":"y","y":"y^-1 x y"})");
  Json r = parsed(runCommand(
      cli() + " reidemeister --presentation /tmp/surfbraid_cli_f2.json "
              "--endo /tmp/surfbraid_cli_theta.json"));
  CHECK(r["R"] == "inf");
  CHECK(r["method"] == "certificate");
  CHECK(r["certificate"]["certified_infinite"] == true);
  REQUIRE(r["certificate"]["induced"].is_array());
  CHECK(r["certificate"]["induced"][0][0] == 0);
  CHECK(r["certificate"]["induced"][0][1] == 1);

  // a finite lower bound decides nothing, so R stays null
  writeFile("/tmp/surfbraid_cli_z1.json",
            R"({"generators":["t"],"relators":[]})");
  writeFile("/tmp/surfbraid_cli_tinv.json", R"({"t":"t^-1"})");
  Json bounded = parsed(runCommand(
      cli() + " reidemeister --presentation /tmp/surfbraid_cli_z1.json "
              "--endo /tmp/surfbraid_cli_tinv.json"));
  CHECK(bounded["R"].is_null());
  CHECK(bounded["certificate"]["certified_infinite"] == false);
  CHECK(bounded["certificate"]["bound"] == 2);
}

TEST_CASE("census counts bounded twisted classes") {
  Json c = parsed(runCommand(
      cli() + " census --rank 1 --image x^-1 --max-len 4 --max-witness 4"));
  CHECK(c["classes"] == 2);
  CHECK(c["words"] == 9);
}

TEST_CASE("invalid input exits 2 with a diagnostic") {
  CHECK(runCommand(cli() + " present --surface torus --strands 2 2>/dev/null")
            .exitCode == 2);
  CHECK(runCommand("echo 'not json' | " + cli() +
                   " abelianize --presentation - 2>/dev/null")
            .exitCode == 2);
  CHECK(runCommand(cli() + " reidemeister 2>/dev/null").exitCode == 2);
  CHECK(runCommand(cli() + " census --rank 2 --image x --max-len 2 "
                           "--max-witness 2 2>/dev/null")
            .exitCode == 2);
  CHECK(runCommand(cli() + " classify --surface n:1,1 --strands 2 "
                           "--flavor pure 2>/dev/null")
            .exitCode == 2);
  CHECK(runCommand(cli() + " nonsense 2>/dev/null").exitCode == 2);
}

TEST_CASE("json indent produces pretty output with identical content") {
  CommandResult compact =
      runCommand(cli() + " present --surface sphere:2 --strands 2");
  CommandResult pretty = runCommand(
      cli() + " --json-indent 2 present --surface sphere:2 --strands 2");
  REQUIRE(compact.exitCode == 0);
  REQUIRE(pretty.exitCode == 0);
  CHECK(pretty.output.find("\n  ") != std::string::npos);
  CHECK(Json::parse(compact.output) == Json::parse(pretty.output));
}
