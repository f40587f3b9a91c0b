#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

fs::path work_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("parreg-cli-test-" + std::to_string(getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path write_doc(const std::string& name, const std::string& text) {
  fs::path p = work_dir() / name;
  std::ofstream(p) << text;
  return p;
}

RunResult run(const std::string& args) {
  const fs::path out_path = work_dir() / "stdout.txt";
  const std::string cmd =
      std::string(PARREG_CLI_PATH) + " " + args + " > " + out_path.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  RunResult result;
  result.exit_code = WEXITSTATUS(status);
  std::ifstream in(out_path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  result.out = buffer.str();
  return result;
}

const char* kParity =
    R"({"ring": {"kind": "integers"}, "matrix": [["1", "1"]], "rhs": ["1"]})";
const char* kConstant =
    R"({"ring": {"kind": "integers"}, "matrix": [["1", "1"]], "rhs": ["2"]})";

}  // namespace

TEST_CASE("decide command and exit codes") {
  const fs::path parity = write_doc("parity.json", kParity);
  const fs::path constant = write_doc("constant.json", kConstant);

  SUBCASE("partition regular") {
    RunResult r = run("decide " + constant.string());
    CHECK(r.exit_code == 0);
    Json doc = Json::parse(r.out);
    CHECK(doc["verdict"] == "partition_regular");
    CHECK(doc["constant_solution"]["label"] == "1");
  }
  SUBCASE("witness emitted") {
    RunResult r = run("decide " + parity.string());
    CHECK(r.exit_code == 0);
    Json doc = Json::parse(r.out);
    CHECK(doc["verdict"] == "not_partition_regular");
    CHECK(doc["certificate"]["u"] == Json::array({"1"}));
    CHECK(doc["certificate"]["d"] == "2");
  }
  SUBCASE("zero rhs is malformed") {
    const fs::path zero = write_doc(
        "zero.json", R"({"ring": {"kind": "integers"}, "matrix": [["1", "1"]], "rhs": ["0"]})");
    CHECK(run("decide " + zero.string()).exit_code == 2);
  }
  SUBCASE("broken json is malformed") {
    const fs::path broken = write_doc("broken.json", "{nope");
    CHECK(run("decide " + broken.string()).exit_code == 2);
  }
  SUBCASE("missing file is malformed") {
    CHECK(run("decide " + (work_dir() / "missing.json").string()).exit_code == 2);
  }
  SUBCASE("byte-identical output across runs") {
    RunResult a = run("decide " + parity.string());
    RunResult b = run("decide " + parity.string());
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
  }
}

TEST_CASE("verify command and exit codes") {
  const fs::path parity = write_doc("parity.json", kParity);
  RunResult decided = run("decide " + parity.string());
  REQUIRE(decided.exit_code == 0);
  Json cert = Json::parse(decided.out)["certificate"];
  const fs::path cert_path = write_doc("cert.json", cert.dump());

  SUBCASE("valid pair passes") {
    RunResult r = run("verify " + parity.string() + " " + cert_path.string() + " --box 25");
    CHECK(r.exit_code == 0);
    Json report = Json::parse(r.out);
    CHECK(report["verdict"] == "pass");
    CHECK(report["solutions_examined"] == "51");
  }
  SUBCASE("tampered modulus fails with the failing check named") {
    Json bad = cert;
    bad["d"] = "3";
    const fs::path bad_path = write_doc("bad_cert.json", bad.dump());
    RunResult r = run("verify " + parity.string() + " " + bad_path.string() + " --box 25");
    CHECK(r.exit_code == 4);
    Json report = Json::parse(r.out);
    CHECK(report["verdict"] == "fail");
    bool named = false;
    for (const auto& c : report["algebraic_checks"])
      if (c["name"] == "column_covectors_sum_zero" && c["pass"] == false) named = true;
    CHECK(named);
  }
  SUBCASE("digest mismatch") {
    const fs::path other = write_doc("other.json", kConstant);
    RunResult r = run("verify " + other.string() + " " + cert_path.string() + " --box 25");
    CHECK(r.exit_code == 5);
  }
}

TEST_CASE("exhaust command and exit codes") {
  SUBCASE("Z_2 blocks") {
    const fs::path doc = write_doc(
        "z2.json",
        R"({"ring": {"kind": "cyclic", "modulus": "2"}, "matrix": [["1", "1"]], "rhs": ["1"]})");
    RunResult r = run("exhaust " + doc.string());
    CHECK(r.exit_code == 0);
    Json out = Json::parse(r.out);
    CHECK(out["partition_regular"] == false);
    CHECK(out["blocking_partition"]["classes"] == Json::parse(R"([["0"],["1"]])"));
  }
  SUBCASE("Z_3 passes") {
    const fs::path doc = write_doc(
        "z3.json",
        R"({"ring": {"kind": "cyclic", "modulus": "3"}, "matrix": [["1", "1"]], "rhs": ["2"]})");
    RunResult r = run("exhaust " + doc.string());
    CHECK(r.exit_code == 0);
    CHECK(Json::parse(r.out)["partition_regular"] == true);
  }
  SUBCASE("infinite modules exit 6") {
    const fs::path doc = write_doc("z.json", kParity);
    CHECK(run("exhaust " + doc.string()).exit_code == 6);
  }
  SUBCASE("oversized modules exit 6") {
    const fs::path doc = write_doc(
        "z9.json",
        R"({"ring": {"kind": "cyclic", "modulus": "9"}, "matrix": [["1", "1"]], "rhs": ["1"]})");
    CHECK(run("exhaust " + doc.string() + " --cap 8").exit_code == 6);
  }
}

TEST_CASE("survey command") {
  SUBCASE("small catalog, full enumeration") {
    RunResult r = run("survey --ring-catalog z2,z3 --max-m 1 --max-n 2");
    CHECK(r.exit_code == 0);
    Json out = Json::parse(r.out);
    CHECK(out["total_discrepancies"] == "0");
    CHECK(out["rings"][0]["systems"] == "4");    // 2^2 matrices x 1 nonzero rhs
    CHECK(out["rings"][1]["systems"] == "18");   // 3^2 matrices x 2 nonzero rhs
  }
  SUBCASE("sampled run is deterministic") {
    RunResult a = run("survey --ring-catalog z6 --max-m 1 --max-n 2 --sample 40 --seed 7");
    RunResult b = run("survey --ring-catalog z6 --max-m 1 --max-n 2 --sample 40 --seed 7");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
  }
  SUBCASE("unknown ring name is malformed") {
    CHECK(run("survey --ring-catalog nosuch").exit_code == 2);
  }
}

TEST_CASE("selftest passes") { CHECK(run("selftest").exit_code == 0); }

TEST_CASE("decide --check embeds a passing report") {
  const fs::path parity = write_doc("parity.json", kParity);
  RunResult r = run("decide " + parity.string() + " --check");
  CHECK(r.exit_code == 0);
  Json doc = Json::parse(r.out);
  CHECK(doc["check_report"]["verdict"] == "pass");
}
