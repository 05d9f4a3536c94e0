// Integration checks for the command-line front end. The binary path comes
// from COHANA_CLI (set by ctest); every invocation lands in the working
// directory of the test.

#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#include "cohana/serialize.hpp"

namespace {

std::string cli_path() {
  const char* p = std::getenv("COHANA_CLI");
  return p ? p : "";
}

int run(const std::string& args) {
  std::string cmd = cli_path() + " " + args + " >/dev/null 2>/dev/null";
  int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

struct CsvRow {
  std::complex<double> node;
  double weight;
  std::complex<double> value;
};

std::vector<CsvRow> read_csv(const std::string& path) {
  std::ifstream f(path);
  REQUIRE(f.good());
  std::string line;
  std::getline(f, line);
  REQUIRE(line == "node_re,node_im,weight,value_re,value_im");
  std::vector<CsvRow> rows;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    double v[5];
    char comma;
    ss >> v[0] >> comma >> v[1] >> comma >> v[2] >> comma >> v[3] >> comma >> v[4];
    rows.push_back({{v[0], v[1]}, v[2], {v[3], v[4]}});
  }
  return rows;
}

} // namespace

TEST_CASE("transform hardy writes the analytic extension") {
  if (cli_path().empty()) return; // run through ctest
  REQUIRE(run("transform hardy --fourier 0,0,0,1 --out cli_hardy3") == 0);
  double worst = 0.0;
  for (const CsvRow& row : read_csv("cli_hardy3.csv"))
    worst = std::max(worst, std::abs(row.value - std::pow(row.node, 3)));
  CHECK(worst < 1e-12);

  // envelope carries the law, the size, and the checksum of the csv bytes
  std::string env = cohana::io::read_file("cli_hardy3.json");
  CHECK(env.find("\"domain\": \"disk\"") != std::string::npos);
  CHECK(env.find("\"checksum\"") != std::string::npos);
  std::string csv = cohana::io::read_file("cli_hardy3.csv");
  CHECK(env.find(cohana::io::checksum_hex(csv)) != std::string::npos);
}

TEST_CASE("transform sb --hermite 1 is proportional to z * gaussian") {
  if (cli_path().empty()) return;
  REQUIRE(run("transform sb --hermite 0,1 --out cli_sb1") == 0);
  double worst = 0.0;
  for (const CsvRow& row : read_csv("cli_sb1.csv")) {
    std::complex<double> want = row.node * std::exp(-0.5 * std::norm(row.node));
    worst = std::max(worst, std::abs(row.value - want));
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("empty coefficient list gives the zero file") {
  if (cli_path().empty()) return;
  REQUIRE(run("transform hardy --fourier \"\" --out cli_zero") == 0);
  for (const CsvRow& row : read_csv("cli_zero.csv")) CHECK(std::abs(row.value) == 0.0);
}

TEST_CASE("exit codes are a function of the failure") {
  if (cli_path().empty()) return;
  CHECK(run("transform hardy --fourier nonsense") == 2);
  CHECK(run("verify nosuchsuite") == 2);

  cohana::io::write_file("cli_big.json", "{\"dim\":1,\"entries\":[[[2,0]]]}\n");
  CHECK(run("funcalc --f z --matrix cli_big.json --method contour") == 3);

  cohana::io::write_file("cli_small.json", "{\"dim\":1,\"entries\":[[[0.5,0]]]}\n");
  CHECK(run("funcalc --f \"1/(1-2*z)\" --matrix cli_small.json --method contour") == 4);
  CHECK(run("funcalc --f 1 --matrix cli_small.json --method contour") == 0);
}

TEST_CASE("funcalc records carry the matrix result and the oracle delta") {
  if (cli_path().empty()) return;
  cohana::io::write_file("cli_diag.json",
                         "{\"dim\":2,\"entries\":[[[0.5,0],[0,0]],[[0,0],[-0.3,0]]]}\n");
  REQUIRE(run("funcalc --f \"z^2\" --matrix cli_diag.json --method contour --out cli_fc.json") ==
          0);
  nlohmann::json rec = nlohmann::json::parse(cohana::io::read_file("cli_fc.json"));
  CHECK(std::abs(rec["result"]["entries"][0][0][0].get<double>() - 0.25) < 1e-12);
  CHECK(std::abs(rec["result"]["entries"][1][1][0].get<double>() - 0.09) < 1e-12);
  CHECK(rec["residuals"][0]["value"].get<double>() <= rec["residuals"][0]["tolerance"].get<double>());

  // the image of 1 is the identity
  REQUIRE(run("funcalc --f 1 --matrix cli_diag.json --method contour --out cli_fc1.json") == 0);
  nlohmann::json rec1 = nlohmann::json::parse(cohana::io::read_file("cli_fc1.json"));
  CHECK(std::abs(rec1["result"]["entries"][0][0][0].get<double>() - 1.0) < 1e-12);
  CHECK(std::abs(rec1["result"]["entries"][0][1][0].get<double>()) < 1e-12);
}

TEST_CASE("verify suites exit cleanly") {
  if (cli_path().empty()) return;
  CHECK(run("verify groups") == 0);
  CHECK(run("verify qplane --out cli_qplane.json") == 0);
  std::string rep = cohana::io::read_file("cli_qplane.json");
  CHECK(rep.find("\"pass\": true") != std::string::npos);
}
