// SPDX-License-Identifier: Apache-2.0
// End-to-end checks of the installed command surface. The binary path
// arrives through LIEPOLAR_CLI (set by ctest); without it these cases
// report themselves as skipped.
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

using Json = nlohmann::json;

struct CmdResult {
  int exit_code = -1;
  std::string out;
};

const char* cli_path() { return std::getenv("LIEPOLAR_CLI"); }

CmdResult run(const std::string& args, const std::string& redirect = "2>/dev/null") {
  CmdResult result;
  const std::string cmd = std::string(cli_path()) + " " + args + " " + redirect;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

#define REQUIRE_CLI()                                        \
  if (!cli_path()) {                                         \
    MESSAGE("LIEPOLAR_CLI not set; skipping CLI coverage"); \
    return;                                                  \
  }

}  // namespace

TEST_CASE("decompose: identity document passes with zero parameters") {
  REQUIRE_CLI();
  const std::string doc =
      "{\"kind\":\"lorentz\",\"dim\":4,"
      "\"rows\":[[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]}";
  const CmdResult r = run("decompose --in -", "2>/dev/null <<'EOF'\n" + doc + "\nEOF");
  CHECK(r.exit_code == 0);
  const Json report = Json::parse(r.out);
  CHECK(report["verdict"] == "pass");
  CHECK(report["params"]["chi"] == 0.0);
  CHECK(report["params"]["theta"] == 0.0);
}

TEST_CASE("decompose: a pure boost document returns itself as P with U = I") {
  REQUIRE_CLI();
  const CmdResult composed = run("compose --boost 0.6931471805599453,0,0,1 --rotation 0,0,0,1");
  const CmdResult report =
      run("decompose --in -", "2>/dev/null <<'EOF'\n" + composed.out + "\nEOF");
  CHECK(report.exit_code == 0);
  const Json d = Json::parse(report.out);
  CHECK(std::fabs(d["params"]["chi"].get<double>() - 0.6931471805599453) < 1e-12);
  const Json input = Json::parse(composed.out);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      CHECK(std::fabs(d["factors"]["P"]["rows"][i][j].get<double>() -
                      input["rows"][i][j].get<double>()) < 1e-12);
      CHECK(std::fabs(d["factors"]["U"]["rows"][i][j].get<double>() - (i == j ? 1.0 : 0.0)) <
            1e-12);
    }
  }
}

TEST_CASE("compose | decompose closes the pipeline") {
  REQUIRE_CLI();
  const CmdResult composed = run("compose --boost 0.9,0,0,1 --rotation 1.1,0,1,0 --order up");
  CHECK(composed.exit_code == 0);
  const CmdResult report =
      run("decompose --in -", "2>/dev/null <<'EOF'\n" + composed.out + "\nEOF");
  CHECK(report.exit_code == 0);
  const Json d = Json::parse(report.out);
  CHECK(d["verdict"] == "pass");
  CHECK(std::fabs(d["params"]["chi"].get<double>() - 0.9) < 1e-9);
  CHECK(std::fabs(d["params"]["theta"].get<double>() - 1.1) < 1e-9);
  CHECK(std::fabs(d["params"]["rot_axis"][1].get<double>() - 1.0) < 1e-9);

  // The pu composition reports the boost from the left factor.
  const CmdResult pu = run("compose --boost 0.9,0,0,1 --rotation 1.1,0,1,0 --order pu");
  const CmdResult pu_report =
      run("decompose --in - --order pu", "2>/dev/null <<'EOF'\n" + pu.out + "\nEOF");
  const Json dpu = Json::parse(pu_report.out);
  CHECK(std::fabs(dpu["params"]["chi"].get<double>() - 0.9) < 1e-9);
  CHECK(std::fabs(dpu["params"]["boost_axis"][2].get<double>() - 1.0) < 1e-9);
}

TEST_CASE("compose rejects a zero rotation axis") {
  REQUIRE_CLI();
  const CmdResult r = run("compose --boost 1,0,0,1 --rotation 1,0,0,0", "2>&1");
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("axis is not normalizable") != std::string::npos);
}

TEST_CASE("decompose: malformed row length exits 2 with a precise message") {
  REQUIRE_CLI();
  const std::string doc =
      "{\"kind\":\"lorentz\",\"dim\":4,"
      "\"rows\":[[1,0,0,0],[0,1,0,0],[0,0,1],[0,0,0,1]]}";
  const CmdResult r = run("decompose --in -", "2>&1 <<'EOF'\n" + doc + "\nEOF");
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("rows[2]: expected 4 entries") != std::string::npos);
}

TEST_CASE("decompose: non-members exit 2 naming the failed invariant") {
  REQUIRE_CLI();
  const std::string doc =
      "{\"kind\":\"lorentz\",\"dim\":4,"
      "\"rows\":[[-1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]}";
  const CmdResult r = run("decompose --in -", "2>&1 <<'EOF'\n" + doc + "\nEOF");
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("orthochronous") != std::string::npos);
}

TEST_CASE("cover: identity, kernel point, and a diagonal boost image") {
  REQUIRE_CLI();
  const std::string id_doc =
      "{\"kind\":\"sl2c\",\"dim\":2,\"rows\":[[[1,0],[0,0]],[[0,0],[1,0]]]}";
  const CmdResult id = run("cover --in -", "2>/dev/null <<'EOF'\n" + id_doc + "\nEOF");
  CHECK(id.exit_code == 0);
  CHECK(Json::parse(id.out)["rows"][0][0] == 1.0);

  const std::string minus_doc =
      "{\"kind\":\"sl2c\",\"dim\":2,\"rows\":[[[-1,0],[0,0]],[[0,0],[-1,0]]]}";
  const CmdResult minus = run("cover --in -", "2>/dev/null <<'EOF'\n" + minus_doc + "\nEOF");
  CHECK(Json::parse(minus.out)["rows"][0][0] == 1.0);

  // diag(2, 1/2) covers the e3 boost with rapidity 2 ln 2: cosh = 17/8.
  const std::string diag_doc =
      "{\"kind\":\"sl2c\",\"dim\":2,\"rows\":[[[2,0],[0,0]],[[0,0],[0.5,0]]]}";
  const CmdResult diag = run("cover --in -", "2>/dev/null <<'EOF'\n" + diag_doc + "\nEOF");
  const Json image = Json::parse(diag.out);
  CHECK(std::fabs(image["rows"][0][0].get<double>() - 2.125) < 1e-14);
  CHECK(std::fabs(image["rows"][0][3].get<double>() - 1.875) < 1e-14);
  CHECK(image["residuals"]["metric"].get<double>() < 1e-12);

  const std::string bad_doc =
      "{\"kind\":\"sl2c\",\"dim\":2,\"rows\":[[[2,0],[0,0]],[[0,0],[1,0]]]}";
  const CmdResult bad = run("cover --in -", "2>&1 <<'EOF'\n" + bad_doc + "\nEOF");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("generate is deterministic and feeds decompose") {
  REQUIRE_CLI();
  const CmdResult a = run("generate --kind lorentz --seed 12");
  const CmdResult b = run("generate --kind lorentz --seed 12");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);

  for (const char* args : {"--kind lorentz --seed 3", "--kind sl2c --seed 3",
                           "--kind pseudo --signs --+++ --seed 3"}) {
    const CmdResult gen = run(std::string("generate ") + args);
    CHECK(gen.exit_code == 0);
    const CmdResult rep = run("decompose --in -", "2>/dev/null <<'EOF'\n" + gen.out + "\nEOF");
    CHECK(rep.exit_code == 0);
    CHECK(Json::parse(rep.out)["verdict"] == "pass");
  }
}

TEST_CASE("verify: smoke run, bad usage, unknown suite") {
  REQUIRE_CLI();
  const CmdResult ok = run("verify --suite so3 --samples 10 --seed 0");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("overall: PASS") != std::string::npos);

  CHECK(run("verify --suite so3 --samples 0 --seed 0", "2>&1").exit_code == 2);
  CHECK(run("verify --suite nope --samples 10 --seed 0", "2>&1").exit_code == 2);
}

TEST_CASE("verify output is byte-identical under a fixed seed") {
  REQUIRE_CLI();
  const CmdResult a = run("verify --suite linalg --samples 50 --seed 5");
  const CmdResult b = run("verify --suite linalg --samples 50 --seed 5");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}
