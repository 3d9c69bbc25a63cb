// Copyright 2026 The eprsim Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Black-box checks of the eprsim executable: exit codes, output stability,
// and report schema conformance.
//
// Usage: cli_test --cli <path-to-eprsim-binary> --fixtures <fixtures-dir>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <string>

#include <json.hpp>

#include "eprsim/harness.hpp"
#include "subprocess.hpp"

namespace {

int g_failures = 0;
std::string g_cli;
std::string g_fixtures;

void expect(bool ok, const std::string& what) {
  std::cout << (ok ? "ok" : "FAILED") << " - " << what << "\n";
  if (!ok) ++g_failures;
}

testutil::CommandResult cli(const std::string& args) {
  return testutil::run_command("'" + g_cli + "' " + args);
}

std::string fixture(const std::string& name) {
  return "'" + g_fixtures + "/" + name + "'";
}

void exit_codes() {
  expect(cli("validate " + fixture("paper_fig1.json")).exit_code == 0,
         "validate: admissible scenario exits 0");
  expect(cli("validate " + fixture("paper_fig1_D.json")).exit_code == 2,
         "validate: charge violation exits 2");
  expect(cli("run " + fixture("paper_fig1_D.json")).exit_code == 2,
         "run: charge violation exits 2");
  expect(cli("validate missing_file.json").exit_code == 1,
         "validate: missing file exits 1");

  const std::string bad = "cli_test_malformed.json";
  std::ofstream(bad) << "{ nope";
  expect(cli("validate " + bad).exit_code == 1, "validate: parse error exits 1");
  std::remove(bad.c_str());

  expect(cli("boost " + fixture("paper_fig1.json") + " --frame 2,0,0")
                 .exit_code == 1,
         "boost: superluminal frame exits 1");
  expect(cli("boost " + fixture("paper_fig1.json") + " --frame nonsense")
                 .exit_code == 1,
         "boost: malformed frame triple exits 1");
  expect(cli("sweep " + fixture("paper_fig1.json") + " --axis 0,0,0")
                 .exit_code == 1,
         "sweep: zero axis exits 1");
}

void run_json_output() {
  const std::string cmd = "run " + fixture("paper_fig1.json") +
                          " --output json --mode mc --samples 2000 --seed 5";
  const auto first = cli(cmd);
  const auto second = cli(cmd);
  expect(first.exit_code == 0, "run --output json exits 0");
  expect(first.output == second.output,
         "identical flags produce byte-identical JSON");

  const auto doc = nlohmann::json::parse(first.output, nullptr, false);
  expect(!doc.is_discarded(), "run output parses as JSON");
  std::string why;
  expect(eprsim::report_schema_ok(doc, &why), "report schema: " + why);
  expect(doc["sampler"]["generator"] == "mt19937_64-u53",
         "sampler names its generator");
  expect(doc["queries"][0]["probability"].is_number(),
         "query answer present in MC mode");

  const auto invalid =
      cli("run " + fixture("paper_fig1_D.json") + " --output json");
  const auto vdoc = nlohmann::json::parse(invalid.output, nullptr, false);
  expect(!vdoc.is_discarded() && eprsim::report_schema_ok(vdoc, &why),
         "violation report satisfies the schema");
  expect(!vdoc.contains("distributions"),
         "violation report carries no distributions");
  expect(vdoc["validation"]["violations"].size() == 1,
         "violation report lists exactly one violation");
}

void exact_json_output() {
  const auto r = cli("run " + fixture("paper_fig1.json") +
                     " --output json --frame -0.529,0,0");
  expect(r.exit_code == 0, "exact run with frame section exits 0");
  const auto doc = nlohmann::json::parse(r.output, nullptr, false);
  if (doc.is_discarded()) {
    expect(false, "exact run output parses as JSON");
    return;
  }
  expect(std::abs(doc["queries"][0]["probability"].get<double>() - 0.5) <=
             1e-12,
         "headline query equals 1/2 in JSON output");
  expect(doc["orderings"]["orders"].size() == 2,
         "both linear extensions reported");
  expect(doc["frame"]["test_order"][0] == "A",
         "boosted frame lists A first");
  expect(doc["frame"]["order_flips"].size() == 1, "one order flip flagged");
}

void orderings_output() {
  const auto r = cli("orderings " + fixture("paper_fig1.json"));
  expect(r.exit_code == 0, "orderings exits 0");
  expect(r.output.find("A B E") != std::string::npos &&
             r.output.find("B A E") != std::string::npos,
         "orderings lists both extensions");
}

void sweep_output() {
  const auto r = cli("sweep " + fixture("paper_fig1.json") +
                     " --axis 0,0,1 --steps 3 --output json");
  expect(r.exit_code == 0, "sweep exits 0");
  const auto doc = nlohmann::json::parse(r.output, nullptr, false);
  if (doc.is_discarded()) {
    expect(false, "sweep output parses as JSON");
    return;
  }
  expect(doc["singlet"] == true, "sweep recognizes the singlet");
  expect(doc["rows"].size() == 3, "sweep honors --steps");
  expect(std::abs(doc["rows"][0]["expectation"].get<double>() + 1.0) <= 1e-10,
         "sweep starts at -1");

  const auto np = cli("sweep " + fixture("product_state.json") +
                      " --axis 0,0,1 --steps 3 --output json");
  const auto npdoc = nlohmann::json::parse(np.output, nullptr, false);
  expect(!npdoc.is_discarded() && npdoc["singlet"] == false &&
             npdoc["warning"] == "NotSinglet",
         "sweep warns on non-singlet states");
}

void table_output() {
  const auto r = cli("run " + fixture("paper_fig1.json"));
  expect(r.exit_code == 0, "table run exits 0");
  expect(r.output.find("P(E=+ | A=+) = 0.5") != std::string::npos,
         "table output states the headline answer");

  const auto b = cli("boost " + fixture("paper_fig1.json") + " --frame 0,0,0");
  expect(b.exit_code == 0 &&
             b.output.find("test order: B A E") != std::string::npos,
         "rest frame keeps the lab order");
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; i += 2) {
    if (std::strcmp(argv[i], "--cli") == 0) g_cli = argv[i + 1];
    if (std::strcmp(argv[i], "--fixtures") == 0) g_fixtures = argv[i + 1];
  }
  if (g_cli.empty() || g_fixtures.empty()) {
    std::cerr << "usage: cli_test --cli <eprsim> --fixtures <dir>\n";
    return 2;
  }

  exit_codes();
  run_json_output();
  exact_json_output();
  orderings_output();
  sweep_output();
  table_output();

  if (g_failures != 0) {
    std::cout << g_failures << " check(s) failed\n";
    return 1;
  }
  std::cout << "all checks passed\n";
  return 0;
}
