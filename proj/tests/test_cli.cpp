#include <filesystem>
#include <fstream>
#include <sstream>

#include "boolinv/cli.hpp"
#include "json.hpp"
#include "doctest.h"

using namespace boolinv;
using Json = nlohmann::json;

namespace {

std::string fixture(const std::string& name) {
  return (std::filesystem::path(BOOLINV_FIXTURES) / name).string();
}

cli::Outcome run(const std::string& command, const std::string& file, int jobs = 1) {
  cli::Options o;
  o.command = command;
  o.format = "json";
  o.jobs = jobs;
  return cli::run_file(o, fixture(file));
}

Json doc(const cli::Outcome& o) { return Json::parse(o.out); }

}  // namespace

TEST_CASE("invert: verdicts and exit codes") {
  auto out = run("invert", "fsr3.txt");
  CHECK(out.exit_code == cli::kExitDecided);
  auto j = doc(out);
  CHECK(j["schema"] == 1);
  CHECK(j["kind"] == "map");
  CHECK(j["verdict"]["one_to_one"] == true);
  CHECK(j["goe"]["count"] == 0);

  out = run("invert", "example1.txt");
  CHECK(out.exit_code == cli::kExitNegative);
  j = doc(out);
  CHECK(j["verdict"]["one_to_one"] == false);
  CHECK(j["verdict"]["y_minterm_count"] == 10);
  CHECK(j["goe"]["points"] == Json::array({"0110", "0111", "1000", "1010", "1100", "1111"}));
  const auto& w = j["verdict"]["witness"];
  CHECK(w["x"] != w["x_tilde"]);
}

TEST_CASE("goe, coi, one2one, diag") {
  CHECK(doc(run("goe", "and_twice.txt"))["goe"]["points"] == Json::array({"01", "10"}));
  CHECK(doc(run("coi", "parity_embed.txt"))["coi"]["points"] == Json::array({"001", "010", "100", "111"}));
  CHECK(run("one2one", "parity_embed.txt").exit_code == cli::kExitDecided);
  CHECK(run("one2one", "and_twice.txt").exit_code == cli::kExitNegative);
  const auto d = run("diag", "fsr3.txt");
  CHECK(d.exit_code == cli::kExitDecided);
  CHECK(doc(d)["verdict"]["equals_diagonal_set"] == true);
}

TEST_CASE("unique and implicants on systems") {
  auto j = doc(run("unique", "unique.txt"));
  CHECK(j["result"] == "UNIQUE");
  CHECK(j["solution"]["x1"] == 1);
  CHECK(j["solution"]["x2"] == 0);
  j = doc(run("unique", "inconsistent.txt"));
  CHECK(j["result"] == "NONE");
  CHECK(j["solution"].is_null());

  j = doc(run("implicants", "fsr3.txt"));
  CHECK(j["implicant_count"] == 8);
  CHECK(j["satisfiable"] == true);
  j = doc(run("implicants", "inconsistent.txt"));
  CHECK(j["satisfiable"] == false);
}

TEST_CASE("permpoly") {
  auto out = run("permpoly", "x3_f8.txt");
  CHECK(out.exit_code == cli::kExitDecided);
  CHECK(doc(out)["permutation"] == true);
  out = run("permpoly", "x3_f16.txt");
  CHECK(out.exit_code == cli::kExitNegative);
  CHECK(doc(out)["permutation"] == false);
}

TEST_CASE("errors exit with 2 and explain themselves") {
  auto out = run("invert", "parity_embed.txt");
  CHECK(out.exit_code == cli::kExitError);
  CHECK(out.err.find("is_one_to_one_general") != std::string::npos);
  out = run("unique", "fsr3.txt");
  CHECK(out.exit_code == cli::kExitError);
  out = run("invert", "no_such_file.txt");
  CHECK(out.exit_code == cli::kExitError);

  cli::Options o;
  o.command = "goe";
  out = cli::run(o, "vars: x1\ny1 = x2\n");
  CHECK(out.exit_code == cli::kExitError);
  CHECK(out.err.find("line 2") != std::string::npos);
  o.bound = 0;
  CHECK(cli::run(o, "vars: x1\ny1 = x1\n").exit_code == cli::kExitError);
  o.bound = 12;
  o.command = "frobnicate";
  CHECK(cli::run(o, "vars: x1\ny1 = x1\n").exit_code == cli::kExitError);
}

TEST_CASE("output is byte-identical across worker counts") {
  for (const auto& entry : std::filesystem::directory_iterator(BOOLINV_FIXTURES)) {
    for (const auto& command : cli::subcommands()) {
      const auto name = entry.path().filename().string();
      CAPTURE(name);
      CAPTURE(command);
      const auto one = run(command, name, 1);
      const auto eight = run(command, name, 8);
      CHECK(one.out == eight.out);
      CHECK(one.exit_code == eight.exit_code);
    }
  }
}

TEST_CASE("engine commands agree with the oracle command on every fixture") {
  for (const auto& entry : std::filesystem::directory_iterator(BOOLINV_FIXTURES)) {
    const auto name = entry.path().filename().string();
    CAPTURE(name);
    const auto oracle = doc(run("oracle", name));
    const auto& o = oracle["oracle"];
    if (oracle["kind"] == "system") {
      const auto u = doc(run("unique", name));
      const auto count = o["solution_count"].get<std::size_t>();
      CHECK(u["result"] == (count == 0 ? "NONE" : count == 1 ? "UNIQUE" : "MULTIPLE"));
      CHECK(o["engine_check"]["sound"] == true);
      CHECK(o["engine_check"]["complete"] == true);
      CHECK(o["engine_check"]["orthogonal"] == true);
      continue;
    }
    const auto general = doc(run(oracle["kind"] == "poly" ? "permpoly" : "one2one", name));
    CHECK(general["verdict"]["one_to_one"] == o["injective"]);
    CHECK(general["verdict"]["y_minterm_count"] == o["image_size"]);
    const auto goe = doc(run("goe", name));
    const auto coi = doc(run("coi", name));
    if (goe.contains("goe")) {
      CHECK(goe["goe"]["points"] == o["complement"]);
      CHECK(doc(run("invert", name))["verdict"]["one_to_one"] == o["injective"]);
    }
    if (coi.contains("coi")) CHECK(coi["coi"]["points"] == o["complement"]);
    CHECK(doc(run("diag", name))["verdict"]["one_to_one"] == o["injective"]);
  }
}

TEST_CASE("text format flattens the document") {
  cli::Options o;
  o.command = "invert";
  const auto out = cli::run_file(o, fixture("fsr3.txt"));
  CHECK(out.out.find("verdict.one_to_one: true\n") != std::string::npos);
  CHECK(out.out.find("schema: 1\n") == 0);
}
