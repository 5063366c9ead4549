#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "smm/cli.hpp"
#include "smm/json_io.hpp"

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

using namespace smm;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  RunResult r;
  r.code = runCli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string tmpFile(const std::string& name, const std::string& content) {
  const std::string path =
      (std::filesystem::temp_directory_path() / ("smm_cli_" + name)).string();
  writeTextFile(path, content);
  return path;
}

SmmInstance z2g() { return enumerateSmm(FiniteMonoid::fromTable({{0, 1}, {1, 0}}))[1]; }

std::string instanceFile(const std::string& name, const SmmInstance& inst) {
  return tmpFile(name, instanceToJson(inst).dump());
}

bool contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("check accepts lawful instances and classifies failures") {
  const SmmInstance one = enumerateSmm(FiniteMonoid::fromTable({{0}}))[0];
  CHECK(run({"check", instanceFile("one.json", one)}).code == 0);

  const RunResult good = run({"check", instanceFile("z2g.json", z2g())});
  CHECK(good.code == 0);
  CHECK(contains(good.out, "check: pass"));

  // lawful monoid, broken structure constants: an axiom failure, not an input error
  nlohmann::json bad = instanceToJson(z2g());
  bad["mu"] = 0;
  const RunResult violated = run({"check", tmpFile("bad_mu.json", bad.dump())});
  CHECK(violated.code == 1);
  CHECK(contains(violated.out, "SMM10"));
  CHECK(contains(violated.out, "check: fail"));

  // non-associative table: an input error with a location
  const std::string nonAssoc = tmpFile(
      "nonassoc.json",
      R"({"schema":1,"size":3,"table":[[0,1,2],[1,0,0],[2,0,0]],"unit":0,)"
      R"("T":[0,1,2],"Q":[0,1,2],"mu":0,"eta":0,"delta":0,"eps":0})");
  const RunResult corrupt = run({"check", nonAssoc});
  CHECK(corrupt.code == 2);
  CHECK(contains(corrupt.err, "not associative"));

  nlohmann::json noEndo = instanceToJson(z2g());
  noEndo["T"] = {1, 0};
  CHECK(run({"check", tmpFile("bad_t.json", noEndo.dump())}).code == 2);

  CHECK(run({"check", tmpFile("broken.json", "{")}).code == 2);
  CHECK(run({"check", tmpFile("empty.json", "{}")}).code == 2);
  CHECK(run({"check", "/nonexistent/path.json"}).code == 2);
}

TEST_CASE("enumerate emits one record per instance and a summary") {
  const RunResult two = run({"enumerate", "--max", "2"});
  CHECK(two.code == 0);
  int records = 0;
  std::istringstream lines(two.out);
  std::string line;
  std::string last;
  while (std::getline(lines, line)) {
    if (!line.empty() && line[0] == '{') {
      ++records;
      CHECK(contains(line, "\"trivial\":true"));
    }
    last = line;
  }
  CHECK(records == 4);
  CHECK(last == "enumerate: 4 instances, 0 non-trivial");

  const RunResult one = run({"enumerate", "--max", "1"});
  CHECK(one.code == 0);
  CHECK(contains(one.out, "enumerate: 1 instance, 0 non-trivial"));

  CHECK(run({"enumerate", "--max", "9"}).code == 2);

  // byte determinism
  CHECK(run({"enumerate", "--max", "2"}).out == two.out);
}

TEST_CASE("prove writes replayable derivations and verify replays them") {
  const std::string derivPath =
      (std::filesystem::temp_directory_path() / "smm_cli_deriv.txt").string();
  const RunResult proved = run({"prove", "eps*T(a)*eta", "a", "--out", derivPath});
  CHECK(proved.code == 0);
  CHECK(contains(proved.out, "proved"));

  const RunResult replay = run({"verify", derivPath});
  CHECK(replay.code == 0);
  CHECK(contains(replay.out, "verified"));

  // without --out the derivation itself is the output, replayable as-is
  const RunResult text = run({"prove", "mu*S(a)", "mu*T(Q(a))"});
  CHECK(text.code == 0);
  CHECK(contains(text.out, "start "));
  const RunResult replay2 = run({"verify", tmpFile("deriv2.txt", text.out)});
  CHECK(replay2.code == 0);

  // tampered end term fails replay with the failing step
  std::string tampered = readTextFile(derivPath);
  tampered.replace(tampered.rfind("end a"), 5, "end mu");
  CHECK(run({"verify", tmpFile("tampered.txt", tampered)}).code == 1);

  CHECK(run({"verify", tmpFile("garbage.txt", "not a derivation\n")}).code == 2);
  CHECK(run({"prove", "eps*(", "a"}).code == 2);
}

TEST_CASE("prove reports unknown with stats and sweeps for countermodels") {
  const RunResult unknown = run({"prove", "mu", "delta", "--depth", "4", "--states", "2000"});
  CHECK(unknown.code == 1);
  CHECK(contains(unknown.out, "unknown"));
  CHECK(contains(unknown.out, "states"));

  // every instance on monoids of size <= 2 satisfies mu = delta
  const RunResult swept = run(
      {"prove", "mu", "delta", "--depth", "4", "--states", "2000", "--countermodel"});
  CHECK(swept.code == 1);
  CHECK(contains(swept.out, "no countermodel found within bound, proof not found"));

  // a size-3 instance separates them
  const RunResult found = run({"prove", "mu", "delta", "--depth", "4", "--states", "2000",
                               "--countermodel", "--max", "3"});
  CHECK(found.code == 1);
  CHECK(contains(found.out, "countermodel: instance"));
}

TEST_CASE("suite aggregates every check family") {
  const SmmInstance one = enumerateSmm(FiniteMonoid::fromTable({{0}}))[0];
  const RunResult pass = run({"suite", instanceFile("suite_one.json", one)});
  CHECK(pass.code == 0);
  CHECK(contains(pass.out, "identities: pass"));
  CHECK(contains(pass.out, "axioms: pass"));
  CHECK(contains(pass.out, "bialgebroid: pass"));
  CHECK(contains(pass.out, "modcat: pass"));
  CHECK(contains(pass.out, "skewset: pass"));
  CHECK(contains(pass.out, "suite: pass"));

  const RunResult all = run({"suite", "--all-enumerated", "--max", "2"});
  CHECK(all.code == 0);
  CHECK(contains(all.out, "suite: pass"));

  // a mutated instance fails at least one family with a witness
  nlohmann::json mutated = instanceToJson(z2g());
  mutated["eps"] = 0;
  const RunResult fail = run({"suite", tmpFile("suite_bad.json", mutated.dump())});
  CHECK(fail.code == 1);
  CHECK(contains(fail.out, "axioms: fail"));
  CHECK(contains(fail.out, "SMM"));
  CHECK(contains(fail.out, "suite: fail"));

  CHECK(run({"suite"}).code == 2);
}

TEST_CASE("report emits the full machine-readable record") {
  const std::string path = instanceFile("report_z2g.json", z2g());
  const RunResult text = run({"report", path});
  CHECK(text.code == 0);
  CHECK(contains(text.out, "trivial: true"));
  CHECK(contains(text.out, "report: pass"));

  const RunResult js = run({"report", path, "--format", "json"});
  CHECK(js.code == 0);
  const nlohmann::json doc = nlohmann::json::parse(js.out);
  CHECK(doc["schema"] == 1);
  CHECK(doc["ok"] == true);
  CHECK(doc["mimosa"]["trivial"] == true);
  CHECK(doc["axioms"]["muDelta"].empty());

  // byte determinism
  CHECK(run({"report", path, "--format", "json"}).out == js.out);
}

TEST_CASE("argument errors exit with the input-error code") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
