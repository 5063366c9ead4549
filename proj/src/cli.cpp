#include "smm/cli.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "smm/bgd.hpp"
#include "smm/derivation.hpp"
#include "smm/finmon.hpp"
#include "smm/json_io.hpp"
#include "smm/modcat.hpp"
#include "smm/parse.hpp"
#include "smm/prover.hpp"
#include "smm/skewset.hpp"

namespace smm {

namespace {

using nlohmann::json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInput = 2;

SmmInstance loadInstance(const std::string& path) {
  return instanceFromJson(json::parse(readTextFile(path)));
}

std::vector<SmmInstance> enumerateUpTo(int maxN) {
  std::vector<SmmInstance> out;
  for (int n = 1; n <= maxN; ++n)
    for (const FiniteMonoid& m : enumerateMonoids(n))
      for (const SmmInstance& inst : enumerateSmm(m)) out.push_back(inst);
  return out;
}

std::string witnessStr(const AxiomViolation& v) {
  return v.axiom + " at " + json(v.witness).dump() + ": " + v.detail;
}

int cmdCheck(const std::string& path, const std::string& format, std::ostream& out) {
  const SmmInstance inst = loadInstance(path);
  const std::vector<AxiomViolation> md = checkAxioms(inst, Presentation::MuDelta);
  const std::vector<AxiomViolation> ga = checkAxioms(inst, Presentation::Gamma);
  const bool ok = md.empty() && ga.empty();
  if (format == "json") {
    json j;
    j["schema"] = 1;
    j["ok"] = ok;
    j["muDelta"] = violationsToJson(md);
    j["gamma"] = violationsToJson(ga);
    out << j.dump() << '\n';
  } else {
    const auto block = [&](const std::string& name, const std::vector<AxiomViolation>& vs) {
      if (vs.empty()) {
        out << name << ": pass\n";
        return;
      }
      out << name << ": " << vs.size() << " violation" << (vs.size() == 1 ? "" : "s") << '\n';
      for (const AxiomViolation& v : vs) out << "  " << witnessStr(v) << '\n';
    };
    block("mu-delta", md);
    block("gamma", ga);
    out << "check: " << (ok ? "pass" : "fail") << '\n';
  }
  return ok ? kPass : kFail;
}

int cmdEnumerate(int maxN, std::ostream& out) {
  int total = 0;
  int nontrivial = 0;
  for (int n = 1; n <= maxN; ++n)
    for (const FiniteMonoid& m : enumerateMonoids(n))
      for (const SmmInstance& inst : enumerateSmm(m)) {
        const json rec = enumerationRecord(inst);
        out << rec.dump() << '\n';
        ++total;
        if (!rec["trivial"].get<bool>()) ++nontrivial;
      }
  out << "enumerate: " << total << " instance" << (total == 1 ? "" : "s") << ", " << nontrivial
      << " non-trivial\n";
  return nontrivial == 0 ? kPass : kFail;
}

std::vector<std::string> collectNames(const Word& w) {
  std::set<std::string> names;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Letter& l = w.at(i);
    if (l.atom.kind == AtomKind::Gen || l.atom.kind == AtomKind::Var) names.insert(l.atom.name);
  }
  return std::vector<std::string>(names.begin(), names.end());
}

int cmdProve(const std::string& lhsText, const std::string& rhsText, const ProveBudget& budget,
             const std::string& outPath, bool countermodel, int maxN, std::ostream& out) {
  const Word lhs = parsePattern(lhsText);
  const Word rhs = parsePattern(rhsText);
  const ProveResult res = proveEqual(lhs, rhs, budget);
  if (res.proved()) {
    const std::string text = derivationToText(*res.derivation);
    if (outPath.empty()) {
      out << text;
    } else {
      writeTextFile(outPath, text);
      out << "proved: " << lhs.str() << " = " << rhs.str() << " in " << res.derivation->steps.size()
          << " steps (derivation written to " << outPath << ")\n";
    }
    return kPass;
  }
  out << "unknown: no derivation within depth " << budget.maxDepth << ", states "
      << budget.maxStates << " (visited " << res.stats.states << " states, depth "
      << res.stats.depth << ", " << (res.stats.budgetExhausted ? "budget exhausted" : "search closed")
      << ")\n";
  if (countermodel) {
    std::vector<std::string> names = collectNames(lhs);
    for (const std::string& name : collectNames(rhs))
      if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
    std::sort(names.begin(), names.end());
    for (const SmmInstance& inst : enumerateUpTo(maxN)) {
      const int n = inst.monoid.size();
      const int k = static_cast<int>(names.size());
      std::vector<Elem> vals(k, 0);
      while (true) {
        std::map<std::string, Elem> assignment;
        for (int i = 0; i < k; ++i) assignment[names[i]] = vals[i];
        const Elem lv = evalWord(lhs, inst, assignment);
        const Elem rv = evalWord(rhs, inst, assignment);
        if (lv != rv) {
          out << "countermodel: instance " << instanceToJson(inst).dump() << " assignment "
              << json(assignment).dump() << " gives " << lv << " != " << rv << '\n';
          return kFail;
        }
        int pos = k - 1;
        while (pos >= 0 && vals[pos] == n - 1) vals[pos--] = 0;
        if (pos < 0) break;
        ++vals[pos];
      }
    }
    out << "no countermodel found within bound, proof not found\n";
  }
  return kFail;
}

int cmdVerify(const std::string& path, std::ostream& out) {
  const Derivation d = derivationFromText(readTextFile(path));
  const CheckResult res = checkDerivation(d);
  if (res.ok) {
    out << "verified: " << d.start.str() << " = " << d.end.str() << " in " << d.steps.size()
        << " step" << (d.steps.size() == 1 ? "" : "s") << '\n';
    return kPass;
  }
  out << "invalid at step " << res.failStep << ": " << res.reason << '\n';
  return kFail;
}

struct FamilyRow {
  std::string family;
  bool pass = false;
  std::string witness;
};

FamilyRow reportRow(const std::string& family, const CheckReport& rep) {
  FamilyRow row{family, rep.ok(), ""};
  for (const CheckItem& item : rep.items)
    if (!item.pass) {
      row.witness = item.name + (item.detail.empty() ? "" : ": " + item.detail);
      break;
    }
  return row;
}

std::vector<FamilyRow> instanceFamilies(const SmmInstance& inst) {
  std::vector<FamilyRow> rows;
  const auto guarded = [&](const std::string& family, const std::function<FamilyRow()>& run) {
    try {
      rows.push_back(run());
    } catch (const std::exception& e) {
      rows.push_back(FamilyRow{family, false, e.what()});
    }
  };
  guarded("axioms", [&] {
    std::vector<AxiomViolation> vs = checkAxioms(inst, Presentation::MuDelta);
    const std::vector<AxiomViolation> ga = checkAxioms(inst, Presentation::Gamma);
    vs.insert(vs.end(), ga.begin(), ga.end());
    return FamilyRow{"axioms", vs.empty(), vs.empty() ? "" : witnessStr(vs.front())};
  });
  guarded("mimosa", [&] {
    const MimosaReport rep = mimosaReport(inst);
    return FamilyRow{"mimosa", rep.fatalFinding.empty(), rep.fatalFinding};
  });
  guarded("bialgebroid", [&] { return reportRow("bialgebroid", bgdSuite(inst)); });
  guarded("modcat", [&] { return reportRow("modcat", modcatSuite(inst)); });
  guarded("skewset", [&] {
    if (inst.monoid.size() > 2)
      return FamilyRow{"skewset", true, "skipped: monoid size above 2"};
    return reportRow("skewset", skewsetSuite(inst));
  });
  return rows;
}

int cmdSuite(const std::string& path, bool allEnumerated, int maxN, const std::string& format,
             std::ostream& out) {
  std::vector<std::pair<std::string, SmmInstance>> targets;
  if (allEnumerated) {
    const std::vector<SmmInstance> all = enumerateUpTo(maxN);
    for (std::size_t i = 0; i < all.size(); ++i)
      targets.emplace_back("#" + std::to_string(i + 1) + " size " +
                               std::to_string(all[i].monoid.size()),
                           all[i]);
  } else {
    targets.emplace_back(path, loadInstance(path));
  }

  bool ok = true;
  std::vector<std::string> failedIdentities;
  for (const IdentityResult& r : identitySuite())
    if (!r.result.proved()) failedIdentities.push_back(r.entry.name);
  if (!failedIdentities.empty()) ok = false;

  std::vector<std::pair<std::string, std::vector<FamilyRow>>> matrix;
  for (const auto& [label, inst] : targets) {
    matrix.emplace_back(label, instanceFamilies(inst));
    for (const FamilyRow& row : matrix.back().second)
      if (!row.pass) ok = false;
  }

  if (format == "json") {
    json j;
    j["schema"] = 1;
    j["ok"] = ok;
    j["identities"] = {{"ok", failedIdentities.empty()}, {"failed", failedIdentities}};
    json insts = json::array();
    for (const auto& [label, rows] : matrix) {
      json families = json::array();
      for (const FamilyRow& row : rows) {
        json f;
        f["family"] = row.family;
        f["pass"] = row.pass;
        if (!row.witness.empty()) f["witness"] = row.witness;
        families.push_back(f);
      }
      insts.push_back({{"label", label}, {"families", families}});
    }
    j["instances"] = insts;
    out << j.dump() << '\n';
  } else {
    out << "identities: " << (failedIdentities.empty() ? "pass" : "fail") << '\n';
    for (const std::string& name : failedIdentities) out << "  unproved: " << name << '\n';
    for (const auto& [label, rows] : matrix)
      for (const FamilyRow& row : rows) {
        out << label << " " << row.family << ": " << (row.pass ? "pass" : "fail");
        if (!row.pass && !row.witness.empty()) out << " (" << row.witness << ")";
        out << '\n';
      }
    out << "suite: " << (ok ? "pass" : "fail") << '\n';
  }
  return ok ? kPass : kFail;
}

int cmdReport(const std::string& path, const std::string& format, std::ostream& out) {
  const SmmInstance inst = loadInstance(path);
  const std::vector<AxiomViolation> md = checkAxioms(inst, Presentation::MuDelta);
  const std::vector<AxiomViolation> ga = checkAxioms(inst, Presentation::Gamma);
  const MimosaReport mimosa = mimosaReport(inst);
  const std::vector<FamilyRow> rows = instanceFamilies(inst);
  bool ok = md.empty() && ga.empty();
  for (const FamilyRow& row : rows)
    if (!row.pass) ok = false;

  if (format == "json") {
    json j;
    j["schema"] = 1;
    j["ok"] = ok;
    j["instance"] = instanceToJson(inst);
    j["axioms"] = {{"muDelta", violationsToJson(md)}, {"gamma", violationsToJson(ga)}};
    j["trivial"] = isTrivial(inst);
    j["mimosa"] = mimosaToJson(mimosa);
    json families = json::array();
    for (const FamilyRow& row : rows) {
      json f;
      f["family"] = row.family;
      f["pass"] = row.pass;
      if (!row.witness.empty()) f["witness"] = row.witness;
      families.push_back(f);
    }
    j["families"] = families;
    out << j.dump() << '\n';
  } else {
    out << "instance: " << instanceToJson(inst).dump() << '\n';
    out << "axioms(mu-delta): " << (md.empty() ? "pass" : "fail") << '\n';
    out << "axioms(gamma): " << (ga.empty() ? "pass" : "fail") << '\n';
    out << "trivial: " << (isTrivial(inst) ? "true" : "false") << '\n';
    out << "mimosa: " << (mimosa.fatalFinding.empty() ? "ok" : mimosa.fatalFinding) << '\n';
    for (const FamilyRow& row : rows) {
      out << row.family << ": " << (row.pass ? "pass" : "fail");
      if (!row.pass && !row.witness.empty()) out << " (" << row.witness << ")";
      out << '\n';
    }
    out << "report: " << (ok ? "pass" : "fail") << '\n';
  }
  return ok ? kPass : kFail;
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite skew monoidal monoid toolkit"};
  app.require_subcommand(1);

  std::string checkPath;
  std::string checkFormat = "text";
  CLI::App* check = app.add_subcommand("check", "check the axioms of an instance file");
  check->add_option("instance", checkPath, "instance JSON file")->required();
  check->add_option("--format", checkFormat, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  int enumMax = 2;
  CLI::App* enumerate = app.add_subcommand("enumerate", "enumerate instances up to a size bound");
  enumerate->add_option("--max", enumMax, "largest monoid size");

  std::string lhs;
  std::string rhs;
  ProveBudget budget;
  std::string provePath;
  bool countermodel = false;
  int proveMax = 2;
  CLI::App* prove = app.add_subcommand("prove", "search for a derivation between two terms");
  prove->add_option("lhs", lhs, "left term")->required();
  prove->add_option("rhs", rhs, "right term")->required();
  prove->add_option("--depth", budget.maxDepth, "derivation length bound");
  prove->add_option("--states", budget.maxStates, "distinct words kept");
  prove->add_option("--out", provePath, "write the derivation to this file");
  prove->add_flag("--countermodel", countermodel, "on failure, sweep small instances");
  prove->add_option("--max", proveMax, "countermodel monoid size bound");

  std::string verifyPath;
  CLI::App* verify = app.add_subcommand("verify", "replay a derivation file");
  verify->add_option("derivation", verifyPath, "derivation text file")->required();

  std::string suitePath;
  bool allEnumerated = false;
  int suiteMax = 2;
  std::string suiteFormat = "text";
  CLI::App* suite = app.add_subcommand("suite", "run every check family");
  suite->add_option("instance", suitePath, "instance JSON file");
  suite->add_flag("--all-enumerated", allEnumerated, "sweep all enumerated instances");
  suite->add_option("--max", suiteMax, "enumeration size bound");
  suite->add_option("--format", suiteFormat, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string reportPath;
  std::string reportFormat = "text";
  CLI::App* report = app.add_subcommand("report", "emit the full record of one instance");
  report->add_option("instance", reportPath, "instance JSON file")->required();
  report->add_option("--format", reportFormat, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    app.exit(e, out, err);
    return kInput;
  }

  try {
    if (check->parsed()) return cmdCheck(checkPath, checkFormat, out);
    if (enumerate->parsed()) return cmdEnumerate(enumMax, out);
    if (prove->parsed())
      return cmdProve(lhs, rhs, budget, provePath, countermodel, proveMax, out);
    if (verify->parsed()) return cmdVerify(verifyPath, out);
    if (suite->parsed()) {
      if (suitePath.empty() && !allEnumerated) {
        err << "suite needs an instance file or --all-enumerated\n";
        return kInput;
      }
      if (!suitePath.empty() && allEnumerated) {
        err << "suite takes either an instance file or --all-enumerated, not both\n";
        return kInput;
      }
      return cmdSuite(suitePath, allEnumerated, suiteMax, suiteFormat, out);
    }
    if (report->parsed()) return cmdReport(reportPath, reportFormat, out);
  } catch (const ParseError& e) {
    err << "parse error at position " << e.pos << ": " << e.what() << '\n';
    return kInput;
  } catch (const FormatError& e) {
    err << "format error at line " << e.line << ": " << e.what() << '\n';
    return kInput;
  } catch (const json::exception& e) {
    err << "json error: " << e.what() << '\n';
    return kInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  }
  err << "no command\n";
  return kInput;
}

}  // namespace smm
