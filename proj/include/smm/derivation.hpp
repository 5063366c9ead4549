#pragma once

// Machine-checkable rewrite derivations and their line-oriented text format:
//   start <term>
//   <rule-id>[^lift] @<pos> <fwd|bwd> {var=term,...}
//   ...
//   end <term>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "smm/rules.hpp"
#include "smm/word.hpp"

namespace smm {

struct DerivStep {
  std::string ruleId;  // base id, e.g. "SMM7"
  std::string lift;    // wrapper prefix the rule was applied under, "" if none
  std::size_t pos = 0;
  bool forward = true;
  Substitution subst;

  std::string displayId() const { return lift.empty() ? ruleId : ruleId + "^" + lift; }
};

struct Derivation {
  Word start;
  std::vector<DerivStep> steps;
  Word end;
};

struct CheckResult {
  bool ok = true;
  std::size_t failStep = 0;  // index of first failing step; steps.size() = end mismatch
  std::string reason;
};

CheckResult checkDerivation(const Derivation& d);

std::string derivationToText(const Derivation& d);

struct FormatError : std::runtime_error {
  std::size_t line;
  FormatError(std::string msg, std::size_t ln)
      : std::runtime_error(std::move(msg)), line(ln) {}
};

Derivation derivationFromText(std::string_view text);

}  // namespace smm
