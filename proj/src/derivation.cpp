#include "smm/derivation.hpp"

#include <sstream>

#include "smm/parse.hpp"

namespace smm {

CheckResult checkDerivation(const Derivation& d) {
  Word w = d.start;
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    const DerivStep& s = d.steps[i];
    const RuleSchema* rule = findRule(s.ruleId);
    if (!rule) return {false, i, "unknown rule " + s.ruleId};
    try {
      w = rewriteWith(w, *rule, s.lift, s.pos, s.forward, s.subst);
    } catch (const NoMatch& e) {
      return {false, i, std::string("NoMatch: ") + e.what()};
    } catch (const UnboundVariable& e) {
      return {false, i, e.what()};
    }
  }
  if (w != d.end)
    return {false, d.steps.size(),
            "derivation ends at " + w.str() + ", expected " + d.end.str()};
  return {};
}

std::string derivationToText(const Derivation& d) {
  std::ostringstream os;
  os << "start " << d.start.str() << "\n";
  for (const DerivStep& s : d.steps) {
    os << s.displayId() << " @" << s.pos << (s.forward ? " fwd" : " bwd") << " {";
    bool first = true;
    for (const auto& [name, word] : s.subst) {
      if (!first) os << ",";
      first = false;
      os << name << "=" << word.str();
    }
    os << "}\n";
  }
  os << "end " << d.end.str() << "\n";
  return os.str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

DerivStep parseStepLine(std::string_view line, std::size_t lineNo) {
  DerivStep step;
  const std::size_t sp1 = line.find(' ');
  if (sp1 == std::string_view::npos)
    throw FormatError("malformed step line", lineNo);
  auto [base, lift] = splitRuleId(line.substr(0, sp1));
  step.ruleId = std::move(base);
  step.lift = std::move(lift);
  std::string_view rest = trim(line.substr(sp1 + 1));
  if (rest.empty() || rest.front() != '@')
    throw FormatError("expected @<pos>", lineNo);
  rest.remove_prefix(1);
  std::size_t idx = 0;
  while (idx < rest.size() && rest[idx] >= '0' && rest[idx] <= '9') ++idx;
  if (idx == 0) throw FormatError("expected position digits", lineNo);
  step.pos = std::stoul(std::string(rest.substr(0, idx)));
  rest = trim(rest.substr(idx));
  if (rest.rfind("fwd", 0) == 0) {
    step.forward = true;
    rest = trim(rest.substr(3));
  } else if (rest.rfind("bwd", 0) == 0) {
    step.forward = false;
    rest = trim(rest.substr(3));
  } else {
    throw FormatError("expected fwd or bwd", lineNo);
  }
  if (rest.size() < 2 || rest.front() != '{' || rest.back() != '}')
    throw FormatError("expected {var=term,...}", lineNo);
  rest = rest.substr(1, rest.size() - 2);
  while (!(rest = trim(rest)).empty()) {
    std::size_t comma = rest.find(',');
    std::string_view item = trim(comma == std::string_view::npos ? rest : rest.substr(0, comma));
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos)
      throw FormatError("expected var=term binding", lineNo);
    try {
      step.subst.emplace(std::string(trim(item.substr(0, eq))),
                         parseTerm(std::string(trim(item.substr(eq + 1)))));
    } catch (const ParseError& e) {
      throw FormatError(std::string("bad binding term: ") + e.what(), lineNo);
    }
  }
  return step;
}

}  // namespace

Derivation derivationFromText(std::string_view text) {
  Derivation d;
  bool haveStart = false, haveEnd = false;
  std::size_t lineNo = 0;
  while (!text.empty()) {
    ++lineNo;
    const std::size_t nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line.empty() || line.front() == '#') continue;
    try {
      if (line.rfind("start ", 0) == 0) {
        if (haveStart) throw FormatError("duplicate start line", lineNo);
        d.start = parseTerm(std::string(trim(line.substr(6))));
        haveStart = true;
        continue;
      }
      if (line.rfind("end ", 0) == 0) {
        if (haveEnd) throw FormatError("duplicate end line", lineNo);
        d.end = parseTerm(std::string(trim(line.substr(4))));
        haveEnd = true;
        continue;
      }
    } catch (const ParseError& e) {
      throw FormatError(std::string("bad term: ") + e.what(), lineNo);
    }
    if (!haveStart) throw FormatError("step before start line", lineNo);
    if (haveEnd) throw FormatError("step after end line", lineNo);
    d.steps.push_back(parseStepLine(line, lineNo));
  }
  if (!haveStart) throw FormatError("missing start line", lineNo);
  if (!haveEnd) throw FormatError("missing end line", lineNo);
  return d;
}

}  // namespace smm
