#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "smm/derivation.hpp"
#include "smm/parse.hpp"
#include "smm/rules.hpp"

using namespace smm;

// ---------------------------------------------------------------------------
// Independent matching oracle, written before the comparisons below were run:
// enumerate every way to split the subject suffix into consecutive chunks,
// one per pattern letter, with no shared machinery with matchAt/matchSpans.
// ---------------------------------------------------------------------------
namespace {

struct OracleMatch {
  std::map<std::string, std::vector<Letter>> bind;
  std::size_t len = 0;
};

bool hasPrefix(const std::string& s, const std::string& p) {
  return s.size() >= p.size() && std::equal(p.begin(), p.end(), s.begin());
}

void oracleRec(const std::vector<Letter>& pat, std::size_t pi,
               const std::vector<Letter>& sub, std::size_t sj, std::size_t start,
               bool anchored, OracleMatch cur, std::vector<OracleMatch>& out) {
  if (pi == pat.size()) {
    if (!anchored || sj == sub.size()) {
      cur.len = sj - start;
      out.push_back(std::move(cur));
    }
    return;
  }
  const Letter& pl = pat[pi];
  if (pl.atom.kind != AtomKind::Var) {
    if (sj < sub.size() && sub[sj] == pl) oracleRec(pat, pi + 1, sub, sj + 1, start, anchored, cur, out);
    return;
  }
  for (std::size_t k = 0; sj + k <= sub.size(); ++k) {
    if (k > 0 && !hasPrefix(sub[sj + k - 1].wrapper, pl.wrapper)) break;
    std::vector<Letter> chunk;
    for (std::size_t i = 0; i < k; ++i) {
      Letter l = sub[sj + i];
      l.wrapper.erase(0, pl.wrapper.size());
      chunk.push_back(l);
    }
    auto it = cur.bind.find(pl.atom.name);
    if (it != cur.bind.end()) {
      if (it->second == chunk) oracleRec(pat, pi + 1, sub, sj + k, start, anchored, cur, out);
      continue;
    }
    OracleMatch next = cur;
    next.bind.emplace(pl.atom.name, std::move(chunk));
    oracleRec(pat, pi + 1, sub, sj + k, start, anchored, std::move(next), out);
  }
}

std::vector<Letter> lettersOf(const Word& w) {
  std::vector<Letter> ls;
  for (std::size_t i = 0; i < w.size(); ++i) ls.push_back(w.at(i));
  return ls;
}

std::vector<OracleMatch> oracleMatch(const Word& pattern, const Word& subject,
                                     std::size_t start, bool anchored) {
  std::vector<OracleMatch> out;
  if (start > subject.size()) return out;
  oracleRec(lettersOf(pattern), 0, lettersOf(subject), start, start, anchored, {}, out);
  return out;
}

// canonical printable form of a match set, for set comparison
std::set<std::string> oracleKeys(const std::vector<OracleMatch>& ms) {
  std::set<std::string> keys;
  for (const OracleMatch& m : ms) {
    std::string k = "len=" + std::to_string(m.len);
    for (const auto& [name, chunk] : m.bind) {
      k += ";" + name + "=" + Word::fromLetters(chunk).str();
    }
    keys.insert(k);
  }
  return keys;
}

std::set<std::string> spanKeys(const std::vector<SpanMatch>& ms) {
  std::set<std::string> keys;
  for (const SpanMatch& m : ms) {
    std::string k = "len=" + std::to_string(m.len);
    for (const auto& [name, word] : m.subst) k += ";" + name + "=" + word.str();
    keys.insert(k);
  }
  return keys;
}

std::set<std::string> substKeys(const std::vector<Substitution>& ms, std::size_t flen) {
  std::set<std::string> keys;
  for (const Substitution& m : ms) {
    std::string k = "len=" + std::to_string(flen);
    for (const auto& [name, word] : m) k += ";" + name + "=" + word.str();
    keys.insert(k);
  }
  return keys;
}

}  // namespace

TEST_CASE("matchAt: anchored examples") {
  // pattern eta*a against eta*T(mu)*eps binds the whole suffix
  auto ms = matchAt(parsePattern("eta*a"), parseTerm("eta*T(mu)*eps"), 0);
  REQUIRE(ms.size() == 1);
  CHECK(ms[0].at("a") == parseTerm("T(mu)*eps"));

  // wrapper stripping: T(a)*eta against T(Q(g))*T(eps)*eta
  ms = matchAt(parsePattern("T(a)*eta"), parseTerm("T(Q(g))*T(eps)*eta"), 0);
  REQUIRE(ms.size() == 1);
  CHECK(ms[0].at("a") == parseTerm("Q(g)*eps"));

  // head mismatch
  CHECK(matchAt(parsePattern("mu*T(a)"), parseTerm("delta*eta"), 0).empty());

  // empty binding is allowed (a = 1)
  ms = matchAt(parsePattern("mu*a*eta"), parseTerm("mu*eta"), 0);
  REQUIRE(ms.size() == 1);
  CHECK(ms[0].at("a").empty());

  // start offset
  ms = matchAt(parsePattern("T(a)"), parseTerm("mu*T(eps)"), 1);
  REQUIRE(ms.size() == 1);
  CHECK(ms[0].at("a") == parseTerm("eps"));
}

TEST_CASE("matchAt and matchSpans agree with the brute-force oracle") {
  const std::vector<std::string> subjects = {
      "1",
      "mu",
      "eta*T(mu)*eps",
      "mu*T(Q(g))*T(eta)",
      "Q(eps)*delta*mu*T(b)",
      "T(g)*Q(g)*T(g)*Q(g)",
      "mu*mu*T(mu)*T(T(mu))",
      "Q(T(a))*mu*delta*T(eta)",
      "eps*Q(mu)*Q(Q(h))*delta*eta",
      "T(x)*T(y)*T(z)*Q(x)*eta*mu",
  };
  const std::vector<std::string> patterns = {
      "a",
      "a*b",
      "mu*a",
      "a*eta",
      "T(a)",
      "T(a)*Q(b)",
      "a*mu*b",
      "Q(a)*b*eta",
      "a*b*c",
      "T(a)*a",  // repeated variable
      "eta*a",
      "delta*Q(a)",
  };
  for (const std::string& ss : subjects) {
    const Word subject = parseTerm(ss);
    for (const std::string& ps : patterns) {
      const Word pattern = parsePattern(ps);
      for (std::size_t start = 0; start <= subject.size(); ++start) {
        CAPTURE(ss);
        CAPTURE(ps);
        CAPTURE(start);
        auto anchored = matchAt(pattern, subject, start);
        CHECK(substKeys(anchored, subject.size() - start) ==
              oracleKeys(oracleMatch(pattern, subject, start, true)));
        auto spans = matchSpans(pattern, subject, start);
        CHECK(spanKeys(spans) == oracleKeys(oracleMatch(pattern, subject, start, false)));
      }
    }
  }
}

TEST_CASE("match enumeration is leftmost-shortest") {
  auto spans = matchSpans(parsePattern("a"), parseTerm("mu*eta*eps"), 0);
  REQUIRE(spans.size() == 4);
  for (std::size_t i = 0; i < spans.size(); ++i) CHECK(spans[i].len == i);
}

TEST_CASE("rule catalogues are well-formed") {
  CHECK(muDeltaRules().size() == 18);
  CHECK(gammaRules().size() == 11);
  CHECK(productRules().size() == 12);
  for (const auto* set : {&muDeltaRules(), &gammaRules(), &productRules()})
    for (const RuleSchema& r : *set) {
      CAPTURE(r.id);
      CHECK(validateRule(r));
    }
  CHECK(findRule("SMM7") != nullptr);
  CHECK(findRule("G7") != nullptr);
  CHECK(findRule("P12") != nullptr);
  CHECK(findRule("SMM99") == nullptr);

  // spot checks against the intended statements
  CHECK(findRule("SMM15")->lhs == parsePattern("Q(mu)*mu*delta*T(delta)"));
  CHECK(findRule("SMM15")->rhs == parsePattern("delta*mu"));
  CHECK(findRule("G8")->rhs == parsePattern("Q(eta)"));
  CHECK(findRule("G9")->rhs == parsePattern("T(eps)"));
}

TEST_CASE("validateRule rejects bad schemas") {
  RuleSchema nonLinear{"X1", parsePattern("a*a"), parsePattern("a"), Presentation::MuDelta};
  CHECK(!validateRule(nonLinear));
  RuleSchema freeRhs{"X2", parsePattern("a"), parsePattern("a*b"), Presentation::MuDelta};
  CHECK(!validateRule(freeRhs));
}

TEST_CASE("rewriteAt applies axioms at letter positions") {
  CHECK(rewriteAt(parseTerm("eta*g"), *findRule("SMM2"), 0, true) == parseTerm("T(g)*eta"));
  CHECK(rewriteAt(parseTerm("eps*eta"), *findRule("SMM18"), 0, true).empty());
  CHECK(rewriteAt(parseTerm("mu*mu"), *findRule("SMM9"), 0, false) == parseTerm("mu*T(mu)"));
  // interior position
  CHECK(rewriteAt(parseTerm("delta*mu*eta"), *findRule("SMM10"), 1, true) ==
        parseTerm("delta"));
  // backward insertion of a ground side at a position
  CHECK(rewriteAt(parseTerm("mu*delta"), *findRule("SMM14"), 1, false) ==
        parseTerm("mu*Q(eps)*delta*delta"));
  CHECK_THROWS_AS(rewriteAt(parseTerm("mu"), *findRule("SMM18"), 0, true), NoMatch);
}

TEST_CASE("lifted rules rewrite under endomorphism images") {
  const RuleSchema lifted = liftRule(*findRule("SMM10"), "T");
  CHECK(lifted.id == "SMM10^T");
  CHECK(rewriteAt(parseTerm("T(mu)*T(eta)"), lifted, 0, true).empty());
  CHECK(rewriteAt(parseTerm("mu"), lifted, 1, false) == parseTerm("mu*T(mu)*T(eta)"));

  const RuleSchema q2 = liftRule(*findRule("SMM2"), "Q");
  CHECK(rewriteAt(parseTerm("Q(eta)*Q(g)"), q2, 0, true) == parseTerm("Q(T(g))*Q(eta)"));

  CHECK(splitRuleId("SMM10^TQ") == std::make_pair(std::string("SMM10"), std::string("TQ")));
  CHECK(splitRuleId("G7") == std::make_pair(std::string("G7"), std::string("")));
  CHECK(liftRule(*findRule("SMM9"), "").id == "SMM9");
}

TEST_CASE("rewriteWith replays stored substitutions exactly") {
  const Word w = parseTerm("eta*T(mu)*eps");
  Substitution whole{{"a", parseTerm("T(mu)*eps")}};
  CHECK(rewriteWith(w, *findRule("SMM2"), "", 0, true, whole) ==
        parseTerm("T(T(mu)*eps)*eta"));
  // a shorter stored binding replays a different (non-suffix) redex
  Substitution partial{{"a", parseTerm("T(mu)")}};
  CHECK(rewriteWith(w, *findRule("SMM2"), "", 0, true, partial) ==
        parseTerm("T(T(mu))*eta*eps"));
  // mismatched substitution is rejected
  Substitution wrong{{"a", parseTerm("mu")}};
  CHECK_THROWS_AS(rewriteWith(w, *findRule("SMM2"), "", 0, true, wrong), NoMatch);
}

TEST_CASE("presentation conversions on symbols") {
  PresentationData md{Presentation::MuDelta,
                      {{"mu", parseTerm("mu")},
                       {"delta", parseTerm("delta")},
                       {"eta", parseTerm("eta")},
                       {"eps", parseTerm("eps")}}};
  PresentationData g = convertPresentation(md, Presentation::Gamma);
  CHECK(g.defs.at("gamma") == parseTerm("mu*delta"));
  PresentationData back = convertPresentation(g, Presentation::MuDelta);
  CHECK(back.defs.at("mu") == parseTerm("Q(eps)*mu*delta"));
  CHECK(back.defs.at("delta") == parseTerm("mu*delta*T(eta)"));
  PresentationData prod = convertPresentation(md, Presentation::Product);
  CHECK(prod.defs.at("product") == parsePattern("Q(a)*T(b)"));
}

TEST_CASE("derivations replay and reject") {
  // eta*g -> T(g)*eta -> (insert nothing)  two-step roundtrip
  Derivation d;
  d.start = parseTerm("pi(T(g))");  // eps*T(g)*eta
  d.steps.push_back({"SMM2", "", 1, false, {{"a", parseTerm("g")}}});
  d.steps.push_back({"SMM18", "", 0, true, {}});
  d.end = parseTerm("g");
  CHECK(checkDerivation(d).ok);

  // flipping a direction breaks the replay
  Derivation bad = d;
  bad.steps[0].forward = true;
  const CheckResult r = checkDerivation(bad);
  CHECK(!r.ok);
  CHECK(r.failStep == 0);

  // empty derivation: reflexivity
  Derivation refl{parseTerm("mu*eta"), {}, parseTerm("mu*eta")};
  CHECK(checkDerivation(refl).ok);
  Derivation mismatch{parseTerm("mu*eta"), {}, parseTerm("mu")};
  CHECK(!checkDerivation(mismatch).ok);
  CHECK(checkDerivation(mismatch).failStep == 0);

  // wrong end word is reported at index steps.size()
  Derivation wrongEnd = d;
  wrongEnd.end = parseTerm("mu");
  CHECK(checkDerivation(wrongEnd).failStep == 2);
}

TEST_CASE("derivation text round-trip") {
  Derivation d;
  d.start = parseTerm("eps*T(g)*eta");
  d.steps.push_back({"SMM2", "", 1, false, {{"a", parseTerm("g")}}});
  d.steps.push_back({"SMM18", "", 0, true, {}});
  d.end = parseTerm("g");
  const std::string text = derivationToText(d);
  CHECK(text ==
        "start eps*T(g)*eta\n"
        "SMM2 @1 bwd {a=g}\n"
        "SMM18 @0 fwd {}\n"
        "end g\n");
  Derivation parsed = derivationFromText(text);
  CHECK(parsed.start == d.start);
  CHECK(parsed.end == d.end);
  REQUIRE(parsed.steps.size() == 2);
  CHECK(parsed.steps[0].ruleId == "SMM2");
  CHECK(parsed.steps[0].lift == "");
  CHECK(parsed.steps[0].pos == 1);
  CHECK(!parsed.steps[0].forward);
  CHECK(parsed.steps[0].subst.at("a") == parseTerm("g"));
  CHECK(checkDerivation(parsed).ok);

  // lifted step and empty-word binding survive the round trip
  Derivation lifted;
  lifted.start = parseTerm("T(mu)*T(eta)");
  lifted.steps.push_back({"SMM10", "T", 0, true, {}});
  lifted.end = parseTerm("1");
  Derivation lparsed = derivationFromText(derivationToText(lifted));
  CHECK(lparsed.steps[0].lift == "T");
  CHECK(checkDerivation(lparsed).ok);

  Derivation emptyBind;
  emptyBind.start = parseTerm("eta");
  emptyBind.steps.push_back({"SMM2", "", 0, true, {{"a", Word{}}}});
  emptyBind.end = parseTerm("eta");
  const std::string ebText = derivationToText(emptyBind);
  CHECK(ebText.find("{a=1}") != std::string::npos);
  CHECK(checkDerivation(derivationFromText(ebText)).ok);

  CHECK_THROWS_AS(derivationFromText("SMM2 @0 fwd {}\nend g\n"), FormatError);
  CHECK_THROWS_AS(derivationFromText("start g\n"), FormatError);
  CHECK_THROWS_AS(derivationFromText("start g\nSMM2 zero fwd {}\nend g\n"), FormatError);
}
