#pragma once

// Axiom schemas of the three presentations, associative pattern matching
// with possibly-empty variable subwords, and position-indexed rewriting.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "smm/word.hpp"

namespace smm {

enum class Presentation { MuDelta, Gamma, Product };

struct RuleSchema {
  std::string id;
  Word lhs;
  Word rhs;
  Presentation presentation = Presentation::MuDelta;
};

const std::vector<RuleSchema>& muDeltaRules();  // SMM1..SMM18
const std::vector<RuleSchema>& gammaRules();    // G1..G11, with gamma spelled mu*delta
const std::vector<RuleSchema>& productRules();  // gamma catalogue + the interchange law
const std::vector<RuleSchema>& rulesFor(Presentation p);
// looks a base id (no lift suffix) up across all three catalogues
const RuleSchema* findRule(std::string_view id);

// lhs left-linear; every rhs variable occurs in lhs
bool validateRule(const RuleSchema& r);

using Substitution = std::map<std::string, Word>;

// anchored match: sigma(pattern) == subject[start .. subject.size())
// enumeration order is leftmost-shortest (variables take shorter subwords first)
std::vector<Substitution> matchAt(const Word& pattern, const Word& subject,
                                  std::size_t start);

// windowed match for rewriting: sigma(pattern) == subject[start .. start+len)
struct SpanMatch {
  Substitution subst;
  std::size_t len;
};
std::vector<SpanMatch> matchSpans(const Word& pattern, const Word& subject,
                                  std::size_t start);

struct UnboundVariable : std::runtime_error {
  explicit UnboundVariable(const std::string& name)
      : std::runtime_error("unbound variable " + name) {}
};

Word instantiate(const Word& pattern, const Substitution& subst);

// rule under an endomorphism image: both sides wrapped by `prefix`,
// id suffixed as e.g. "SMM7^T"
RuleSchema liftRule(const RuleSchema& r, std::string_view prefix);
// splits "SMM7^T" into base id and lift prefix
std::pair<std::string, std::string> splitRuleId(std::string_view id);

struct NoMatch : std::runtime_error {
  explicit NoMatch(const std::string& what) : std::runtime_error(what) {}
};

// replaces the longest span of the rule's source side at pos by the
// instantiated target side; forward reads the rule left-to-right
Word rewriteAt(const Word& w, const RuleSchema& rule, std::size_t pos, bool forward);

// exact replay with a stored substitution; throws NoMatch if the instantiated
// source side does not occur at pos
Word rewriteWith(const Word& w, const RuleSchema& rule, std::string_view lift,
                 std::size_t pos, bool forward, const Substitution& subst);

// defining words for converting between presentations
struct PresentationData {
  Presentation tag;
  std::map<std::string, Word> defs;
};
PresentationData convertPresentation(const PresentationData& src, Presentation target);

}  // namespace smm
