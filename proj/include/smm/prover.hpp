#pragma once

// Bounded bidirectional search for equational derivations over a rule set,
// plus the built-in catalogue of derived identities.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "smm/derivation.hpp"
#include "smm/rules.hpp"
#include "smm/word.hpp"

namespace smm {

struct ProveBudget {
  std::size_t maxDepth = 12;        // total derivation length, both ends combined
  std::size_t maxStates = 1000000;  // distinct words kept across both searches
  std::size_t lenSlack = 4;         // intermediate words may exceed the longer
                                    // endpoint by at most this many letters
};

struct ProveStats {
  std::size_t states = 0;        // distinct words reached, endpoints included
  std::size_t depth = 0;         // search levels built, both ends combined
  bool budgetExhausted = false;  // stopped by a budget limit, not by closure
};

// An empty derivation optional means "not found within budget", never "unequal".
struct ProveResult {
  std::optional<Derivation> derivation;
  ProveStats stats;
  bool proved() const { return derivation.has_value(); }
};

// Pattern variables in lhs/rhs are treated as opaque generators, so a found
// derivation is valid under every instantiation of them.
ProveResult proveEqual(const Word& lhs, const Word& rhs, const ProveBudget& budget = {},
                       Presentation presentation = Presentation::MuDelta);

struct IdentityEntry {
  std::string name;
  std::string lhs;  // source text, parsed as a pattern
  std::string rhs;
};

// derived identities bundled with the toolkit
const std::vector<IdentityEntry>& identityCatalogue();

struct IdentityResult {
  IdentityEntry entry;
  ProveResult result;
};

std::vector<IdentityResult> identitySuite(const ProveBudget& budget = {});

}  // namespace smm
