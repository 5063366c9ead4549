#include "smm/prover.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <utility>

#include "smm/parse.hpp"

namespace smm {

namespace {

struct Node {
  Word word;
  std::uint32_t parent = 0;
  std::uint16_t ruleIdx = 0;
  std::uint16_t pos = 0;
  std::uint16_t depth = 0;
  std::uint8_t insertions = 0;  // empty-source steps along the path
  bool forward = true;
  std::string lift;
};

struct SideState {
  std::vector<Node> nodes;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> visited;
  std::size_t levelBegin = 0;
  std::size_t levelEnd = 0;  // current frontier is [levelBegin, levelEnd)
  std::size_t depth = 0;     // levels built so far

  const Node* find(const Word& w, std::uint32_t* idxOut = nullptr) const {
    auto it = visited.find(w.hash());
    if (it == visited.end()) return nullptr;
    for (std::uint32_t i : it->second)
      if (nodes[i].word == w) {
        if (idxOut) *idxOut = i;
        return &nodes[i];
      }
    return nullptr;
  }

  // least insertion count over stored nodes carrying this word
  bool cheapestInsertions(const Word& w, std::uint8_t* out) const {
    auto it = visited.find(w.hash());
    if (it == visited.end()) return false;
    bool found = false;
    for (std::uint32_t i : it->second)
      if (nodes[i].word == w) {
        if (!found || nodes[i].insertions < *out) *out = nodes[i].insertions;
        found = true;
      }
    return found;
  }
};

// all wrapper prefixes occurring in w, always including the empty prefix
std::vector<std::string> liftCandidates(const Word& w) {
  std::vector<std::string> out{""};
  for (std::size_t i = 0; i < w.size(); ++i) {
    const std::string& wr = w.at(i).wrapper;
    for (std::size_t len = 1; len <= wr.size(); ++len)
      out.push_back(wr.substr(0, len));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct Meet {
  int side = 0;  // side whose freshly added node completed the path
  std::uint32_t idx = 0;
  std::uint32_t other = 0;
};

struct Search {
  // speculative insertions branch hard; one per path end is enough in practice
  static constexpr std::uint8_t kMaxInsertions = 1;

  const std::vector<RuleSchema>& rules;
  const ProveBudget budget;
  std::size_t maxLen = 0;
  SideState sides[2];
  std::map<std::pair<std::size_t, std::string>, RuleSchema> liftCache;
  ProveStats stats;

  Search(const std::vector<RuleSchema>& r, const ProveBudget& b) : rules(r), budget(b) {}

  const RuleSchema& lifted(std::size_t ruleIdx, const std::string& lift) {
    if (lift.empty()) return rules[ruleIdx];
    auto key = std::make_pair(ruleIdx, lift);
    auto it = liftCache.find(key);
    if (it == liftCache.end())
      it = liftCache.emplace(key, liftRule(rules[ruleIdx], lift)).first;
    return it->second;
  }

  // a lifted insertion must touch a letter already under that wrapper prefix
  static bool insertionTouches(const Word& w, std::size_t pos, const std::string& lift) {
    if (lift.empty()) return true;
    auto fits = [&](const Letter& l) {
      return l.wrapper.size() >= lift.size() &&
             l.wrapper.compare(0, lift.size(), lift) == 0;
    };
    if (pos > 0 && fits(w.at(pos - 1))) return true;
    if (pos < w.size() && fits(w.at(pos))) return true;
    return false;
  }

  // returns true when the search should stop (meet found or budget hit)
  bool addChild(int s, std::uint32_t parent, std::size_t ri, std::size_t pos,
                bool fwd, const std::string& lift, bool isInsertion, Word out,
                std::optional<Meet>& meet) {
    if (out.size() > maxLen) return false;
    const std::uint8_t ins =
        static_cast<std::uint8_t>(sides[s].nodes[parent].insertions + (isInsertion ? 1 : 0));
    std::uint8_t seen = 0;
    // re-open a word only when this path spent strictly fewer insertions
    if (sides[s].cheapestInsertions(out, &seen) && seen <= ins) return false;
    const std::uint32_t idx = static_cast<std::uint32_t>(sides[s].nodes.size());
    Node n;
    n.word = std::move(out);
    n.parent = parent;
    n.ruleIdx = static_cast<std::uint16_t>(ri);
    n.pos = static_cast<std::uint16_t>(pos);
    n.depth = static_cast<std::uint16_t>(sides[s].nodes[parent].depth + 1);
    n.insertions = ins;
    n.forward = fwd;
    n.lift = lift;
    sides[s].visited[n.word.hash()].push_back(idx);
    sides[s].nodes.push_back(std::move(n));
    ++stats.states;
    std::uint32_t otherIdx = 0;
    if (sides[1 - s].find(sides[s].nodes[idx].word, &otherIdx)) {
      meet = Meet{s, idx, otherIdx};
      return true;
    }
    if (stats.states >= budget.maxStates) {
      stats.budgetExhausted = true;
      return true;
    }
    return false;
  }

  bool expandNode(int s, std::uint32_t ni, std::optional<Meet>& meet) {
    const Word w = sides[s].nodes[ni].word;  // copy: the vector may reallocate
    const bool insertionsLeft = sides[s].nodes[ni].insertions < kMaxInsertions;
    const std::vector<std::string> lifts = liftCandidates(w);
    for (std::size_t ri = 0; ri < rules.size(); ++ri) {
      for (int dir = 0; dir < 2; ++dir) {
        const bool fwd = dir == 0;
        for (const std::string& lift : lifts) {
          const RuleSchema& lr = lifted(ri, lift);
          const Word& src = fwd ? lr.lhs : lr.rhs;
          const Word& tgt = fwd ? lr.rhs : lr.lhs;
          if (src.empty()) {
            if (!insertionsLeft || w.size() + tgt.size() > maxLen) continue;
            for (std::size_t pos = 0; pos <= w.size(); ++pos) {
              if (!insertionTouches(w, pos, lift)) continue;
              Word out = w.sub(0, pos);
              out.append(tgt);
              out.append(w.sub(pos, w.size()));
              if (addChild(s, ni, ri, pos, fwd, lift, true, std::move(out), meet))
                return true;
            }
            continue;
          }
          const bool headConst = src.at(0).atom.kind != AtomKind::Var;
          for (std::size_t pos = 0; pos <= w.size(); ++pos) {
            if (headConst && (pos >= w.size() || w.idAt(pos) != src.idAt(0))) continue;
            for (const SpanMatch& m : matchSpans(src, w, pos)) {
              Word out = w.sub(0, pos);
              out.append(instantiate(tgt, m.subst));
              out.append(w.sub(pos + m.len, w.size()));
              if (out == w) continue;  // no-op span
              if (addChild(s, ni, ri, pos, fwd, lift, false, std::move(out), meet))
                return true;
            }
          }
        }
      }
    }
    return false;
  }

  // root .. idx, root excluded
  std::vector<std::uint32_t> chainOf(int side, std::uint32_t idx) const {
    std::vector<std::uint32_t> chain;
    for (std::uint32_t i = idx; sides[side].nodes[i].depth > 0;
         i = sides[side].nodes[i].parent)
      chain.push_back(i);
    std::reverse(chain.begin(), chain.end());
    return chain;
  }

  DerivStep stepFor(int side, std::uint32_t idx, bool flip) {
    const Node& n = sides[side].nodes[idx];
    const Word& pw = sides[side].nodes[n.parent].word;
    const Word& cw = n.word;
    const RuleSchema& lr = lifted(n.ruleIdx, n.lift);
    const Word& src = n.forward ? lr.lhs : lr.rhs;
    const Word& tgt = n.forward ? lr.rhs : lr.lhs;
    DerivStep st;
    st.ruleId = rules[n.ruleIdx].id;
    st.lift = n.lift;
    st.pos = n.pos;
    st.forward = flip ? !n.forward : n.forward;
    for (const SpanMatch& m : matchSpans(src, pw, n.pos)) {
      Word out = pw.sub(0, n.pos);
      out.append(instantiate(tgt, m.subst));
      out.append(pw.sub(n.pos + m.len, pw.size()));
      if (out == cw) {
        st.subst = m.subst;
        return st;
      }
    }
    throw std::logic_error("derivation reconstruction lost a rewrite step");
  }

  Derivation reconstruct(const Meet& meet) {
    const std::uint32_t leftIdx = meet.side == 0 ? meet.idx : meet.other;
    const std::uint32_t rightIdx = meet.side == 1 ? meet.idx : meet.other;
    Derivation d;
    d.start = sides[0].nodes[0].word;
    d.end = sides[1].nodes[0].word;
    for (std::uint32_t i : chainOf(0, leftIdx)) d.steps.push_back(stepFor(0, i, false));
    const std::vector<std::uint32_t> rc = chainOf(1, rightIdx);
    for (auto it = rc.rbegin(); it != rc.rend(); ++it)
      d.steps.push_back(stepFor(1, *it, true));
    return d;
  }

  ProveResult run(const Word& lhs, const Word& rhs) {
    maxLen = std::max(lhs.size(), rhs.size()) + budget.lenSlack;
    for (int s = 0; s < 2; ++s) {
      Node root;
      root.word = s == 0 ? lhs : rhs;
      sides[s].nodes.push_back(root);
      sides[s].visited[sides[s].nodes[0].word.hash()].push_back(0);
      sides[s].levelBegin = 0;
      sides[s].levelEnd = 1;
      ++stats.states;
    }
    ProveResult result;
    if (lhs == rhs) {
      result.derivation = Derivation{lhs, {}, rhs};
      result.stats = stats;
      return result;
    }
    std::optional<Meet> meet;
    while (!meet && !stats.budgetExhausted) {
      const bool can0 = sides[0].levelEnd > sides[0].levelBegin;
      const bool can1 = sides[1].levelEnd > sides[1].levelBegin;
      if (!can0 && !can1) break;  // both classes closed within the length bound
      if (sides[0].depth + sides[1].depth >= budget.maxDepth) {
        stats.budgetExhausted = true;
        break;
      }
      int s;
      if (!can0)
        s = 1;
      else if (!can1)
        s = 0;
      else {
        const std::size_t f0 = sides[0].levelEnd - sides[0].levelBegin;
        const std::size_t f1 = sides[1].levelEnd - sides[1].levelBegin;
        s = f1 < f0 ? 1 : 0;
      }
      const std::size_t begin = sides[s].levelBegin;
      const std::size_t end = sides[s].levelEnd;
      for (std::size_t ni = begin; ni < end; ++ni)
        if (expandNode(s, static_cast<std::uint32_t>(ni), meet)) break;
      sides[s].levelBegin = end;
      sides[s].levelEnd = sides[s].nodes.size();
      ++sides[s].depth;
    }
    stats.depth = sides[0].depth + sides[1].depth;
    result.stats = stats;
    if (meet) {
      result.derivation = reconstruct(*meet);
      result.stats.budgetExhausted = false;
    }
    return result;
  }
};

}  // namespace

ProveResult proveEqual(const Word& lhs, const Word& rhs, const ProveBudget& budget,
                       Presentation presentation) {
  Search search(rulesFor(presentation), budget);
  return search.run(lhs, rhs);
}

const std::vector<IdentityEntry>& identityCatalogue() {
  static const std::vector<IdentityEntry> entries = {
      {"mu-S-absorb", "mu*S(a)", "mu*T(Q(a))"},
      {"S-mu-slide", "S(a)*mu", "mu*T(S(a))"},
      {"S-delta-slide", "S(a)*delta", "Q(T(a))*delta"},
      {"delta-S-slide", "delta*S(a)", "Q(S(a))*delta"},
      {"S-eta-collapse", "S(a)*eta", "Q(a)*eta"},
      {"eps-S-collapse", "eps*S(a)", "eps*T(a)"},
      {"pi-after-T", "pi(T(a))", "a"},
      {"pi-after-Q", "pi(Q(a))", "a"},
      {"pi-after-S", "pi(S(a))", "a"},
      {"S-two-forms", "S(a)", "Q(eps*T(a))*delta"},
      {"gamma-roundtrip-mu", "Q(eps)*mu*delta", "mu"},
      {"gamma-roundtrip-delta", "mu*delta*T(eta)", "delta"},
      {"smash-exchange", "Q(a)*delta*mu*T(b)",
       "mu*T(delta*mu*T(b)*eta)*Q(eps*Q(a)*delta*mu)*delta"},
      {"coaction-witness", "Q(a*eta)*eta", "Q(a)*delta*eta"},
  };
  return entries;
}

std::vector<IdentityResult> identitySuite(const ProveBudget& budget) {
  std::vector<IdentityResult> out;
  for (const IdentityEntry& e : identityCatalogue()) {
    IdentityResult r{e, proveEqual(parsePattern(e.lhs), parsePattern(e.rhs), budget)};
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace smm
