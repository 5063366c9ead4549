#include "smm/rules.hpp"

#include <algorithm>
#include <cassert>

#include "smm/parse.hpp"

namespace smm {

namespace {

RuleSchema mk(Presentation p, const char* id, const char* lhs, const char* rhs) {
  RuleSchema r{id, parsePattern(lhs), parsePattern(rhs), p};
  assert(validateRule(r));
  return r;
}

std::vector<RuleSchema> makeMuDelta() {
  const Presentation p = Presentation::MuDelta;
  return {
      mk(p, "SMM1", "mu*T(T(a))", "T(a)*mu"),
      mk(p, "SMM2", "eta*a", "T(a)*eta"),
      mk(p, "SMM3", "delta*Q(a)", "Q(Q(a))*delta"),
      mk(p, "SMM4", "a*eps", "eps*Q(a)"),
      mk(p, "SMM5", "mu*delta*T(Q(a))", "Q(T(a))*mu*delta"),
      mk(p, "SMM6", "T(a)*Q(b)", "Q(b)*T(a)"),
      mk(p, "SMM7", "mu*Q(a)", "Q(a)*mu"),
      mk(p, "SMM8", "delta*T(a)", "T(a)*delta"),
      mk(p, "SMM9", "mu*T(mu)", "mu*mu"),
      mk(p, "SMM10", "mu*eta", "1"),
      mk(p, "SMM11", "mu*T(eta)", "1"),
      mk(p, "SMM12", "Q(delta)*delta", "delta*delta"),
      mk(p, "SMM13", "eps*delta", "1"),
      mk(p, "SMM14", "Q(eps)*delta", "1"),
      mk(p, "SMM15", "Q(mu)*mu*delta*T(delta)", "delta*mu"),
      mk(p, "SMM16", "eps*mu", "eps*T(eps)"),
      mk(p, "SMM17", "delta*eta", "Q(eta)*eta"),
      mk(p, "SMM18", "eps*eta", "1"),
  };
}

std::vector<RuleSchema> makeGamma() {
  const Presentation p = Presentation::Gamma;
  return {
      mk(p, "G1", "T(a)*Q(b)", "Q(b)*T(a)"),
      mk(p, "G2", "mu*delta*T(T(a))", "T(a)*mu*delta"),
      mk(p, "G3", "mu*delta*T(Q(a))", "Q(T(a))*mu*delta"),
      mk(p, "G4", "mu*delta*Q(a)", "Q(Q(a))*mu*delta"),
      mk(p, "G5", "eta*a", "T(a)*eta"),
      mk(p, "G6", "a*eps", "eps*Q(a)"),
      mk(p, "G7", "Q(mu*delta)*mu*delta*T(mu*delta)", "mu*delta*mu*delta"),
      mk(p, "G8", "mu*delta*eta", "Q(eta)"),
      mk(p, "G9", "eps*mu*delta", "T(eps)"),
      mk(p, "G10", "Q(eps)*mu*delta*T(eta)", "1"),
      mk(p, "G11", "eps*eta", "1"),
  };
}

std::vector<RuleSchema> makeProduct() {
  std::vector<RuleSchema> rules;
  for (RuleSchema r : makeGamma()) {
    r.presentation = Presentation::Product;
    r.id = "P" + r.id.substr(1);
    rules.push_back(std::move(r));
  }
  // interchange: (ab) prod (cd) = (a prod c)(b prod d), spelled through Q/T
  rules.push_back(mk(Presentation::Product, "P12", "Q(a)*Q(b)*T(c)*T(d)",
                     "Q(a)*T(c)*Q(b)*T(d)"));
  return rules;
}

struct VarBinding {
  const std::string* name;
  std::size_t begin;   // subject index
  std::size_t count;   // letters consumed
  std::size_t strip;   // wrapper prefix length to strip
};

Word bindingWord(const Word& subject, const VarBinding& b) {
  Word w;
  auto& table = LetterTable::instance();
  for (std::size_t i = 0; i < b.count; ++i) {
    Letter l = table.letter(subject.idAt(b.begin + i));
    l.wrapper.erase(0, b.strip);
    w.push(l);
  }
  return w;
}

struct Matcher {
  const Word& pattern;
  const Word& subject;
  std::size_t start;
  bool anchored;
  std::vector<VarBinding> stack;
  std::vector<SpanMatch> out;

  const VarBinding* lookup(const std::string& name) const {
    for (const VarBinding& b : stack)
      if (*b.name == name) return &b;
    return nullptr;
  }

  void emit(std::size_t sj) {
    SpanMatch m;
    m.len = sj - start;
    for (const VarBinding& b : stack)
      m.subst.emplace(*b.name, bindingWord(subject, b));
    out.push_back(std::move(m));
  }

  // true if subject letter at sj equals `stripped under prefix` the given letter
  bool letterFits(std::size_t sj, std::string_view prefix, const Letter& want) const {
    const Letter& have = subject.at(sj);
    if (have.wrapper.size() != prefix.size() + want.wrapper.size()) return false;
    if (have.wrapper.compare(0, prefix.size(), prefix) != 0) return false;
    if (have.wrapper.compare(prefix.size(), std::string::npos, want.wrapper) != 0)
      return false;
    return have.atom == want.atom;
  }

  void run(std::size_t pi, std::size_t sj) {
    if (pi == pattern.size()) {
      if (!anchored || sj == subject.size()) emit(sj);
      return;
    }
    const Letter& pl = pattern.at(pi);
    if (pl.atom.kind != AtomKind::Var) {
      if (sj < subject.size() && subject.idAt(sj) == pattern.idAt(pi))
        run(pi + 1, sj + 1);
      return;
    }
    const std::string& prefix = pl.wrapper;
    if (const VarBinding* bound = lookup(pl.atom.name)) {
      // repeated variable: the same stripped subword must recur under this prefix
      auto& table = LetterTable::instance();
      if (sj + bound->count > subject.size()) return;
      for (std::size_t i = 0; i < bound->count; ++i) {
        Letter l = table.letter(subject.idAt(bound->begin + i));
        l.wrapper.erase(0, bound->strip);
        if (!letterFits(sj + i, prefix, l)) return;
      }
      run(pi + 1, sj + bound->count);
      return;
    }
    // fresh variable: consume k = 0, 1, ... letters, shortest first, each
    // carrying the wrapper prefix
    for (std::size_t k = 0;; ++k) {
      stack.push_back(VarBinding{&pl.atom.name, sj, k, prefix.size()});
      run(pi + 1, sj + k);
      stack.pop_back();
      if (sj + k >= subject.size()) break;
      const Letter& next = subject.at(sj + k);
      if (next.wrapper.size() < prefix.size() ||
          next.wrapper.compare(0, prefix.size(), prefix) != 0)
        break;
    }
  }
};

}  // namespace

const std::vector<RuleSchema>& muDeltaRules() {
  static const std::vector<RuleSchema> rules = makeMuDelta();
  return rules;
}

const std::vector<RuleSchema>& gammaRules() {
  static const std::vector<RuleSchema> rules = makeGamma();
  return rules;
}

const std::vector<RuleSchema>& productRules() {
  static const std::vector<RuleSchema> rules = makeProduct();
  return rules;
}

const std::vector<RuleSchema>& rulesFor(Presentation p) {
  switch (p) {
    case Presentation::Gamma: return gammaRules();
    case Presentation::Product: return productRules();
    default: return muDeltaRules();
  }
}

const RuleSchema* findRule(std::string_view id) {
  for (const auto* set : {&muDeltaRules(), &gammaRules(), &productRules()})
    for (const RuleSchema& r : *set)
      if (r.id == id) return &r;
  return nullptr;
}

bool validateRule(const RuleSchema& r) {
  std::vector<std::string> seen;
  for (std::size_t i = 0; i < r.lhs.size(); ++i) {
    const Letter& l = r.lhs.at(i);
    if (l.atom.kind != AtomKind::Var) continue;
    if (std::find(seen.begin(), seen.end(), l.atom.name) != seen.end())
      return false;  // not left-linear
    seen.push_back(l.atom.name);
  }
  for (std::size_t i = 0; i < r.rhs.size(); ++i) {
    const Letter& l = r.rhs.at(i);
    if (l.atom.kind != AtomKind::Var) continue;
    if (std::find(seen.begin(), seen.end(), l.atom.name) == seen.end())
      return false;  // free variable on the right
  }
  return true;
}

std::vector<Substitution> matchAt(const Word& pattern, const Word& subject,
                                  std::size_t start) {
  std::vector<Substitution> result;
  if (start > subject.size()) return result;
  Matcher m{pattern, subject, start, true, {}, {}};
  m.run(0, start);
  result.reserve(m.out.size());
  for (SpanMatch& sm : m.out) result.push_back(std::move(sm.subst));
  return result;
}

std::vector<SpanMatch> matchSpans(const Word& pattern, const Word& subject,
                                  std::size_t start) {
  if (start > subject.size()) return {};
  Matcher m{pattern, subject, start, false, {}, {}};
  m.run(0, start);
  return m.out;
}

Word instantiate(const Word& pattern, const Substitution& subst) {
  Word out;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    const Letter& l = pattern.at(i);
    if (l.atom.kind != AtomKind::Var) {
      out.push(pattern.idAt(i));
      continue;
    }
    auto it = subst.find(l.atom.name);
    if (it == subst.end()) throw UnboundVariable(l.atom.name);
    out.append(it->second.withWrapper(l.wrapper));
  }
  return out;
}

RuleSchema liftRule(const RuleSchema& r, std::string_view prefix) {
  if (prefix.empty()) return r;
  RuleSchema lifted;
  lifted.id = r.id + "^" + std::string(prefix);
  lifted.lhs = r.lhs.withWrapper(prefix);
  lifted.rhs = r.rhs.withWrapper(prefix);
  lifted.presentation = r.presentation;
  return lifted;
}

std::pair<std::string, std::string> splitRuleId(std::string_view id) {
  const std::size_t caret = id.find('^');
  if (caret == std::string_view::npos) return {std::string(id), ""};
  return {std::string(id.substr(0, caret)), std::string(id.substr(caret + 1))};
}

Word rewriteAt(const Word& w, const RuleSchema& rule, std::size_t pos, bool forward) {
  const Word& src = forward ? rule.lhs : rule.rhs;
  const Word& tgt = forward ? rule.rhs : rule.lhs;
  const std::vector<SpanMatch> spans = matchSpans(src, w, pos);
  if (spans.empty())
    throw NoMatch(rule.id + (forward ? "" : " (backward)") +
                  " does not match at position " + std::to_string(pos));
  // maximal munch: variables absorb as much as they can reach
  const SpanMatch* best = &spans.front();
  for (const SpanMatch& s : spans)
    if (s.len > best->len) best = &s;
  const SpanMatch& m = *best;
  Word out = w.sub(0, pos);
  out.append(instantiate(tgt, m.subst));
  out.append(w.sub(pos + m.len, w.size()));
  return out;
}

Word rewriteWith(const Word& w, const RuleSchema& rule, std::string_view lift,
                 std::size_t pos, bool forward, const Substitution& subst) {
  const Word& src = forward ? rule.lhs : rule.rhs;
  const Word& tgt = forward ? rule.rhs : rule.lhs;
  const Word srcWord = instantiate(src, subst).withWrapper(lift);
  if (pos + srcWord.size() > w.size() || w.sub(pos, pos + srcWord.size()) != srcWord)
    throw NoMatch(rule.id + ": stored substitution does not reproduce the redex at position " +
                  std::to_string(pos));
  Word out = w.sub(0, pos);
  out.append(instantiate(tgt, subst).withWrapper(lift));
  out.append(w.sub(pos + srcWord.size(), w.size()));
  return out;
}

PresentationData convertPresentation(const PresentationData& src, Presentation target) {
  auto need = [&](const char* key) -> const Word& {
    auto it = src.defs.find(key);
    if (it == src.defs.end())
      throw std::invalid_argument(std::string("missing defining word: ") + key);
    return it->second;
  };
  PresentationData out;
  out.tag = target;
  if (target == src.tag) {
    out.defs = src.defs;
    return out;
  }
  if (src.tag == Presentation::MuDelta && target == Presentation::Gamma) {
    out.defs["gamma"] = concat(need("mu"), need("delta"));
    out.defs["eta"] = need("eta");
    out.defs["eps"] = need("eps");
    return out;
  }
  if (src.tag == Presentation::Gamma && target == Presentation::MuDelta) {
    out.defs["mu"] = concat(applyEndo('Q', need("eps")), need("gamma"));
    out.defs["delta"] = concat(need("gamma"), applyEndo('T', need("eta")));
    out.defs["eta"] = need("eta");
    out.defs["eps"] = need("eps");
    return out;
  }
  if (target == Presentation::Product) {
    out.defs = src.defs;
    out.defs["product"] = parsePattern("Q(a)*T(b)");
    return out;
  }
  throw std::invalid_argument("unsupported presentation conversion");
}

}  // namespace smm
