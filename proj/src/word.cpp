#include "smm/word.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace smm {

namespace {
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

std::uint64_t mixId(std::uint64_t h, LetterId id) {
  for (int i = 0; i < 4; ++i) {
    h ^= (id >> (8 * i)) & 0xffu;
    h *= kFnvPrime;
  }
  return h;
}

int atomRank(AtomKind k) { return static_cast<int>(k); }
}  // namespace

bool atomLess(const Atom& a, const Atom& b) {
  if (a.kind != b.kind) return atomRank(a.kind) < atomRank(b.kind);
  return a.name < b.name;
}

std::string atomStr(const Atom& a) {
  switch (a.kind) {
    case AtomKind::Mu: return "mu";
    case AtomKind::Eta: return "eta";
    case AtomKind::Delta: return "delta";
    case AtomKind::Eps: return "eps";
    case AtomKind::Gen:
    case AtomKind::Var: return a.name;
  }
  return "?";
}

bool letterLess(const Letter& a, const Letter& b) {
  if (a.wrapper != b.wrapper) return a.wrapper < b.wrapper;
  return atomLess(a.atom, b.atom);
}

std::string letterStr(const Letter& l) {
  std::string s = atomStr(l.atom);
  for (auto it = l.wrapper.rbegin(); it != l.wrapper.rend(); ++it) {
    std::string inner = std::move(s);
    s.clear();
    s += *it;
    s += '(';
    s += inner;
    s += ')';
  }
  return s;
}

LetterTable& LetterTable::instance() {
  static LetterTable table;
  return table;
}

namespace {
std::string letterKey(const Letter& l) {
  std::string k = l.wrapper;
  k += '\x01';
  k += static_cast<char>('0' + static_cast<int>(l.atom.kind));
  k += l.atom.name;
  return k;
}
}  // namespace

LetterId LetterTable::id(const Letter& l) {
  const std::string key = letterKey(l);
  {
    std::shared_lock lock(mutex_);
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
  }
  std::unique_lock lock(mutex_);
  auto it = index_.find(key);
  if (it != index_.end()) return it->second;
  const LetterId id = static_cast<LetterId>(letters_.size());
  letters_.push_back(std::make_unique<Letter>(l));
  index_.emplace(key, id);
  return id;
}

const Letter& LetterTable::letter(LetterId id) const {
  std::shared_lock lock(mutex_);
  return *letters_.at(id);
}

Word Word::fromLetters(const std::vector<Letter>& ls) {
  Word w;
  for (const Letter& l : ls) w.push(l);
  return w;
}

const Letter& Word::at(std::size_t i) const {
  return LetterTable::instance().letter(ids_.at(i));
}

void Word::push(LetterId id) {
  ids_.push_back(id);
  hash_ = mixId(hash_, id);
}

void Word::push(const Letter& l) { push(LetterTable::instance().id(l)); }

void Word::append(const Word& w) {
  for (LetterId id : w.ids_) push(id);
}

Word Word::sub(std::size_t begin, std::size_t end) const {
  Word w;
  for (std::size_t i = begin; i < end && i < ids_.size(); ++i) w.push(ids_[i]);
  return w;
}

Word Word::withWrapper(std::string_view prefix) const {
  if (prefix.empty()) return *this;
  Word w;
  auto& table = LetterTable::instance();
  for (LetterId id : ids_) {
    Letter l = table.letter(id);
    l.wrapper.insert(0, prefix);
    w.push(l);
  }
  return w;
}

std::string Word::str() const {
  if (ids_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (i) s += '*';
    s += letterStr(at(i));
  }
  return s;
}

bool wordLess(const Word& a, const Word& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.idAt(i) == b.idAt(i)) continue;
    const Letter& la = a.at(i);
    const Letter& lb = b.at(i);
    if (la == lb) continue;
    return letterLess(la, lb);
  }
  return a.size() < b.size();
}

Word concat(const Word& u, const Word& v) {
  Word w = u;
  w.append(v);
  return w;
}

Word applyEndo(char e, const Word& w) {
  return w.withWrapper(std::string_view(&e, 1));
}

Word applyWrapper(std::string_view prefix, const Word& w) {
  return w.withWrapper(prefix);
}

Word sigmaS(const Word& w) {
  Word out;
  out.push(mkLetter(AtomKind::Mu));
  out.append(w.withWrapper("TQ"));
  out.push(mkLetter(AtomKind::Eta, "", "T"));
  return out;
}

Word sigmaPi(const Word& w) {
  Word out;
  out.push(mkLetter(AtomKind::Eps));
  out.append(w);
  out.push(mkLetter(AtomKind::Eta));
  return out;
}

RawTerm RawTerm::unit() { return RawTerm{}; }

RawTerm RawTerm::mul(std::vector<RawTerm> kids) {
  RawTerm t;
  t.kind = Kind::Mul;
  t.kids = std::move(kids);
  return t;
}

RawTerm RawTerm::wrap(char endo, RawTerm kid) {
  RawTerm t;
  t.kind = Kind::Wrap;
  t.endo = endo;
  t.kids.push_back(std::move(kid));
  return t;
}

RawTerm RawTerm::leafOf(Atom a) {
  RawTerm t;
  t.kind = Kind::Leaf;
  t.leaf = std::move(a);
  return t;
}

namespace {
void normalizeInto(const RawTerm& t, std::string& prefix, Word& out) {
  switch (t.kind) {
    case RawTerm::Kind::Unit:
      return;  // T(1) = Q(1) = 1: nothing emitted under any prefix
    case RawTerm::Kind::Mul:
      for (const RawTerm& k : t.kids) normalizeInto(k, prefix, out);
      return;
    case RawTerm::Kind::Wrap:
      prefix.push_back(t.endo);
      normalizeInto(t.kids.front(), prefix, out);
      prefix.pop_back();
      return;
    case RawTerm::Kind::Leaf:
      out.push(Letter{prefix, t.leaf});
      return;
  }
}
}  // namespace

Word normalize(const RawTerm& t) {
  Word out;
  std::string prefix;
  normalizeInto(t, prefix, out);
  return out;
}

RawTerm toRaw(const Word& w) {
  std::vector<RawTerm> kids;
  kids.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Letter& l = w.at(i);
    RawTerm t = RawTerm::leafOf(l.atom);
    for (auto it = l.wrapper.rbegin(); it != l.wrapper.rend(); ++it)
      t = RawTerm::wrap(*it, std::move(t));
    kids.push_back(std::move(t));
  }
  if (kids.empty()) return RawTerm::unit();
  return RawTerm::mul(std::move(kids));
}

Letter mkLetter(AtomKind k, std::string name, std::string wrapper) {
  return Letter{std::move(wrapper), Atom{k, std::move(name)}};
}

Word mkWord(std::initializer_list<Letter> ls) {
  Word w;
  for (const Letter& l : ls) w.push(l);
  return w;
}

}  // namespace smm
