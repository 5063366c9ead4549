#pragma once

// Terms of the free skew-monoidal-monoid signature: words over letters,
// where a letter is an atom (mu/eta/delta/eps, a generator, or a pattern
// variable) under a stack of endomorphism symbols T/Q applied outermost-first.
// The empty word is the monoid unit 1.

#include <cstdint>
#include <memory>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace smm {

enum class AtomKind { Mu, Eta, Delta, Eps, Gen, Var };

struct Atom {
  AtomKind kind = AtomKind::Mu;
  std::string name;  // only Gen/Var carry a name

  friend bool operator==(const Atom&, const Atom&) = default;
};

bool atomLess(const Atom& a, const Atom& b);
std::string atomStr(const Atom& a);

// wrapper "TQ" over atom mu denotes T(Q(mu))
struct Letter {
  std::string wrapper;  // over {'T','Q'}, outermost first
  Atom atom;

  friend bool operator==(const Letter&, const Letter&) = default;
};

bool letterLess(const Letter& a, const Letter& b);
std::string letterStr(const Letter& l);

using LetterId = std::uint32_t;

// Process-wide intern table; safe for concurrent insertion and lookup.
class LetterTable {
 public:
  static LetterTable& instance();
  LetterId id(const Letter& l);
  const Letter& letter(LetterId id) const;

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, LetterId> index_;  // keyed by a flat encoding
  std::vector<std::unique_ptr<Letter>> letters_;
};

class Word {
 public:
  Word() = default;

  static Word fromLetters(const std::vector<Letter>& ls);

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  LetterId idAt(std::size_t i) const { return ids_[i]; }
  const Letter& at(std::size_t i) const;
  const std::vector<LetterId>& ids() const { return ids_; }
  std::uint64_t hash() const { return hash_; }

  void push(LetterId id);
  void push(const Letter& l);
  void append(const Word& w);
  Word sub(std::size_t begin, std::size_t end) const;  // [begin, end)

  // new word with `prefix` prepended to every letter's wrapper
  Word withWrapper(std::string_view prefix) const;

  bool operator==(const Word& o) const { return ids_ == o.ids_; }
  bool operator!=(const Word& o) const { return ids_ != o.ids_; }

  std::string str() const;

 private:
  std::vector<LetterId> ids_;
  std::uint64_t hash_ = 14695981039346656037ull;  // FNV-1a over letter ids
};

// stable structural order (independent of interning order)
bool wordLess(const Word& a, const Word& b);

Word concat(const Word& u, const Word& v);
Word applyEndo(char e, const Word& w);                  // e in {'T','Q'}
Word applyWrapper(std::string_view prefix, const Word& w);
Word sigmaS(const Word& w);   // mu * T(Q(w) * eta)
Word sigmaPi(const Word& w);  // eps * w * eta

// unnormalized term trees, for the explicit normalization entry point
struct RawTerm {
  enum class Kind { Unit, Mul, Wrap, Leaf };
  Kind kind = Kind::Unit;
  char endo = 'T';             // Wrap
  Atom leaf;                   // Leaf
  std::vector<RawTerm> kids;   // Mul (any arity), Wrap (exactly one)

  static RawTerm unit();
  static RawTerm mul(std::vector<RawTerm> kids);
  static RawTerm wrap(char endo, RawTerm kid);
  static RawTerm leafOf(Atom a);
};

Word normalize(const RawTerm& t);
RawTerm toRaw(const Word& w);  // each letter as nested Wrap over a Leaf

// convenience constructors
Letter mkLetter(AtomKind k, std::string name = "", std::string wrapper = "");
Word mkWord(std::initializer_list<Letter> ls);

}  // namespace smm
