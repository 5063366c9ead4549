#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "smm/parse.hpp"
#include "smm/word.hpp"

using namespace smm;

namespace {

// deterministic generator for random-word property tests
struct Lcg {
  std::uint64_t s = 0x2545f4914f6cdd1dull;
  std::uint32_t next() {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<std::uint32_t>(s >> 33);
  }
  std::uint32_t next(std::uint32_t bound) { return next() % bound; }
};

Word randomWord(Lcg& rng, int maxLen) {
  Word w;
  const int len = rng.next(maxLen + 1);
  for (int i = 0; i < len; ++i) {
    std::string wrapper;
    const int depth = rng.next(3);
    for (int d = 0; d < depth; ++d) wrapper += (rng.next(2) ? 'T' : 'Q');
    switch (rng.next(5)) {
      case 0: w.push(mkLetter(AtomKind::Mu, "", wrapper)); break;
      case 1: w.push(mkLetter(AtomKind::Eta, "", wrapper)); break;
      case 2: w.push(mkLetter(AtomKind::Delta, "", wrapper)); break;
      case 3: w.push(mkLetter(AtomKind::Eps, "", wrapper)); break;
      default:
        w.push(mkLetter(AtomKind::Gen, std::string(1, 'a' + char(rng.next(3))), wrapper));
    }
  }
  return w;
}

}  // namespace

TEST_CASE("normalize distributes endomorphisms over products") {
  // T(a*b) -> T(a)*T(b)
  RawTerm t = RawTerm::wrap(
      'T', RawTerm::mul({RawTerm::leafOf(Atom{AtomKind::Gen, "a"}),
                         RawTerm::leafOf(Atom{AtomKind::Gen, "b"})}));
  Word w = normalize(t);
  REQUIRE(w.size() == 2);
  CHECK(w.str() == "T(a)*T(b)");

  // T(1) -> 1
  CHECK(normalize(RawTerm::wrap('T', RawTerm::unit())).empty());

  // T(Q(mu)*eta) -> T(Q(mu))*T(eta)
  RawTerm u = RawTerm::wrap(
      'T', RawTerm::mul({RawTerm::wrap('Q', RawTerm::leafOf(Atom{AtomKind::Mu, ""})),
                         RawTerm::leafOf(Atom{AtomKind::Eta, ""})}));
  Word wu = normalize(u);
  REQUIRE(wu.size() == 2);
  CHECK(wu.at(0).wrapper == "TQ");
  CHECK(wu.at(0).atom.kind == AtomKind::Mu);
  CHECK(wu.at(1).wrapper == "T");
  CHECK(wu.at(1).atom.kind == AtomKind::Eta);
  CHECK(wu.str() == "T(Q(mu))*T(eta)");
}

TEST_CASE("normalize is idempotent") {
  Lcg rng;
  for (int i = 0; i < 200; ++i) {
    Word w = randomWord(rng, 6);
    CHECK(normalize(toRaw(w)) == w);
  }
}

TEST_CASE("concat is associative with the empty word as unit") {
  Lcg rng;
  const Word one;
  for (int i = 0; i < 100; ++i) {
    Word a = randomWord(rng, 4), b = randomWord(rng, 4), c = randomWord(rng, 4);
    CHECK(concat(concat(a, b), c) == concat(a, concat(b, c)));
    CHECK(concat(one, a) == a);
    CHECK(concat(a, one) == a);
  }
  CHECK(concat(parseTerm("eps*eta"), one) == parseTerm("eps*eta"));
  CHECK(concat(parseTerm("mu"), parseTerm("eta")).str() == "mu*eta");
}

TEST_CASE("applyEndo is a homomorphism for concatenation") {
  Lcg rng;
  for (int i = 0; i < 100; ++i) {
    Word a = randomWord(rng, 4), b = randomWord(rng, 4);
    for (char e : {'T', 'Q'}) {
      CHECK(applyEndo(e, concat(a, b)) == concat(applyEndo(e, a), applyEndo(e, b)));
    }
  }
  CHECK(applyEndo('Q', Word{}).empty());
  CHECK(applyEndo('T', parseTerm("mu*eta")).str() == "T(mu)*T(eta)");
  CHECK(applyEndo('T', parseTerm("Q(eps)")).str() == "T(Q(eps))");
}

TEST_CASE("sigmaS and sigmaPi expand as macros") {
  CHECK(sigmaS(Word{}).str() == "mu*T(eta)");
  CHECK(sigmaPi(Word{}).str() == "eps*eta");
  CHECK(sigmaS(parseTerm("g")).str() == "mu*T(Q(g))*T(eta)");
  CHECK(sigmaS(parseTerm("a")) == parseTerm("S(a)"));
  CHECK(sigmaPi(parseTerm("a")) == parseTerm("pi(a)"));
  // nested macro under a wrapper: T(S(w)) distributes
  CHECK(parseTerm("T(S(a))") == applyEndo('T', sigmaS(parseTerm("a"))));
  CHECK(parseTerm("pi(S(a))") == sigmaPi(sigmaS(parseTerm("a"))));
}

TEST_CASE("parser handles grammar, whitespace, unit and nesting") {
  CHECK(parseTerm("1").empty());
  CHECK(parseTerm(" mu * T( Q(a) ) *eta").str() == "mu*T(Q(a))*eta");
  CHECK(parseTerm("T(a*b)") == parseTerm("T(a)*T(b)"));
  CHECK(parseTerm("T(1)").empty());
  CHECK(parseTerm("1*mu*1") == parseTerm("mu"));
  CHECK(parseTerm("(mu*eta)*delta") == parseTerm("mu*(eta*delta)"));
  CHECK(parseTerm("Q(T(x))").at(0).wrapper == "QT");

  // identifiers are generators in parseTerm, variables in parsePattern
  CHECK(parseTerm("a").at(0).atom.kind == AtomKind::Gen);
  CHECK(parsePattern("a").at(0).atom.kind == AtomKind::Var);
  CHECK(parsePattern("T(a)*eta").at(0).atom.kind == AtomKind::Var);
  CHECK(parsePattern("T(a)*eta").at(1).atom.kind == AtomKind::Eta);
}

TEST_CASE("parser reports errors with positions") {
  auto fails = [](std::string_view s) {
    try {
      parseTerm(s);
      return false;
    } catch (const ParseError&) {
      return true;
    }
  };
  CHECK(fails(""));
  CHECK(fails("mu**eta"));
  CHECK(fails("T(mu"));
  CHECK(fails(")"));
  CHECK(fails("mu eta"));
  CHECK(fails("foo(a)"));
  CHECK(fails("T"));
  CHECK(fails("*mu"));

  try {
    parseTerm("mu*T(eta");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.pos == 8);
  }
}

TEST_CASE("printing round-trips through the parser") {
  Lcg rng;
  for (int i = 0; i < 200; ++i) {
    Word w = randomWord(rng, 6);
    CHECK(parseTerm(w.str()) == w);
  }
  CHECK(Word{}.str() == "1");
}

TEST_CASE("hash is consistent with equality and stable under rebuild") {
  Lcg rng;
  for (int i = 0; i < 100; ++i) {
    Word w = randomWord(rng, 6);
    Word again = parseTerm(w.str());
    CHECK(again.hash() == w.hash());
    Word prefix = w.sub(0, w.size() / 2), suffix = w.sub(w.size() / 2, w.size());
    CHECK(concat(prefix, suffix) == w);
    CHECK(concat(prefix, suffix).hash() == w.hash());
  }
}

TEST_CASE("wordLess is a strict total order on distinct words") {
  Word a = parseTerm("mu"), b = parseTerm("mu*eta"), c = parseTerm("T(mu)");
  CHECK(wordLess(a, b));
  CHECK(!wordLess(b, a));
  CHECK(wordLess(a, c));  // empty wrapper sorts before "T"
  CHECK(!wordLess(a, a));
}
