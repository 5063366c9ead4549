#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <set>
#include <vector>

#include "smm/finmon.hpp"
#include "smm/parse.hpp"
#include "smm/prover.hpp"

using namespace smm;

// ---------------------------------------------------------------------------
// Independent census oracle, written before the enumeration below was trusted:
// iterate all 4*4 map pairs and 2^4 element quadruples over a 2-element table
// and check the endomorphism laws and all 18 axioms by direct arithmetic. No
// shared machinery with checkAxioms/evalWord/enumerateSmm.
// ---------------------------------------------------------------------------
namespace {

struct RawTuple {
  std::array<int, 2> T, Q;
  int mu, eta, delta, eps;
};

std::vector<RawTuple> censusOracle2(const std::array<std::array<int, 2>, 2>& tab) {
  auto mul = [&](int a, int b) { return tab[a][b]; };
  std::vector<RawTuple> found;
  for (int t0 = 0; t0 < 2; ++t0)
    for (int t1 = 0; t1 < 2; ++t1)
      for (int q0 = 0; q0 < 2; ++q0)
        for (int q1 = 0; q1 < 2; ++q1) {
          auto T = [&](int x) { return x ? t1 : t0; };
          auto Q = [&](int x) { return x ? q1 : q0; };
          bool endo = T(0) == 0 && Q(0) == 0;
          for (int a = 0; a < 2 && endo; ++a)
            for (int b = 0; b < 2 && endo; ++b) {
              if (T(mul(a, b)) != mul(T(a), T(b))) endo = false;
              if (Q(mul(a, b)) != mul(Q(a), Q(b))) endo = false;
            }
          if (!endo) continue;
          for (int mu = 0; mu < 2; ++mu)
            for (int eta = 0; eta < 2; ++eta)
              for (int de = 0; de < 2; ++de)
                for (int ep = 0; ep < 2; ++ep) {
                  bool ok = true;
                  for (int a = 0; a < 2 && ok; ++a) {
                    if (mul(mu, T(T(a))) != mul(T(a), mu)) ok = false;        // SMM1
                    if (mul(eta, a) != mul(T(a), eta)) ok = false;            // SMM2
                    if (mul(de, Q(a)) != mul(Q(Q(a)), de)) ok = false;        // SMM3
                    if (mul(a, ep) != mul(ep, Q(a))) ok = false;              // SMM4
                    if (mul(mul(mu, de), T(Q(a))) !=
                        mul(mul(Q(T(a)), mu), de)) ok = false;                // SMM5
                    if (mul(mu, Q(a)) != mul(Q(a), mu)) ok = false;           // SMM7
                    if (mul(de, T(a)) != mul(T(a), de)) ok = false;           // SMM8
                    for (int b = 0; b < 2 && ok; ++b)
                      if (mul(T(a), Q(b)) != mul(Q(b), T(a))) ok = false;     // SMM6
                  }
                  if (mul(mu, T(mu)) != mul(mu, mu)) ok = false;              // SMM9
                  if (mul(mu, eta) != 0) ok = false;                          // SMM10
                  if (mul(mu, T(eta)) != 0) ok = false;                       // SMM11
                  if (mul(Q(de), de) != mul(de, de)) ok = false;              // SMM12
                  if (mul(ep, de) != 0) ok = false;                           // SMM13
                  if (mul(Q(ep), de) != 0) ok = false;                        // SMM14
                  if (mul(mul(mul(Q(mu), mu), de), T(de)) !=
                      mul(de, mu)) ok = false;                                // SMM15
                  if (mul(ep, mu) != mul(ep, T(ep))) ok = false;              // SMM16
                  if (mul(de, eta) != mul(Q(eta), eta)) ok = false;          // SMM17
                  if (mul(ep, eta) != 0) ok = false;                          // SMM18
                  if (ok) found.push_back({{t0, t1}, {q0, q1}, mu, eta, de, ep});
                }
        }
  return found;
}

const std::array<std::array<int, 2>, 2> kZ2{{{0, 1}, {1, 0}}};
const std::array<std::array<int, 2>, 2> kIdem{{{0, 1}, {1, 1}}};

FiniteMonoid z2() { return FiniteMonoid::fromTable({{0, 1}, {1, 0}}); }
FiniteMonoid idem() { return FiniteMonoid::fromTable({{0, 1}, {1, 1}}); }
FiniteMonoid z3() { return FiniteMonoid::fromTable({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}); }

bool sameTuple(const SmmInstance& i, const RawTuple& r) {
  return i.T.images == std::vector<Elem>{r.T[0], r.T[1]} &&
         i.Q.images == std::vector<Elem>{r.Q[0], r.Q[1]} && i.mu == r.mu &&
         i.eta == r.eta && i.delta == r.delta && i.eps == r.eps;
}

std::set<std::string> wordVars(const Word& w) {
  std::set<std::string> names;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Letter& l = w.at(i);
    if (l.atom.kind == AtomKind::Var || l.atom.kind == AtomKind::Gen)
      names.insert(l.atom.name);
  }
  return names;
}

}  // namespace

TEST_CASE("table validation") {
  CHECK_NOTHROW(z2());
  CHECK_NOTHROW(idem());
  CHECK_NOTHROW(z3());
  // 1 is not a unit
  CHECK_THROWS_AS(FiniteMonoid::fromTable({{0, 1}, {1, 0}}, 1), InvalidInput);
  // non-associative: (1*1)*1 = 0 but 1*(1*1) = 0 ... build a genuinely broken one
  CHECK_THROWS_AS(FiniteMonoid::fromTable({{0, 1, 2}, {1, 0, 0}, {2, 0, 1}}),
                  InvalidInput);
  // ragged row
  CHECK_THROWS_AS(FiniteMonoid::fromTable({{0, 1}, {1}}), InvalidInput);
  // entry out of range
  CHECK_THROWS_AS(FiniteMonoid::fromTable({{0, 1}, {1, 2}}), InvalidInput);
  CHECK_THROWS_AS(FiniteMonoid::fromTable({}), InvalidInput);
}

TEST_CASE("monoid predicates") {
  CHECK(z2().commutative());
  CHECK(z2().cancellative());
  CHECK(idem().commutative());
  CHECK(!idem().cancellative());
  CHECK(z2().inverseOf(1) == 1);
  CHECK(idem().inverseOf(1) == std::nullopt);
  CHECK(z3().inverseOf(1) == 2);
}

TEST_CASE("endomorphism enumeration") {
  const auto e2 = enumerateEndomorphisms(z2());
  REQUIRE(e2.size() == 2);
  CHECK(e2[0].images == std::vector<Elem>{0, 0});
  CHECK(e2[1].images == std::vector<Elem>{0, 1});
  CHECK(isIdentityMap(e2[1]));
  CHECK(!isBijective(e2[0]));

  const auto e3 = enumerateEndomorphisms(z3());
  REQUIRE(e3.size() == 3);  // x -> k*x for k = 0, 1, 2
  CHECK(e3[0].images == std::vector<Elem>{0, 0, 0});
  CHECK(e3[1].images == std::vector<Elem>{0, 1, 2});
  CHECK(e3[2].images == std::vector<Elem>{0, 2, 1});
}

TEST_CASE("census on two-element monoids matches the oracle") {
  const auto oracleZ2 = censusOracle2(kZ2);
  REQUIRE(oracleZ2.size() == 2);
  const auto instZ2 = enumerateSmm(z2());
  REQUIRE(instZ2.size() == 2);
  // canonical order puts the all-unit instance first
  CHECK(sameTuple(instZ2[0], oracleZ2[0]));
  CHECK(sameTuple(instZ2[1], oracleZ2[1]));
  for (const auto& i : instZ2) {
    CHECK(isIdentityMap(i.T));
    CHECK(isIdentityMap(i.Q));
    CHECK(i.mu == i.eps);
    CHECK(i.eta == i.eps);
    CHECK(i.delta == i.eps);
  }

  const auto oracleIdem = censusOracle2(kIdem);
  REQUIRE(oracleIdem.size() == 1);
  const auto instIdem = enumerateSmm(idem());
  REQUIRE(instIdem.size() == 1);
  CHECK(sameTuple(instIdem[0], oracleIdem[0]));
  CHECK(instIdem[0].eps == 0);
}

TEST_CASE("one-element monoid carries exactly one instance") {
  const auto inst = enumerateSmm(FiniteMonoid::fromTable({{0}}));
  REQUIRE(inst.size() == 1);
  CHECK(checkAxioms(inst[0]).empty());
  CHECK(isTrivial(inst[0]));
}

TEST_CASE("checkAxioms reports witnesses") {
  // a valid instance passes in both presentations
  const auto inst = enumerateSmm(z2());
  for (const auto& i : inst) {
    CHECK(checkAxioms(i, Presentation::MuDelta).empty());
    CHECK(checkAxioms(i, Presentation::Gamma).empty());
    CHECK(checkAxioms(i, Presentation::Product).empty());
  }

  // T constant-to-unit is a genuine endomorphism but breaks the eta relation
  SmmInstance bad{z2(), EndoMap{{0, 0}}, identityEndo(2), 0, 0, 0, 0};
  REQUIRE(isEndomorphism(bad.monoid, bad.T));
  const auto violations = checkAxioms(bad);
  REQUIRE(!violations.empty());
  CHECK(violations[0].axiom == "SMM2");
  REQUIRE(violations[0].witness.count("a"));
  CHECK(violations[0].witness.at("a") == 1);
  CHECK(violations[0].detail == "eta*a = 1 but T(a)*eta = 0");
}

TEST_CASE("evalWord") {
  const auto inst = enumerateSmm(z2());
  const SmmInstance& g = inst[1];  // eps = eta = mu = delta = 1
  CHECK(evalWord(Word{}, g) == 0);
  CHECK(evalWord(parseTerm("eps*eta"), g) == 0);
  CHECK(evalWord(parseTerm("mu*delta"), g) == 0);
  CHECK(evalWord(parseTerm("mu*delta"), g) == g.gamma());
  CHECK(evalWord(parseTerm("x*y"), g, {{"x", 1}, {"y", 1}}) == 0);
  CHECK_THROWS_AS(evalWord(parseTerm("x"), g), UnassignedGenerator);

  // wrapper composition is innermost-first
  SmmInstance raw{z3(), EndoMap{{0, 2, 1}}, identityEndo(3), 0, 0, 0, 0};
  CHECK(evalWord(parseTerm("T(g)"), raw, {{"g", 1}}) == 2);
  CHECK(evalWord(parseTerm("T(T(g))"), raw, {{"g", 1}}) == 1);
  CHECK(evalWord(parseTerm("T(Q(g))"), raw, {{"g", 1}}) == 2);

  // macro helpers agree with their defining words
  for (const auto& i : inst)
    for (Elem a = 0; a < 2; ++a) {
      Word ga = mkWord({mkLetter(AtomKind::Gen, "a")});
      CHECK(i.s(a) == evalWord(sigmaS(ga), i, {{"a", a}}));
      CHECK(i.piOf(a) == evalWord(sigmaPi(ga), i, {{"a", a}}));
    }
}

TEST_CASE("monoid enumeration") {
  CHECK(enumerateMonoids(1).size() == 1);

  const auto m2 = enumerateMonoids(2);
  REQUIRE(m2.size() == 2);
  // raw stream for n=2 coincides: both tables are canonical
  CHECK(enumerateMonoids(2, false).size() == 2);
  CHECK(m2[0].table() == std::vector<std::vector<Elem>>{{0, 1}, {1, 0}});
  CHECK(m2[1].table() == std::vector<std::vector<Elem>>{{0, 1}, {1, 1}});

  // raw count equals the sum of isomorphism orbit sizes of the class reps
  const auto raw3 = enumerateMonoids(3, false);
  const auto iso3 = enumerateMonoids(3, true);
  CHECK(iso3.size() <= raw3.size());
  std::size_t orbitSum = 0;
  for (const auto& m : iso3) orbitSum += isomorphismOrbitSize(m);
  CHECK(orbitSum == raw3.size());

  CHECK_THROWS_AS(enumerateMonoids(5), BoundExceeded);
  CHECK_THROWS_AS(enumerateMonoids(0), InvalidInput);
}

TEST_CASE("triviality classification") {
  const auto inst = enumerateSmm(z2());
  CHECK(isTrivial(inst[0]));
  CHECK(isTrivial(inst[1]));  // eps = g, its own inverse

  SmmInstance notId{z2(), EndoMap{{0, 0}}, identityEndo(2), 0, 0, 0, 0};
  CHECK(!isTrivial(notId));
  SmmInstance muOff{idem(), identityEndo(2), identityEndo(2), 1, 0, 0, 0};
  CHECK(!isTrivial(muOff));
}

TEST_CASE("sweep: every instance on monoids of size <= 3 is trivial and well-behaved") {
  for (int n = 1; n <= 3; ++n) {
    for (const FiniteMonoid& m : enumerateMonoids(n, false)) {
      for (const SmmInstance& inst : enumerateSmm(m)) {
        CAPTURE(n);
        CHECK(isTrivial(inst));
        CHECK(checkAxioms(inst, Presentation::Gamma).empty());

        // injectivity of T, Q, S
        std::set<Elem> ti, qi, si;
        for (Elem a = 0; a < n; ++a) {
          ti.insert(inst.t(a));
          qi.insert(inst.q(a));
          si.insert(inst.s(a));
        }
        CHECK(ti.size() == static_cast<std::size_t>(n));
        CHECK(qi.size() == static_cast<std::size_t>(n));
        CHECK(si.size() == static_cast<std::size_t>(n));

        // pi retracts T, Q, S
        for (Elem a = 0; a < n; ++a) {
          CHECK(inst.piOf(inst.t(a)) == a);
          CHECK(inst.piOf(inst.q(a)) == a);
          CHECK(inst.piOf(inst.s(a)) == a);
        }

        // images commute pairwise
        for (Elem a = 0; a < n; ++a)
          for (Elem b = 0; b < n; ++b) {
            CHECK(inst.mul(inst.t(a), inst.q(b)) == inst.mul(inst.q(b), inst.t(a)));
            CHECK(inst.mul(inst.t(a), inst.s(b)) == inst.mul(inst.s(b), inst.t(a)));
            CHECK(inst.mul(inst.q(a), inst.s(b)) == inst.mul(inst.s(b), inst.q(a)));
          }

        // S(A) is the intersection of F = Q(A)delta and G = mu T(A)
        std::set<Elem> F, G, S;
        for (Elem a = 0; a < n; ++a) {
          F.insert(inst.mul(inst.q(a), inst.delta));
          G.insert(inst.mul(inst.mu, inst.t(a)));
          S.insert(inst.s(a));
        }
        std::set<Elem> FG;
        for (Elem x : F)
          if (G.count(x)) FG.insert(x);
        CHECK(S == FG);
      }
    }
  }
}

TEST_CASE("catalogue identities hold in every small instance") {
  std::vector<FiniteMonoid> monoids;
  for (int n = 1; n <= 2; ++n)
    for (const FiniteMonoid& m : enumerateMonoids(n, false)) monoids.push_back(m);
  for (const FiniteMonoid& m : monoids) {
    for (const SmmInstance& inst : enumerateSmm(m)) {
      for (const IdentityEntry& e : identityCatalogue()) {
        const Word lhs = parsePattern(e.lhs);
        const Word rhs = parsePattern(e.rhs);
        std::set<std::string> vars = wordVars(lhs);
        for (const std::string& v : wordVars(rhs)) vars.insert(v);
        std::vector<std::string> vs(vars.begin(), vars.end());
        std::vector<Elem> vals(vs.size(), 0);
        while (true) {
          std::map<std::string, Elem> assign;
          for (std::size_t i = 0; i < vs.size(); ++i) assign[vs[i]] = vals[i];
          CAPTURE(e.name);
          CHECK(evalWord(lhs, inst, assign) == evalWord(rhs, inst, assign));
          std::size_t i = 0;
          for (; i < vals.size(); ++i) {
            if (vals[i] + 1 < m.size()) {
              ++vals[i];
              break;
            }
            vals[i] = 0;
          }
          if (i == vals.size()) break;
        }
      }
    }
  }
}
