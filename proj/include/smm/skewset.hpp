#pragma once
// Finite right modules over an instance's monoid and the skew product they
// carry: coherence maps with their axioms, the rank-one free subcategory and
// its equivalence onto the instance, internal homs with their adjunctions,
// closedness conditions, Hopf-style canonical maps, and the embedding that
// rebuilds an instance from an isomorphism R (x) R ~ R.

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "smm/bgd.hpp"
#include "smm/finmon.hpp"
#include "smm/modcat.hpp"
#include "smm/quotient.hpp"

namespace smm {

// a class-level map came out representative-dependent (broken input data)
struct IllDefined : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// no free generator: the module is not free of rank one
struct NotRank1Free : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// exhaustive search found no left adjoint for Q
struct NoLeftAdjoint : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// the supplied class map is not an equivariant bijection
struct NotIso : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// finite right module over the instance's monoid
struct FiniteASet {
  int size = 0;
  std::vector<std::vector<int>> action;  // [m][a] -> m.a

  int act(int m, Elem a) const { return action[m][a]; }
};

bool isASet(const FiniteMonoid& monoid, const FiniteASet& m);

// the right regular module
FiniteASet regularASet(const FiniteMonoid& monoid);

// the carrier of G as a module via g.a := g*T(a), positions into G's carrier
FiniteASet gAsASet(const SmmInstance& inst);

// all modules with carrier size 1..maxSize up to equivariant isomorphism,
// ordered by size then by canonical action table
std::vector<FiniteASet> enumerateASets(const FiniteMonoid& monoid, int maxSize);

// all equivariant maps x -> y as image tables, in lexicographic order
std::vector<std::vector<int>> equivariantMaps(const FiniteMonoid& monoid, const FiniteASet& x,
                                              const FiniteASet& y);

// classes of triples (m, n, g) under (m.b, n.a, g) ~ (m, n, T(a)*g*S(b)),
// g running over the carrier of G, with the action [m,n,g].a = [m,n,g*T(a)]
struct SkewProduct {
  int nm = 0;
  int nn = 0;
  std::vector<Elem> gCarrier;
  int classes = 0;
  std::vector<int> classIdx;              // flat (m*nn + n)*|gCarrier| + k
  std::vector<std::array<int, 3>> reps;   // least flat triple of each class
  std::vector<std::vector<int>> action;   // [class][a] -> class

  int classOf(int m, int n, int gPos) const;
  FiniteASet asASet() const;
};

SkewProduct skewProduct(const FiniteASet& m, const FiniteASet& n, const SmmInstance& inst);

// the arrow fm (x) fn between two products over the same instance:
// [m,n,g] -> [fm(m), fn(n), g]; throws IllDefined on representative-dependence
std::vector<int> inducedMap(const SkewProduct& src, const SkewProduct& dst,
                            const std::vector<int>& fm, const std::vector<int>& fn);

struct CoherenceData {
  SkewProduct mn, l_mn, lm, lm_n;  // the four products behind gamma
  SkewProduct rm, mr;
  std::vector<int> gamma;  // L(x)(M(x)N) -> (L(x)M)(x)N
  std::vector<int> etaM;   // M -> R(x)M
  std::vector<int> epsM;   // M(x)R -> M
  CheckReport report;      // naturalities and the five coherence axioms
};

CoherenceData coherenceComponents(const FiniteASet& l, const FiniteASet& m, const FiniteASet& n,
                                  const SmmInstance& inst);

// least element generating freely; throws NotRank1Free if none does
int freeGenerator(const FiniteMonoid& monoid, const FiniteASet& m);

struct Rank1Data {
  std::vector<FiniteASet> objects;       // the regular module and G
  std::vector<int> xi;                   // chosen free generator per object
  std::vector<std::vector<Elem>> alpha;  // comparison element per object pair
  CheckReport report;
};

Rank1Data rank1Subcategory(const SmmInstance& inst);

struct InternalHoms {
  FiniteASet right;  // n with the T-twisted action n.T(a)
  FiniteASet left;   // n with the Q-twisted action n.Q(a)
  CheckReport report;
};

// m must be rank-1 free (the adjunction formulas use its generator)
InternalHoms internalHoms(const FiniteASet& m, const FiniteASet& n, const SmmInstance& inst);

CheckReport closednessCheck(const SmmInstance& inst);

// left adjoint of Q in the 2-category of monoids: P with unit i and counit e
struct AdjointData {
  EndoMap p;
  Elem i = 0;
  Elem e = 0;
};

AdjointData leftAdjointOfQ(const SmmInstance& inst);  // throws NoLeftAdjoint

CheckReport hopfChecks(const SmmInstance& inst);

// the canonical unit isomorphism R(x)R -> R through G and rank-one freeness
std::vector<int> canonicalUnitIso(const SmmInstance& inst);

struct UnitIsoSmm {
  SmmInstance instance;                 // structure on the endomap monoid of R
  std::vector<Elem> embedding;          // a -> index of the endomap (R -a-> R)
};

// kappa maps the classes of skewProduct(R, R, inst) to elements of R
UnitIsoSmm smmFromUnitIso(const std::vector<int>& kappa, const SmmInstance& inst);

CheckReport skewsetSuite(const SmmInstance& inst, int maxSetSize = 3);

}  // namespace smm
