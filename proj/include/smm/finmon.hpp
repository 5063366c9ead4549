#pragma once

// Finite monoids as multiplication tables, exhaustive enumeration of monoid
// structures and of the skew-monoidal data living on them, axiom checking by
// direct evaluation, and the triviality classification.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "smm/rules.hpp"
#include "smm/word.hpp"

namespace smm {

struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BoundExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnassignedGenerator : std::runtime_error {
  explicit UnassignedGenerator(const std::string& name)
      : std::runtime_error("no element assigned to generator: " + name) {}
};

using Elem = int;  // dense index into the table; the unit is element 0

class FiniteMonoid {
 public:
  // validates associativity and the identity laws; throws InvalidInput
  static FiniteMonoid fromTable(std::vector<std::vector<Elem>> table, Elem unit = 0);

  int size() const { return static_cast<int>(table_.size()); }
  Elem unit() const { return unit_; }
  Elem mul(Elem a, Elem b) const { return table_[a][b]; }
  const std::vector<std::vector<Elem>>& table() const { return table_; }

  bool commutative() const;
  bool cancellative() const;
  std::optional<Elem> inverseOf(Elem x) const;

  friend bool operator==(const FiniteMonoid&, const FiniteMonoid&) = default;

 private:
  std::vector<std::vector<Elem>> table_;
  Elem unit_ = 0;
};

struct EndoMap {
  std::vector<Elem> images;

  Elem operator()(Elem x) const { return images[x]; }
  friend bool operator==(const EndoMap&, const EndoMap&) = default;
};

EndoMap identityEndo(int n);
bool isIdentityMap(const EndoMap& f);
bool isBijective(const EndoMap& f);
bool isEndomorphism(const FiniteMonoid& m, const EndoMap& f);
// all monoid endomorphisms, ordered by their image vectors
std::vector<EndoMap> enumerateEndomorphisms(const FiniteMonoid& m);

struct SmmInstance {
  FiniteMonoid monoid;
  EndoMap T;
  EndoMap Q;
  Elem mu = 0;
  Elem eta = 0;
  Elem delta = 0;
  Elem eps = 0;

  Elem mul(Elem a, Elem b) const { return monoid.mul(a, b); }
  Elem t(Elem a) const { return T(a); }
  Elem q(Elem a) const { return Q(a); }
  Elem s(Elem a) const;      // mu * T(Q(a) * eta)
  Elem piOf(Elem a) const;   // eps * a * eta
  Elem gamma() const { return monoid.mul(mu, delta); }

  friend bool operator==(const SmmInstance&, const SmmInstance&) = default;
};

// stable order on instances over the same monoid: (T, Q, mu, eta, delta, eps)
bool instanceLess(const SmmInstance& a, const SmmInstance& b);

struct AxiomViolation {
  std::string axiom;                    // rule id, e.g. "SMM2"
  std::map<std::string, Elem> witness;  // variable assignment that fails
  std::string detail;                   // lhs/rhs values under the witness
};

// evaluates every axiom of the presentation over all element tuples; cheap
// unit equations run first, at most one witness is reported per axiom
std::vector<AxiomViolation> checkAxioms(const SmmInstance& inst,
                                        Presentation presentation = Presentation::MuDelta);

// homomorphic evaluation of a ground word; Gen/Var letters read the assignment
Elem evalWord(const Word& w, const SmmInstance& inst,
              const std::map<std::string, Elem>& assignment = {});

// exhaustive search over endomorphism pairs and element quadruples, pruned by
// the unit equations, canonically ordered
std::vector<SmmInstance> enumerateSmm(const FiniteMonoid& m);

// all unital associative tables of the given size with unit 0; uptoIso keeps
// one canonical representative per isomorphism class
std::vector<FiniteMonoid> enumerateMonoids(int n, bool uptoIso = true, int bound = 4);

// number of distinct relabelings of m under unit-fixing permutations
std::size_t isomorphismOrbitSize(const FiniteMonoid& m);

// commutative, T = Q = id, eps invertible, mu = eps, delta = eta = eps^{-1}
bool isTrivial(const SmmInstance& inst);

struct MimosaReport {
  bool finite = false;
  bool cancellative = false;
  bool commutative = false;
  bool tAutomorphism = false;
  bool qAutomorphism = false;
  bool etaInvertible = false;
  bool muInvertible = false;
  bool deltaInvertible = false;
  bool epsInvertible = false;
  bool tensorUnitIso = false;  // mu (x) mu isomorphic to eps among the algebra objects
  bool trivial = false;
  std::string fatalFinding;  // nonempty if a true flag fails to imply trivial
};

MimosaReport mimosaReport(const SmmInstance& inst);

}  // namespace smm
