#pragma once
// The dual pair of bialgebroids living inside a finite instance: the
// right-handed G = mu*T(A) and the left-handed F = Q(A)*delta, the pairing
// between them, the smash product over the common submonoid S(A), grouplike
// elements, isomorphisms of instances with their induced bialgebroid
// morphisms, and reconstruction of an instance from a bialgebroid plus chosen
// adjunction data for its source map.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "smm/finmon.hpp"
#include "smm/modcat.hpp"
#include "smm/quotient.hpp"

namespace smm {

struct ElementNotInCarrier : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidIso : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotSourceRegular : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AdjunctionInvalid : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class BgdSide { Right, Left };

// A bialgebroid carried by a subset of its base monoid. On the right-handed
// side the bimodule acts by right multiplication, a1.g.a2 = g*target(a1)*
// source(a2); on the left-handed side by left multiplication, a1.f.a2 =
// source(a1)*target(a2)*f. The tensor square is the pair quotient along
// (g.a, h) ~ (g, a.h).
struct Bialgebroid {
  BgdSide side = BgdSide::Right;
  FiniteMonoid base;
  std::vector<Elem> carrier;  // sorted, contains the unit
  std::vector<Elem> source;   // per base element
  std::vector<Elem> target;   // per base element
  std::vector<Elem> counit;   // per carrier position
  PairQuotient tensor;        // carrier (x)_A carrier
  std::vector<int> coproduct;  // carrier position -> tensor class

  int idx(Elem g) const;  // carrier position, -1 when absent
  Elem lact(Elem a, Elem g) const;
  Elem ract(Elem g, Elem a) const;
  int classOf(Elem x, Elem y) const;  // both must be carrier members
  std::vector<std::pair<Elem, Elem>> classPairs(int cls) const;
};

// G: carrier mu*T(A), source T, target S, counit pi, coproduct
// g -> mu (x) mu*T(delta*g*eta)
Bialgebroid buildG(const SmmInstance& inst);
// F: carrier Q(A)*delta, source Q, target S, counit pi, coproduct
// f -> Q(eps*f*mu)*delta (x) delta
Bialgebroid buildF(const SmmInstance& inst);

// closure, source/target (anti)homomorphism and commutation, the coproduct as
// a bimodule map landing in the restricted part of the tensor square,
// coassociativity, counit laws, multiplicativity of the coproduct and the
// counit composition laws; every class-valued check quantifies over all
// representatives, and failures carry witnesses
CheckReport checkBialgebroid(const Bialgebroid& b);

// eps*f*g*eta for f in F and g in G; throws ElementNotInCarrier
Elem pairing(const SmmInstance& inst, Elem f, Elem g);
// the six pairing identities plus non-degeneracy on both sides
CheckReport pairingPropertyCheck(const SmmInstance& inst);

// the action of f on g through the legs of the coproduct of g:
// f.g = g2 * S(<f, g1>); throws ElementNotInCarrier
Elem moduleAlgebraAction(const SmmInstance& inst, Elem f, Elem g);

struct SmashProduct {
  std::vector<Elem> gCarrier;
  std::vector<Elem> fCarrier;
  std::vector<Elem> common;  // S(A) = F meet G
  PairQuotient classes;      // G (x)_{S(A)} F
  int unit = 0;              // class of (1, 1)
  std::vector<std::vector<int>> table;  // class x class -> class
};

// carrier and multiplication table from the canonical representatives
SmashProduct smashProduct(const SmmInstance& inst);
// well-definedness over all representatives, monoid laws, the product
// identity f*g = (f2.g)*f1 inside A, and the invariant submonoid = T(A)
CheckReport smashCheck(const SmmInstance& inst);

// elements with diagonal coproduct and counit 1
std::vector<Elem> grouplikes(const Bialgebroid& b);
// u -> mu*T(u) is a multiplication-reversing bijection from the coalgebra
// objects onto the grouplikes of G; x -> Q(x)*delta dually for F
CheckReport grouplikeBijectionCheck(const SmmInstance& inst);

// a map of instances: a monoid isomorphism phi together with invertible
// comparison elements phi2 (tensor) and phi0 (unit) of the codomain
struct SmmIso {
  std::vector<Elem> phi;
  Elem phi2 = 0;
  Elem phi0 = 0;
};

CheckReport smmIsoCheck(const SmmInstance& a, const SmmInstance& b, const SmmIso& iso);
// exhaustive over monoid isomorphisms and invertible comparison pairs
std::vector<SmmIso> searchSmmIsos(const SmmInstance& a, const SmmInstance& b);

// the induced morphism between the two G-bialgebroids: g -> tau*phi(g)/tau
// on carriers and a -> phi0^{-1}*phi(a)*phi0 on bases
struct BgdMorphism {
  std::vector<Elem> gMap;     // per carrier position of the domain G
  std::vector<Elem> baseMap;  // per base element
  CheckReport report;
};

// throws InvalidIso when the iso invariants fail between the instances
BgdMorphism applySmmIso(const SmmIso& iso, const SmmInstance& a, const SmmInstance& b);

// a right adjoint sG for the source map of a right-handed bialgebroid,
// with counit mu (in the carrier) and unit eta (in the base)
struct AdjunctionData {
  std::vector<Elem> sG;  // per carrier position
  Elem mu = 0;
  Elem eta = 0;
};

CheckReport adjunctionCheck(const Bialgebroid& g, const AdjunctionData& adj);
// sG = the carrier itself, mu and eta of the instance
AdjunctionData inclusionAdjunction(const SmmInstance& inst);
std::vector<AdjunctionData> searchAdjunctions(const Bialgebroid& g);

// T := sG(source(-)), the dual side through J(f) = <f, mu>, and the tuple
// <A, T, Q, sG(mu), eta, delta, eps>; validates the result and throws
// AdjunctionInvalid / NotSourceRegular on bad data
SmmInstance reconstructSmm(const Bialgebroid& g, const AdjunctionData& adj);

// every valid adjunction reconstructs a valid instance; the inclusion
// adjunction reproduces the instance exactly; each reconstruction is
// isomorphic to the original through conjugation by the comparison element
// relating the two adjoints; rebuilding G from the reconstruction gives an
// isomorphic bialgebroid through sG
CheckReport reconstructionCheck(const SmmInstance& inst);

// right modules over G on carriers of the size of A: the represented modules
// x*T(A) are exactly the ones whose restriction along the source is regular
// (exhaustive; |A| <= 3)
CheckReport sourceRegularModuleCheck(const SmmInstance& inst);

// every check above bundled, prefixed by its group name
CheckReport bgdSuite(const SmmInstance& inst);

}  // namespace smm
