#include "smm/finmon.hpp"
#include "smm/modcat.hpp"

namespace smm {

// Each flag alone forces the instance to be trivial; a true flag on a
// non-trivial verified instance would be a counterexample, reported fatally.
MimosaReport mimosaReport(const SmmInstance& inst) {
  MimosaReport r;
  r.finite = true;  // every representable instance is finite by construction
  r.cancellative = inst.monoid.cancellative();
  r.commutative = inst.monoid.commutative();
  r.tAutomorphism = isBijective(inst.T);
  r.qAutomorphism = isBijective(inst.Q);
  r.etaInvertible = inst.monoid.inverseOf(inst.eta).has_value();
  r.muInvertible = inst.monoid.inverseOf(inst.mu).has_value();
  r.deltaInvertible = inst.monoid.inverseOf(inst.delta).has_value();
  r.epsInvertible = inst.monoid.inverseOf(inst.eps).has_value();
  r.tensorUnitIso = isIsoT(inst, hTensorObj(inst, inst.mu, inst.mu), inst.eps);
  r.trivial = isTrivial(inst);
  if (!r.trivial) {
    const std::pair<const char*, bool> flags[] = {
        {"finite", r.finite},
        {"cancellative", r.cancellative},
        {"commutative", r.commutative},
        {"T-automorphism", r.tAutomorphism},
        {"Q-automorphism", r.qAutomorphism},
        {"eta-invertible", r.etaInvertible},
        {"mu-invertible", r.muInvertible},
        {"delta-invertible", r.deltaInvertible},
        {"eps-invertible", r.epsInvertible},
        {"tensor-unit-iso", r.tensorUnitIso},
    };
    for (const auto& [name, on] : flags)
      if (on) {
        if (!r.fatalFinding.empty()) r.fatalFinding += ", ";
        r.fatalFinding += name;
      }
    if (!r.fatalFinding.empty())
      r.fatalFinding = "non-trivial instance satisfies: " + r.fatalFinding;
  }
  return r;
}

}  // namespace smm
