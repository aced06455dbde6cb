#pragma once

#include "intcat/ambient/family.hpp"
#include "intcat/ambient/limits.hpp"

namespace intcat {

/// Y^X with (Y^X)(c) = Nat(y(c) × X, Y). An element is a family indexed by
/// (u : d -> c, x in X(d)).
struct Exponential {
  Presheaf x;
  Presheaf y;
  FamilyPresheaf families;
  /// Y^X × X, the domain of eval.
  LimitCone with_x;
  PresheafMap eval;

  const Presheaf& object() const { return families.object(); }
  /// curry(f) : Z -> Y^X for f : Z × X -> Y, where Z × X is product(z, x).
  PresheafMap curry(const LimitCone& zx, const PresheafMap& f) const;
  /// uncurry(g) : Z × X -> Y for g : Z -> Y^X.
  PresheafMap uncurry(const LimitCone& zx, const PresheafMap& g) const;
};

Exponential exponential(const Presheaf& x, const Presheaf& y);
Exponential exponential(const Presheaf& x, const Presheaf& y, Execution mode);

}  // namespace intcat
