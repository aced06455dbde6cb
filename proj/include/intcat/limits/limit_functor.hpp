#pragma once

#include <optional>
#include <string>

#include "intcat/limits/cones.hpp"

namespace intcat {

/// The inverse of f at stage c, if f is an isomorphism of A(c).
std::optional<ElementId> inverse_arrow(const InternalCategory& a, ObjectId c, ElementId f);

/// The diagram ε : I*D -> I*A over ∫(A^D)0 whose fiber over F is F itself.
struct GenericDiagram {
  Elements el;
  InternalFunctor diagram;
};
GenericDiagram generic_diagram(const ExponentialCategory& ad);

/// Lim_D : A^D -> A with Δ -| Lim_D.
struct LimitFunctor {
  ExponentialCategory ad;
  GenericDiagram generic;
  UniversalCertificate cone;  // universal cone of the generic diagram
  InternalFunctor diagonal;
  InternalFunctor lim;
  InternalNatTrans unit;    // Id => Lim Δ
  InternalNatTrans counit;  // Δ Lim => Id
  /// Functor laws, naturality and both triangle identities.
  ValidationReport report;
  /// Every unit component is an isomorphism.
  bool unit_iso = false;
};

Result<LimitFunctor> limit_functor(const InternalCategory& a, const InternalCategory& shape,
                                   const LimitProvider& provider);

/// 1 + 1 as a discrete internal category.
InternalCategory shape_two(const Base& base);
/// Two objects 0, 1 and two parallel arrows f, g : 0 -> 1.
InternalCategory shape_parallel_pair(const Base& base);

/// Par(A): pairs of parallel arrows and the squares between them.
struct ParallelArrows {
  InternalCategory cat;
  TuplePresheaf objects;  // (f, g)
  TuplePresheaf arrows;   // (p, p', h0, h1)
  /// Δ : A -> Par(A), a |-> (id a, id a).
  InternalFunctor diagonal;
};
ParallelArrows parallel_arrows_category(const InternalCategory& a);

/// Par(A) -> A^P for P the parallel-pair shape.
InternalFunctor par_comparison(const ParallelArrows& par, const ExponentialCategory& ap);
/// A × A -> A^2.
InternalFunctor pair_comparison(const ProductCategory& aa, const ExponentialCategory& a2);

enum class SpecialLimit { terminal, binary_product, equalizer };
std::string to_string(SpecialLimit kind);

struct SpecialAdjoint {
  SpecialLimit kind;
  /// G : A -> T with T = 1, A × A or Par(A).
  InternalFunctor left;
  InternalFunctor right;
  InternalNatTrans unit, counit;
  ValidationReport report;
  /// Agreement with Lim over the matching shape, object by object up to iso.
  /// Empty when the provider could not supply that limit functor.
  std::optional<bool> agrees_with_lim;
};

/// The right adjoint of G : A -> T by universal arrows: the terminal object
/// of each fiber of G/Id over ∫T0. Refuses with the object of T lacking one.
Result<SpecialAdjoint> special_right_adjoint(const InternalCategory& a, SpecialLimit kind,
                                             const LimitProvider& provider);

}  // namespace intcat
