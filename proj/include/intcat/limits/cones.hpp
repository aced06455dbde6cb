#pragma once

#include <functional>

#include "intcat/exponential/functor_category.hpp"
#include "intcat/limits/comma.hpp"

namespace intcat {

/// Cns(D) (or CoCns(D)) for a diagram D : 𝔻 -> A, built directly.
///
/// An object at stage c is a vertex v in A0(c) with a natural family of legs
/// indexed by (u : d -> c, e in 𝔻0(d)): leg : A0(u)v -> D0(e) for cones,
/// D0(e) -> A0(u)v for cocones. Family block 0 is the vertex, block 1 the legs.
/// An arrow at stage c is (σ, τ, h) with h : vertex σ -> vertex τ compatible
/// with all legs.
struct ConeCategory {
  InternalFunctor diagram;
  bool cocone = false;
  InternalCategory cat;
  FamilyPresheaf objects;
  TuplePresheaf arrows;  // (σ, τ, h)
  /// The vertex projection T : Cns(D) -> A.
  InternalFunctor projection;

  const InternalCategory& shape() const { return diagram.source(); }
  const InternalCategory& target() const { return diagram.target(); }
  ElementId vertex(ObjectId c, ElementId e) const { return objects.local(c, e, 0, 0); }
  /// The leg at index (u, x) of the cone element e at stage c.
  ElementId leg(ObjectId c, ElementId e, ArrowId u, ElementId x) const { return objects.value(c, e, 1, u, x); }
  ElementId local_leg(ObjectId c, ElementId e, ElementId x) const { return objects.local(c, e, 1, x); }

  /// The cone element at stage c with the given vertex and legs.
  std::optional<ElementId> find(ObjectId c, ElementId vertex,
                                const std::function<ElementId(ArrowId, ElementId)>& leg) const;
  /// The global cone with vertex v and the given legs at the identity indices.
  std::optional<Section> find_global(const Section& vertex,
                                     const std::function<ElementId(ObjectId, ElementId)>& leg) const;
};

ConeCategory cones_category(const InternalFunctor& diagram);
ConeCategory cocones_category(const InternalFunctor& diagram);
ConeCategory cones_category(const InternalFunctor& diagram, Execution mode);
ConeCategory cocones_category(const InternalFunctor& diagram, Execution mode);

/// ⌜D⌝ : 1 -> A^D.
InternalFunctor name_functor(const ExponentialCategory& ad, const InternalFunctor& diagram);
/// The comparison Cns(D) -> Δ/⌜D⌝ (or ⌜D⌝/Δ for cocones).
InternalFunctor cone_comma_comparison(const ConeCategory& cones, const ExponentialCategory& ad,
                                      const CommaCategory& comma);

/// Evidence that a point is internally terminal (initial): the inverse of the
/// projection from arrows into (out of) the point, as a map A0 -> A1.
struct TerminalCertificate {
  Section object;
  PresheafMap witness;
};

Result<TerminalCertificate> is_internal_terminal(const InternalCategory& a, const Section& v);
Result<TerminalCertificate> is_internal_initial(const InternalCategory& a, const Section& v);

struct TerminalSearch {
  TerminalCertificate certificate;
  /// Every point that is terminal at each stage. A bounded prefix is
  /// certified separately and checked to be uniquely iso to the first.
  std::vector<Section> candidates;
};
/// Stage-wise terminal candidates glued into global sections, then certified.
Result<TerminalSearch> find_terminal(const InternalCategory& a);
Result<TerminalSearch> find_initial(const InternalCategory& a);

/// A certified universal cone (or cocone).
struct UniversalCertificate {
  ConeCategory cones;
  Section cone;
  Section vertex;
  /// Cns0 -> Cns1: the unique arrow into (out of) the universal cone.
  PresheafMap witness;
  std::size_t candidates = 1;

  ElementId leg(ObjectId c, ElementId x) const { return cones.local_leg(c, cone[c], x); }
  /// The unique cone morphism from the cone element e at stage c.
  ElementId mediator(ObjectId c, ElementId e) const { return cones.arrows.coord(c, witness(c, e), 2); }
};

Result<UniversalCertificate> universal_cone(const InternalFunctor& diagram);
Result<UniversalCertificate> universal_cocone(const InternalFunctor& diagram);

/// Supplies certified universal cones for diagrams on any base.
using LimitProvider = std::function<Result<UniversalCertificate>(const InternalFunctor&)>;
LimitProvider search_provider();

/// Externally terminal: exactly one arrow from every object of the category
/// of global sections.
bool is_externally_terminal(const ExternalCategory& ext, ObjectId object);

/// Factorization of an I-indexed family of cones γ : I -> Cns(D)0 through the
/// universal cone.
struct IndexedFactorization {
  /// I -> Cns(D)1, the cone morphisms γ(i) -> π.
  PresheafMap morphisms;
  /// I -> A1, the mediating arrows h.
  PresheafMap mediator;
  /// Number of maps I -> Cns(D)1 over (γ, π), found by exhaustive search.
  std::size_t solutions = 0;
};
Result<IndexedFactorization> indexed_cone_factorization(const PresheafMap& family, const UniversalCertificate& cert);

}  // namespace intcat
