#pragma once

#include <optional>

#include "intcat/ambient/exponential.hpp"
#include "intcat/ambient/slice.hpp"
#include "intcat/core/constructions.hpp"

namespace intcat {

/// Hom(A, B) as an ambient object. An element at stage c is a pair of natural
/// families F0 : y(c) × A0 -> B0, F1 : y(c) × A1 -> B1 satisfying the functor
/// equations at every index (u, x); block 0 is F0 and block 1 is F1.
class HomObject {
 public:
  HomObject() = default;
  HomObject(InternalCategory source, InternalCategory target, Execution mode);

  const InternalCategory& source() const { return source_; }
  const InternalCategory& target() const { return target_; }
  const Presheaf& object() const { return families_.object(); }
  const FamilyPresheaf& families() const { return families_; }

  /// F0 and F1 of the functor y(c) × A -> B named by element e at stage c,
  /// evaluated at index (u, x).
  ElementId f0(ObjectId c, ElementId e, ArrowId u, ElementId x) const { return families_.value(c, e, 0, u, x); }
  ElementId f1(ObjectId c, ElementId e, ArrowId u, ElementId f) const { return families_.value(c, e, 1, u, f); }

  InternalFunctor decode(const Section& point) const;
  Section encode(const InternalFunctor& f) const;
  /// The element at stage c naming the restriction of f along y(c) -> ⊤.
  std::optional<ElementId> element_of(ObjectId c, const InternalFunctor& f) const;

  /// The monomorphism into B0^A0 × B1^A1, computed on demand.
  PresheafMap inclusion() const;

 private:
  InternalCategory source_, target_;
  FamilyPresheaf families_;
};

HomObject hom_object(const InternalCategory& a, const InternalCategory& b);
HomObject hom_object(const InternalCategory& a, const InternalCategory& b, Execution mode);

/// The functor category B^A. Objects are the hom-object; an arrow at stage c
/// is a triple (F, G, α) of families with blocks F0, F1, G0, G1, α.
struct ExponentialCategory {
  InternalCategory cat;
  HomObject objects;
  FamilyPresheaf arrows;
  /// B^A × A, the domain of eval.
  ProductCategory with_source;
  InternalFunctor eval;

  const InternalCategory& source() const { return objects.source(); }
  const InternalCategory& target() const { return objects.target(); }

  InternalFunctor decode(const Section& point) const { return objects.decode(point); }
  Section encode(const InternalFunctor& f) const { return objects.encode(f); }
  InternalNatTrans decode_nat(const Section& point) const;
  Section encode_nat(const InternalNatTrans& alpha) const;
};

ExponentialCategory exponential_cat(const InternalCategory& a, const InternalCategory& b);
ExponentialCategory exponential_cat(const InternalCategory& a, const InternalCategory& b, Execution mode);

/// Transpose of F : A' × A -> B, where pa = product_cat(A', A).
InternalFunctor curry_functor(const ExponentialCategory& ba, const ProductCategory& pa, const InternalFunctor& f);
/// Transpose of G : A' -> B^A.
InternalFunctor uncurry_functor(const ExponentialCategory& ba, const ProductCategory& pa, const InternalFunctor& g);

/// Δ : A -> A^D, the curry of the projection A × D -> A.
InternalFunctor diagonal_functor(const ExponentialCategory& ad);
/// The point of (A^D)0 naming the diagram D -> A.
Section name_of(const ExponentialCategory& ad, const InternalFunctor& diagram);

/// The comparison I*(A^D) -> (I*A)^(I*D) on the category of elements of I.
struct ReindexComparison {
  ExponentialCategory reindexed;  // (I*A)^(I*D)
  InternalCategory pulled;        // I*(A^D)
  InternalFunctor comparison;
  bool iso = false;
};
ReindexComparison reindex_exponential_iso(const Elements& el, const ExponentialCategory& ad);

}  // namespace intcat
