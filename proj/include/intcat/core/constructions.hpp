#pragma once

#include <string>
#include <utility>
#include <vector>

#include "intcat/ambient/slice.hpp"
#include "intcat/core/functor.hpp"

namespace intcat {

/// Dis X: objects and arrows X, all structure maps identities.
InternalCategory discrete(const Presheaf& x);
/// Ind X: arrows X × X with s = π1, t = π2.
InternalCategory indiscrete(const Presheaf& x);
/// Source and target swapped; opposite(opposite(A)) == A on the nose.
InternalCategory opposite(const InternalCategory& a);
InternalFunctor opposite_functor(const InternalFunctor& f);
/// α : F => G read as G^op => F^op.
InternalNatTrans opposite_nat(const InternalNatTrans& alpha);

struct ProductCategory {
  InternalCategory cat;
  InternalFunctor first;
  InternalFunctor second;
  LimitCone obj;
  LimitCone arr;
  /// <F, G> : C -> A × B.
  InternalFunctor pair(const InternalFunctor& f, const InternalFunctor& g) const;
  /// F × G : A × B -> A' × B'.
  InternalFunctor times(const ProductCategory& to, const InternalFunctor& f, const InternalFunctor& g) const;
};
ProductCategory product_cat(const InternalCategory& a, const InternalCategory& b);
InternalCategory terminal_cat(const Base& base);
InternalCategory initial_cat(const Base& base);
/// ! : A -> 1.
InternalFunctor to_terminal_cat(const InternalCategory& a);

/// The external category of global sections: objects are points of A0,
/// arrows points of A1.
struct ExternalCategory {
  Base category;
  std::vector<Section> objects;
  std::vector<Section> arrows;
};
ExternalCategory points_of_cat(const InternalCategory& a);

/// A finite category as the constant internal category on a base.
InternalCategory constant_cat(const Base& base, const IndexCategory& shape);
/// The preorder generated by the given pairs (a <= b), in FinSet. Arrows are
/// labeled "a<=b".
InternalCategory poset_category(const std::vector<std::string>& elements,
                                const std::vector<std::pair<std::string, std::string>>& order);
/// Reflexive-transitive closure of a relation on n points.
std::vector<std::vector<bool>> order_closure(int n, const std::vector<std::pair<int, int>>& pairs);

/// I*A on ∫I.
InternalCategory reindex_cat(const Elements& el, const InternalCategory& a);
InternalFunctor reindex_functor(const Elements& el, const InternalFunctor& f,
                                const InternalCategory& source, const InternalCategory& target);
/// Σ_i A for A on ∫J and i : J -> I, landing on ∫I.
InternalCategory dependent_sum_cat(const Elements& over_j, const Elements& over_i, const PresheafMap& i,
                                   const InternalCategory& a);
/// Σ A for A on ∫J, landing on the ambient base (the sum along J -> ⊤).
InternalCategory total_cat(const Elements& over_j, const InternalCategory& a);

/// Both triangle identities for L -| R with the given unit and counit.
ValidationReport adjunction_check(const InternalFunctor& l, const InternalFunctor& r,
                                  const InternalNatTrans& unit, const InternalNatTrans& counit);

struct DisUIndCounts {
  std::size_t dis_functors = 0;   // |Hom(Dis X, A)|
  std::size_t maps_into_a0 = 0;   // |Hom(X, A0)|
  std::size_t ind_functors = 0;   // |Hom(A, Ind X)|
  std::size_t maps_from_a0 = 0;   // |Hom(A0, X)|
  ValidationReport report;
};
/// Hom-set bijections for Dis -| U -| Ind, with the explicit transposition
/// maps checked to be mutually inverse.
DisUIndCounts dis_u_ind_adjunctions(const Presheaf& x, const InternalCategory& a);

}  // namespace intcat
