#pragma once

#include "intcat/ambient/slice.hpp"
#include "intcat/ambient/tuples.hpp"
#include "intcat/core/constructions.hpp"

namespace intcat {

/// The comma category F/G of F : X -> Z and G : Y -> Z.
///
/// Objects are triples (x, y, h : Fx -> Gy); arrows are commuting squares
/// (a : x -> x', b : y -> y', h, h') with Gb∘h = h'∘Fa.
struct CommaCategory {
  InternalFunctor f, g;
  InternalCategory cat;
  TuplePresheaf objects;  // (x, y, h)
  TuplePresheaf arrows;   // (a, b, h, h')
  InternalFunctor px, py;
  /// α : F P_X => G P_Y, with α(x, y, h) = h.
  InternalNatTrans alpha;

  /// The functor C -> F/G induced by P : C -> X, Q : C -> Y and β : FP => GQ.
  InternalFunctor mediate(const InternalFunctor& p, const InternalFunctor& q, const InternalNatTrans& beta) const;
  /// The transformation M => N induced by μ : P_X M => P_X N and ν : P_Y M => P_Y N.
  /// Throws PreconditionError when the pair is not compatible with α.
  InternalNatTrans mediate(const InternalFunctor& m, const InternalFunctor& n, const InternalNatTrans& mu,
                           const InternalNatTrans& nu) const;
};

CommaCategory comma_category(const InternalFunctor& f, const InternalFunctor& g);

/// The fiber of P : K -> T over the generic object of T, as an internal
/// category on ∫T0. Objects at (c, y) are k in K0(c) with P0 k = y; arrows are
/// k in K1(c) with P1 k = id y.
struct FiberCategory {
  InternalFunctor p;
  Elements el;
  InternalCategory cat;
  /// The fiber element at stage o as an element of K at the underlying stage.
  std::vector<std::vector<ElementId>> object_in_k, arrow_in_k;
  /// Position of a K element inside its fiber.
  std::vector<std::vector<ElementId>> object_position, arrow_position;

  /// Q restricted to the fibers: a diagram fiber -> I*B for Q : K -> B.
  InternalFunctor restrict(const InternalFunctor& q, const InternalCategory& reindexed_b) const;
};

FiberCategory fiber_over(const InternalFunctor& p);

}  // namespace intcat
