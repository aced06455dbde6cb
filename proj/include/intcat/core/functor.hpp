#pragma once

#include <vector>

#include "intcat/core/internal_category.hpp"

namespace intcat {

/// An internal functor (F0, F1) : A -> B.
class InternalFunctor {
 public:
  InternalFunctor() = default;
  InternalFunctor(InternalCategory source, InternalCategory target, PresheafMap f0, PresheafMap f1);

  const InternalCategory& source() const { return source_; }
  const InternalCategory& target() const { return target_; }
  const PresheafMap& f0() const { return f0_; }
  const PresheafMap& f1() const { return f1_; }
  ElementId on_obj(ObjectId c, ElementId x) const { return f0_(c, x); }
  ElementId on_arr(ObjectId c, ElementId f) const { return f1_(c, f); }

  bool operator==(const InternalFunctor& o) const {
    return source_ == o.source_ && target_ == o.target_ && f0_ == o.f0_ && f1_ == o.f1_;
  }

 private:
  InternalCategory source_, target_;
  PresheafMap f0_, f1_;
};

/// An internal natural transformation α : F => G, one arrow α : A0 -> B1.
class InternalNatTrans {
 public:
  InternalNatTrans() = default;
  InternalNatTrans(InternalFunctor source, InternalFunctor target, PresheafMap component);

  const InternalFunctor& source() const { return source_; }
  const InternalFunctor& target() const { return target_; }
  const PresheafMap& component() const { return alpha_; }
  ElementId at(ObjectId c, ElementId x) const { return alpha_(c, x); }

  bool operator==(const InternalNatTrans& o) const {
    return source_ == o.source_ && target_ == o.target_ && alpha_ == o.alpha_;
  }

 private:
  InternalFunctor source_, target_;
  PresheafMap alpha_;
};

ValidationReport validate_functor(const InternalFunctor& f);
ValidationReport validate_nat(const InternalNatTrans& a);

InternalFunctor identity_functor(const InternalCategory& a);
/// G∘F; throws PreconditionError unless target(F) == source(G).
InternalFunctor compose_functors(const InternalFunctor& g, const InternalFunctor& f);

InternalNatTrans identity_nat(const InternalFunctor& f);
/// β∘α : F => H for α : F => G and β : G => H.
InternalNatTrans vertical_compose(const InternalNatTrans& beta, const InternalNatTrans& alpha);
/// αL : FL => GL.
InternalNatTrans whisker_left(const InternalNatTrans& alpha, const InternalFunctor& l);
/// Rα : RF => RG.
InternalNatTrans whisker_right(const InternalFunctor& r, const InternalNatTrans& alpha);
/// β*α = (βG)∘(Hα) : HF => KG for α : F => G : A -> B and β : H => K : B -> C.
InternalNatTrans horizontal_compose(const InternalNatTrans& beta, const InternalNatTrans& alpha);

/// Functor into a category with at most one arrow between any two objects
/// at every stage, determined by its object part.
InternalFunctor functor_from_objects(const InternalCategory& source, const InternalCategory& target,
                                     const PresheafMap& f0);

/// Every internal functor A -> B, by a global search over all stages.
std::vector<InternalFunctor> all_functors(const InternalCategory& a, const InternalCategory& b);
/// Every internal natural transformation F => G.
std::vector<InternalNatTrans> all_nats(const InternalFunctor& f, const InternalFunctor& g);

}  // namespace intcat
