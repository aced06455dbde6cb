#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "intcat/ambient/limits.hpp"

namespace intcat {

/// An internal category (A0, A1, s, t, id, ∘) in a presheaf ambient.
///
/// The composable pairs are the chosen pullback of (s, t): an element is
/// "<g,f>" with s(g) = t(f), later arrow first. Read stage-wise, the data at
/// each index object c is an ordinary finite category A(c), and restriction
/// along u : c -> c' is a functor A(c') -> A(c).
class InternalCategory {
 public:
  InternalCategory() = default;
  InternalCategory(Presheaf obj, Presheaf arr, PresheafMap src, PresheafMap tgt, PresheafMap id,
                   PresheafMap comp);

  /// Builds ∘ from a stage-wise table: comp(c, g, f) for each composable pair.
  static InternalCategory from_tables(
      Presheaf obj, Presheaf arr, PresheafMap src, PresheafMap tgt, PresheafMap id,
      const std::function<ElementId(ObjectId, ElementId, ElementId)>& comp);

  const Base& base() const { return d_->obj.base(); }
  int stage_count() const { return d_->obj.stage_count(); }
  const Presheaf& obj() const { return d_->obj; }
  const Presheaf& arr() const { return d_->arr; }
  const PresheafMap& src() const { return d_->src; }
  const PresheafMap& tgt() const { return d_->tgt; }
  const PresheafMap& id() const { return d_->id; }
  const PresheafMap& comp() const { return d_->comp; }
  const LimitCone& pairs() const { return d_->pairs; }

  ElementId s(ObjectId c, ElementId f) const { return d_->src(c, f); }
  ElementId t(ObjectId c, ElementId f) const { return d_->tgt(c, f); }
  ElementId identity(ObjectId c, ElementId x) const { return d_->id(c, x); }
  /// g∘f at stage c, or -1 when s(g) != t(f).
  ElementId compose(ObjectId c, ElementId g, ElementId f) const {
    auto k = d_->pairs.index(c, g, f);
    return k < 0 ? -1 : d_->comp(c, k);
  }

  /// Arrows x -> y at stage c.
  std::span<const ElementId> hom(ObjectId c, ElementId x, ElementId y) const;
  /// Arrows with target y (resp. source x) at stage c.
  std::span<const ElementId> into(ObjectId c, ElementId y) const;
  std::span<const ElementId> out_of(ObjectId c, ElementId x) const;

  bool valid() const { return d_ != nullptr; }
  /// Equality of all six tables, labels included.
  bool operator==(const InternalCategory& other) const;

 private:
  struct StageIndex {
    std::vector<ElementId> by_source;  // sorted by (s, t)
    std::vector<int> source_begin;     // |A0(c)| + 1 offsets into by_source
    std::vector<ElementId> by_target;  // sorted by (t, s)
    std::vector<int> target_begin;
  };
  struct Data {
    Presheaf obj, arr;
    PresheafMap src, tgt, id, comp;
    LimitCone pairs;
    std::vector<StageIndex> stages;
  };
  std::shared_ptr<const Data> d_;
};

/// The seven category equations, element by element.
ValidationReport validate_internal_category(const InternalCategory& a);

/// True when the two categories have the same tables up to element and base labels.
bool same_tables(const InternalCategory& a, const InternalCategory& b);

}  // namespace intcat
