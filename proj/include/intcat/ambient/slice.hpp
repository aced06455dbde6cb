#pragma once

#include <utility>
#include <vector>

#include "intcat/ambient/limits.hpp"

namespace intcat {

/// The category of elements ∫I of a presheaf I, realizing the slice over I as
/// presheaves on ∫I. Objects are pairs (c, x) with x in I(c); an arrow
/// (u, x') : (c, I(u)x') -> (c', x') exists for each u : c -> c'.
class Elements {
 public:
  explicit Elements(Presheaf over);

  const Base& base() const { return base_; }
  const Presheaf& over() const { return over_; }
  ObjectId object(ObjectId c, ElementId x) const { return object_of_[c][x]; }
  /// (c, x) of an object of ∫I.
  std::pair<ObjectId, ElementId> point(ObjectId o) const { return points_[o]; }
  /// The arrow (u, x') for x' in I(target(u)).
  ArrowId arrow(ArrowId u, ElementId x2) const { return arrow_of_[u][x2]; }
  /// (u, x') of an arrow of ∫I.
  std::pair<ArrowId, ElementId> arrow_point(ArrowId a) const { return arrow_points_[a]; }

 private:
  Presheaf over_;
  Base base_;
  std::vector<std::vector<ObjectId>> object_of_;
  std::vector<std::pair<ObjectId, ElementId>> points_;
  std::vector<std::vector<ArrowId>> arrow_of_;
  std::vector<std::pair<ArrowId, ElementId>> arrow_points_;
};

Elements elements_category(const Presheaf& i);

/// I*X = X∘π on ∫I.
Presheaf reindex(const Elements& el, const Presheaf& x);
PresheafMap reindex(const Elements& el, const PresheafMap& f);

/// An object of the slice over some I: its structure map X -> I.
struct Over {
  PresheafMap structure;
  const Presheaf& object() const { return structure.source(); }
  const Presheaf& over() const { return structure.target(); }
};

/// E/I -> Psh(∫I): the fibers of p : X -> I.
Presheaf to_slice(const Elements& el, const PresheafMap& p);
/// A map over I (q∘f = p) as a map between the fiber presheaves.
PresheafMap to_slice(const Elements& el, const PresheafMap& p, const PresheafMap& q,
                     const PresheafMap& f);
/// Psh(∫I) -> E/I: the disjoint union of fibers, elements labeled "<x,e>".
Over from_slice(const Elements& el, const Presheaf& fibers);
PresheafMap from_slice(const Elements& el, const PresheafMap& m);

/// Global sections of I*X are the maps I -> X.
PresheafMap section_to_map(const Elements& el, const Presheaf& x, const Section& s);
Section map_to_section(const Elements& el, const PresheafMap& f);

/// i* : E/I -> E/J, pullback along i : J -> I.
Over base_change(const PresheafMap& i, const Over& x);
/// i_! : E/J -> E/I, postcomposition with i.
Over dependent_sum(const PresheafMap& i, const Over& y);
/// Maps f : a -> b with b∘f = a, by exhaustive search.
std::vector<PresheafMap> hom_over(const Over& a, const Over& b);
/// Checks that f |-> <f, q> is a bijection Hom_I(i_! Y, X) -> Hom_J(Y, i* X).
ValidationReport check_sum_reindex_adjunction(const PresheafMap& i, const Over& y, const Over& x);

}  // namespace intcat
