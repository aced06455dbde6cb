#pragma once

#include <functional>
#include <vector>

#include "intcat/ambient/presheaf.hpp"

namespace intcat {

/// O(1) lookup from the coordinates of an element of a chosen finite limit to
/// its position in the apex carrier.
class ElementIndex {
 public:
  enum class Kind { product, pullback, subset };

  static ElementIndex product(const Presheaf& x, const Presheaf& y);
  static ElementIndex pullback(const PresheafMap& f, const PresheafMap& g);
  static ElementIndex subset(std::vector<std::vector<ElementId>> position);

  /// Apex element with coordinates (x, y) at stage c, or -1. Subset indices
  /// ignore y.
  ElementId operator()(ObjectId c, ElementId x, ElementId y = 0) const {
    switch (kind_) {
      case Kind::product:
        return x * stride_[c] + y;
      case Kind::pullback:
        return key_x_[c][x] == key_y_[c][y] ? offset_[c][x] + rank_[c][y] : -1;
      case Kind::subset:
        return offset_[c][x];
    }
    return -1;
  }

 private:
  Kind kind_ = Kind::product;
  std::vector<int> stride_;
  std::vector<std::vector<ElementId>> offset_;
  std::vector<std::vector<int>> rank_;
  std::vector<std::vector<ElementId>> key_x_, key_y_;
};

/// A chosen limit in the ambient: apex, legs and the factorization of any
/// competing cone. Mediators throw PreconditionError on cones that do not
/// commute with the diagram.
struct LimitCone {
  Presheaf apex;
  std::vector<PresheafMap> legs;
  std::function<PresheafMap(const std::vector<PresheafMap>&)> mediator;
  ElementIndex index;
};

/// Pointwise cartesian product. Elements are "<x,y>" in lexicographic order,
/// so element (i, j) sits at i*|Y(c)| + j.
LimitCone product(const Presheaf& x, const Presheaf& y);
/// Fibered product X ×_Z Y of f : X -> Z and g : Y -> Z, pairs in lexicographic order.
LimitCone pullback(const PresheafMap& f, const PresheafMap& g);
/// Equalizing subpresheaf of parallel f, g, keeping element labels.
LimitCone equalizer(const PresheafMap& f, const PresheafMap& g);

/// <f, g> : Z -> X × Y.
PresheafMap pairing(const LimitCone& prod, const PresheafMap& f, const PresheafMap& g);
/// f × g between chosen products.
PresheafMap product_map(const LimitCone& from, const LimitCone& to, const PresheafMap& f,
                        const PresheafMap& g);

}  // namespace intcat
