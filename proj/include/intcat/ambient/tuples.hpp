#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "intcat/ambient/presheaf.hpp"

namespace intcat {

/// A subpresheaf of a product X_1 × ... × X_n given by the admissible tuples
/// at each stage. Restriction acts coordinatewise; the admissible sets must be
/// closed under it (EngineFault otherwise). Elements are "<x_1,...,x_n>".
class TuplePresheaf {
 public:
  using Tuple = std::vector<ElementId>;
  using Emit = std::function<void(const Tuple&)>;

  TuplePresheaf() = default;
  /// enumerate(c, emit) calls emit once per admissible tuple at stage c.
  TuplePresheaf(std::vector<Presheaf> coordinates, const std::function<void(ObjectId, const Emit&)>& enumerate);

  const Presheaf& object() const { return d_->object; }
  const Tuple& tuple(ObjectId c, ElementId e) const { return d_->tuples[c][e]; }
  ElementId coord(ObjectId c, ElementId e, int i) const { return d_->tuples[c][e][i]; }
  std::optional<ElementId> find(ObjectId c, const Tuple& t) const;
  /// find, throwing EngineFault when the tuple is not admissible.
  ElementId at(ObjectId c, const Tuple& t) const;
  /// The projection onto coordinate i.
  PresheafMap projection(int i) const;

 private:
  struct Data {
    std::vector<Presheaf> coordinates;
    std::vector<std::vector<Tuple>> tuples;
    std::vector<std::map<Tuple, ElementId>> lookup;
    Presheaf object;
  };
  std::shared_ptr<const Data> d_;
};

}  // namespace intcat
