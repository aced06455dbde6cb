#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "intcat/ambient/index_category.hpp"

namespace intcat {

using ElementId = int;

/// A presheaf of finite sets on an index category: the ambient objects.
///
/// carrier(c) is a list of element labels; restrict(u, x) is the action of
/// an index arrow u : c -> c' sending x in carrier(c') to carrier(c).
/// Values are immutable and cheap to copy (shared storage).
class Presheaf {
 public:
  Presheaf() = default;
  Presheaf(Base base, std::vector<std::vector<std::string>> carriers,
           std::vector<std::vector<ElementId>> action);

  const Base& base() const { return d_->base; }
  int stage_count() const { return static_cast<int>(d_->carriers.size()); }
  int size(ObjectId c) const { return static_cast<int>(d_->carriers[c].size()); }
  std::size_t total_size() const;
  const std::string& label(ObjectId c, ElementId x) const { return d_->carriers[c][x]; }
  const std::vector<std::string>& carrier(ObjectId c) const { return d_->carriers[c]; }
  /// X(u)(x) for u : c -> c' and x in X(c').
  ElementId restrict(ArrowId u, ElementId x) const { return d_->action[u][x]; }
  const std::vector<ElementId>& action(ArrowId u) const { return d_->action[u]; }
  std::optional<ElementId> find(ObjectId c, std::string_view label) const;

  bool valid() const { return d_ != nullptr; }
  bool operator==(const Presheaf& other) const;
  bool identical(const Presheaf& other) const { return d_ == other.d_; }

 private:
  struct Data {
    Base base;
    std::vector<std::vector<std::string>> carriers;
    std::vector<std::vector<ElementId>> action;
    std::vector<std::unordered_map<std::string, ElementId>> lookup;
  };
  std::shared_ptr<const Data> d_;
};

/// Functoriality of the action, exhaustively.
ValidationReport validate_presheaf(const Presheaf& x);

/// An arrow of the ambient category: a natural family of functions.
class PresheafMap {
 public:
  PresheafMap() = default;
  PresheafMap(Presheaf source, Presheaf target, std::vector<std::vector<ElementId>> components);

  const Presheaf& source() const { return source_; }
  const Presheaf& target() const { return target_; }
  ElementId operator()(ObjectId c, ElementId x) const { return (*components_)[c][x]; }
  const std::vector<ElementId>& component(ObjectId c) const { return (*components_)[c]; }
  const std::vector<std::vector<ElementId>>& components() const { return *components_; }

  bool valid() const { return components_ != nullptr; }
  bool operator==(const PresheafMap& other) const;

 private:
  Presheaf source_;
  Presheaf target_;
  std::shared_ptr<const std::vector<std::vector<ElementId>>> components_;
};

/// The map with components fn(c, x); naturality is not checked here.
PresheafMap tabulate(const Presheaf& source, const Presheaf& target,
                     const std::function<ElementId(ObjectId, ElementId)>& fn);

/// Naturality squares for every index arrow.
ValidationReport validate_map(const PresheafMap& f);

PresheafMap identity_map(const Presheaf& x);
/// g∘f. Throws PreconditionError naming both maps when target(f) != source(g).
PresheafMap compose(const PresheafMap& g, const PresheafMap& f);
bool is_parallel(const PresheafMap& f, const PresheafMap& g);

/// The singleton presheaf, with element label "*".
Presheaf terminal(const Base& base);
PresheafMap to_terminal(const Presheaf& x);
Presheaf initial(const Base& base);
PresheafMap from_initial(const Presheaf& x);
/// The same finite set at every stage with identity action.
Presheaf constant(const Base& base, std::vector<std::string> labels);
/// The representable presheaf y(c): y(c)(d) = arrows d -> c, acting by
/// precomposition. Element labels are arrow labels.
Presheaf representable(const Base& base, ObjectId c);

struct Coproduct {
  Presheaf object;
  PresheafMap left;
  PresheafMap right;
  /// Copairing [f, g] : X + Y -> Z.
  PresheafMap copair(const PresheafMap& f, const PresheafMap& g) const;
};
Coproduct coproduct(const Presheaf& x, const Presheaf& y);

/// True iff every component is a bijection; the inverse when it is.
std::optional<PresheafMap> is_iso(const PresheafMap& f);
/// Pointwise injectivity.
bool is_mono(const PresheafMap& f);

/// The global element with the given per-stage choice (a section).
using Section = std::vector<ElementId>;
PresheafMap point_map(const Presheaf& x, const Section& s);
Section section_of(const PresheafMap& point);

/// Every global element ⊤ -> X, in lexicographic stage order. An optional
/// per-stage filter restricts the admissible elements.
std::vector<Section> points(const Presheaf& x);
std::vector<Section> points_filtered(const Presheaf& x,
                                     const std::vector<std::vector<bool>>& allowed);
/// Label of a point: the element label on a one-object base, otherwise
/// "{x_0;x_1;...}".
std::string point_label(const Presheaf& x, const Section& s);

/// Every presheaf map X -> Y by exhaustive search with naturality pruning.
std::vector<PresheafMap> hom_set(const Presheaf& x, const Presheaf& y);

}  // namespace intcat
