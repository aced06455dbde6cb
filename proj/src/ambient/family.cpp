#include "intcat/ambient/family.hpp"

#include "intcat/labels.hpp"

namespace intcat {

FamilyLayout::FamilyLayout(const Base& base, ObjectId stage, const std::vector<FamilyBlock>& blocks)
    : stage_(stage) {
  const auto& b = *base;
  arrows_.push_back(b.identity(stage));
  for (auto u : b.arrows_into(stage))
    if (u != b.identity(stage)) arrows_.push_back(u);
  slot_.assign(b.arrow_count(), -1);
  for (std::size_t k = 0; k < arrows_.size(); ++k) slot_[arrows_[k]] = static_cast<int>(k);
  offset_.assign(blocks.size(), std::vector<int>(arrows_.size(), 0));
  // Slot-major so that every block's identity variables are branched first.
  for (std::size_t k = 0; k < arrows_.size(); ++k) {
    auto d = b.source(arrows_[k]);
    for (std::size_t bl = 0; bl < blocks.size(); ++bl) {
      offset_[bl][k] = count_;
      count_ += blocks[bl].source.size(d);
    }
  }
}

FamilySpace::FamilySpace(const Base& base, ObjectId stage, const std::vector<FamilyBlock>& blocks)
    : base_(base), blocks_(blocks), layout_(base, stage, blocks) {
  const auto& b = *base_;
  for (const auto& bl : blocks_)
    if (!same_base(bl.source.base(), base_) || !same_base(bl.target.base(), base_))
      throw PreconditionError("FamilySpace: block lives on a different base");
  for (int v = 0; v < layout_.variable_count(); ++v) problem_.add_variable(0);
  for (std::size_t bl = 0; bl < blocks_.size(); ++bl) {
    const auto& x = blocks_[bl].source;
    const auto& y = blocks_[bl].target;
    for (auto u : layout_.arrows()) {
      auto d = b.source(u);
      for (ElementId e = 0; e < x.size(d); ++e) problem_.domain[layout_.var(static_cast<int>(bl), u, e)] = y.size(d);
    }
  }
  for (std::size_t bl = 0; bl < blocks_.size(); ++bl) {
    const auto& x = blocks_[bl].source;
    const auto& y = blocks_[bl].target;
    const int bi = static_cast<int>(bl);
    for (auto u : layout_.arrows()) {
      auto d = b.source(u);
      for (auto w : b.arrows_into(d)) {
        if (b.is_identity(w)) continue;
        auto uw = b.compose(u, w);
        for (ElementId e = 0; e < x.size(d); ++e)
          problem_.link(layout_.var(bi, u, e), layout_.var(bi, uw, x.restrict(w, e)), y.action(w));
      }
    }
  }
}

std::string family_label(const std::vector<FamilyBlock>& blocks, const FamilyLayout& layout,
                         const std::vector<int>& assignment, const IndexCategory& base) {
  std::vector<std::string> parts;
  for (std::size_t bl = 0; bl < blocks.size(); ++bl) {
    std::vector<std::string> vals;
    for (auto u : layout.arrows()) {
      auto d = base.source(u);
      for (ElementId e = 0; e < blocks[bl].source.size(d); ++e)
        vals.push_back(blocks[bl].target.label(d, assignment[layout.var(static_cast<int>(bl), u, e)]));
    }
    parts.push_back(labels::family_of(vals));
  }
  if (parts.size() == 1) return parts[0];
  return labels::tuple_of(parts);
}

FamilyPresheaf::FamilyPresheaf(const Base& base, const FamilySpec& spec)
    : FamilyPresheaf(base, spec, default_execution()) {}

FamilyPresheaf::FamilyPresheaf(const Base& base, const FamilySpec& spec, Execution mode) {
  auto d = std::make_shared<Data>();
  const auto& b = *base;
  const int n = b.object_count();
  d->base = base;
  d->blocks = spec.blocks;
  d->values.resize(n);
  d->lookup.resize(n);
  for (ObjectId c = 0; c < n; ++c) {
    FamilySpace space(base, c, spec.blocks);
    if (spec.constrain) spec.constrain(space);
    d->layouts.push_back(space.layout());
    d->values[c] = solve(space.problem(), mode);
    for (std::size_t e = 0; e < d->values[c].size(); ++e)
      d->lookup[c].emplace(d->values[c][e], static_cast<ElementId>(e));
  }
  std::vector<std::vector<std::string>> carriers(n);
  for (ObjectId c = 0; c < n; ++c)
    for (const auto& a : d->values[c])
      carriers[c].push_back(spec.label ? spec.label(d->layouts[c], a)
                                       : family_label(spec.blocks, d->layouts[c], a, b));
  std::vector<std::vector<ElementId>> action(b.arrow_count());
  for (ArrowId w = 0; w < b.arrow_count(); ++w) {
    auto c2 = b.source(w), c = b.target(w);
    const auto& lay = d->layouts[c];
    const auto& lay2 = d->layouts[c2];
    for (const auto& a : d->values[c]) {
      std::vector<int> r(lay2.variable_count());
      for (std::size_t bl = 0; bl < spec.blocks.size(); ++bl) {
        const int bi = static_cast<int>(bl);
        for (auto u : lay2.arrows()) {
          auto dd = b.source(u);
          auto wu = b.compose(w, u);
          for (ElementId e = 0; e < spec.blocks[bl].source.size(dd); ++e)
            r[lay2.var(bi, u, e)] = a[lay.var(bi, wu, e)];
        }
      }
      auto it = d->lookup[c2].find(r);
      if (it == d->lookup[c2].end())
        throw EngineFault("FamilyPresheaf: family set is not closed under restriction along '" +
                          b.arrow(w).label + "'");
      action[w].push_back(it->second);
    }
  }
  d->object = Presheaf(base, std::move(carriers), std::move(action));
  d_ = std::move(d);
}

std::optional<ElementId> FamilyPresheaf::find(ObjectId c, const std::vector<int>& assignment) const {
  auto it = d_->lookup[c].find(assignment);
  if (it == d_->lookup[c].end()) return std::nullopt;
  return it->second;
}

std::optional<ElementId> FamilyPresheaf::find(
    ObjectId c, const std::function<ElementId(int, ArrowId, ElementId)>& value) const {
  const auto& lay = d_->layouts[c];
  const auto& b = *d_->base;
  std::vector<int> a(lay.variable_count());
  for (std::size_t bl = 0; bl < d_->blocks.size(); ++bl) {
    const int bi = static_cast<int>(bl);
    for (auto u : lay.arrows())
      for (ElementId e = 0; e < d_->blocks[bl].source.size(b.source(u)); ++e)
        a[lay.var(bi, u, e)] = value(bi, u, e);
  }
  return find(c, a);
}

}  // namespace intcat
