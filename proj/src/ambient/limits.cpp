#include "intcat/ambient/limits.hpp"

#include "intcat/labels.hpp"

namespace intcat {

ElementIndex ElementIndex::product(const Presheaf& x, const Presheaf& y) {
  ElementIndex idx;
  idx.kind_ = Kind::product;
  for (ObjectId c = 0; c < x.stage_count(); ++c) idx.stride_.push_back(y.size(c));
  return idx;
}

ElementIndex ElementIndex::pullback(const PresheafMap& f, const PresheafMap& g) {
  ElementIndex idx;
  idx.kind_ = Kind::pullback;
  const int n = f.source().stage_count();
  idx.offset_.resize(n);
  idx.rank_.resize(n);
  idx.key_x_.resize(n);
  idx.key_y_.resize(n);
  for (ObjectId c = 0; c < n; ++c) {
    const int zs = f.target().size(c);
    std::vector<int> fiber(zs, 0);
    idx.key_y_[c] = g.component(c);
    idx.rank_[c].resize(g.source().size(c));
    for (ElementId y = 0; y < g.source().size(c); ++y) idx.rank_[c][y] = fiber[g(c, y)]++;
    idx.key_x_[c] = f.component(c);
    idx.offset_[c].resize(f.source().size(c));
    ElementId next = 0;
    for (ElementId x = 0; x < f.source().size(c); ++x) {
      idx.offset_[c][x] = next;
      next += fiber[f(c, x)];
    }
  }
  return idx;
}

ElementIndex ElementIndex::subset(std::vector<std::vector<ElementId>> position) {
  ElementIndex idx;
  idx.kind_ = Kind::subset;
  idx.offset_ = std::move(position);
  return idx;
}

namespace {

void require_cone(const std::vector<PresheafMap>& cone, std::size_t arity, const char* what) {
  if (cone.size() != arity)
    throw PreconditionError(std::string(what) + ": cone has the wrong number of legs");
  for (std::size_t i = 1; i < cone.size(); ++i)
    if (!(cone[i].source() == cone[0].source()))
      throw PreconditionError(std::string(what) + ": cone legs have different sources");
}

}  // namespace

LimitCone product(const Presheaf& x, const Presheaf& y) {
  if (!same_base(x.base(), y.base())) throw PreconditionError("product: different bases");
  const auto& b = *x.base();
  const int n = b.object_count();
  std::vector<std::vector<std::string>> carriers(n);
  std::vector<std::vector<ElementId>> p1(n), p2(n);
  for (ObjectId c = 0; c < n; ++c) {
    carriers[c].reserve(static_cast<std::size_t>(x.size(c)) * y.size(c));
    for (ElementId i = 0; i < x.size(c); ++i)
      for (ElementId j = 0; j < y.size(c); ++j) {
        carriers[c].push_back(labels::tuple({x.label(c, i), y.label(c, j)}));
        p1[c].push_back(i);
        p2[c].push_back(j);
      }
  }
  std::vector<std::vector<ElementId>> action(b.arrow_count());
  for (ArrowId u = 0; u < b.arrow_count(); ++u) {
    auto c = b.source(u), c2 = b.target(u);
    for (ElementId i = 0; i < x.size(c2); ++i)
      for (ElementId j = 0; j < y.size(c2); ++j)
        action[u].push_back(x.restrict(u, i) * y.size(c) + y.restrict(u, j));
  }
  Presheaf apex(x.base(), std::move(carriers), std::move(action));
  LimitCone out;
  out.apex = apex;
  out.legs = {PresheafMap(apex, x, std::move(p1)), PresheafMap(apex, y, std::move(p2))};
  out.index = ElementIndex::product(x, y);
  auto index = out.index;
  out.mediator = [apex, x, y, index](const std::vector<PresheafMap>& cone) {
    require_cone(cone, 2, "product mediator");
    if (!(cone[0].target() == x) || !(cone[1].target() == y))
      throw PreconditionError("product mediator: legs do not land in the factors");
    const auto& z = cone[0].source();
    std::vector<std::vector<ElementId>> comps(z.stage_count());
    for (ObjectId c = 0; c < z.stage_count(); ++c)
      for (ElementId e = 0; e < z.size(c); ++e) comps[c].push_back(index(c, cone[0](c, e), cone[1](c, e)));
    return PresheafMap(z, apex, std::move(comps));
  };
  return out;
}

LimitCone pullback(const PresheafMap& f, const PresheafMap& g) {
  if (!(f.target() == g.target()))
    throw PreconditionError("pullback: the two maps do not share a target");
  const auto& x = f.source();
  const auto& y = g.source();
  const auto& b = *x.base();
  const int n = b.object_count();
  auto index = ElementIndex::pullback(f, g);
  std::vector<std::vector<std::string>> carriers(n);
  std::vector<std::vector<ElementId>> p1(n), p2(n);
  for (ObjectId c = 0; c < n; ++c)
    for (ElementId i = 0; i < x.size(c); ++i)
      for (ElementId j = 0; j < y.size(c); ++j) {
        if (f(c, i) != g(c, j)) continue;
        carriers[c].push_back(labels::tuple({x.label(c, i), y.label(c, j)}));
        p1[c].push_back(i);
        p2[c].push_back(j);
      }
  std::vector<std::vector<ElementId>> action(b.arrow_count());
  for (ArrowId u = 0; u < b.arrow_count(); ++u) {
    auto c = b.source(u), c2 = b.target(u);
    for (std::size_t e = 0; e < p1[c2].size(); ++e)
      action[u].push_back(index(c, x.restrict(u, p1[c2][e]), y.restrict(u, p2[c2][e])));
  }
  Presheaf apex(x.base(), std::move(carriers), std::move(action));
  LimitCone out;
  out.apex = apex;
  out.legs = {PresheafMap(apex, x, std::move(p1)), PresheafMap(apex, y, std::move(p2))};
  out.index = index;
  out.mediator = [apex, f, g, index](const std::vector<PresheafMap>& cone) {
    require_cone(cone, 2, "pullback mediator");
    if (!(cone[0].target() == f.source()) || !(cone[1].target() == g.source()))
      throw PreconditionError("pullback mediator: legs do not land in the factors");
    const auto& z = cone[0].source();
    std::vector<std::vector<ElementId>> comps(z.stage_count());
    for (ObjectId c = 0; c < z.stage_count(); ++c)
      for (ElementId e = 0; e < z.size(c); ++e) {
        auto k = index(c, cone[0](c, e), cone[1](c, e));
        if (k < 0) throw PreconditionError("pullback mediator: cone does not commute");
        comps[c].push_back(k);
      }
    return PresheafMap(z, apex, std::move(comps));
  };
  return out;
}

LimitCone equalizer(const PresheafMap& f, const PresheafMap& g) {
  if (!is_parallel(f, g)) throw PreconditionError("equalizer: maps are not parallel");
  const auto& x = f.source();
  const auto& b = *x.base();
  const int n = b.object_count();
  std::vector<std::vector<std::string>> carriers(n);
  std::vector<std::vector<ElementId>> incl(n), position(n);
  for (ObjectId c = 0; c < n; ++c) {
    position[c].assign(x.size(c), -1);
    for (ElementId e = 0; e < x.size(c); ++e)
      if (f(c, e) == g(c, e)) {
        position[c][e] = static_cast<ElementId>(incl[c].size());
        incl[c].push_back(e);
        carriers[c].push_back(x.label(c, e));
      }
  }
  std::vector<std::vector<ElementId>> action(b.arrow_count());
  for (ArrowId u = 0; u < b.arrow_count(); ++u) {
    auto c = b.source(u), c2 = b.target(u);
    for (auto e : incl[c2]) action[u].push_back(position[c][x.restrict(u, e)]);
  }
  Presheaf apex(x.base(), std::move(carriers), std::move(action));
  LimitCone out;
  out.apex = apex;
  out.legs = {PresheafMap(apex, x, std::move(incl))};
  out.index = ElementIndex::subset(position);
  auto index = out.index;
  out.mediator = [apex, x, index](const std::vector<PresheafMap>& cone) {
    require_cone(cone, 1, "equalizer mediator");
    if (!(cone[0].target() == x))
      throw PreconditionError("equalizer mediator: leg does not land in the source");
    const auto& z = cone[0].source();
    std::vector<std::vector<ElementId>> comps(z.stage_count());
    for (ObjectId c = 0; c < z.stage_count(); ++c)
      for (ElementId e = 0; e < z.size(c); ++e) {
        auto k = index(c, cone[0](c, e));
        if (k < 0) throw PreconditionError("equalizer mediator: leg does not equalize");
        comps[c].push_back(k);
      }
    return PresheafMap(z, apex, std::move(comps));
  };
  return out;
}

PresheafMap pairing(const LimitCone& prod, const PresheafMap& f, const PresheafMap& g) {
  return prod.mediator({f, g});
}

PresheafMap product_map(const LimitCone& from, const LimitCone& to, const PresheafMap& f,
                        const PresheafMap& g) {
  return to.mediator({compose(f, from.legs[0]), compose(g, from.legs[1])});
}

}  // namespace intcat
