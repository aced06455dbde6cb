#include "intcat/ambient/slice.hpp"

#include <algorithm>
#include <set>

#include "intcat/labels.hpp"

namespace intcat {

Elements::Elements(Presheaf over) : over_(std::move(over)) {
  const auto& b = *over_.base();
  std::vector<std::string> objects;
  object_of_.resize(b.object_count());
  for (ObjectId c = 0; c < b.object_count(); ++c)
    for (ElementId x = 0; x < over_.size(c); ++x) {
      object_of_[c].push_back(static_cast<ObjectId>(points_.size()));
      points_.emplace_back(c, x);
      objects.push_back(labels::tuple({b.object_label(c), over_.label(c, x)}));
    }
  std::vector<IndexCategory::Arrow> arrows;
  arrow_of_.resize(b.arrow_count());
  for (ArrowId u = 0; u < b.arrow_count(); ++u) {
    auto c = b.source(u), c2 = b.target(u);
    for (ElementId x2 = 0; x2 < over_.size(c2); ++x2) {
      arrow_of_[u].push_back(static_cast<ArrowId>(arrow_points_.size()));
      arrow_points_.emplace_back(u, x2);
      arrows.push_back({labels::tuple({b.arrow(u).label, over_.label(c2, x2)}),
                        object_of_[c][over_.restrict(u, x2)], object_of_[c2][x2]});
    }
  }
  std::vector<ArrowId> ids;
  for (const auto& [c, x] : points_) ids.push_back(arrow_of_[b.identity(c)][x]);
  const auto m = arrows.size();
  std::vector<ArrowId> comp(m * m, -1);
  for (std::size_t g = 0; g < m; ++g) {
    auto [v, x3] = arrow_points_[g];
    for (std::size_t f = 0; f < m; ++f) {
      if (arrows[f].target != arrows[g].source) continue;
      auto [u, x2] = arrow_points_[f];
      (void)x2;
      comp[g * m + f] = arrow_of_[b.compose(v, u)][x3];
    }
  }
  base_ = std::make_shared<const IndexCategory>(std::move(objects), std::move(arrows), std::move(ids),
                                                std::move(comp));
}

Elements elements_category(const Presheaf& i) { return Elements(i); }

Presheaf reindex(const Elements& el, const Presheaf& x) {
  if (!same_base(x.base(), el.over().base())) throw PreconditionError("reindex: different bases");
  const auto& b = *el.base();
  std::vector<std::vector<std::string>> carriers(b.object_count());
  for (ObjectId o = 0; o < b.object_count(); ++o) carriers[o] = x.carrier(el.point(o).first);
  std::vector<std::vector<ElementId>> action(b.arrow_count());
  for (ArrowId a = 0; a < b.arrow_count(); ++a) action[a] = x.action(el.arrow_point(a).first);
  return Presheaf(el.base(), std::move(carriers), std::move(action));
}

PresheafMap reindex(const Elements& el, const PresheafMap& f) {
  const auto& b = *el.base();
  std::vector<std::vector<ElementId>> comps(b.object_count());
  for (ObjectId o = 0; o < b.object_count(); ++o) comps[o] = f.component(el.point(o).first);
  return PresheafMap(reindex(el, f.source()), reindex(el, f.target()), std::move(comps));
}

namespace {

// Position of each element of X(c) inside its fiber over I.
std::vector<std::vector<ElementId>> fiber_positions(const PresheafMap& p) {
  const auto& x = p.source();
  std::vector<std::vector<ElementId>> pos(x.stage_count());
  for (ObjectId c = 0; c < x.stage_count(); ++c) {
    std::vector<int> next(p.target().size(c), 0);
    for (ElementId e = 0; e < x.size(c); ++e) pos[c].push_back(next[p(c, e)]++);
  }
  return pos;
}

std::vector<std::vector<int>> sum_offsets(const Elements& el, const Presheaf& fibers) {
  const auto& i = el.over();
  std::vector<std::vector<int>> off(i.stage_count());
  for (ObjectId c = 0; c < i.stage_count(); ++c) {
    int next = 0;
    for (ElementId x = 0; x < i.size(c); ++x) {
      off[c].push_back(next);
      next += fibers.size(el.object(c, x));
    }
  }
  return off;
}

}  // namespace

Presheaf to_slice(const Elements& el, const PresheafMap& p) {
  if (!(p.target() == el.over())) throw PreconditionError("to_slice: map does not land in I");
  const auto& x = p.source();
  const auto& b = *el.base();
  auto pos = fiber_positions(p);
  std::vector<std::vector<std::string>> carriers(b.object_count());
  for (ObjectId c = 0; c < x.stage_count(); ++c)
    for (ElementId e = 0; e < x.size(c); ++e) carriers[el.object(c, p(c, e))].push_back(x.label(c, e));
  std::vector<std::vector<ElementId>> action(b.arrow_count());
  const auto& base = *x.base();
  for (ArrowId u = 0; u < base.arrow_count(); ++u) {
    auto c = base.source(u), c2 = base.target(u);
    for (ElementId e = 0; e < x.size(c2); ++e)
      action[el.arrow(u, p(c2, e))].push_back(pos[c][x.restrict(u, e)]);
  }
  return Presheaf(el.base(), std::move(carriers), std::move(action));
}

PresheafMap to_slice(const Elements& el, const PresheafMap& p, const PresheafMap& q,
                     const PresheafMap& f) {
  if (!(f.source() == p.source()) || !(f.target() == q.source()) ||
      !(compose(q, f) == p))
    throw PreconditionError("to_slice: map does not commute with the structure maps");
  auto src = to_slice(el, p);
  auto tgt = to_slice(el, q);
  auto pos = fiber_positions(q);
  const auto& x = p.source();
  std::vector<std::vector<ElementId>> comps(el.base()->object_count());
  for (ObjectId c = 0; c < x.stage_count(); ++c)
    for (ElementId e = 0; e < x.size(c); ++e) comps[el.object(c, p(c, e))].push_back(pos[c][f(c, e)]);
  return PresheafMap(src, tgt, std::move(comps));
}

Over from_slice(const Elements& el, const Presheaf& fibers) {
  if (!same_base(fibers.base(), el.base())) throw PreconditionError("from_slice: wrong base");
  const auto& i = el.over();
  const auto& b = *i.base();
  auto off = sum_offsets(el, fibers);
  std::vector<std::vector<std::string>> carriers(b.object_count());
  std::vector<std::vector<ElementId>> proj(b.object_count());
  for (ObjectId c = 0; c < b.object_count(); ++c)
    for (ElementId x = 0; x < i.size(c); ++x) {
      auto o = el.object(c, x);
      for (ElementId e = 0; e < fibers.size(o); ++e) {
        carriers[c].push_back(labels::tuple({i.label(c, x), fibers.label(o, e)}));
        proj[c].push_back(x);
      }
    }
  std::vector<std::vector<ElementId>> action(b.arrow_count());
  for (ArrowId u = 0; u < b.arrow_count(); ++u) {
    auto c = b.source(u), c2 = b.target(u);
    for (ElementId x2 = 0; x2 < i.size(c2); ++x2) {
      auto a = el.arrow(u, x2);
      for (ElementId e = 0; e < fibers.size(el.object(c2, x2)); ++e)
        action[u].push_back(off[c][i.restrict(u, x2)] + fibers.restrict(a, e));
    }
  }
  Presheaf sum(i.base(), std::move(carriers), std::move(action));
  return Over{PresheafMap(sum, i, std::move(proj))};
}

PresheafMap from_slice(const Elements& el, const PresheafMap& m) {
  auto src = from_slice(el, m.source());
  auto tgt = from_slice(el, m.target());
  auto off = sum_offsets(el, m.target());
  const auto& i = el.over();
  std::vector<std::vector<ElementId>> comps(i.stage_count());
  for (ObjectId c = 0; c < i.stage_count(); ++c)
    for (ElementId x = 0; x < i.size(c); ++x) {
      auto o = el.object(c, x);
      for (ElementId e = 0; e < m.source().size(o); ++e) comps[c].push_back(off[c][x] + m(o, e));
    }
  return PresheafMap(src.object(), tgt.object(), std::move(comps));
}

PresheafMap section_to_map(const Elements& el, const Presheaf& x, const Section& s) {
  const auto& i = el.over();
  std::vector<std::vector<ElementId>> comps(i.stage_count());
  for (ObjectId c = 0; c < i.stage_count(); ++c)
    for (ElementId e = 0; e < i.size(c); ++e) comps[c].push_back(s[el.object(c, e)]);
  return PresheafMap(i, x, std::move(comps));
}

Section map_to_section(const Elements& el, const PresheafMap& f) {
  if (!(f.source() == el.over())) throw PreconditionError("map_to_section: map does not start at I");
  Section s(el.base()->object_count());
  for (ObjectId o = 0; o < el.base()->object_count(); ++o) {
    auto [c, x] = el.point(o);
    s[o] = f(c, x);
  }
  return s;
}

Over base_change(const PresheafMap& i, const Over& x) {
  if (!(x.over() == i.target())) throw PreconditionError("base_change: structure map is not over the target of i");
  auto pb = pullback(x.structure, i);
  return Over{pb.legs[1]};
}

Over dependent_sum(const PresheafMap& i, const Over& y) {
  if (!(y.over() == i.source())) throw PreconditionError("dependent_sum: structure map is not over the source of i");
  return Over{compose(i, y.structure)};
}

std::vector<PresheafMap> hom_over(const Over& a, const Over& b) {
  if (!(a.over() == b.over())) throw PreconditionError("hom_over: objects over different bases");
  std::vector<PresheafMap> out;
  for (auto& f : hom_set(a.object(), b.object()))
    if (compose(b.structure, f) == a.structure) out.push_back(std::move(f));
  return out;
}

ValidationReport check_sum_reindex_adjunction(const PresheafMap& i, const Over& y, const Over& x) {
  ValidationReport r;
  auto sum = dependent_sum(i, y);
  auto pb = pullback(x.structure, i);
  Over rx{pb.legs[1]};
  auto left = hom_over(sum, x);
  auto right = hom_over(y, rx);
  if (left.size() != right.size())
    r.add("hom-set sizes differ: " + std::to_string(left.size()) + " vs " + std::to_string(right.size()));
  std::set<std::vector<std::vector<ElementId>>> image;
  for (const auto& f : left) {
    auto g = pb.mediator({f, y.structure});
    if (!(compose(rx.structure, g) == y.structure)) r.add("transposed map is not over J");
    image.insert(g.components());
  }
  if (image.size() != left.size()) r.add("transposition is not injective");
  for (const auto& g : right)
    if (!image.count(g.components())) r.add("transposition misses a map Y -> i*X");
  return r;
}

}  // namespace intcat
