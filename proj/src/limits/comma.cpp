#include "intcat/limits/comma.hpp"

namespace intcat {

CommaCategory comma_category(const InternalFunctor& f, const InternalFunctor& g) {
  if (!(f.target() == g.target())) throw PreconditionError("comma_category: F and G have different targets");
  const auto& x = f.source();
  const auto& y = g.source();
  const auto& z = f.target();
  CommaCategory out;
  out.f = f;
  out.g = g;
  out.objects = TuplePresheaf({x.obj(), y.obj(), z.arr()}, [&](ObjectId c, const TuplePresheaf::Emit& emit) {
    for (ElementId a = 0; a < x.obj().size(c); ++a)
      for (ElementId b = 0; b < y.obj().size(c); ++b)
        for (auto h : z.hom(c, f.on_obj(c, a), g.on_obj(c, b))) emit({a, b, h});
  });
  const auto& ob = out.objects;
  out.arrows = TuplePresheaf({x.arr(), y.arr(), z.arr(), z.arr()}, [&](ObjectId c, const TuplePresheaf::Emit& emit) {
    const int n = ob.object().size(c);
    for (ElementId o = 0; o < n; ++o)
      for (ElementId o2 = 0; o2 < n; ++o2) {
        auto h = ob.coord(c, o, 2), h2 = ob.coord(c, o2, 2);
        for (auto a : x.hom(c, ob.coord(c, o, 0), ob.coord(c, o2, 0)))
          for (auto b : y.hom(c, ob.coord(c, o, 1), ob.coord(c, o2, 1)))
            if (z.compose(c, g.on_arr(c, b), h) == z.compose(c, h2, f.on_arr(c, a))) emit({a, b, h, h2});
      }
  });
  const auto& ar = out.arrows;
  const auto& o = ob.object();
  const auto& m = ar.object();
  auto s = tabulate(m, o, [&](ObjectId c, ElementId k) {
    return ob.at(c, {x.s(c, ar.coord(c, k, 0)), y.s(c, ar.coord(c, k, 1)), ar.coord(c, k, 2)});
  });
  auto t = tabulate(m, o, [&](ObjectId c, ElementId k) {
    return ob.at(c, {x.t(c, ar.coord(c, k, 0)), y.t(c, ar.coord(c, k, 1)), ar.coord(c, k, 3)});
  });
  auto id = tabulate(o, m, [&](ObjectId c, ElementId e) {
    return ar.at(c, {x.identity(c, ob.coord(c, e, 0)), y.identity(c, ob.coord(c, e, 1)), ob.coord(c, e, 2),
                     ob.coord(c, e, 2)});
  });
  out.cat = InternalCategory::from_tables(o, m, s, t, id, [&](ObjectId c, ElementId k2, ElementId k) {
    return ar.at(c, {x.compose(c, ar.coord(c, k2, 0), ar.coord(c, k, 0)),
                     y.compose(c, ar.coord(c, k2, 1), ar.coord(c, k, 1)), ar.coord(c, k, 2), ar.coord(c, k2, 3)});
  });
  out.px = InternalFunctor(out.cat, x, ob.projection(0), ar.projection(0));
  out.py = InternalFunctor(out.cat, y, ob.projection(1), ar.projection(1));
  out.alpha = InternalNatTrans(compose_functors(f, out.px), compose_functors(g, out.py), ob.projection(2));
  return out;
}

InternalFunctor CommaCategory::mediate(const InternalFunctor& p, const InternalFunctor& q,
                                       const InternalNatTrans& beta) const {
  if (!(p.target() == f.source()) || !(q.target() == g.source()) || !(p.source() == q.source()))
    throw PreconditionError("CommaCategory::mediate: P and Q do not form a cone over (F, G)");
  if (!(beta.source() == compose_functors(f, p)) || !(beta.target() == compose_functors(g, q)))
    throw PreconditionError("CommaCategory::mediate: β is not FP => GQ");
  const auto& c0 = p.source();
  auto m0 = tabulate(c0.obj(), cat.obj(), [&](ObjectId c, ElementId e) {
    return objects.at(c, {p.on_obj(c, e), q.on_obj(c, e), beta.at(c, e)});
  });
  auto m1 = tabulate(c0.arr(), cat.arr(), [&](ObjectId c, ElementId k) {
    return arrows.at(c, {p.on_arr(c, k), q.on_arr(c, k), beta.at(c, c0.s(c, k)), beta.at(c, c0.t(c, k))});
  });
  return InternalFunctor(c0, cat, std::move(m0), std::move(m1));
}

InternalNatTrans CommaCategory::mediate(const InternalFunctor& m, const InternalFunctor& n, const InternalNatTrans& mu,
                                        const InternalNatTrans& nu) const {
  if (!(m.target() == cat) || !(n.target() == cat) || !(m.source() == n.source()))
    throw PreconditionError("CommaCategory::mediate: M and N are not parallel functors into the comma");
  if (!(mu.source() == compose_functors(px, m)) || !(mu.target() == compose_functors(px, n)) ||
      !(nu.source() == compose_functors(py, m)) || !(nu.target() == compose_functors(py, n)))
    throw PreconditionError("CommaCategory::mediate: μ, ν have the wrong endpoints");
  const auto& c0 = m.source();
  auto comp = tabulate(c0.obj(), cat.arr(), [&](ObjectId c, ElementId e) {
    auto hm = objects.coord(c, m.on_obj(c, e), 2), hn = objects.coord(c, n.on_obj(c, e), 2);
    auto k = arrows.find(c, {mu.at(c, e), nu.at(c, e), hm, hn});
    if (!k) throw PreconditionError("CommaCategory::mediate: (μ, ν) is not compatible with α");
    return *k;
  });
  return InternalNatTrans(m, n, std::move(comp));
}

FiberCategory fiber_over(const InternalFunctor& p) {
  const auto& k = p.source();
  const auto& t = p.target();
  FiberCategory out{p, Elements(t.obj()), {}, {}, {}, {}, {}};
  const auto& el = out.el;
  const auto& eb = *el.base();
  const int n = eb.object_count();
  out.object_in_k.resize(n);
  out.arrow_in_k.resize(n);
  out.object_position.assign(k.stage_count(), {});
  out.arrow_position.assign(k.stage_count(), {});
  for (ObjectId c = 0; c < k.stage_count(); ++c) {
    out.object_position[c].assign(k.obj().size(c), -1);
    out.arrow_position[c].assign(k.arr().size(c), -1);
  }
  for (ObjectId o = 0; o < n; ++o) {
    auto [c, y] = el.point(o);
    for (ElementId e = 0; e < k.obj().size(c); ++e)
      if (p.on_obj(c, e) == y) {
        out.object_position[c][e] = static_cast<ElementId>(out.object_in_k[o].size());
        out.object_in_k[o].push_back(e);
      }
    auto idy = t.identity(c, y);
    for (ElementId e = 0; e < k.arr().size(c); ++e)
      if (p.on_arr(c, e) == idy) {
        out.arrow_position[c][e] = static_cast<ElementId>(out.arrow_in_k[o].size());
        out.arrow_in_k[o].push_back(e);
      }
  }
  auto build = [&](const Presheaf& x, const std::vector<std::vector<ElementId>>& in_k,
                   const std::vector<std::vector<ElementId>>& pos) {
    std::vector<std::vector<std::string>> carriers(n);
    for (ObjectId o = 0; o < n; ++o)
      for (auto e : in_k[o]) carriers[o].push_back(x.label(el.point(o).first, e));
    std::vector<std::vector<ElementId>> action(eb.arrow_count());
    for (ArrowId w = 0; w < eb.arrow_count(); ++w) {
      auto u = el.arrow_point(w).first;
      auto src_stage = eb.source(w);
      for (auto e : in_k[eb.target(w)]) {
        auto r = pos[el.point(src_stage).first][x.restrict(u, e)];
        if (r < 0) throw EngineFault("fiber_over: fibers are not closed under restriction");
        action[w].push_back(r);
      }
    }
    return Presheaf(el.base(), std::move(carriers), std::move(action));
  };
  auto obj = build(k.obj(), out.object_in_k, out.object_position);
  auto arr = build(k.arr(), out.arrow_in_k, out.arrow_position);
  auto stage = [&](ObjectId o) { return el.point(o).first; };
  auto s = tabulate(arr, obj, [&](ObjectId o, ElementId e) {
    return out.object_position[stage(o)][k.s(stage(o), out.arrow_in_k[o][e])];
  });
  auto tt = tabulate(arr, obj, [&](ObjectId o, ElementId e) {
    return out.object_position[stage(o)][k.t(stage(o), out.arrow_in_k[o][e])];
  });
  auto id = tabulate(obj, arr, [&](ObjectId o, ElementId e) {
    return out.arrow_position[stage(o)][k.identity(stage(o), out.object_in_k[o][e])];
  });
  out.cat = InternalCategory::from_tables(obj, arr, s, tt, id, [&](ObjectId o, ElementId g, ElementId f) {
    auto c = stage(o);
    auto h = k.compose(c, out.arrow_in_k[o][g], out.arrow_in_k[o][f]);
    return h < 0 ? -1 : out.arrow_position[c][h];
  });
  return out;
}

InternalFunctor FiberCategory::restrict(const InternalFunctor& q, const InternalCategory& reindexed_b) const {
  if (!(q.source() == p.source())) throw PreconditionError("FiberCategory::restrict: Q does not start at K");
  auto f0 = tabulate(cat.obj(), reindexed_b.obj(), [&](ObjectId o, ElementId e) {
    return q.on_obj(el.point(o).first, object_in_k[o][e]);
  });
  auto f1 = tabulate(cat.arr(), reindexed_b.arr(), [&](ObjectId o, ElementId e) {
    return q.on_arr(el.point(o).first, arrow_in_k[o][e]);
  });
  return InternalFunctor(cat, reindexed_b, std::move(f0), std::move(f1));
}

}  // namespace intcat
