#include "intcat/core/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "intcat/labels.hpp"

namespace intcat {

InternalCategory discrete(const Presheaf& x) {
  auto one = identity_map(x);
  return InternalCategory::from_tables(x, x, one, one, one,
                                       [](ObjectId, ElementId g, ElementId) { return g; });
}

InternalCategory indiscrete(const Presheaf& x) {
  auto sq = product(x, x);
  auto diag = tabulate(x, sq.apex, [&](ObjectId c, ElementId e) { return sq.index(c, e, e); });
  const auto& p1 = sq.legs[0];
  const auto& p2 = sq.legs[1];
  return InternalCategory::from_tables(x, sq.apex, p1, p2, diag, [&](ObjectId c, ElementId g, ElementId f) {
    return sq.index(c, p1(c, f), p2(c, g));
  });
}

InternalCategory opposite(const InternalCategory& a) {
  return InternalCategory::from_tables(a.obj(), a.arr(), a.tgt(), a.src(), a.id(),
                                       [&](ObjectId c, ElementId g, ElementId f) { return a.compose(c, f, g); });
}

InternalFunctor opposite_functor(const InternalFunctor& f) {
  return InternalFunctor(opposite(f.source()), opposite(f.target()), f.f0(), f.f1());
}

InternalNatTrans opposite_nat(const InternalNatTrans& alpha) {
  return InternalNatTrans(opposite_functor(alpha.target()), opposite_functor(alpha.source()),
                          alpha.component());
}

ProductCategory product_cat(const InternalCategory& a, const InternalCategory& b) {
  if (!same_base(a.base(), b.base())) throw PreconditionError("product_cat: different bases");
  ProductCategory p;
  p.obj = product(a.obj(), b.obj());
  p.arr = product(a.arr(), b.arr());
  auto s = product_map(p.arr, p.obj, a.src(), b.src());
  auto t = product_map(p.arr, p.obj, a.tgt(), b.tgt());
  auto id = product_map(p.obj, p.arr, a.id(), b.id());
  const auto& arr = p.arr;
  p.cat = InternalCategory::from_tables(p.obj.apex, p.arr.apex, s, t, id, [&](ObjectId c, ElementId g, ElementId f) {
    auto l = a.compose(c, arr.legs[0](c, g), arr.legs[0](c, f));
    auto r = b.compose(c, arr.legs[1](c, g), arr.legs[1](c, f));
    return arr.index(c, l, r);
  });
  p.first = InternalFunctor(p.cat, a, p.obj.legs[0], p.arr.legs[0]);
  p.second = InternalFunctor(p.cat, b, p.obj.legs[1], p.arr.legs[1]);
  return p;
}

InternalFunctor ProductCategory::pair(const InternalFunctor& f, const InternalFunctor& g) const {
  if (!(f.source() == g.source())) throw PreconditionError("pair: functors have different sources");
  if (!(f.target() == first.target()) || !(g.target() == second.target()))
    throw PreconditionError("pair: functors do not land in the factors");
  return InternalFunctor(f.source(), cat, obj.mediator({f.f0(), g.f0()}), arr.mediator({f.f1(), g.f1()}));
}

InternalFunctor ProductCategory::times(const ProductCategory& to, const InternalFunctor& f,
                                       const InternalFunctor& g) const {
  return to.pair(compose_functors(f, first), compose_functors(g, second));
}

InternalCategory terminal_cat(const Base& base) { return discrete(terminal(base)); }
InternalCategory initial_cat(const Base& base) { return discrete(initial(base)); }

InternalFunctor to_terminal_cat(const InternalCategory& a) {
  auto one = terminal_cat(a.base());
  return InternalFunctor(a, one, to_terminal(a.obj()), to_terminal(a.arr()));
}

ExternalCategory points_of_cat(const InternalCategory& a) {
  ExternalCategory out;
  out.objects = points(a.obj());
  out.arrows = points(a.arr());
  std::map<Section, ObjectId> obj_index;
  std::map<Section, ArrowId> arr_index;
  for (std::size_t i = 0; i < out.objects.size(); ++i) obj_index[out.objects[i]] = static_cast<ObjectId>(i);
  for (std::size_t i = 0; i < out.arrows.size(); ++i) arr_index[out.arrows[i]] = static_cast<ArrowId>(i);
  const int n = a.stage_count();
  auto apply = [&](const Section& s, auto&& fn) {
    Section r(n);
    for (ObjectId c = 0; c < n; ++c) r[c] = fn(c, s[c]);
    return r;
  };
  std::vector<std::string> objects;
  for (const auto& s : out.objects) objects.push_back(point_label(a.obj(), s));
  std::vector<IndexCategory::Arrow> arrows;
  for (const auto& f : out.arrows) {
    auto s = apply(f, [&](ObjectId c, ElementId e) { return a.s(c, e); });
    auto t = apply(f, [&](ObjectId c, ElementId e) { return a.t(c, e); });
    arrows.push_back({point_label(a.arr(), f), obj_index.at(s), obj_index.at(t)});
  }
  std::vector<ArrowId> ids;
  for (const auto& x : out.objects)
    ids.push_back(arr_index.at(apply(x, [&](ObjectId c, ElementId e) { return a.identity(c, e); })));
  const auto m = out.arrows.size();
  std::vector<ArrowId> comp(m * m, -1);
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t f = 0; f < m; ++f) {
      if (arrows[f].target != arrows[g].source) continue;
      Section r(n);
      for (ObjectId c = 0; c < n; ++c) r[c] = a.compose(c, out.arrows[g][c], out.arrows[f][c]);
      comp[g * m + f] = arr_index.at(r);
    }
  out.category = std::make_shared<const IndexCategory>(std::move(objects), std::move(arrows), std::move(ids),
                                                       std::move(comp));
  return out;
}

InternalCategory constant_cat(const Base& base, const IndexCategory& shape) {
  std::vector<std::string> objs = shape.objects();
  std::vector<std::string> arrs;
  for (const auto& a : shape.arrows()) arrs.push_back(a.label);
  auto a0 = constant(base, objs);
  auto a1 = constant(base, arrs);
  auto s = tabulate(a1, a0, [&](ObjectId, ElementId f) { return shape.source(f); });
  auto t = tabulate(a1, a0, [&](ObjectId, ElementId f) { return shape.target(f); });
  auto id = tabulate(a0, a1, [&](ObjectId, ElementId x) { return shape.identity(x); });
  return InternalCategory::from_tables(a0, a1, s, t, id,
                                       [&](ObjectId, ElementId g, ElementId f) { return shape.compose(g, f); });
}

std::vector<std::vector<bool>> order_closure(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) leq[i][i] = true;
  for (auto [a, b] : pairs) leq[a][b] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (leq[i][k])
        for (int j = 0; j < n; ++j)
          if (leq[k][j]) leq[i][j] = true;
  return leq;
}

InternalCategory poset_category(const std::vector<std::string>& elements,
                                const std::vector<std::pair<std::string, std::string>>& order) {
  const int n = static_cast<int>(elements.size());
  std::map<std::string, int> index;
  for (int i = 0; i < n; ++i)
    if (!index.emplace(elements[i], i).second)
      throw PreconditionError("poset_category: duplicate element '" + elements[i] + "'");
  std::vector<std::pair<int, int>> pairs;
  for (const auto& [a, b] : order) {
    auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end() || ib == index.end())
      throw PreconditionError("poset_category: order pair mentions an unknown element");
    pairs.emplace_back(ia->second, ib->second);
  }
  auto leq = order_closure(n, pairs);
  std::vector<std::string> arr_labels;
  std::vector<int> src, tgt;
  std::vector<std::vector<int>> arrow_of(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (leq[i][j]) {
        arrow_of[i][j] = static_cast<int>(arr_labels.size());
        arr_labels.push_back(elements[i] + "<=" + elements[j]);
        src.push_back(i);
        tgt.push_back(j);
      }
  auto base = point_base();
  auto a0 = constant(base, elements);
  auto a1 = constant(base, arr_labels);
  auto s = tabulate(a1, a0, [&](ObjectId, ElementId f) { return src[f]; });
  auto t = tabulate(a1, a0, [&](ObjectId, ElementId f) { return tgt[f]; });
  auto id = tabulate(a0, a1, [&](ObjectId, ElementId x) { return arrow_of[x][x]; });
  return InternalCategory::from_tables(a0, a1, s, t, id, [&](ObjectId, ElementId g, ElementId f) {
    return arrow_of[src[f]][tgt[g]];
  });
}

InternalCategory reindex_cat(const Elements& el, const InternalCategory& a) {
  return InternalCategory(reindex(el, a.obj()), reindex(el, a.arr()), reindex(el, a.src()),
                          reindex(el, a.tgt()), reindex(el, a.id()), reindex(el, a.comp()));
}

InternalFunctor reindex_functor(const Elements& el, const InternalFunctor& f, const InternalCategory& source,
                                const InternalCategory& target) {
  return InternalFunctor(source, target, reindex(el, f.f0()), reindex(el, f.f1()));
}

namespace {

// Elements of Σ P at each stage, split as (x, e) with e in P(c, x).
struct SumIndex {
  std::vector<std::vector<int>> offset;
  std::vector<std::vector<std::pair<ElementId, ElementId>>> split;

  SumIndex(const Elements& el, const Presheaf& fibers) {
    const auto& i = el.over();
    offset.resize(i.stage_count());
    split.resize(i.stage_count());
    for (ObjectId c = 0; c < i.stage_count(); ++c)
      for (ElementId x = 0; x < i.size(c); ++x) {
        offset[c].push_back(static_cast<int>(split[c].size()));
        for (ElementId e = 0; e < fibers.size(el.object(c, x)); ++e) split[c].emplace_back(x, e);
      }
  }
};

}  // namespace

InternalCategory total_cat(const Elements& over_j, const InternalCategory& a) {
  auto obj = from_slice(over_j, a.obj());
  auto arr = from_slice(over_j, a.arr());
  auto s = from_slice(over_j, a.src());
  auto t = from_slice(over_j, a.tgt());
  auto id = from_slice(over_j, a.id());
  SumIndex ai(over_j, a.arr());
  return InternalCategory::from_tables(obj.object(), arr.object(), s, t, id, [&](ObjectId c, ElementId g, ElementId f) {
    auto [x, gl] = ai.split[c][g];
    auto [x2, fl] = ai.split[c][f];
    if (x != x2) return -1;
    auto o = over_j.object(c, x);
    auto h = a.compose(o, gl, fl);
    return h < 0 ? -1 : ai.offset[c][x] + h;
  });
}

InternalCategory dependent_sum_cat(const Elements& over_j, const Elements& over_i, const PresheafMap& i,
                                   const InternalCategory& a) {
  if (!(i.source() == over_j.over()) || !(i.target() == over_i.over()))
    throw PreconditionError("dependent_sum_cat: i does not match the two slices");
  auto total = total_cat(over_j, a);
  auto obj_over = from_slice(over_j, a.obj()).structure;
  auto arr_over = from_slice(over_j, a.arr()).structure;
  auto p0 = compose(i, obj_over);
  auto p1 = compose(i, arr_over);
  auto obj = to_slice(over_i, p0);
  auto arr = to_slice(over_i, p1);
  auto s = to_slice(over_i, p1, p0, total.src());
  auto t = to_slice(over_i, p1, p0, total.tgt());
  auto id = to_slice(over_i, p0, p1, total.id());
  // Position of each total arrow inside its fiber over I, and back.
  const auto& ti = over_i.over();
  std::vector<std::vector<std::vector<ElementId>>> members(ti.stage_count());
  std::vector<std::vector<int>> pos(ti.stage_count());
  for (ObjectId c = 0; c < ti.stage_count(); ++c) {
    members[c].resize(ti.size(c));
    for (ElementId e = 0; e < total.arr().size(c); ++e) {
      auto& m = members[c][p1(c, e)];
      pos[c].push_back(static_cast<int>(m.size()));
      m.push_back(e);
    }
  }
  return InternalCategory::from_tables(obj, arr, s, t, id, [&](ObjectId o, ElementId g, ElementId f) {
    auto [c, xi] = over_i.point(o);
    auto h = total.compose(c, members[c][xi][g], members[c][xi][f]);
    return h < 0 ? -1 : pos[c][h];
  });
}

ValidationReport adjunction_check(const InternalFunctor& l, const InternalFunctor& r,
                                  const InternalNatTrans& unit, const InternalNatTrans& counit) {
  ValidationReport rep;
  const auto& a = l.source();
  const auto& b = l.target();
  if (!(r.source() == b) || !(r.target() == a)) {
    rep.add("L and R do not go in opposite directions");
    return rep;
  }
  if (!(unit.source() == identity_functor(a)) || !(unit.target() == compose_functors(r, l)))
    rep.add("unit is not Id => RL");
  if (!(counit.source() == compose_functors(l, r)) || !(counit.target() == identity_functor(b)))
    rep.add("counit is not LR => Id");
  if (!rep.ok()) return rep;
  rep.merge(validate_nat(unit), "unit: ");
  rep.merge(validate_nat(counit), "counit: ");
  const auto& base = *a.base();
  for (ObjectId c = 0; c < a.stage_count(); ++c) {
    for (ElementId x = 0; x < a.obj().size(c); ++x) {
      auto lx = l.on_obj(c, x);
      auto v = b.compose(c, counit.at(c, lx), l.on_arr(c, unit.at(c, x)));
      if (v != b.identity(c, lx))
        rep.add("first triangle identity fails at '" + a.obj().label(c, x) + "' at stage '" +
                base.object_label(c) + "'");
    }
    for (ElementId y = 0; y < b.obj().size(c); ++y) {
      auto ry = r.on_obj(c, y);
      auto v = a.compose(c, r.on_arr(c, counit.at(c, y)), unit.at(c, ry));
      if (v != a.identity(c, ry))
        rep.add("second triangle identity fails at '" + b.obj().label(c, y) + "' at stage '" +
                base.object_label(c) + "'");
    }
  }
  return rep;
}

DisUIndCounts dis_u_ind_adjunctions(const Presheaf& x, const InternalCategory& a) {
  DisUIndCounts out;
  auto dis = discrete(x);
  auto ind = indiscrete(x);
  auto f_dis = all_functors(dis, a);
  auto m_in = hom_set(x, a.obj());
  auto f_ind = all_functors(a, ind);
  auto m_out = hom_set(a.obj(), x);
  out.dis_functors = f_dis.size();
  out.maps_into_a0 = m_in.size();
  out.ind_functors = f_ind.size();
  out.maps_from_a0 = m_out.size();
  if (f_dis.size() != m_in.size()) out.report.add("|Hom(Dis X, A)| != |Hom(X, A0)|");
  if (f_ind.size() != m_out.size()) out.report.add("|Hom(A, Ind X)| != |Hom(A0, X)|");

  std::set<std::vector<std::vector<ElementId>>> seen;
  for (const auto& f : f_dis) {
    seen.insert(f.f0().components());
    InternalFunctor back(dis, a, f.f0(), compose(a.id(), f.f0()));
    if (!(back == f)) out.report.add("Dis -| U: transpose of a functor does not round-trip");
  }
  for (const auto& g : m_in) {
    if (!seen.count(g.components())) out.report.add("Dis -| U: a map X -> A0 has no functor");
    InternalFunctor back(dis, a, g, compose(a.id(), g));
    if (!validate_functor(back).ok()) out.report.add("Dis -| U: transpose of a map is not a functor");
  }
  seen.clear();
  auto sq = product(x, x);
  for (const auto& f : f_ind) {
    seen.insert(f.f0().components());
    auto f1 = sq.mediator({compose(f.f0(), a.src()), compose(f.f0(), a.tgt())});
    if (!(InternalFunctor(a, ind, f.f0(), f1) == f)) out.report.add("U -| Ind: transpose of a functor does not round-trip");
  }
  for (const auto& g : m_out) {
    if (!seen.count(g.components())) out.report.add("U -| Ind: a map A0 -> X has no functor");
    auto f1 = sq.mediator({compose(g, a.src()), compose(g, a.tgt())});
    if (!validate_functor(InternalFunctor(a, ind, g, f1)).ok())
      out.report.add("U -| Ind: transpose of a map is not a functor");
  }
  return out;
}

}  // namespace intcat
