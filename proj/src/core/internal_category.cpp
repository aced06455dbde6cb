#include "intcat/core/internal_category.hpp"

#include <algorithm>

namespace intcat {

InternalCategory::InternalCategory(Presheaf obj, Presheaf arr, PresheafMap src, PresheafMap tgt,
                                   PresheafMap id, PresheafMap comp) {
  if (!(src.source() == arr) || !(src.target() == obj) || !(tgt.source() == arr) ||
      !(tgt.target() == obj))
    throw PreconditionError("InternalCategory: s and t must be maps A1 -> A0");
  if (!(id.source() == obj) || !(id.target() == arr))
    throw PreconditionError("InternalCategory: id must be a map A0 -> A1");
  auto d = std::make_shared<Data>();
  d->pairs = pullback(src, tgt);
  if (!(comp.source() == d->pairs.apex) || !(comp.target() == arr))
    throw PreconditionError("InternalCategory: comp must be a map A1 ×(s,t) A1 -> A1");
  d->obj = std::move(obj);
  d->arr = std::move(arr);
  d->src = std::move(src);
  d->tgt = std::move(tgt);
  d->id = std::move(id);
  d->comp = std::move(comp);
  const int n = d->obj.stage_count();
  d->stages.resize(n);
  for (ObjectId c = 0; c < n; ++c) {
    auto& st = d->stages[c];
    const int m = d->arr.size(c);
    const int n0 = d->obj.size(c);
    st.by_source.resize(m);
    st.by_target.resize(m);
    for (int f = 0; f < m; ++f) st.by_source[f] = st.by_target[f] = f;
    const auto& sc = d->src.component(c);
    const auto& tc = d->tgt.component(c);
    std::stable_sort(st.by_source.begin(), st.by_source.end(), [&](int a, int b) {
      return std::pair(sc[a], tc[a]) < std::pair(sc[b], tc[b]);
    });
    std::stable_sort(st.by_target.begin(), st.by_target.end(), [&](int a, int b) {
      return std::pair(tc[a], sc[a]) < std::pair(tc[b], sc[b]);
    });
    st.source_begin.assign(n0 + 1, 0);
    st.target_begin.assign(n0 + 1, 0);
    for (int f = 0; f < m; ++f) {
      ++st.source_begin[sc[f] + 1];
      ++st.target_begin[tc[f] + 1];
    }
    for (int x = 0; x < n0; ++x) {
      st.source_begin[x + 1] += st.source_begin[x];
      st.target_begin[x + 1] += st.target_begin[x];
    }
  }
  d_ = std::move(d);
}

InternalCategory InternalCategory::from_tables(
    Presheaf obj, Presheaf arr, PresheafMap src, PresheafMap tgt, PresheafMap id,
    const std::function<ElementId(ObjectId, ElementId, ElementId)>& comp) {
  auto pairs = pullback(src, tgt);
  std::vector<std::vector<ElementId>> comps(pairs.apex.stage_count());
  for (ObjectId c = 0; c < pairs.apex.stage_count(); ++c)
    for (ElementId k = 0; k < pairs.apex.size(c); ++k) {
      auto h = comp(c, pairs.legs[0](c, k), pairs.legs[1](c, k));
      if (h < 0 || h >= arr.size(c))
        throw PreconditionError("InternalCategory: composition table has a hole at '" +
                                pairs.apex.label(c, k) + "'");
      comps[c].push_back(h);
    }
  PresheafMap cm(pairs.apex, arr, std::move(comps));
  return InternalCategory(std::move(obj), std::move(arr), std::move(src), std::move(tgt), std::move(id),
                          std::move(cm));
}

std::span<const ElementId> InternalCategory::out_of(ObjectId c, ElementId x) const {
  const auto& st = d_->stages[c];
  return std::span<const ElementId>(st.by_source).subspan(
      st.source_begin[x], st.source_begin[x + 1] - st.source_begin[x]);
}

std::span<const ElementId> InternalCategory::into(ObjectId c, ElementId y) const {
  const auto& st = d_->stages[c];
  return std::span<const ElementId>(st.by_target).subspan(
      st.target_begin[y], st.target_begin[y + 1] - st.target_begin[y]);
}

std::span<const ElementId> InternalCategory::hom(ObjectId c, ElementId x, ElementId y) const {
  auto all = out_of(c, x);
  const auto& tc = d_->tgt.component(c);
  auto lo = std::lower_bound(all.begin(), all.end(), y, [&](ElementId f, ElementId v) { return tc[f] < v; });
  auto hi = std::upper_bound(lo, all.end(), y, [&](ElementId v, ElementId f) { return v < tc[f]; });
  return all.subspan(lo - all.begin(), hi - lo);
}

bool InternalCategory::operator==(const InternalCategory& o) const {
  if (d_ == o.d_) return true;
  return d_->obj == o.d_->obj && d_->arr == o.d_->arr && d_->src == o.d_->src &&
         d_->tgt == o.d_->tgt && d_->id == o.d_->id && d_->comp == o.d_->comp;
}

ValidationReport validate_internal_category(const InternalCategory& a) {
  ValidationReport r;
  r.merge(validate_presheaf(a.obj()), "A0: ");
  r.merge(validate_presheaf(a.arr()), "A1: ");
  r.merge(validate_map(a.src()), "s: ");
  r.merge(validate_map(a.tgt()), "t: ");
  r.merge(validate_map(a.id()), "id: ");
  r.merge(validate_map(a.comp()), "comp: ");
  const auto& b = *a.base();
  for (ObjectId c = 0; c < a.stage_count(); ++c) {
    const std::string at = " at stage '" + b.object_label(c) + "'";
    auto lab = [&](ElementId f) { return "'" + a.arr().label(c, f) + "'"; };
    for (ElementId x = 0; x < a.obj().size(c); ++x) {
      auto i = a.identity(c, x);
      if (a.s(c, i) != x) r.add("s(id(" + a.obj().label(c, x) + ")) != " + a.obj().label(c, x) + at);
      if (a.t(c, i) != x) r.add("t(id(" + a.obj().label(c, x) + ")) != " + a.obj().label(c, x) + at);
    }
    for (ElementId f = 0; f < a.arr().size(c); ++f) {
      if (a.compose(c, f, a.identity(c, a.s(c, f))) != f) r.add("f∘id(s f) != f for f = " + lab(f) + at);
      if (a.compose(c, a.identity(c, a.t(c, f)), f) != f) r.add("id(t f)∘f != f for f = " + lab(f) + at);
      for (auto g : a.out_of(c, a.t(c, f))) {
        auto gf = a.compose(c, g, f);
        if (a.s(c, gf) != a.s(c, f)) r.add("s(g∘f) != s(f) for (g,f) = (" + lab(g) + "," + lab(f) + ")" + at);
        if (a.t(c, gf) != a.t(c, g)) r.add("t(g∘f) != t(g) for (g,f) = (" + lab(g) + "," + lab(f) + ")" + at);
        for (auto h : a.out_of(c, a.t(c, g))) {
          auto hg = a.compose(c, h, g);
          auto l = a.compose(c, h, gf);
          auto rr = a.compose(c, hg, f);
          if (l != rr)
            r.add("associativity fails for (h,g,f) = (" + lab(h) + "," + lab(g) + "," + lab(f) + ")" + at);
        }
      }
    }
  }
  return r;
}

namespace {
bool same_presheaf_shape(const Presheaf& x, const Presheaf& y) {
  if (!x.base()->same_shape(*y.base())) return false;
  for (ObjectId c = 0; c < x.stage_count(); ++c)
    if (x.size(c) != y.size(c)) return false;
  for (ArrowId u = 0; u < x.base()->arrow_count(); ++u)
    if (x.action(u) != y.action(u)) return false;
  return true;
}
}  // namespace

bool same_tables(const InternalCategory& a, const InternalCategory& b) {
  return same_presheaf_shape(a.obj(), b.obj()) && same_presheaf_shape(a.arr(), b.arr()) &&
         a.src().components() == b.src().components() && a.tgt().components() == b.tgt().components() &&
         a.id().components() == b.id().components() && a.comp().components() == b.comp().components();
}

}  // namespace intcat
