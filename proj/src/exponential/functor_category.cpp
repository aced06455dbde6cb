#include "intcat/exponential/functor_category.hpp"

namespace intcat {

namespace {

// The functor equations for blocks (b0, b1) = (F0, F1) at every index of the
// stage.
void add_functor_equations(FamilySpace& sp, const InternalCategory& a, const InternalCategory& b, int b0, int b1) {
  const auto& base = sp.base();
  auto& p = sp.problem();
  for (auto u : sp.arrows()) {
    auto d = base.source(u);
    for (ElementId f = 0; f < a.arr().size(d); ++f) {
      p.link(sp.var(b1, u, f), sp.var(b0, u, a.s(d, f)), b.src().component(d));
      p.link(sp.var(b1, u, f), sp.var(b0, u, a.t(d, f)), b.tgt().component(d));
    }
    for (ElementId x = 0; x < a.obj().size(d); ++x)
      p.link(sp.var(b0, u, x), sp.var(b1, u, a.identity(d, x)), b.id().component(d));
    const auto& pairs = a.pairs();
    for (ElementId k = 0; k < pairs.apex.size(d); ++k) {
      auto g = pairs.legs[0](d, k), f = pairs.legs[1](d, k);
      int vg = sp.var(b1, u, g), vf = sp.var(b1, u, f), vgf = sp.var(b1, u, a.comp()(d, k));
      p.check({vg, vf, vgf}, [&b, d, vg, vf, vgf](const std::vector<int>& s) {
        return b.compose(d, s[vg], s[vf]) == s[vgf];
      });
    }
  }
}

PresheafMap stagewise(const Presheaf& from, const Presheaf& to, const char* what,
                      const std::function<std::optional<ElementId>(ObjectId, ElementId)>& fn) {
  return tabulate(from, to, [&](ObjectId c, ElementId e) {
    auto r = fn(c, e);
    if (!r) throw EngineFault(std::string(what) + ": image family is missing at stage " + std::to_string(c));
    return *r;
  });
}

}  // namespace

HomObject::HomObject(InternalCategory source, InternalCategory target, Execution mode)
    : source_(std::move(source)), target_(std::move(target)) {
  if (!same_base(source_.base(), target_.base())) throw PreconditionError("hom_object: different bases");
  FamilySpec spec;
  spec.blocks = {{source_.obj(), target_.obj()}, {source_.arr(), target_.arr()}};
  const auto& a = source_;
  const auto& b = target_;
  spec.constrain = [&a, &b](FamilySpace& sp) { add_functor_equations(sp, a, b, 0, 1); };
  families_ = FamilyPresheaf(source_.base(), spec, mode);
}

HomObject hom_object(const InternalCategory& a, const InternalCategory& b) {
  return HomObject(a, b, default_execution());
}
HomObject hom_object(const InternalCategory& a, const InternalCategory& b, Execution mode) {
  return HomObject(a, b, mode);
}

InternalFunctor HomObject::decode(const Section& point) const {
  auto f0 = tabulate(source_.obj(), target_.obj(), [&](ObjectId c, ElementId x) { return families_.local(c, point[c], 0, x); });
  auto f1 = tabulate(source_.arr(), target_.arr(), [&](ObjectId c, ElementId f) { return families_.local(c, point[c], 1, f); });
  return InternalFunctor(source_, target_, std::move(f0), std::move(f1));
}

std::optional<ElementId> HomObject::element_of(ObjectId c, const InternalFunctor& f) const {
  const auto& base = *source_.base();
  return families_.find(c, [&](int block, ArrowId u, ElementId x) {
    auto d = base.source(u);
    return block == 0 ? f.on_obj(d, x) : f.on_arr(d, x);
  });
}

Section HomObject::encode(const InternalFunctor& f) const {
  if (!(f.source() == source_) || !(f.target() == target_))
    throw PreconditionError("HomObject::encode: functor has the wrong endpoints");
  Section s(source_.stage_count());
  for (ObjectId c = 0; c < source_.stage_count(); ++c) {
    auto e = element_of(c, f);
    if (!e) throw PreconditionError("HomObject::encode: not a lawful functor");
    s[c] = *e;
  }
  return s;
}

PresheafMap HomObject::inclusion() const {
  auto e0 = exponential(source_.obj(), target_.obj());
  auto e1 = exponential(source_.arr(), target_.arr());
  auto p = product(e0.object(), e1.object());
  return stagewise(object(), p.apex, "HomObject::inclusion", [&](ObjectId c, ElementId e) -> std::optional<ElementId> {
    auto i = e0.families.find(c, [&](int, ArrowId u, ElementId x) { return families_.value(c, e, 0, u, x); });
    auto j = e1.families.find(c, [&](int, ArrowId u, ElementId x) { return families_.value(c, e, 1, u, x); });
    if (!i || !j) return std::nullopt;
    return p.index(c, *i, *j);
  });
}

ExponentialCategory exponential_cat(const InternalCategory& a, const InternalCategory& b) {
  return exponential_cat(a, b, default_execution());
}

ExponentialCategory exponential_cat(const InternalCategory& a, const InternalCategory& b, Execution mode) {
  ExponentialCategory out;
  out.objects = HomObject(a, b, mode);
  FamilySpec spec;
  spec.blocks = {{a.obj(), b.obj()}, {a.arr(), b.arr()}, {a.obj(), b.obj()}, {a.arr(), b.arr()}, {a.obj(), b.arr()}};
  spec.constrain = [&a, &b](FamilySpace& sp) {
    add_functor_equations(sp, a, b, 0, 1);
    add_functor_equations(sp, a, b, 2, 3);
    const auto& base = sp.base();
    auto& p = sp.problem();
    for (auto u : sp.arrows()) {
      auto d = base.source(u);
      for (ElementId x = 0; x < a.obj().size(d); ++x) {
        p.link(sp.var(4, u, x), sp.var(0, u, x), b.src().component(d));
        p.link(sp.var(4, u, x), sp.var(2, u, x), b.tgt().component(d));
      }
      for (ElementId f = 0; f < a.arr().size(d); ++f) {
        int vs = sp.var(4, u, a.s(d, f)), vt = sp.var(4, u, a.t(d, f));
        int ff = sp.var(1, u, f), gf = sp.var(3, u, f);
        p.check({vs, vt, ff, gf}, [&b, d, vs, vt, ff, gf](const std::vector<int>& s) {
          return b.compose(d, s[gf], s[vs]) == b.compose(d, s[vt], s[ff]);
        });
      }
    }
  };
  out.arrows = FamilyPresheaf(a.base(), spec, mode);
  const auto& obj = out.objects;
  const auto& arr = out.arrows;
  const auto& o = obj.object();
  const auto& m = arr.object();
  auto endpoint = [&](int shift) {
    return stagewise(m, o, "exponential_cat", [&, shift](ObjectId c, ElementId e) {
      return obj.families().find(c, [&](int block, ArrowId u, ElementId x) { return arr.value(c, e, block + shift, u, x); });
    });
  };
  auto s = endpoint(0);
  auto t = endpoint(2);
  auto id = stagewise(o, m, "exponential_cat", [&](ObjectId c, ElementId e) {
    return arr.find(c, [&](int block, ArrowId u, ElementId x) {
      if (block == 4) return b.identity(a.base()->source(u), obj.f0(c, e, u, x));
      return obj.families().value(c, e, block % 2, u, x);
    });
  });
  out.cat = InternalCategory::from_tables(o, m, s, t, id, [&](ObjectId c, ElementId g, ElementId f) -> ElementId {
    auto r = arr.find(c, [&](int block, ArrowId u, ElementId x) {
      if (block < 2) return arr.value(c, f, block, u, x);
      if (block < 4) return arr.value(c, g, block, u, x);
      return b.compose(a.base()->source(u), arr.value(c, g, 4, u, x), arr.value(c, f, 4, u, x));
    });
    return r ? *r : -1;
  });
  out.with_source = product_cat(out.cat, a);
  out.eval = uncurry_functor(out, out.with_source, identity_functor(out.cat));
  return out;
}

InternalNatTrans ExponentialCategory::decode_nat(const Section& point) const {
  const auto& a = source();
  const auto& b = target();
  auto fn = [&](int b0) {
    auto f0 = tabulate(a.obj(), b.obj(), [&](ObjectId c, ElementId x) { return arrows.local(c, point[c], b0, x); });
    auto f1 = tabulate(a.arr(), b.arr(), [&](ObjectId c, ElementId f) { return arrows.local(c, point[c], b0 + 1, f); });
    return InternalFunctor(a, b, std::move(f0), std::move(f1));
  };
  auto al = tabulate(a.obj(), b.arr(), [&](ObjectId c, ElementId x) { return arrows.local(c, point[c], 4, x); });
  return InternalNatTrans(fn(0), fn(2), std::move(al));
}

Section ExponentialCategory::encode_nat(const InternalNatTrans& alpha) const {
  const auto& f = alpha.source();
  const auto& g = alpha.target();
  if (!(f.source() == source()) || !(f.target() == target()))
    throw PreconditionError("encode_nat: transformation has the wrong endpoints");
  const auto& base = *source().base();
  Section s(source().stage_count());
  for (ObjectId c = 0; c < source().stage_count(); ++c) {
    auto e = arrows.find(c, [&](int block, ArrowId u, ElementId x) {
      auto d = base.source(u);
      switch (block) {
        case 0: return f.on_obj(d, x);
        case 1: return f.on_arr(d, x);
        case 2: return g.on_obj(d, x);
        case 3: return g.on_arr(d, x);
        default: return alpha.at(d, x);
      }
    });
    if (!e) throw PreconditionError("encode_nat: not a lawful natural transformation");
    s[c] = *e;
  }
  return s;
}

InternalFunctor curry_functor(const ExponentialCategory& ba, const ProductCategory& pa, const InternalFunctor& f) {
  const auto& ap = pa.first.target();
  const auto& a = pa.second.target();
  if (!(a == ba.source()) || !(f.source() == pa.cat) || !(f.target() == ba.target()))
    throw PreconditionError("curry_functor: F is not a functor A' × A -> B");
  const auto& base = *a.base();
  auto f0 = stagewise(ap.obj(), ba.cat.obj(), "curry_functor", [&](ObjectId c, ElementId x) {
    return ba.objects.families().find(c, [&](int block, ArrowId u, ElementId y) {
      auto d = base.source(u);
      auto xd = ap.obj().restrict(u, x);
      if (block == 0) return f.on_obj(d, pa.obj.index(d, xd, y));
      return f.on_arr(d, pa.arr.index(d, ap.identity(d, xd), y));
    });
  });
  auto f1 = stagewise(ap.arr(), ba.cat.arr(), "curry_functor", [&](ObjectId c, ElementId g) {
    return ba.arrows.find(c, [&](int block, ArrowId u, ElementId y) {
      auto d = base.source(u);
      auto gd = ap.arr().restrict(u, g);
      auto x = block < 2 ? ap.s(d, gd) : ap.t(d, gd);
      switch (block) {
        case 0:
        case 2: return f.on_obj(d, pa.obj.index(d, x, y));
        case 1:
        case 3: return f.on_arr(d, pa.arr.index(d, ap.identity(d, x), y));
        default: return f.on_arr(d, pa.arr.index(d, gd, a.identity(d, y)));
      }
    });
  });
  return InternalFunctor(ap, ba.cat, std::move(f0), std::move(f1));
}

InternalFunctor uncurry_functor(const ExponentialCategory& ba, const ProductCategory& pa, const InternalFunctor& g) {
  const auto& ap = pa.first.target();
  const auto& a = pa.second.target();
  const auto& b = ba.target();
  if (!(a == ba.source()) || !(g.source() == ap) || !(g.target() == ba.cat))
    throw PreconditionError("uncurry_functor: G is not a functor A' -> B^A");
  auto f0 = tabulate(pa.cat.obj(), b.obj(), [&](ObjectId c, ElementId k) {
    auto x = pa.obj.legs[0](c, k), y = pa.obj.legs[1](c, k);
    return ba.objects.families().local(c, g.on_obj(c, x), 0, y);
  });
  auto f1 = tabulate(pa.cat.arr(), b.arr(), [&](ObjectId c, ElementId k) {
    auto h = pa.arr.legs[0](c, k), f = pa.arr.legs[1](c, k);
    auto e = g.on_arr(c, h);
    return b.compose(c, ba.arrows.local(c, e, 4, a.t(c, f)), ba.arrows.local(c, e, 1, f));
  });
  return InternalFunctor(pa.cat, b, std::move(f0), std::move(f1));
}

InternalFunctor diagonal_functor(const ExponentialCategory& ad) {
  auto pa = product_cat(ad.target(), ad.source());
  return curry_functor(ad, pa, pa.first);
}

Section name_of(const ExponentialCategory& ad, const InternalFunctor& diagram) { return ad.encode(diagram); }

ReindexComparison reindex_exponential_iso(const Elements& el, const ExponentialCategory& ad) {
  auto d = reindex_cat(el, ad.source());
  auto a = reindex_cat(el, ad.target());
  ReindexComparison out{exponential_cat(d, a), reindex_cat(el, ad.cat), {}, false};
  const auto& target = out.reindexed;
  auto move = [&](const FamilyPresheaf& from, const FamilyPresheaf& to) {
    return [&](ObjectId o, ElementId e) {
      auto c = el.point(o).first;
      return to.find(o, [&](int block, ArrowId w, ElementId y) {
        return from.value(c, e, block, el.arrow_point(w).first, y);
      });
    };
  };
  auto f0 = stagewise(out.pulled.obj(), target.cat.obj(), "reindex_exponential_iso",
                      move(ad.objects.families(), target.objects.families()));
  auto f1 = stagewise(out.pulled.arr(), target.cat.arr(), "reindex_exponential_iso", move(ad.arrows, target.arrows));
  out.comparison = InternalFunctor(out.pulled, target.cat, std::move(f0), std::move(f1));
  out.iso = is_iso(out.comparison.f0()).has_value() && is_iso(out.comparison.f1()).has_value();
  return out;
}

}  // namespace intcat
