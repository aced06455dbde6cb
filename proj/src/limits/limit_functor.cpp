#include "intcat/limits/limit_functor.hpp"

namespace intcat {

std::optional<ElementId> inverse_arrow(const InternalCategory& a, ObjectId c, ElementId f) {
  auto x = a.s(c, f), y = a.t(c, f);
  for (auto g : a.hom(c, y, x))
    if (a.compose(c, g, f) == a.identity(c, x) && a.compose(c, f, g) == a.identity(c, y)) return g;
  return std::nullopt;
}

GenericDiagram generic_diagram(const ExponentialCategory& ad) {
  Elements el(ad.cat.obj());
  const auto& base = *ad.cat.base();
  auto dd = reindex_cat(el, ad.source());
  auto aa = reindex_cat(el, ad.target());
  auto f0 = tabulate(dd.obj(), aa.obj(), [&](ObjectId o, ElementId x) {
    auto [c, f] = el.point(o);
    return ad.objects.f0(c, f, base.identity(c), x);
  });
  auto f1 = tabulate(dd.arr(), aa.arr(), [&](ObjectId o, ElementId x) {
    auto [c, f] = el.point(o);
    return ad.objects.f1(c, f, base.identity(c), x);
  });
  InternalFunctor diagram(dd, aa, std::move(f0), std::move(f1));
  return GenericDiagram{std::move(el), std::move(diagram)};
}

Result<LimitFunctor> limit_functor(const InternalCategory& a, const InternalCategory& shape,
                                   const LimitProvider& provider) {
  auto ad = exponential_cat(shape, a);
  auto generic = generic_diagram(ad);
  auto found = provider(generic.diagram);
  if (!found) {
    auto r = found.refusal();
    r.reason = "no limit of the generic diagram over (A^D)0: " + r.reason;
    return r;
  }
  LimitFunctor out{ad, generic, found.value(), diagonal_functor(ad), {}, {}, {}, {}, false};
  const auto& el = out.generic.el;
  const auto& base = *a.base();
  const auto& cert = out.cone;
  const auto& cones = cert.cones;
  const auto& e0 = ad.cat.obj();
  auto lim0 = tabulate(e0, a.obj(), [&](ObjectId c, ElementId f) { return cert.vertex[el.object(c, f)]; });
  // The leg of the universal cone over F at index (u, x), as an arrow of A(source u).
  auto pi = [&](ObjectId c, ElementId f, ArrowId u, ElementId x) {
    auto o = el.object(c, f);
    return cones.leg(o, cert.cone[o], el.arrow(u, f), x);
  };
  auto lim1 = tabulate(ad.cat.arr(), a.arr(), [&](ObjectId c, ElementId k) {
    auto f = ad.cat.s(c, k), g = ad.cat.t(c, k);
    auto og = el.object(c, g);
    auto e = cones.find(og, lim0(c, f), [&](ArrowId w, ElementId x) {
      auto u = el.arrow_point(w).first;
      return a.compose(base.source(u), ad.arrows.value(c, k, 4, u, x), pi(c, f, u, x));
    });
    if (!e) throw EngineFault("limit_functor: image of a transformation is not a cone");
    return cert.mediator(og, *e);
  });
  out.lim = InternalFunctor(ad.cat, a, lim0, std::move(lim1));
  const auto& diag = out.diagonal;
  auto unit = tabulate(a.obj(), a.arr(), [&](ObjectId c, ElementId x) {
    auto o = el.object(c, diag.on_obj(c, x));
    auto e = cones.find(o, x, [&](ArrowId w, ElementId) {
      auto u = el.arrow_point(w).first;
      return a.identity(base.source(u), a.obj().restrict(u, x));
    });
    if (!e) throw EngineFault("limit_functor: identity legs do not form a cone");
    return cert.mediator(o, *e);
  });
  auto counit = tabulate(e0, ad.cat.arr(), [&](ObjectId c, ElementId f) {
    auto dl = diag.on_obj(c, lim0(c, f));
    auto k = ad.arrows.find(c, [&](int block, ArrowId u, ElementId x) {
      switch (block) {
        case 0: return ad.objects.f0(c, dl, u, x);
        case 1: return ad.objects.f1(c, dl, u, x);
        case 2: return ad.objects.f0(c, f, u, x);
        case 3: return ad.objects.f1(c, f, u, x);
        default: return pi(c, f, u, x);
      }
    });
    if (!k) throw EngineFault("limit_functor: universal legs are not a transformation");
    return *k;
  });
  out.unit = InternalNatTrans(identity_functor(a), compose_functors(out.lim, diag), std::move(unit));
  out.counit = InternalNatTrans(compose_functors(diag, out.lim), identity_functor(ad.cat), std::move(counit));
  out.report.merge(validate_functor(out.lim), "Lim: ");
  out.report.merge(validate_nat(out.unit), "unit: ");
  out.report.merge(validate_nat(out.counit), "counit: ");
  out.report.merge(adjunction_check(diag, out.lim, out.unit, out.counit));
  out.unit_iso = true;
  for (ObjectId c = 0; c < a.stage_count() && out.unit_iso; ++c)
    for (ElementId x = 0; x < a.obj().size(c) && out.unit_iso; ++x)
      out.unit_iso = inverse_arrow(a, c, out.unit.at(c, x)).has_value();
  return out;
}

InternalCategory shape_two(const Base& base) {
  return discrete(coproduct(terminal(base), terminal(base)).object);
}

InternalCategory shape_parallel_pair(const Base& base) {
  using A = IndexCategory::Arrow;
  std::vector<ArrowId> comp(16, -1);
  auto set = [&](int g, int f, int h) { comp[g * 4 + f] = h; };
  set(0, 0, 0);
  set(1, 1, 1);
  set(2, 0, 2);
  set(3, 0, 3);
  set(1, 2, 2);
  set(1, 3, 3);
  IndexCategory pp({"0", "1"}, {A{"id_0", 0, 0}, A{"id_1", 1, 1}, A{"f", 0, 1}, A{"g", 0, 1}}, {0, 1}, comp);
  return constant_cat(base, pp);
}

ParallelArrows parallel_arrows_category(const InternalCategory& a) {
  ParallelArrows out;
  out.objects = TuplePresheaf({a.arr(), a.arr()}, [&](ObjectId c, const TuplePresheaf::Emit& emit) {
    for (ElementId f = 0; f < a.arr().size(c); ++f)
      for (auto g : a.hom(c, a.s(c, f), a.t(c, f))) emit({f, g});
  });
  const auto& ob = out.objects;
  const auto& p0 = ob.object();
  out.arrows = TuplePresheaf({p0, p0, a.arr(), a.arr()}, [&](ObjectId c, const TuplePresheaf::Emit& emit) {
    for (ElementId p = 0; p < p0.size(c); ++p)
      for (ElementId q = 0; q < p0.size(c); ++q) {
        auto f = ob.coord(c, p, 0), g = ob.coord(c, p, 1);
        auto f2 = ob.coord(c, q, 0), g2 = ob.coord(c, q, 1);
        for (auto h0 : a.hom(c, a.s(c, f), a.s(c, f2)))
          for (auto h1 : a.hom(c, a.t(c, f), a.t(c, f2)))
            if (a.compose(c, h1, f) == a.compose(c, f2, h0) && a.compose(c, h1, g) == a.compose(c, g2, h0))
              emit({p, q, h0, h1});
      }
  });
  const auto& ar = out.arrows;
  const auto& p1 = ar.object();
  auto id = tabulate(p0, p1, [&](ObjectId c, ElementId p) {
    auto f = ob.coord(c, p, 0);
    return ar.at(c, {p, p, a.identity(c, a.s(c, f)), a.identity(c, a.t(c, f))});
  });
  out.cat = InternalCategory::from_tables(p0, p1, ar.projection(0), ar.projection(1), id,
                                          [&](ObjectId c, ElementId k2, ElementId k) {
                                            return ar.at(c, {ar.coord(c, k, 0), ar.coord(c, k2, 1),
                                                             a.compose(c, ar.coord(c, k2, 2), ar.coord(c, k, 2)),
                                                             a.compose(c, ar.coord(c, k2, 3), ar.coord(c, k, 3))});
                                          });
  auto d0 = tabulate(a.obj(), p0, [&](ObjectId c, ElementId x) {
    auto i = a.identity(c, x);
    return ob.at(c, {i, i});
  });
  auto d1 = tabulate(a.arr(), p1, [&](ObjectId c, ElementId h) {
    return ar.at(c, {d0(c, a.s(c, h)), d0(c, a.t(c, h)), h, h});
  });
  out.diagonal = InternalFunctor(a, out.cat, std::move(d0), std::move(d1));
  return out;
}

namespace {

// The functor between T and A^S determined object-wise by families of A-data.
// obj(c, y, u, x) is the value of the functor named by y on the shape object x
// at index u; arr likewise for a shape arrow; nat(c, k, u, x) is the component
// of the transformation named by the T-arrow k.
InternalFunctor comparison(const InternalCategory& t, const ExponentialCategory& as,
                           const std::function<ElementId(ObjectId, ElementId, ArrowId, ElementId)>& obj,
                           const std::function<ElementId(ObjectId, ElementId, ArrowId, ElementId)>& arr,
                           const std::function<ElementId(ObjectId, ElementId, ArrowId, ElementId)>& nat) {
  const auto& fam = as.objects.families();
  auto f0 = tabulate(t.obj(), as.cat.obj(), [&](ObjectId c, ElementId y) {
    auto e = fam.find(c, [&](int block, ArrowId u, ElementId x) { return block == 0 ? obj(c, y, u, x) : arr(c, y, u, x); });
    if (!e) throw EngineFault("comparison: object data is not a functor");
    return *e;
  });
  auto f1 = tabulate(t.arr(), as.cat.arr(), [&](ObjectId c, ElementId k) {
    auto fs = f0(c, t.s(c, k)), ft = f0(c, t.t(c, k));
    auto e = as.arrows.find(c, [&](int block, ArrowId u, ElementId x) {
      switch (block) {
        case 0: return as.objects.f0(c, fs, u, x);
        case 1: return as.objects.f1(c, fs, u, x);
        case 2: return as.objects.f0(c, ft, u, x);
        case 3: return as.objects.f1(c, ft, u, x);
        default: return nat(c, k, u, x);
      }
    });
    if (!e) throw EngineFault("comparison: arrow data is not a transformation");
    return *e;
  });
  return InternalFunctor(t, as.cat, std::move(f0), std::move(f1));
}

}  // namespace

InternalFunctor par_comparison(const ParallelArrows& par, const ExponentialCategory& ap) {
  const auto& a = ap.target();
  const auto& ob = par.objects;
  const auto& ar = par.arrows;
  auto edge = [&](ObjectId c, ElementId p, ArrowId u, int i) { return a.arr().restrict(u, ob.coord(c, p, i)); };
  auto src = [&](ArrowId u) { return a.base()->source(u); };
  return comparison(
      par.cat, ap,
      [&](ObjectId c, ElementId p, ArrowId u, ElementId x) {
        auto f = edge(c, p, u, 0);
        return x == 0 ? a.s(src(u), f) : a.t(src(u), f);
      },
      [&](ObjectId c, ElementId p, ArrowId u, ElementId x) {
        auto f = edge(c, p, u, 0), d = src(u);
        switch (x) {
          case 0: return a.identity(d, a.s(d, f));
          case 1: return a.identity(d, a.t(d, f));
          case 2: return f;
          default: return edge(c, p, u, 1);
        }
      },
      [&](ObjectId c, ElementId k, ArrowId u, ElementId x) { return a.arr().restrict(u, ar.coord(c, k, x == 0 ? 2 : 3)); });
}

InternalFunctor pair_comparison(const ProductCategory& aa, const ExponentialCategory& a2) {
  const auto& a = a2.target();
  auto side = [&](ObjectId c, ElementId p, ElementId x) {
    return x == 0 ? aa.first.on_obj(c, p) : aa.second.on_obj(c, p);
  };
  return comparison(
      aa.cat, a2,
      [&](ObjectId c, ElementId p, ArrowId u, ElementId x) { return a.obj().restrict(u, side(c, p, x)); },
      [&](ObjectId c, ElementId p, ArrowId u, ElementId x) {
        return a.identity(a.base()->source(u), a.obj().restrict(u, side(c, p, x)));
      },
      [&](ObjectId c, ElementId k, ArrowId u, ElementId x) {
        return a.arr().restrict(u, x == 0 ? aa.first.on_arr(c, k) : aa.second.on_arr(c, k));
      });
}

std::string to_string(SpecialLimit kind) {
  switch (kind) {
    case SpecialLimit::terminal: return "terminal";
    case SpecialLimit::binary_product: return "binary_product";
    default: return "equalizer";
  }
}

Result<SpecialAdjoint> special_right_adjoint(const InternalCategory& a, SpecialLimit kind,
                                             const LimitProvider& provider) {
  const auto& base = a.base();
  SpecialAdjoint out;
  out.kind = kind;
  std::optional<ProductCategory> pc;
  std::optional<ParallelArrows> par;
  InternalCategory shape;
  switch (kind) {
    case SpecialLimit::terminal:
      out.left = to_terminal_cat(a);
      shape = initial_cat(base);
      break;
    case SpecialLimit::binary_product: {
      pc = product_cat(a, a);
      auto id = identity_functor(a);
      out.left = pc->pair(id, id);
      shape = shape_two(base);
      break;
    }
    case SpecialLimit::equalizer:
      par = parallel_arrows_category(a);
      out.left = par->diagonal;
      shape = shape_parallel_pair(base);
      break;
  }
  const auto& g = out.left;
  const auto& t = g.target();
  auto comma = comma_category(g, identity_functor(t));
  auto fiber = fiber_over(comma.py);
  const auto& el = fiber.el;
  const auto& fc = fiber.cat;
  for (ObjectId o = 0; o < el.base()->object_count(); ++o) {
    const int n = fc.obj().size(o);
    bool any = false;
    for (ElementId v = 0; v < n && !any; ++v) {
      bool ok = true;
      for (ElementId x = 0; x < n && ok; ++x) ok = fc.hom(o, x, v).size() == 1;
      any = ok;
    }
    if (!any) {
      auto [c, y] = el.point(o);
      return Refusal{"no universal arrow into this object of " + std::string(kind == SpecialLimit::equalizer ? "Par(A)" : kind == SpecialLimit::terminal ? "1" : "A x A"),
                     "stage '" + base->object_label(c) + "'", {t.obj().label(c, y)}};
    }
  }
  auto found = find_terminal(fc);
  if (!found) return found.refusal();
  const auto& cert = found.value().certificate;
  auto universal = [&](ObjectId c, ElementId y) {
    return fiber.object_in_k[el.object(c, y)][cert.object[el.object(c, y)]];
  };
  // The comma arrow from e (lying over y) into the universal arrow at y.
  auto into = [&](ObjectId c, ElementId y, ElementId e) {
    auto o = el.object(c, y);
    return fiber.arrow_in_k[o][cert.witness(o, fiber.object_position[c][e])];
  };
  auto r0 = tabulate(t.obj(), a.obj(), [&](ObjectId c, ElementId y) { return comma.objects.coord(c, universal(c, y), 0); });
  auto eps = [&](ObjectId c, ElementId y) { return comma.objects.coord(c, universal(c, y), 2); };
  auto r1 = tabulate(t.arr(), a.arr(), [&](ObjectId c, ElementId k) {
    auto y = t.s(c, k), y2 = t.t(c, k);
    auto e = comma.objects.at(c, {r0(c, y), y2, t.compose(c, k, eps(c, y))});
    return comma.arrows.coord(c, into(c, y2, e), 0);
  });
  out.right = InternalFunctor(t, a, r0, std::move(r1));
  auto unit = tabulate(a.obj(), a.arr(), [&](ObjectId c, ElementId x) {
    auto gx = g.on_obj(c, x);
    auto e = comma.objects.at(c, {x, gx, t.identity(c, gx)});
    return comma.arrows.coord(c, into(c, gx, e), 0);
  });
  auto counit = tabulate(t.obj(), t.arr(), eps);
  out.unit = InternalNatTrans(identity_functor(a), compose_functors(out.right, g), std::move(unit));
  out.counit = InternalNatTrans(compose_functors(g, out.right), identity_functor(t), std::move(counit));
  out.report.merge(validate_functor(out.right), "R: ");
  out.report.merge(validate_nat(out.unit), "unit: ");
  out.report.merge(validate_nat(out.counit), "counit: ");
  out.report.merge(adjunction_check(g, out.right, out.unit, out.counit));

  auto lf = limit_functor(a, shape, provider);
  if (!lf) return out;
  const auto& ad = lf.value().ad;
  PresheafMap cmp0;
  switch (kind) {
    case SpecialLimit::terminal:
      cmp0 = tabulate(t.obj(), ad.cat.obj(), [&](ObjectId c, ElementId) {
        if (ad.cat.obj().size(c) != 1) throw EngineFault("special_right_adjoint: A^0 is not terminal");
        return 0;
      });
      break;
    case SpecialLimit::binary_product: cmp0 = pair_comparison(*pc, ad).f0(); break;
    case SpecialLimit::equalizer: cmp0 = par_comparison(*par, ad).f0(); break;
  }
  bool agree = true;
  for (ObjectId c = 0; c < t.stage_count() && agree; ++c)
    for (ElementId y = 0; y < t.obj().size(c) && agree; ++y) {
      auto x = r0(c, y), l = lf.value().lim.on_obj(c, cmp0(c, y));
      bool iso = false;
      for (auto h : a.hom(c, x, l)) iso |= inverse_arrow(a, c, h).has_value();
      agree = iso;
    }
  out.agrees_with_lim = agree;
  return out;
}

}  // namespace intcat
