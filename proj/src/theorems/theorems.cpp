#include "intcat/theorems/theorems.hpp"

#include <algorithm>

namespace intcat {

namespace {

void require_point_base(const InternalCategory& a, const char* what) {
  const auto& b = *a.base();
  if (b.object_count() != 1 || b.arrow_count() != 1)
    throw PreconditionError(std::string(what) + ": category is not over the one-object base");
}

std::vector<std::vector<bool>> leq_of(const InternalCategory& a) {
  const int n = a.obj().size(0);
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (ElementId f = 0; f < a.arr().size(0); ++f) leq[a.s(0, f)][a.t(0, f)] = true;
  return leq;
}

// First stage of ∫-style base where v fails to be stage-wise terminal.
std::optional<ObjectId> failing_stage(const InternalCategory& a, const Section& v) {
  for (ObjectId c = 0; c < a.stage_count(); ++c)
    for (ElementId x = 0; x < a.obj().size(c); ++x)
      if (a.hom(c, x, v[c]).size() != 1) return c;
  return std::nullopt;
}

}  // namespace

Result<CompletenessCertificate> lattice_completeness_check(const InternalCategory& a) {
  require_point_base(a, "lattice_completeness_check");
  const int n = a.obj().size(0);
  auto label = [&](ElementId x) { return a.obj().label(0, x); };
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y)
      if (a.hom(0, x, y).size() >= 2)
        return Refusal{"hom-set with " + std::to_string(a.hom(0, x, y).size()) + " arrows; no posetal skeleton",
                       "objects", {label(x), label(y)}};
  auto leq = leq_of(a);
  MeetTable m;
  m.class_of.assign(n, -1);
  for (ElementId x = 0; x < n; ++x) {
    if (m.class_of[x] >= 0) continue;
    m.class_of[x] = static_cast<int>(m.representative.size());
    for (ElementId y = x + 1; y < n; ++y)
      if (leq[x][y] && leq[y][x]) m.class_of[y] = m.class_of[x];
    m.representative.push_back(x);
  }
  const int k = static_cast<int>(m.representative.size());
  auto le = [&](int i, int j) { return static_cast<bool>(leq[m.representative[i]][m.representative[j]]); };
  m.meet.assign(k, std::vector<int>(k, -1));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      for (int c = 0; c < k && m.meet[i][j] < 0; ++c) {
        if (!le(c, i) || !le(c, j)) continue;
        bool greatest = true;
        for (int l = 0; l < k && greatest; ++l)
          if (le(l, i) && le(l, j)) greatest = le(l, c);
        if (greatest) m.meet[i][j] = c;
      }
      if (m.meet[i][j] < 0)
        return Refusal{"no meet", "subset", {label(m.representative[i]), label(m.representative[j])}};
    }
  for (int t = 0; t < k && m.top < 0; ++t) {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) ok = le(i, t);
    if (ok) m.top = t;
  }
  if (m.top < 0) return Refusal{"no greatest element: the empty subset has no meet", "subset {}", {}};
  CompletenessCertificate out;
  out.subject = a;
  out.mode = CompletenessCertificate::Mode::lattice;
  out.meets = std::move(m);
  return out;
}

std::vector<NamedShape> default_shapes(const Base& base) {
  return {{"empty", initial_cat(base)},
          {"one", terminal_cat(base)},
          {"discrete-2", shape_two(base)},
          {"chain-2", constant_cat(base, *chain_base(2))},
          {"parallel-pair", shape_parallel_pair(base)}};
}

Result<CompletenessCertificate> capability_completeness_check(const InternalCategory& a,
                                                              const std::vector<NamedShape>& shapes,
                                                              const LimitProvider& provider) {
  CompletenessCertificate out;
  out.subject = a;
  out.mode = CompletenessCertificate::Mode::capability;
  for (const auto& s : shapes) {
    auto lf = limit_functor(a, s.shape, provider);
    if (!lf) {
      auto r = lf.refusal();
      r.locus = "shape " + s.name + "; " + r.locus;
      return r;
    }
    if (!lf.value().report.ok())
      throw EngineFault("capability_completeness_check: limit functor fails its laws: " +
                        lf.value().report.violations.front());
    out.shapes.push_back(s.name);
  }
  return out;
}

Result<InitialFromLimit> initial_via_identity_limit(const InternalCategory& a, const LimitProvider& provider) {
  auto found = provider(identity_functor(a));
  if (!found) {
    auto r = found.refusal();
    r.reason = "identity has no limit: " + r.reason;
    return r;
  }
  InitialFromLimit out;
  out.cone = found.value();
  out.object = out.cone.vertex;
  const auto& v = out.object;
  const auto& base = a.base();
  Section ids(v.size());
  for (ObjectId c = 0; c < a.stage_count(); ++c) {
    ids[c] = a.identity(c, v[c]);
    if (out.cone.leg(c, v[c]) != ids[c])
      out.report.add("leg of the universal cone at its own vertex is not the identity at stage '" +
                     base->object_label(c) + "'");
  }
  auto one = terminal_cat(base);
  out.point = InternalFunctor(one, a, point_map(a.obj(), v), point_map(a.arr(), ids));
  auto bang = to_terminal_cat(a);
  out.unit = InternalNatTrans(identity_functor(one), compose_functors(bang, out.point),
                              tabulate(one.obj(), one.arr(), [](ObjectId, ElementId) { return 0; }));
  out.counit = InternalNatTrans(compose_functors(out.point, bang), identity_functor(a),
                                tabulate(a.obj(), a.arr(), [&](ObjectId c, ElementId x) { return out.cone.leg(c, x); }));
  out.report.merge(validate_nat(out.unit), "unit: ");
  out.report.merge(validate_nat(out.counit), "counit: ");
  out.report.merge(adjunction_check(out.point, bang, out.unit, out.counit));
  out.agrees = is_internal_initial(a, v).ok();
  return out;
}

Result<TransportedLimit> cocones_limit_transport(const ConeCategory& cocones, const InternalFunctor& diagram,
                                                 const LimitProvider& provider) {
  if (!cocones.cocone) throw PreconditionError("cocones_limit_transport: not a cocone category");
  if (!(diagram.target() == cocones.cat))
    throw PreconditionError("cocones_limit_transport: diagram does not land in the cocone category");
  const auto& a = cocones.target();
  const auto& dg = cocones.diagram;
  const auto& d0 = dg.source().obj();
  const auto& base = *a.base();
  auto projected = compose_functors(cocones.projection, diagram);
  auto found = provider(projected);
  if (!found) {
    auto r = found.refusal();
    r.reason = "projected diagram has no limit: " + r.reason;
    return r;
  }
  TransportedLimit out;
  out.projected = found.value();
  const auto& lim = out.projected;
  // For each object d of the shape of D, the cocone legs at d form a cone over T D'.
  auto family = tabulate(d0, lim.cones.cat.obj(), [&](ObjectId c, ElementId d) {
    auto e = lim.cones.find(c, dg.on_obj(c, d), [&](ArrowId u, ElementId j) {
      auto c2 = base.source(u);
      return cocones.local_leg(c2, diagram.on_obj(c2, j), d0.restrict(u, d));
    });
    if (!e) throw EngineFault("cocones_limit_transport: cocone legs do not form a cone over T D'");
    return *e;
  });
  auto fac = indexed_cone_factorization(family, lim);
  if (!fac) throw EngineFault("cocones_limit_transport: " + fac.refusal().reason);
  out.mediator = fac.value().mediator;
  out.factorizations = fac.value().solutions;
  auto l = cocones.find_global(lim.vertex, [&](ObjectId c, ElementId x) { return out.mediator(c, x); });
  if (!l) throw EngineFault("cocones_limit_transport: mediators do not form a cocone");
  out.vertex = *l;
  out.cones = cones_category(diagram);
  auto p = out.cones.find_global(out.vertex, [&](ObjectId c, ElementId j) {
    return cocones.arrows.at(c, {out.vertex[c], diagram.on_obj(c, j), lim.leg(c, j)});
  });
  if (!p) throw EngineFault("cocones_limit_transport: projections do not form a cone over D'");
  out.cone = *p;
  auto cert = is_internal_terminal(out.cones.cat, out.cone);
  if (!cert) {
    auto r = cert.refusal();
    r.reason = "transported cone is not universal: " + r.reason;
    return r;
  }
  out.certificate = cert.value();
  auto direct = find_terminal(out.cones.cat);
  if (direct) {
    const auto& cands = direct.value().candidates;
    out.agrees_with_search = std::find(cands.begin(), cands.end(), out.cone) != cands.end();
  }
  return out;
}

Result<DualColimit> colimit_via_duality(const InternalFunctor& diagram, const LimitProvider& provider) {
  auto cocones = cocones_category(diagram);
  auto t = cocones_limit_transport(cocones, identity_functor(cocones.cat), provider);
  if (!t) return t.refusal();
  DualColimit out{cocones, t.value(), {}, {}, {}, false};
  const auto& cat = out.cocones.cat;
  const auto& l = out.identity_limit.vertex;
  for (ObjectId c = 0; c < cat.stage_count(); ++c)
    if (out.identity_limit.cones.local_leg(c, out.identity_limit.cone[c], l[c]) != cat.identity(c, l[c]))
      throw EngineFault("colimit_via_duality: limit of the identity has a non-identity leg at its vertex");
  auto init = is_internal_initial(cat, l);
  if (!init) {
    auto r = init.refusal();
    r.reason = "limit of the identity is not initial: " + r.reason;
    return r;
  }
  out.initial = init.value();
  out.cocone = l;
  out.vertex.resize(l.size());
  for (ObjectId c = 0; c < cat.stage_count(); ++c) out.vertex[c] = out.cocones.vertex(c, l[c]);
  auto direct = find_initial(cat);
  if (direct) {
    const auto& cands = direct.value().candidates;
    out.agrees_with_search = std::find(cands.begin(), cands.end(), l) != cands.end();
  }
  return out;
}

bool ContinuityReport::ok() const {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return !r.checked || r.continuous; });
}

ContinuityReport is_continuous(const InternalFunctor& f, const std::vector<NamedShape>& shapes,
                               const LimitProvider& provider) {
  const auto& a = f.source();
  ContinuityReport report;
  for (const auto& s : shapes) {
    ContinuityResult res;
    res.shape = s.name;
    auto ad = exponential_cat(s.shape, a);
    auto g = generic_diagram(ad);
    auto lim = provider(g.diagram);
    if (!lim) {
      res.reason = "source has no limit of this shape: " + lim.refusal().reason;
      report.results.push_back(std::move(res));
      continue;
    }
    res.checked = true;
    const auto& el = g.el;
    const auto& cert = lim.value();
    auto b2 = reindex_cat(el, f.target());
    auto f2 = reindex_functor(el, f, g.diagram.target(), b2);
    auto cns = cones_category(compose_functors(f2, g.diagram));
    Section vertex(cert.vertex.size());
    for (ObjectId o = 0; o < static_cast<ObjectId>(vertex.size()); ++o) vertex[o] = f2.on_obj(o, cert.vertex[o]);
    auto image = cns.find_global(vertex, [&](ObjectId o, ElementId x) { return f2.on_arr(o, cert.leg(o, x)); });
    if (!image) throw EngineFault("is_continuous: image of the universal cone is not a cone");
    if (is_internal_terminal(cns.cat, *image).ok()) {
      res.continuous = true;
    } else {
      auto o = *failing_stage(cns.cat, *image);
      auto [c, fd] = el.point(o);
      const auto& d0 = s.shape.obj();
      const auto& ab = *a.base();
      res.reason = "image of the limit cone is not universal";
      for (ElementId x = 0; x < d0.size(c); ++x)
        res.witness.push_back(d0.label(c, x) + " -> " + a.obj().label(c, ad.objects.f0(c, fd, ab.identity(c), x)));
      if (res.witness.empty()) res.witness.push_back("empty diagram");
      res.witness.push_back("limit " + a.obj().label(c, cert.vertex[o]) + " maps to " +
                            f.target().obj().label(c, vertex[o]));
    }
    report.results.push_back(std::move(res));
  }
  return report;
}

Result<AdjointConstruction> aft_left_adjoint(const InternalFunctor& r, const LimitProvider& provider) {
  const auto& b = r.source();
  const auto& a = r.target();
  const auto& base = *a.base();
  auto comma = comma_category(identity_functor(a), r);
  auto fibers = fiber_over(comma.px);
  const auto& el = fibers.el;
  auto b2 = reindex_cat(el, b);
  auto q = fibers.restrict(comma.py, b2);
  auto found = provider(q);
  if (!found) {
    auto ref = found.refusal();
    ref.reason = "a fiber diagram a/R -> B has no limit: " + ref.reason;
    return ref;
  }
  AdjointConstruction out{r, {}, {}, {}, comma, fibers, found.value(), {}, {}};
  const auto& lim = out.limit;
  const auto& cm = out.comma;
  const auto& fb = out.fibers;
  const auto& cones = lim.cones;
  // Leg of the universal cone over the fiber of a at the comma object e over A0(u)a.
  auto pi_hat = [&](ObjectId c, ElementId x, ArrowId u, ElementId e) {
    auto o = el.object(c, x);
    return cones.leg(o, lim.cone[o], el.arrow(u, x), fb.object_position[base.source(u)][e]);
  };
  // η from the image cone R π̂, which must be universal over R Q.
  auto a2 = reindex_cat(el, a);
  auto r2 = reindex_functor(el, r, b2, a2);
  auto rq = cones_category(compose_functors(r2, q));
  Section image_vertex(lim.vertex.size()), alpha_vertex(lim.vertex.size());
  for (ObjectId o = 0; o < static_cast<ObjectId>(image_vertex.size()); ++o) {
    image_vertex[o] = r2.on_obj(o, lim.vertex[o]);
    alpha_vertex[o] = el.point(o).second;
  }
  auto image = rq.find_global(image_vertex, [&](ObjectId o, ElementId x) { return r2.on_arr(o, lim.leg(o, x)); });
  if (!image) throw EngineFault("aft_left_adjoint: R π̂ is not a cone");
  auto image_cert = is_internal_terminal(rq.cat, *image);
  if (!image_cert) {
    auto o = *failing_stage(rq.cat, *image);
    auto [c, x] = el.point(o);
    std::vector<std::string> witness{"fiber over " + a.obj().label(c, x)};
    for (auto e : fb.object_in_k[o]) witness.push_back(b.obj().label(c, cm.objects.coord(c, e, 1)));
    witness.push_back("limit " + b.obj().label(c, lim.vertex[o]) + " maps to " + a.obj().label(c, image_vertex[o]));
    return Refusal{"R does not preserve the limit of a fiber diagram", "stage '" + base.object_label(c) + "'",
                   std::move(witness)};
  }
  auto alpha = rq.find_global(alpha_vertex, [&](ObjectId o, ElementId x) {
    return cm.objects.coord(el.point(o).first, fb.object_in_k[o][x], 2);
  });
  if (!alpha) throw EngineFault("aft_left_adjoint: α is not a cone");
  const auto& icert = image_cert.value();
  auto l0 = tabulate(a.obj(), b.obj(), [&](ObjectId c, ElementId x) { return lim.vertex[el.object(c, x)]; });
  auto l1 = tabulate(a.arr(), b.arr(), [&](ObjectId c, ElementId f) {
    auto x = a.s(c, f), y = a.t(c, f);
    auto oy = el.object(c, y);
    auto e = cones.find(oy, l0(c, x), [&](ArrowId w, ElementId k) {
      auto u = el.arrow_point(w).first;
      auto d = base.source(u);
      auto ky = fb.object_in_k[el.base()->source(w)][k];
      auto fu = a.arr().restrict(u, f);
      auto kx = cm.objects.at(d, {a.s(d, fu), cm.objects.coord(d, ky, 1), a.compose(d, cm.objects.coord(d, ky, 2), fu)});
      return pi_hat(c, x, u, kx);
    });
    if (!e) throw EngineFault("aft_left_adjoint: precomposed legs do not form a cone");
    return lim.mediator(oy, *e);
  });
  out.left = InternalFunctor(a, b, l0, std::move(l1));
  auto unit = tabulate(a.obj(), a.arr(), [&](ObjectId c, ElementId x) {
    auto o = el.object(c, x);
    return rq.arrows.coord(o, icert.witness(o, (*alpha)[o]), 2);
  });
  auto counit = tabulate(b.obj(), b.arr(), [&](ObjectId c, ElementId y) {
    auto ry = r.on_obj(c, y);
    auto e = cm.objects.at(c, {ry, y, a.identity(c, ry)});
    return pi_hat(c, ry, base.identity(c), e);
  });
  out.unit = InternalNatTrans(identity_functor(a), compose_functors(r, out.left), std::move(unit));
  out.counit = InternalNatTrans(compose_functors(out.left, r), identity_functor(b), std::move(counit));
  auto i0 = tabulate(b.obj(), cm.cat.obj(), [&](ObjectId c, ElementId y) {
    auto ry = r.on_obj(c, y);
    return cm.objects.at(c, {ry, y, a.identity(c, ry)});
  });
  auto i1 = tabulate(b.arr(), cm.cat.arr(), [&](ObjectId c, ElementId g) {
    auto rs = a.identity(c, r.on_obj(c, b.s(c, g))), rt = a.identity(c, r.on_obj(c, b.t(c, g)));
    return cm.arrows.at(c, {r.on_arr(c, g), g, rs, rt});
  });
  out.comparison = InternalFunctor(b, cm.cat, std::move(i0), std::move(i1));

  auto& rep = out.report;
  rep.merge(validate_functor(out.left), "L: ");
  rep.merge(validate_nat(out.unit), "unit: ");
  rep.merge(validate_nat(out.counit), "counit: ");
  rep.merge(validate_functor(out.comparison), "I: ");
  rep.merge(adjunction_check(out.left, r, out.unit, out.counit));
  for (ObjectId c = 0; c < a.stage_count(); ++c)
    for (ElementId e = 0; e < cm.cat.obj().size(c); ++e) {
      auto x = cm.objects.coord(c, e, 0);
      auto via = a.compose(c, r.on_arr(c, pi_hat(c, x, base.identity(c), e)), out.unit.at(c, x));
      if (via != cm.objects.coord(c, e, 2))
        rep.add("α != (R π̂)(η P_A) at stage '" + base.object_label(c) + "', object " + cm.cat.obj().label(c, e));
    }
  for (ObjectId c = 0; c < b.stage_count(); ++c)
    for (ElementId y = 0; y < b.obj().size(c); ++y) {
      auto i = out.comparison.on_obj(c, y);
      if (cm.objects.coord(c, i, 2) != a.identity(c, r.on_obj(c, y)))
        rep.add("(R β_B)(α I) β_A⁻¹ != Id_R at stage '" + base.object_label(c) + "'");
    }
  return out;
}

Result<GaloisAdjoint> galois_oracle(const InternalFunctor& r) {
  const auto& b = r.source();
  const auto& a = r.target();
  require_point_base(a, "galois_oracle");
  require_point_base(b, "galois_oracle");
  auto la = leq_of(a), lb = leq_of(b);
  const int na = a.obj().size(0), nb = b.obj().size(0);
  GaloisAdjoint out;
  out.left.assign(na, -1);
  for (ElementId x = 0; x < na; ++x) {
    std::vector<ElementId> s;
    for (ElementId y = 0; y < nb; ++y)
      if (la[x][r.on_obj(0, y)]) s.push_back(y);
    auto lower = [&](ElementId m) { return std::all_of(s.begin(), s.end(), [&](ElementId y) { return lb[m][y]; }); };
    for (ElementId m = 0; m < nb && out.left[x] < 0; ++m) {
      if (!lower(m)) continue;
      bool greatest = true;
      for (ElementId l = 0; l < nb && greatest; ++l)
        if (lower(l)) greatest = lb[l][m];
      if (greatest) out.left[x] = m;
    }
    std::vector<std::string> names;
    for (auto y : s) names.push_back(b.obj().label(0, y));
    if (out.left[x] < 0) return Refusal{"subset of B has no meet", "above " + a.obj().label(0, x), names};
    if (!la[x][r.on_obj(0, out.left[x])])
      return Refusal{"R does not preserve the meet of this subset", "above " + a.obj().label(0, x), names};
  }
  return out;
}

}  // namespace intcat
