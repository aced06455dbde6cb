#include "intcat/limits/cones.hpp"

#include <algorithm>

namespace intcat {

namespace {

FamilyPresheaf cone_objects(const InternalFunctor& dg, bool cocone, Execution mode) {
  const auto& a = dg.target();
  const auto& sh = dg.source();
  FamilySpec spec;
  spec.blocks = {{terminal(a.base()), a.obj()}, {sh.obj(), a.arr()}};
  spec.constrain = [&a, &sh, &dg, cocone](FamilySpace& sp) {
    const auto& base = sp.base();
    auto& p = sp.problem();
    for (auto u : sp.arrows()) {
      auto d = base.source(u);
      const int v = sp.var(0, u, 0);
      const auto& apex_end = cocone ? a.tgt().component(d) : a.src().component(d);
      const auto& leg_end = cocone ? a.src().component(d) : a.tgt().component(d);
      for (ElementId e = 0; e < sh.obj().size(d); ++e) {
        const int l = sp.var(1, u, e);
        p.link(l, v, apex_end);
        std::vector<char> ok(a.arr().size(d), 0);
        auto de = dg.on_obj(d, e);
        for (ElementId k = 0; k < a.arr().size(d); ++k) ok[k] = leg_end[k] == de;
        p.restrict_values(l, std::move(ok));
      }
      for (ElementId f = 0; f < sh.arr().size(d); ++f) {
        auto df = dg.on_arr(d, f);
        std::vector<int> map(a.arr().size(d));
        for (ElementId k = 0; k < a.arr().size(d); ++k) map[k] = cocone ? a.compose(d, k, df) : a.compose(d, df, k);
        if (cocone)
          p.link(sp.var(1, u, sh.t(d, f)), sp.var(1, u, sh.s(d, f)), std::move(map));
        else
          p.link(sp.var(1, u, sh.s(d, f)), sp.var(1, u, sh.t(d, f)), std::move(map));
      }
    }
  };
  return FamilyPresheaf(a.base(), spec, mode);
}

ConeCategory build_cones(const InternalFunctor& dg, bool cocone, Execution mode) {
  ConeCategory out;
  out.diagram = dg;
  out.cocone = cocone;
  out.objects = cone_objects(dg, cocone, mode);
  const auto& a = dg.target();
  const auto& base = *a.base();
  const auto& ob = out.objects;
  const auto& o = ob.object();
  auto other_end = [&](ObjectId c, ElementId known, ElementId h) -> std::optional<ElementId> {
    // For cones: τ and h : v -> vertex τ determine σ with legs τ∘h.
    // For cocones: σ and h : vertex σ -> w determine τ with legs h∘σ.
    auto vertex = cocone ? a.t(c, h) : a.s(c, h);
    return out.find(c, vertex, [&](ArrowId u, ElementId x) {
      auto d = base.source(u);
      auto hu = a.arr().restrict(u, h);
      auto l = ob.value(c, known, 1, u, x);
      return cocone ? a.compose(d, hu, l) : a.compose(d, l, hu);
    });
  };
  out.arrows = TuplePresheaf({o, o, a.arr()}, [&](ObjectId c, const TuplePresheaf::Emit& emit) {
    for (ElementId known = 0; known < o.size(c); ++known) {
      auto v = ob.local(c, known, 0, 0);
      auto hs = cocone ? a.out_of(c, v) : a.into(c, v);
      for (auto h : hs) {
        auto other = other_end(c, known, h);
        if (!other) continue;
        if (cocone)
          emit({known, *other, h});
        else
          emit({*other, known, h});
      }
    }
  });
  const auto& ar = out.arrows;
  const auto& m = ar.object();
  auto id = tabulate(o, m, [&](ObjectId c, ElementId e) { return ar.at(c, {e, e, a.identity(c, ob.local(c, e, 0, 0))}); });
  out.cat = InternalCategory::from_tables(o, m, ar.projection(0), ar.projection(1), id,
                                          [&](ObjectId c, ElementId g, ElementId f) {
                                            return ar.at(c, {ar.coord(c, f, 0), ar.coord(c, g, 1),
                                                             a.compose(c, ar.coord(c, g, 2), ar.coord(c, f, 2))});
                                          });
  auto t0 = tabulate(o, a.obj(), [&](ObjectId c, ElementId e) { return ob.local(c, e, 0, 0); });
  out.projection = InternalFunctor(out.cat, a, std::move(t0), ar.projection(2));
  return out;
}

}  // namespace

std::optional<ElementId> ConeCategory::find(ObjectId c, ElementId vertex,
                                            const std::function<ElementId(ArrowId, ElementId)>& leg) const {
  const auto& a = target();
  return objects.find(c, [&](int block, ArrowId u, ElementId x) {
    return block == 0 ? a.obj().restrict(u, vertex) : leg(u, x);
  });
}

std::optional<Section> ConeCategory::find_global(const Section& vertex,
                                                 const std::function<ElementId(ObjectId, ElementId)>& leg) const {
  const auto& base = *target().base();
  Section s(target().stage_count());
  for (ObjectId c = 0; c < target().stage_count(); ++c) {
    auto e = find(c, vertex[c], [&](ArrowId u, ElementId x) { return leg(base.source(u), x); });
    if (!e) return std::nullopt;
    s[c] = *e;
  }
  return s;
}

ConeCategory cones_category(const InternalFunctor& d) { return build_cones(d, false, default_execution()); }
ConeCategory cocones_category(const InternalFunctor& d) { return build_cones(d, true, default_execution()); }
ConeCategory cones_category(const InternalFunctor& d, Execution mode) { return build_cones(d, false, mode); }
ConeCategory cocones_category(const InternalFunctor& d, Execution mode) { return build_cones(d, true, mode); }

InternalFunctor name_functor(const ExponentialCategory& ad, const InternalFunctor& diagram) {
  auto one = terminal_cat(ad.cat.base());
  auto name = name_of(ad, diagram);
  Section ids(name.size());
  for (ObjectId c = 0; c < static_cast<ObjectId>(name.size()); ++c) ids[c] = ad.cat.identity(c, name[c]);
  return InternalFunctor(one, ad.cat, point_map(ad.cat.obj(), name), point_map(ad.cat.arr(), ids));
}

InternalFunctor cone_comma_comparison(const ConeCategory& cones, const ExponentialCategory& ad,
                                      const CommaCategory& comma) {
  const auto& a = cones.target();
  const auto& dg = cones.diagram;
  const auto& base = *a.base();
  auto f0 = tabulate(cones.cat.obj(), comma.cat.obj(), [&](ObjectId c, ElementId e) {
    auto v = cones.vertex(c, e);
    auto h = ad.arrows.find(c, [&](int block, ArrowId u, ElementId x) {
      auto d = base.source(u);
      auto vd = a.obj().restrict(u, v);
      // Blocks 0,1 are the source functor and 2,3 the target functor.
      bool constant = cones.cocone ? block >= 2 : block < 2;
      switch (block) {
        case 0:
        case 2: return constant ? vd : dg.on_obj(d, x);
        case 1:
        case 3: return constant ? a.identity(d, vd) : dg.on_arr(d, x);
        default: return cones.leg(c, e, u, x);
      }
    });
    if (!h) throw EngineFault("cone_comma_comparison: legs are not an arrow of A^D");
    return cones.cocone ? comma.objects.at(c, {0, v, *h}) : comma.objects.at(c, {v, 0, *h});
  });
  auto f1 = tabulate(cones.cat.arr(), comma.cat.arr(), [&](ObjectId c, ElementId k) {
    auto sg = f0(c, cones.arrows.coord(c, k, 0)), tg = f0(c, cones.arrows.coord(c, k, 1));
    auto h = cones.arrows.coord(c, k, 2);
    auto hs = comma.objects.coord(c, sg, 2), ht = comma.objects.coord(c, tg, 2);
    return cones.cocone ? comma.arrows.at(c, {0, h, hs, ht}) : comma.arrows.at(c, {h, 0, hs, ht});
  });
  return InternalFunctor(cones.cat, comma.cat, std::move(f0), std::move(f1));
}

namespace {

constexpr std::size_t kCrossChecked = 32;

Result<TerminalCertificate> certify(const InternalCategory& a, const Section& v, bool initial) {
  auto point = point_map(a.obj(), v);
  auto pb = initial ? pullback(a.src(), point) : pullback(a.tgt(), point);
  auto proj = compose(initial ? a.tgt() : a.src(), pb.legs[0]);
  if (auto inv = is_iso(proj)) return TerminalCertificate{v, compose(pb.legs[0], *inv)};
  const auto& base = *a.base();
  for (ObjectId c = 0; c < a.stage_count(); ++c)
    for (ElementId x = 0; x < a.obj().size(c); ++x) {
      auto n = initial ? a.hom(c, v[c], x).size() : a.hom(c, x, v[c]).size();
      if (n == 1) continue;
      std::string what = initial ? "arrows out of the candidate to '" : "arrows from '";
      what += a.obj().label(c, x) + (initial ? "'" : "' to the candidate");
      return Refusal{(n == 0 ? "no " : std::to_string(n) + " ") + what,
                     "stage '" + base.object_label(c) + "', object '" + a.obj().label(c, x) + "'",
                     {a.obj().label(c, v[c]), a.obj().label(c, x), std::to_string(n)}};
    }
  throw EngineFault("certify: projection is not iso but every fiber is a singleton");
}

Result<TerminalSearch> search(const InternalCategory& a, bool initial) {
  const auto& base = *a.base();
  std::vector<std::vector<bool>> allowed(a.stage_count());
  for (ObjectId c = 0; c < a.stage_count(); ++c) {
    const int n = a.obj().size(c);
    allowed[c].assign(n, false);
    bool any = false;
    for (ElementId v = 0; v < n; ++v) {
      bool ok = true;
      for (ElementId x = 0; x < n && ok; ++x) ok = (initial ? a.hom(c, v, x).size() : a.hom(c, x, v).size()) == 1;
      allowed[c][v] = ok;
      any |= ok;
    }
    if (!any) {
      std::vector<std::string> objs(a.obj().carrier(c).begin(), a.obj().carrier(c).end());
      return Refusal{std::string("no ") + (initial ? "initial" : "terminal") + " object at this stage",
                     "stage '" + base.object_label(c) + "'", objs};
    }
  }
  auto pts = points_filtered(a.obj(), allowed);
  if (pts.empty())
    return Refusal{std::string("stage-wise ") + (initial ? "initial" : "terminal") +
                       " objects do not glue to a global element",
                   "all stages", {}};
  TerminalSearch out;
  out.candidates = std::move(pts);
  auto r = certify(a, out.candidates.front(), initial);
  if (!r) throw EngineFault("search: stage-wise candidate failed certification: " + r.refusal().reason);
  out.certificate = r.value();
  // Every glued point passes the same stage-wise test, so certification and
  // the iso cross-check are repeated on a prefix only; indiscrete targets can
  // glue to ~10^5 points.
  const auto& first = out.certificate;
  const auto checked = std::min(out.candidates.size(), kCrossChecked);
  for (std::size_t i = 1; i < checked; ++i) {
    const auto& q = out.candidates[i];
    auto rq = certify(a, q, initial);
    if (!rq) throw EngineFault("search: stage-wise candidate failed certification: " + rq.refusal().reason);
    const auto& other = rq.value();
    for (ObjectId c = 0; c < a.stage_count(); ++c) {
      auto pq = other.witness(c, first.object[c]);
      auto qp = first.witness(c, q[c]);
      // Terminal: pq : p -> q, qp : q -> p. Initial: the other way round.
      auto p_loop = initial ? a.compose(c, pq, qp) : a.compose(c, qp, pq);
      auto q_loop = initial ? a.compose(c, qp, pq) : a.compose(c, pq, qp);
      if (p_loop != a.identity(c, first.object[c]) || q_loop != a.identity(c, q[c]))
        throw EngineFault("search: two certified points are not isomorphic");
    }
  }
  return out;
}

Result<UniversalCertificate> universal(const InternalFunctor& d, bool cocone) {
  auto cones = cocone ? cocones_category(d) : cones_category(d);
  auto found = search(cones.cat, cocone);
  if (!found) {
    auto r = found.refusal();
    r.reason = std::string(cocone ? "no universal cocone: " : "no universal cone: ") + r.reason;
    return r;
  }
  const auto& cert = found.value().certificate;
  UniversalCertificate out{cones, cert.object, Section(cert.object.size()), cert.witness, found.value().candidates.size()};
  for (ObjectId c = 0; c < static_cast<ObjectId>(out.cone.size()); ++c) out.vertex[c] = out.cones.vertex(c, out.cone[c]);
  return out;
}

}  // namespace

Result<TerminalCertificate> is_internal_terminal(const InternalCategory& a, const Section& v) { return certify(a, v, false); }
Result<TerminalCertificate> is_internal_initial(const InternalCategory& a, const Section& v) { return certify(a, v, true); }
Result<TerminalSearch> find_terminal(const InternalCategory& a) { return search(a, false); }
Result<TerminalSearch> find_initial(const InternalCategory& a) { return search(a, true); }

Result<UniversalCertificate> universal_cone(const InternalFunctor& d) { return universal(d, false); }
Result<UniversalCertificate> universal_cocone(const InternalFunctor& d) { return universal(d, true); }

LimitProvider search_provider() {
  return [](const InternalFunctor& d) { return universal_cone(d); };
}

bool is_externally_terminal(const ExternalCategory& ext, ObjectId object) {
  for (ObjectId p = 0; p < ext.category->object_count(); ++p)
    if (ext.category->hom(p, object).size() != 1) return false;
  return true;
}

Result<IndexedFactorization> indexed_cone_factorization(const PresheafMap& family, const UniversalCertificate& cert) {
  const auto& cns = cert.cones.cat;
  if (!(family.target() == cns.obj()))
    throw PreconditionError("indexed_cone_factorization: family does not land in the cone object");
  auto nat = validate_map(family);
  if (!nat.ok()) return Refusal{"family of cones is not natural in the index", "family", nat.violations};
  IndexedFactorization out;
  out.morphisms = compose(cert.witness, family);
  out.mediator = compose(cert.cones.projection.f1(), out.morphisms);
  // Every map I -> Cns1 over (γ, π), as global sections on ∫I.
  const auto& i = family.source();
  Elements el(i);
  auto x = reindex(el, cns.arr());
  std::vector<std::vector<bool>> allowed(el.base()->object_count());
  for (ObjectId o = 0; o < el.base()->object_count(); ++o) {
    auto [c, e] = el.point(o);
    allowed[o].assign(cns.arr().size(c), false);
    for (ElementId k = 0; k < cns.arr().size(c); ++k)
      allowed[o][k] = cns.s(c, k) == family(c, e) && cns.t(c, k) == cert.cone[c];
  }
  out.solutions = points_filtered(x, allowed).size();
  return out;
}

}  // namespace intcat
