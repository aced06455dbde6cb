#include "intcat/core/functor.hpp"

#include "intcat/ambient/search.hpp"

namespace intcat {

InternalFunctor::InternalFunctor(InternalCategory source, InternalCategory target, PresheafMap f0,
                                 PresheafMap f1)
    : source_(std::move(source)), target_(std::move(target)), f0_(std::move(f0)), f1_(std::move(f1)) {
  if (!(f0_.source() == source_.obj()) || !(f0_.target() == target_.obj()))
    throw PreconditionError("InternalFunctor: F0 must be a map A0 -> B0");
  if (!(f1_.source() == source_.arr()) || !(f1_.target() == target_.arr()))
    throw PreconditionError("InternalFunctor: F1 must be a map A1 -> B1");
}

InternalNatTrans::InternalNatTrans(InternalFunctor source, InternalFunctor target, PresheafMap component)
    : source_(std::move(source)), target_(std::move(target)), alpha_(std::move(component)) {
  if (!(source_.source() == target_.source()) || !(source_.target() == target_.target()))
    throw PreconditionError("InternalNatTrans: functors are not parallel");
  if (!(alpha_.source() == source_.source().obj()) || !(alpha_.target() == source_.target().arr()))
    throw PreconditionError("InternalNatTrans: component must be a map A0 -> B1");
}

ValidationReport validate_functor(const InternalFunctor& f) {
  ValidationReport r;
  r.merge(validate_map(f.f0()), "F0: ");
  r.merge(validate_map(f.f1()), "F1: ");
  const auto& a = f.source();
  const auto& b = f.target();
  const auto& base = *a.base();
  for (ObjectId c = 0; c < a.stage_count(); ++c) {
    const std::string at = " at stage '" + base.object_label(c) + "'";
    for (ElementId x = 0; x < a.obj().size(c); ++x)
      if (f.on_arr(c, a.identity(c, x)) != b.identity(c, f.on_obj(c, x)))
        r.add("F1(id(" + a.obj().label(c, x) + ")) != id(F0(" + a.obj().label(c, x) + "))" + at);
    for (ElementId g = 0; g < a.arr().size(c); ++g) {
      auto fg = f.on_arr(c, g);
      const auto& lab = a.arr().label(c, g);
      if (b.s(c, fg) != f.on_obj(c, a.s(c, g))) r.add("s(F1 " + lab + ") != F0(s " + lab + ")" + at);
      if (b.t(c, fg) != f.on_obj(c, a.t(c, g))) r.add("t(F1 " + lab + ") != F0(t " + lab + ")" + at);
    }
    for (ElementId g = 0; g < a.arr().size(c); ++g)
      for (auto h : a.out_of(c, a.t(c, g))) {
        auto lhs = f.on_arr(c, a.compose(c, h, g));
        auto rhs = b.compose(c, f.on_arr(c, h), f.on_arr(c, g));
        if (lhs != rhs)
          r.add("F1 does not preserve composition of (" + a.arr().label(c, h) + "," + a.arr().label(c, g) +
                ")" + at);
      }
  }
  return r;
}

ValidationReport validate_nat(const InternalNatTrans& al) {
  ValidationReport r;
  r.merge(validate_map(al.component()), "α: ");
  const auto& f = al.source();
  const auto& g = al.target();
  const auto& a = f.source();
  const auto& b = f.target();
  const auto& base = *a.base();
  for (ObjectId c = 0; c < a.stage_count(); ++c) {
    const std::string at = " at stage '" + base.object_label(c) + "'";
    for (ElementId x = 0; x < a.obj().size(c); ++x) {
      auto ax = al.at(c, x);
      if (b.s(c, ax) != f.on_obj(c, x) || b.t(c, ax) != g.on_obj(c, x))
        r.add("α(" + a.obj().label(c, x) + ") is not an arrow F0 -> G0" + at);
    }
    for (ElementId k = 0; k < a.arr().size(c); ++k) {
      auto lhs = b.compose(c, g.on_arr(c, k), al.at(c, a.s(c, k)));
      auto rhs = b.compose(c, al.at(c, a.t(c, k)), f.on_arr(c, k));
      if (lhs != rhs || lhs < 0) r.add("naturality square fails at '" + a.arr().label(c, k) + "'" + at);
    }
  }
  return r;
}

InternalFunctor identity_functor(const InternalCategory& a) {
  return InternalFunctor(a, a, identity_map(a.obj()), identity_map(a.arr()));
}

InternalFunctor compose_functors(const InternalFunctor& g, const InternalFunctor& f) {
  if (!(f.target() == g.source()))
    throw PreconditionError("compose_functors: target of F is not the source of G");
  return InternalFunctor(f.source(), g.target(), compose(g.f0(), f.f0()), compose(g.f1(), f.f1()));
}

InternalNatTrans identity_nat(const InternalFunctor& f) {
  return InternalNatTrans(f, f, compose(f.target().id(), f.f0()));
}

InternalNatTrans vertical_compose(const InternalNatTrans& beta, const InternalNatTrans& alpha) {
  if (!(alpha.target() == beta.source()))
    throw PreconditionError("vertical_compose: target of α is not the source of β");
  const auto& b = alpha.source().target();
  auto comp = tabulate(alpha.source().source().obj(), b.arr(), [&](ObjectId c, ElementId x) {
    return b.compose(c, beta.at(c, x), alpha.at(c, x));
  });
  return InternalNatTrans(alpha.source(), beta.target(), std::move(comp));
}

InternalNatTrans whisker_left(const InternalNatTrans& alpha, const InternalFunctor& l) {
  if (!(l.target() == alpha.source().source()))
    throw PreconditionError("whisker_left: L does not land in the domain of α");
  return InternalNatTrans(compose_functors(alpha.source(), l), compose_functors(alpha.target(), l),
                          compose(alpha.component(), l.f0()));
}

InternalNatTrans whisker_right(const InternalFunctor& r, const InternalNatTrans& alpha) {
  if (!(alpha.source().target() == r.source()))
    throw PreconditionError("whisker_right: R does not start at the codomain of α");
  return InternalNatTrans(compose_functors(r, alpha.source()), compose_functors(r, alpha.target()),
                          compose(r.f1(), alpha.component()));
}

InternalNatTrans horizontal_compose(const InternalNatTrans& beta, const InternalNatTrans& alpha) {
  return vertical_compose(whisker_left(beta, alpha.target()), whisker_right(beta.source(), alpha));
}

InternalFunctor functor_from_objects(const InternalCategory& source, const InternalCategory& target,
                                     const PresheafMap& f0) {
  auto f1 = tabulate(source.arr(), target.arr(), [&](ObjectId c, ElementId f) {
    auto h = target.hom(c, f0(c, source.s(c, f)), f0(c, source.t(c, f)));
    if (h.size() != 1)
      throw PreconditionError("functor_from_objects: no unique arrow for '" + source.arr().label(c, f) + "'");
    return h[0];
  });
  return InternalFunctor(source, target, f0, std::move(f1));
}

namespace {

struct GlobalVars {
  std::vector<int> offset;  // per stage
  int at(ObjectId c, ElementId x) const { return offset[c] + x; }
};

GlobalVars add_vars(SearchProblem& p, const Presheaf& over, const Presheaf& values) {
  GlobalVars g;
  for (ObjectId c = 0; c < over.stage_count(); ++c) {
    g.offset.push_back(static_cast<int>(p.domain.size()));
    for (ElementId x = 0; x < over.size(c); ++x) p.add_variable(values.size(c));
  }
  return g;
}

void add_naturality(SearchProblem& p, const GlobalVars& v, const Presheaf& over, const Presheaf& values) {
  const auto& b = *over.base();
  for (ArrowId u = 0; u < b.arrow_count(); ++u) {
    if (b.is_identity(u)) continue;
    auto c = b.source(u), c2 = b.target(u);
    for (ElementId x = 0; x < over.size(c2); ++x) p.link(v.at(c2, x), v.at(c, over.restrict(u, x)), values.action(u));
  }
}

std::vector<std::vector<ElementId>> slice_solution(const std::vector<int>& sol, const GlobalVars& v,
                                                   const Presheaf& over) {
  std::vector<std::vector<ElementId>> comps(over.stage_count());
  for (ObjectId c = 0; c < over.stage_count(); ++c)
    for (ElementId x = 0; x < over.size(c); ++x) comps[c].push_back(sol[v.at(c, x)]);
  return comps;
}

}  // namespace

std::vector<InternalFunctor> all_functors(const InternalCategory& a, const InternalCategory& b) {
  if (!same_base(a.base(), b.base())) throw PreconditionError("all_functors: different bases");
  SearchProblem p;
  auto v0 = add_vars(p, a.obj(), b.obj());
  auto v1 = add_vars(p, a.arr(), b.arr());
  add_naturality(p, v0, a.obj(), b.obj());
  add_naturality(p, v1, a.arr(), b.arr());
  for (ObjectId c = 0; c < a.stage_count(); ++c) {
    for (ElementId x = 0; x < a.obj().size(c); ++x)
      p.link(v0.at(c, x), v1.at(c, a.identity(c, x)), b.id().component(c));
    for (ElementId f = 0; f < a.arr().size(c); ++f) {
      p.link(v1.at(c, f), v0.at(c, a.s(c, f)), b.src().component(c));
      p.link(v1.at(c, f), v0.at(c, a.t(c, f)), b.tgt().component(c));
      for (auto g : a.out_of(c, a.t(c, f))) {
        int vf = v1.at(c, f), vg = v1.at(c, g), vgf = v1.at(c, a.compose(c, g, f));
        p.check({vf, vg, vgf}, [&b, c, vf, vg, vgf](const std::vector<int>& s) {
          return b.compose(c, s[vg], s[vf]) == s[vgf];
        });
      }
    }
  }
  std::vector<InternalFunctor> out;
  for (const auto& sol : solve(p))
    out.emplace_back(a, b, PresheafMap(a.obj(), b.obj(), slice_solution(sol, v0, a.obj())),
                     PresheafMap(a.arr(), b.arr(), slice_solution(sol, v1, a.arr())));
  return out;
}

std::vector<InternalNatTrans> all_nats(const InternalFunctor& f, const InternalFunctor& g) {
  const auto& a = f.source();
  const auto& b = f.target();
  SearchProblem p;
  auto v = add_vars(p, a.obj(), b.arr());
  add_naturality(p, v, a.obj(), b.arr());
  for (ObjectId c = 0; c < a.stage_count(); ++c) {
    for (ElementId x = 0; x < a.obj().size(c); ++x) {
      std::vector<char> ok(b.arr().size(c), 0);
      for (auto h : b.hom(c, f.on_obj(c, x), g.on_obj(c, x))) ok[h] = 1;
      p.restrict_values(v.at(c, x), std::move(ok));
    }
    for (ElementId k = 0; k < a.arr().size(c); ++k) {
      int vs = v.at(c, a.s(c, k)), vt = v.at(c, a.t(c, k));
      auto fk = f.on_arr(c, k), gk = g.on_arr(c, k);
      p.check({vs, vt}, [&b, c, vs, vt, fk, gk](const std::vector<int>& s) {
        return b.compose(c, gk, s[vs]) == b.compose(c, s[vt], fk);
      });
    }
  }
  std::vector<InternalNatTrans> out;
  for (const auto& sol : solve(p))
    out.emplace_back(f, g, PresheafMap(a.obj(), b.arr(), slice_solution(sol, v, a.obj())));
  return out;
}

}  // namespace intcat
