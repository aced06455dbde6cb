#include "intcat/ambient/exponential.hpp"

namespace intcat {

Exponential exponential(const Presheaf& x, const Presheaf& y) {
  return exponential(x, y, default_execution());
}

Exponential exponential(const Presheaf& x, const Presheaf& y, Execution mode) {
  if (!same_base(x.base(), y.base())) throw PreconditionError("exponential: different bases");
  FamilySpec spec;
  spec.blocks = {{x, y}};
  Exponential out{x, y, FamilyPresheaf(x.base(), spec, mode), {}, {}};
  out.with_x = product(out.object(), x);
  const auto& p = out.with_x.apex;
  std::vector<std::vector<ElementId>> comps(p.stage_count());
  for (ObjectId c = 0; c < p.stage_count(); ++c)
    for (ElementId phi = 0; phi < out.object().size(c); ++phi)
      for (ElementId e = 0; e < x.size(c); ++e) comps[c].push_back(out.families.local(c, phi, 0, e));
  out.eval = PresheafMap(p, y, std::move(comps));
  return out;
}

PresheafMap Exponential::curry(const LimitCone& zx, const PresheafMap& f) const {
  if (!(f.source() == zx.apex) || !(f.target() == y) || !(zx.legs[1].target() == x))
    throw PreconditionError("curry: map is not of the form Z × X -> Y");
  const auto& z = zx.legs[0].target();
  const auto& b = *z.base();
  std::vector<std::vector<ElementId>> comps(z.stage_count());
  for (ObjectId c = 0; c < z.stage_count(); ++c)
    for (ElementId e = 0; e < z.size(c); ++e) {
      auto found = families.find(c, [&](int, ArrowId u, ElementId xe) {
        auto d = b.source(u);
        return f(d, zx.index(d, z.restrict(u, e), xe));
      });
      if (!found) throw PreconditionError("curry: map is not natural");
      comps[c].push_back(*found);
    }
  return PresheafMap(z, object(), std::move(comps));
}

PresheafMap Exponential::uncurry(const LimitCone& zx, const PresheafMap& g) const {
  if (!(g.target() == object()) || !(zx.legs[0].target() == g.source()) ||
      !(zx.legs[1].target() == x))
    throw PreconditionError("uncurry: map is not of the form Z -> Y^X");
  const auto& z = g.source();
  std::vector<std::vector<ElementId>> comps(z.stage_count());
  for (ObjectId c = 0; c < z.stage_count(); ++c)
    for (ElementId e = 0; e < z.size(c); ++e)
      for (ElementId xe = 0; xe < x.size(c); ++xe) comps[c].push_back(families.local(c, g(c, e), 0, xe));
  return PresheafMap(zx.apex, y, std::move(comps));
}

}  // namespace intcat
