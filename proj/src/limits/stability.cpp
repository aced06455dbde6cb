#include "intcat/limits/stability.hpp"

#include <map>

namespace intcat {

std::vector<TestObject> test_objects(const Base& base, int limit) {
  std::vector<TestObject> out;
  auto push = [&](std::string name, Presheaf x) {
    if (static_cast<int>(out.size()) < limit) out.push_back({std::move(name), std::move(x)});
  };
  push("T", terminal(base));
  const int n = base->object_count();
  for (ObjectId c = 0; c < n; ++c) push("y(" + base->object_label(c) + ")", representable(base, c));
  for (ObjectId c = 0; c < n; ++c)
    for (ObjectId d = c; d < n; ++d)
      push("y(" + base->object_label(c) + ")+y(" + base->object_label(d) + ")",
           coproduct(representable(base, c), representable(base, d)).object);
  return out;
}

bool externally_universal_at(const ConeCategory& cones, const Section& p, const TestObject& test) {
  const auto& cat = cones.cat;
  Elements el(test.object);
  const int m = el.base()->object_count();
  Section q(m);
  for (ObjectId o = 0; o < m; ++o) q[o] = p[el.point(o).first];
  auto obj = reindex(el, cat.obj());
  auto arr = reindex(el, cat.arr());
  // Arrows into q (out of q for cocones), grouped by their other end.
  std::vector<std::vector<bool>> allowed(m);
  for (ObjectId o = 0; o < m; ++o) {
    ObjectId c = el.point(o).first;
    allowed[o].resize(cat.arr().size(c));
    for (ElementId f = 0; f < cat.arr().size(c); ++f)
      allowed[o][f] = (cones.cocone ? cat.s(c, f) : cat.t(c, f)) == q[o];
  }
  std::map<Section, int> count;
  for (const auto& f : points_filtered(arr, allowed)) {
    Section other(m);
    for (ObjectId o = 0; o < m; ++o) {
      ObjectId c = el.point(o).first;
      other[o] = cones.cocone ? cat.t(c, f[o]) : cat.s(c, f[o]);
    }
    ++count[other];
  }
  auto objects = points(obj);
  if (count.size() != objects.size()) return false;
  for (const auto& [s, k] : count)
    if (k != 1) return false;
  return true;
}

StabilityCheck check_stability(const UniversalCertificate& cert, const std::vector<TestObject>& tests) {
  StabilityCheck out;
  for (const auto& t : tests) {
    out.checked.push_back(t.name);
    if (!externally_universal_at(cert.cones, cert.cone, t)) out.failures.push_back(t.name);
  }
  return out;
}

RefusalConfirmation confirm_refusal(const ConeCategory& cones, const std::vector<TestObject>& tests) {
  RefusalConfirmation out;
  auto global = points(cones.cat.obj());
  out.global_cones = global.size();
  out.confirmed = true;
  for (std::size_t i = 0; i < global.size(); ++i) {
    const auto& p = global[i];
    std::string found;
    for (const auto& t : tests)
      if (!externally_universal_at(cones, p, t)) {
        found = t.name;
        break;
      }
    if (found.empty()) {
      out.confirmed = false;
      out.evidence.clear();
      return out;
    }
    out.evidence.push_back("cone " + std::to_string(i) + " fails at " + found);
  }
  return out;
}

}  // namespace intcat
