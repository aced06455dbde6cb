#include "intcat/ambient/tuples.hpp"

#include <algorithm>

#include "intcat/labels.hpp"

namespace intcat {

TuplePresheaf::TuplePresheaf(std::vector<Presheaf> coordinates,
                             const std::function<void(ObjectId, const Emit&)>& enumerate) {
  if (coordinates.empty()) throw PreconditionError("TuplePresheaf: at least one coordinate required");
  const Base& base = coordinates[0].base();
  for (const auto& x : coordinates)
    if (!same_base(x.base(), base)) throw PreconditionError("TuplePresheaf: coordinates on different bases");
  auto d = std::make_shared<Data>();
  const auto& b = *base;
  const int n = b.object_count();
  d->tuples.resize(n);
  d->lookup.resize(n);
  for (ObjectId c = 0; c < n; ++c) {
    enumerate(c, [&](const Tuple& t) {
      if (t.size() != coordinates.size()) throw PreconditionError("TuplePresheaf: tuple has the wrong arity");
      d->tuples[c].push_back(t);
    });
    std::sort(d->tuples[c].begin(), d->tuples[c].end());
    d->tuples[c].erase(std::unique(d->tuples[c].begin(), d->tuples[c].end()), d->tuples[c].end());
    for (std::size_t e = 0; e < d->tuples[c].size(); ++e) d->lookup[c].emplace(d->tuples[c][e], static_cast<ElementId>(e));
  }
  std::vector<std::vector<std::string>> carriers(n);
  for (ObjectId c = 0; c < n; ++c)
    for (const auto& t : d->tuples[c]) {
      std::vector<std::string> parts;
      for (std::size_t i = 0; i < t.size(); ++i) parts.push_back(coordinates[i].label(c, t[i]));
      carriers[c].push_back(labels::tuple_of(parts));
    }
  std::vector<std::vector<ElementId>> action(b.arrow_count());
  for (ArrowId u = 0; u < b.arrow_count(); ++u) {
    auto c = b.source(u), c2 = b.target(u);
    for (const auto& t : d->tuples[c2]) {
      Tuple r(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) r[i] = coordinates[i].restrict(u, t[i]);
      auto it = d->lookup[c].find(r);
      if (it == d->lookup[c].end())
        throw EngineFault("TuplePresheaf: admissible tuples not closed under '" + b.arrow(u).label + "'");
      action[u].push_back(it->second);
    }
  }
  d->object = Presheaf(base, std::move(carriers), std::move(action));
  d->coordinates = std::move(coordinates);
  d_ = std::move(d);
}

std::optional<ElementId> TuplePresheaf::find(ObjectId c, const Tuple& t) const {
  auto it = d_->lookup[c].find(t);
  if (it == d_->lookup[c].end()) return std::nullopt;
  return it->second;
}

ElementId TuplePresheaf::at(ObjectId c, const Tuple& t) const {
  auto e = find(c, t);
  if (!e) throw EngineFault("TuplePresheaf: tuple is not admissible");
  return *e;
}

PresheafMap TuplePresheaf::projection(int i) const {
  return tabulate(object(), d_->coordinates[i], [&](ObjectId c, ElementId e) { return coord(c, e, i); });
}

}  // namespace intcat
