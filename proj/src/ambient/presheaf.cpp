#include "intcat/ambient/presheaf.hpp"

#include <algorithm>
#include <functional>

#include "intcat/labels.hpp"

namespace intcat {

Presheaf::Presheaf(Base base, std::vector<std::vector<std::string>> carriers,
                   std::vector<std::vector<ElementId>> action) {
  if (!base) throw PreconditionError("Presheaf: null base");
  if (static_cast<int>(carriers.size()) != base->object_count())
    throw PreconditionError("Presheaf: one carrier per index object required");
  if (static_cast<int>(action.size()) != base->arrow_count())
    throw PreconditionError("Presheaf: one action table per index arrow required");
  for (ArrowId u = 0; u < base->arrow_count(); ++u) {
    const auto& a = base->arrow(u);
    if (action[u].size() != carriers[a.target].size())
      throw PreconditionError("Presheaf: action of '" + a.label + "' has wrong domain size");
    for (auto x : action[u])
      if (x < 0 || x >= static_cast<int>(carriers[a.source].size()))
        throw PreconditionError("Presheaf: action of '" + a.label + "' leaves the carrier");
  }
  auto d = std::make_shared<Data>();
  d->lookup.resize(carriers.size());
  for (std::size_t c = 0; c < carriers.size(); ++c) {
    d->lookup[c].reserve(carriers[c].size());
    for (std::size_t x = 0; x < carriers[c].size(); ++x)
      if (!d->lookup[c].emplace(carriers[c][x], static_cast<ElementId>(x)).second)
        throw PreconditionError("Presheaf: duplicate element label '" + carriers[c][x] +
                                "' at stage '" + base->object_label(static_cast<int>(c)) + "'");
  }
  d->base = std::move(base);
  d->carriers = std::move(carriers);
  d->action = std::move(action);
  d_ = std::move(d);
}

std::size_t Presheaf::total_size() const {
  std::size_t n = 0;
  for (const auto& c : d_->carriers) n += c.size();
  return n;
}

std::optional<ElementId> Presheaf::find(ObjectId c, std::string_view label) const {
  auto it = d_->lookup[c].find(std::string(label));
  if (it == d_->lookup[c].end()) return std::nullopt;
  return it->second;
}

bool Presheaf::operator==(const Presheaf& o) const {
  if (d_ == o.d_) return true;
  if (!d_ || !o.d_) return false;
  return same_base(d_->base, o.d_->base) && d_->carriers == o.d_->carriers &&
         d_->action == o.d_->action;
}

ValidationReport validate_presheaf(const Presheaf& x) {
  ValidationReport r;
  const auto& b = *x.base();
  for (ObjectId c = 0; c < b.object_count(); ++c) {
    auto id = b.identity(c);
    for (ElementId e = 0; e < x.size(c); ++e)
      if (x.restrict(id, e) != e)
        r.add("identity action moves '" + x.label(c, e) + "' at '" + b.object_label(c) + "'");
  }
  for (ArrowId g = 0; g < b.arrow_count(); ++g)
    for (ArrowId f = 0; f < b.arrow_count(); ++f) {
      auto gf = b.compose(g, f);
      if (gf < 0) continue;
      // X(g∘f) = X(f)∘X(g)
      for (ElementId e = 0; e < x.size(b.target(g)); ++e)
        if (x.restrict(gf, e) != x.restrict(f, x.restrict(g, e)))
          r.add("action not functorial on (" + b.arrow(g).label + "," + b.arrow(f).label +
                ") at '" + x.label(b.target(g), e) + "'");
    }
  return r;
}

PresheafMap::PresheafMap(Presheaf source, Presheaf target,
                         std::vector<std::vector<ElementId>> components)
    : source_(std::move(source)), target_(std::move(target)) {
  if (!same_base(source_.base(), target_.base()))
    throw PreconditionError("PresheafMap: source and target live on different bases");
  if (static_cast<int>(components.size()) != source_.stage_count())
    throw PreconditionError("PresheafMap: one component per index object required");
  for (ObjectId c = 0; c < source_.stage_count(); ++c) {
    if (static_cast<int>(components[c].size()) != source_.size(c))
      throw PreconditionError("PresheafMap: component has wrong domain size");
    for (auto y : components[c])
      if (y < 0 || y >= target_.size(c))
        throw PreconditionError("PresheafMap: component leaves the target carrier");
  }
  components_ = std::make_shared<const std::vector<std::vector<ElementId>>>(std::move(components));
}

bool PresheafMap::operator==(const PresheafMap& o) const {
  return source_ == o.source_ && target_ == o.target_ &&
         (components_ == o.components_ || *components_ == *o.components_);
}

PresheafMap tabulate(const Presheaf& source, const Presheaf& target,
                     const std::function<ElementId(ObjectId, ElementId)>& fn) {
  std::vector<std::vector<ElementId>> comps(source.stage_count());
  for (ObjectId c = 0; c < source.stage_count(); ++c) {
    comps[c].resize(source.size(c));
    for (ElementId e = 0; e < source.size(c); ++e) comps[c][e] = fn(c, e);
  }
  return PresheafMap(source, target, std::move(comps));
}

ValidationReport validate_map(const PresheafMap& f) {
  ValidationReport r;
  const auto& b = *f.source().base();
  for (ArrowId u = 0; u < b.arrow_count(); ++u) {
    auto c = b.source(u), c2 = b.target(u);
    for (ElementId x = 0; x < f.source().size(c2); ++x)
      if (f(c, f.source().restrict(u, x)) != f.target().restrict(u, f(c2, x)))
        r.add("naturality fails along '" + b.arrow(u).label + "' at '" + f.source().label(c2, x) +
              "'");
  }
  return r;
}

PresheafMap identity_map(const Presheaf& x) {
  std::vector<std::vector<ElementId>> comps(x.stage_count());
  for (ObjectId c = 0; c < x.stage_count(); ++c) {
    comps[c].resize(x.size(c));
    for (ElementId e = 0; e < x.size(c); ++e) comps[c][e] = e;
  }
  return PresheafMap(x, x, std::move(comps));
}

PresheafMap compose(const PresheafMap& g, const PresheafMap& f) {
  if (!(f.target() == g.source()))
    throw PreconditionError("compose: target of the first map is not the source of the second");
  std::vector<std::vector<ElementId>> comps(f.source().stage_count());
  for (ObjectId c = 0; c < f.source().stage_count(); ++c) {
    comps[c].resize(f.source().size(c));
    for (ElementId e = 0; e < f.source().size(c); ++e) comps[c][e] = g(c, f(c, e));
  }
  return PresheafMap(f.source(), g.target(), std::move(comps));
}

bool is_parallel(const PresheafMap& f, const PresheafMap& g) {
  return f.source() == g.source() && f.target() == g.target();
}

Presheaf constant(const Base& base, std::vector<std::string> labels) {
  std::vector<std::vector<std::string>> carriers(base->object_count(), labels);
  std::vector<std::vector<ElementId>> action(base->arrow_count());
  for (auto& a : action) {
    a.resize(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) a[i] = static_cast<ElementId>(i);
  }
  return Presheaf(base, std::move(carriers), std::move(action));
}

Presheaf terminal(const Base& base) { return constant(base, {std::string(labels::kPoint)}); }

PresheafMap to_terminal(const Presheaf& x) {
  std::vector<std::vector<ElementId>> comps(x.stage_count());
  for (ObjectId c = 0; c < x.stage_count(); ++c) comps[c].assign(x.size(c), 0);
  return PresheafMap(x, terminal(x.base()), std::move(comps));
}

Presheaf initial(const Base& base) { return constant(base, {}); }

PresheafMap from_initial(const Presheaf& x) {
  return PresheafMap(initial(x.base()), x,
                     std::vector<std::vector<ElementId>>(x.stage_count()));
}

Presheaf representable(const Base& base, ObjectId c) {
  const auto& b = *base;
  std::vector<std::vector<std::string>> carriers(b.object_count());
  std::vector<std::vector<int>> index_of(b.object_count());
  for (ObjectId d = 0; d < b.object_count(); ++d) index_of[d].assign(b.arrow_count(), -1);
  for (auto u : b.arrows_into(c)) {
    auto d = b.source(u);
    index_of[d][u] = static_cast<int>(carriers[d].size());
    carriers[d].push_back(b.arrow(u).label);
  }
  std::vector<std::vector<ElementId>> action(b.arrow_count());
  for (ArrowId w = 0; w < b.arrow_count(); ++w) {
    auto d2 = b.source(w), d = b.target(w);
    for (auto u : b.arrows_into(c)) {
      if (b.source(u) != d) continue;
      action[w].push_back(index_of[d2][b.compose(u, w)]);
    }
  }
  return Presheaf(base, std::move(carriers), std::move(action));
}

Coproduct coproduct(const Presheaf& x, const Presheaf& y) {
  if (!same_base(x.base(), y.base())) throw PreconditionError("coproduct: different bases");
  const auto& b = *x.base();
  std::vector<std::vector<std::string>> carriers(b.object_count());
  for (ObjectId c = 0; c < b.object_count(); ++c) {
    for (ElementId e = 0; e < x.size(c); ++e) carriers[c].push_back(labels::injection(0, x.label(c, e)));
    for (ElementId e = 0; e < y.size(c); ++e) carriers[c].push_back(labels::injection(1, y.label(c, e)));
  }
  std::vector<std::vector<ElementId>> action(b.arrow_count());
  for (ArrowId u = 0; u < b.arrow_count(); ++u) {
    auto c = b.source(u), c2 = b.target(u);
    for (ElementId e = 0; e < x.size(c2); ++e) action[u].push_back(x.restrict(u, e));
    for (ElementId e = 0; e < y.size(c2); ++e) action[u].push_back(x.size(c) + y.restrict(u, e));
  }
  Presheaf sum(x.base(), std::move(carriers), std::move(action));
  std::vector<std::vector<ElementId>> l(b.object_count()), r(b.object_count());
  for (ObjectId c = 0; c < b.object_count(); ++c) {
    for (ElementId e = 0; e < x.size(c); ++e) l[c].push_back(e);
    for (ElementId e = 0; e < y.size(c); ++e) r[c].push_back(x.size(c) + e);
  }
  return Coproduct{sum, PresheafMap(x, sum, std::move(l)), PresheafMap(y, sum, std::move(r))};
}

PresheafMap Coproduct::copair(const PresheafMap& f, const PresheafMap& g) const {
  if (!(f.source() == left.source()) || !(g.source() == right.source()) ||
      !(f.target() == g.target()))
    throw PreconditionError("copair: maps do not match the coproduct summands");
  std::vector<std::vector<ElementId>> comps(object.stage_count());
  for (ObjectId c = 0; c < object.stage_count(); ++c) {
    for (ElementId e = 0; e < f.source().size(c); ++e) comps[c].push_back(f(c, e));
    for (ElementId e = 0; e < g.source().size(c); ++e) comps[c].push_back(g(c, e));
  }
  return PresheafMap(object, f.target(), std::move(comps));
}

std::optional<PresheafMap> is_iso(const PresheafMap& f) {
  std::vector<std::vector<ElementId>> inv(f.target().stage_count());
  for (ObjectId c = 0; c < f.source().stage_count(); ++c) {
    if (f.source().size(c) != f.target().size(c)) return std::nullopt;
    inv[c].assign(f.target().size(c), -1);
    for (ElementId e = 0; e < f.source().size(c); ++e) {
      auto y = f(c, e);
      if (inv[c][y] != -1) return std::nullopt;
      inv[c][y] = e;
    }
  }
  return PresheafMap(f.target(), f.source(), std::move(inv));
}

bool is_mono(const PresheafMap& f) {
  for (ObjectId c = 0; c < f.source().stage_count(); ++c) {
    std::vector<bool> seen(f.target().size(c), false);
    for (ElementId e = 0; e < f.source().size(c); ++e) {
      if (seen[f(c, e)]) return false;
      seen[f(c, e)] = true;
    }
  }
  return true;
}

PresheafMap point_map(const Presheaf& x, const Section& s) {
  if (static_cast<int>(s.size()) != x.stage_count())
    throw PreconditionError("point_map: section has wrong length");
  std::vector<std::vector<ElementId>> comps(x.stage_count());
  for (ObjectId c = 0; c < x.stage_count(); ++c) comps[c] = {s[c]};
  return PresheafMap(terminal(x.base()), x, std::move(comps));
}

Section section_of(const PresheafMap& point) {
  Section s(point.source().stage_count());
  for (ObjectId c = 0; c < point.source().stage_count(); ++c) {
    if (point.source().size(c) != 1) throw PreconditionError("section_of: source is not terminal");
    s[c] = point(c, 0);
  }
  return s;
}

namespace {

// Backtracking over stages; assigning a stage forces its restrictions.
class SectionSearch {
 public:
  SectionSearch(const Presheaf& x, const std::vector<std::vector<bool>>* allowed)
      : x_(x), b_(*x.base()), allowed_(allowed), value_(b_.object_count(), -1) {}

  std::vector<Section> run() {
    descend(0);
    return std::move(out_);
  }

 private:
  bool ok(ObjectId c, ElementId e) const { return !allowed_ || (*allowed_)[c][e]; }

  bool assign(ObjectId c, ElementId e, std::vector<ObjectId>& trail) {
    if (value_[c] != -1) return value_[c] == e;
    if (!ok(c, e)) return false;
    value_[c] = e;
    trail.push_back(c);
    for (auto u : b_.arrows_into(c)) {
      if (!assign(b_.source(u), x_.restrict(u, e), trail)) return false;
    }
    return true;
  }

  void descend(ObjectId c) {
    while (c < b_.object_count() && value_[c] != -1) ++c;
    if (c == b_.object_count()) {
      // restrictions into already-assigned stages were checked on assignment,
      // but a later stage may restrict onto an earlier one inconsistently.
      for (ArrowId u = 0; u < b_.arrow_count(); ++u)
        if (x_.restrict(u, value_[b_.target(u)]) != value_[b_.source(u)]) return;
      out_.push_back(value_);
      return;
    }
    for (ElementId e = 0; e < x_.size(c); ++e) {
      std::vector<ObjectId> trail;
      if (assign(c, e, trail)) descend(c + 1);
      for (auto t : trail) value_[t] = -1;
    }
  }

  const Presheaf& x_;
  const IndexCategory& b_;
  const std::vector<std::vector<bool>>* allowed_;
  Section value_;
  std::vector<Section> out_;
};

}  // namespace

std::vector<Section> points(const Presheaf& x) { return SectionSearch(x, nullptr).run(); }

std::vector<Section> points_filtered(const Presheaf& x,
                                     const std::vector<std::vector<bool>>& allowed) {
  return SectionSearch(x, &allowed).run();
}

std::string point_label(const Presheaf& x, const Section& s) {
  if (x.stage_count() == 1) return x.label(0, s[0]);
  std::string out = "{";
  for (ObjectId c = 0; c < x.stage_count(); ++c) {
    if (c) out += ';';
    out += x.label(c, s[c]);
  }
  out += '}';
  return out;
}

std::vector<PresheafMap> hom_set(const Presheaf& x, const Presheaf& y) {
  if (!same_base(x.base(), y.base())) throw PreconditionError("hom_set: different bases");
  const auto& b = *x.base();
  // Variables are (stage, element) pairs; the value is an element of y at that stage.
  std::vector<std::vector<ElementId>> value(b.object_count());
  for (ObjectId c = 0; c < b.object_count(); ++c) value[c].assign(x.size(c), -1);
  std::vector<std::pair<ObjectId, ElementId>> vars;
  for (ObjectId c = b.object_count() - 1; c >= 0; --c)
    for (ElementId e = 0; e < x.size(c); ++e) vars.emplace_back(c, e);

  std::vector<PresheafMap> out;
  using Trail = std::vector<std::pair<ObjectId, ElementId>>;
  std::function<bool(ObjectId, ElementId, ElementId, Trail&)> assign =
      [&](ObjectId c, ElementId e, ElementId v, Trail& trail) -> bool {
    if (value[c][e] != -1) return value[c][e] == v;
    value[c][e] = v;
    trail.emplace_back(c, e);
    for (auto u : b.arrows_into(c))
      if (!assign(b.source(u), x.restrict(u, e), y.restrict(u, v), trail)) return false;
    return true;
  };
  std::function<void(std::size_t)> descend = [&](std::size_t i) {
    while (i < vars.size() && value[vars[i].first][vars[i].second] != -1) ++i;
    if (i == vars.size()) {
      out.emplace_back(x, y, value);
      return;
    }
    auto [c, e] = vars[i];
    for (ElementId v = 0; v < y.size(c); ++v) {
      Trail trail;
      if (assign(c, e, v, trail)) descend(i + 1);
      for (auto [tc, te] : trail) value[tc][te] = -1;
    }
  };
  descend(0);
  std::sort(out.begin(), out.end(), [](const PresheafMap& a, const PresheafMap& b2) {
    return a.components() < b2.components();
  });
  return out;
}

}  // namespace intcat
