#include "intcat/ambient/index_category.hpp"

#include <sstream>

namespace intcat {

IndexCategory::IndexCategory(std::vector<std::string> objects, std::vector<Arrow> arrows,
                             std::vector<ArrowId> identities, std::vector<ArrowId> composition)
    : objects_(std::move(objects)),
      arrows_(std::move(arrows)),
      identities_(std::move(identities)),
      composition_(std::move(composition)) {
  const auto n = objects_.size();
  const auto m = arrows_.size();
  if (identities_.size() != n)
    throw PreconditionError("IndexCategory: identity table has wrong length");
  if (composition_.size() != m * m)
    throw PreconditionError("IndexCategory: composition table must be arrow_count^2");
  into_.assign(n, {});
  from_.assign(n, {});
  for (std::size_t u = 0; u < m; ++u) {
    const auto& a = arrows_[u];
    if (a.source < 0 || a.target < 0 || static_cast<std::size_t>(a.source) >= n ||
        static_cast<std::size_t>(a.target) >= n)
      throw PreconditionError("IndexCategory: arrow '" + a.label + "' has an unknown endpoint");
    into_[a.target].push_back(static_cast<ArrowId>(u));
    from_[a.source].push_back(static_cast<ArrowId>(u));
  }
  for (auto id : identities_)
    if (id < 0 || static_cast<std::size_t>(id) >= m)
      throw PreconditionError("IndexCategory: identity refers to an unknown arrow");
  for (auto e : composition_)
    if (e < -1 || e >= static_cast<ArrowId>(m))
      throw PreconditionError("IndexCategory: composition refers to an unknown arrow");
}

std::vector<ArrowId> IndexCategory::hom(ObjectId d, ObjectId c) const {
  std::vector<ArrowId> out;
  for (auto u : into_[c])
    if (arrows_[u].source == d) out.push_back(u);
  return out;
}

std::optional<ObjectId> IndexCategory::find_object(std::string_view label) const {
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if (objects_[i] == label) return static_cast<ObjectId>(i);
  return std::nullopt;
}

std::optional<ArrowId> IndexCategory::find_arrow(std::string_view label) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].label == label) return static_cast<ArrowId>(i);
  return std::nullopt;
}

bool IndexCategory::same_shape(const IndexCategory& o) const {
  if (objects_.size() != o.objects_.size() || arrows_.size() != o.arrows_.size()) return false;
  for (std::size_t u = 0; u < arrows_.size(); ++u)
    if (arrows_[u].source != o.arrows_[u].source || arrows_[u].target != o.arrows_[u].target)
      return false;
  return identities_ == o.identities_ && composition_ == o.composition_;
}

bool IndexCategory::operator==(const IndexCategory& o) const {
  return objects_ == o.objects_ && arrows_ == o.arrows_ && identities_ == o.identities_ &&
         composition_ == o.composition_;
}

bool same_base(const Base& a, const Base& b) { return a == b || (a && b && *a == *b); }

ValidationReport validate_index_category(const IndexCategory& c) {
  ValidationReport r;
  const int n = c.object_count();
  const int m = c.arrow_count();
  auto name = [&](ArrowId u) { return c.arrow(u).label; };

  for (ObjectId x = 0; x < n; ++x) {
    auto id = c.identity(x);
    if (c.source(id) != x || c.target(id) != x)
      r.add("identity of '" + c.object_label(x) + "' is not an endomorphism of it");
  }
  for (ArrowId g = 0; g < m; ++g) {
    for (ArrowId f = 0; f < m; ++f) {
      auto gf = c.compose(g, f);
      bool composable = c.target(f) == c.source(g);
      if (!composable) {
        if (gf != -1) r.add("comp(" + name(g) + "," + name(f) + ") defined on a non-composable pair");
        continue;
      }
      if (gf == -1) {
        r.add("comp(" + name(g) + "," + name(f) + ") missing");
        continue;
      }
      if (c.source(gf) != c.source(f) || c.target(gf) != c.target(g))
        r.add("comp(" + name(g) + "," + name(f) + ") has wrong endpoints");
    }
  }
  for (ArrowId f = 0; f < m; ++f) {
    if (c.compose(f, c.identity(c.source(f))) != f)
      r.add("right identity law fails for " + name(f));
    if (c.compose(c.identity(c.target(f)), f) != f)
      r.add("left identity law fails for " + name(f));
  }
  for (ArrowId h = 0; h < m; ++h)
    for (ArrowId g = 0; g < m; ++g) {
      auto hg = c.compose(h, g);
      if (hg < 0) continue;
      for (ArrowId f = 0; f < m; ++f) {
        auto gf = c.compose(g, f);
        if (gf < 0) continue;
        auto left = c.compose(h, gf);
        auto right = c.compose(hg, f);
        if (left != right)
          r.add("associativity fails for (" + name(h) + "," + name(g) + "," + name(f) + ")");
      }
    }
  return r;
}

Base point_base() {
  static const Base base = std::make_shared<const IndexCategory>(
      std::vector<std::string>{"pt"}, std::vector<IndexCategory::Arrow>{{"id_pt", 0, 0}},
      std::vector<ArrowId>{0}, std::vector<ArrowId>{0});
  return base;
}

Base preorder_base(std::vector<std::string> objects, const std::vector<std::vector<bool>>& leq) {
  const int n = static_cast<int>(objects.size());
  std::vector<IndexCategory::Arrow> arrows;
  std::vector<std::vector<ArrowId>> arrow_of(n, std::vector<ArrowId>(n, -1));
  std::vector<ArrowId> ids(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!leq[i][j]) continue;
      arrow_of[i][j] = static_cast<ArrowId>(arrows.size());
      std::string label = i == j ? "id_" + objects[i] : objects[i] + "<=" + objects[j];
      arrows.push_back({std::move(label), i, j});
      if (i == j) ids[i] = arrow_of[i][j];
    }
  const auto m = arrows.size();
  std::vector<ArrowId> comp(m * m, -1);
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t f = 0; f < m; ++f)
      if (arrows[f].target == arrows[g].source) {
        auto a = arrow_of[arrows[f].source][arrows[g].target];
        if (a < 0) throw PreconditionError("preorder_base: relation is not transitive");
        comp[g * m + f] = a;
      }
  for (int i = 0; i < n; ++i)
    if (!leq[i][i]) throw PreconditionError("preorder_base: relation is not reflexive");
  return std::make_shared<const IndexCategory>(std::move(objects), std::move(arrows), std::move(ids),
                                               std::move(comp));
}

Base chain_base(int n) {
  std::vector<std::string> objs;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    objs.push_back(std::to_string(i));
    for (int j = i; j < n; ++j) leq[i][j] = true;
  }
  return preorder_base(std::move(objs), leq);
}

Base discrete_base(std::vector<std::string> objects) {
  const auto n = objects.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
  return preorder_base(std::move(objects), leq);
}

}  // namespace intcat
