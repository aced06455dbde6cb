#include <gtest/gtest.h>

#include <set>

#include "intcat/exponential/functor_category.hpp"
#include "support.hpp"

using namespace intcat;
using namespace intcat::test;

namespace {

InternalCategory chain(int n) { return chain_poset(n).category(); }

std::vector<InternalCategory> small_cats() {
  return {terminal_cat(point_base()), discrete(finset(2)), chain(2), chain(3)};
}

// Pairs (f, g) of monotone maps chain(n) -> chain(m) with f <= g pointwise.
std::size_t pointwise_pairs(int n, int m) {
  std::vector<std::vector<int>> maps;
  std::vector<int> f(n, 0);
  while (true) {
    bool mono = true;
    for (int i = 0; i + 1 < n; ++i) mono &= f[i] <= f[i + 1];
    if (mono) maps.push_back(f);
    int k = 0;
    while (k < n && ++f[k] == m) f[k++] = 0;
    if (k == n) break;
  }
  std::size_t count = 0;
  for (const auto& p : maps)
    for (const auto& q : maps) {
      bool le = true;
      for (int i = 0; i < n; ++i) le &= p[i] <= q[i];
      count += le;
    }
  return count;
}

}  // namespace

TEST(HomObject, Counts) {
  auto b = chain(3);
  auto h = hom_object(terminal_cat(point_base()), b);
  EXPECT_EQ(h.object().size(0), b.obj().size(0));
  EXPECT_EQ(points(hom_object(chain(2), chain(2)).object()).size(), 3u);
  EXPECT_EQ(points(hom_object(discrete(finset(2)), chain(2)).object()).size(), 4u);
}

TEST(HomObject, PointsAreFunctors) {
  for (const auto& a : small_cats())
    for (const auto& b : small_cats()) {
      auto h = hom_object(a, b);
      auto pts = points(h.object());
      auto fs = all_functors(a, b);
      ASSERT_EQ(pts.size(), fs.size());
      std::set<Section> seen;
      for (const auto& p : pts) {
        auto f = h.decode(p);
        EXPECT_TRUE(validate_functor(f).ok());
        EXPECT_EQ(h.encode(f), p);
        seen.insert(p);
      }
      for (const auto& f : fs) EXPECT_TRUE(seen.count(h.encode(f)));
      EXPECT_TRUE(is_mono(h.inclusion()));
    }
}

TEST(HomObject, ChainBasePointsAreFunctors) {
  auto base = chain_base(2);
  auto x = chain_presheaf(base, {2, 2}, {{1, 0}});
  auto y = chain_presheaf(base, {1, 3}, {{0, 0, 0}}, "y");
  std::vector<InternalCategory> cats = {discrete(x), indiscrete(x), indiscrete(y), discrete(y)};
  for (const auto& a : cats)
    for (const auto& b : cats) {
      auto h = hom_object(a, b);
      EXPECT_TRUE(validate_presheaf(h.object()).ok());
      EXPECT_EQ(points(h.object()).size(), all_functors(a, b).size());
    }
}

TEST(FunctorCategory, ArrowsAreNaturalTransformations) {
  for (const auto& a : small_cats())
    for (const auto& b : small_cats()) {
      auto e = exponential_cat(a, b);
      ASSERT_TRUE(validate_internal_category(e.cat).ok());
      std::size_t nats = 0;
      for (const auto& f : all_functors(a, b))
        for (const auto& g : all_functors(a, b)) nats += all_nats(f, g).size();
      auto arrows = points(e.cat.arr());
      EXPECT_EQ(arrows.size(), nats);
      for (const auto& p : arrows) {
        auto al = e.decode_nat(p);
        EXPECT_TRUE(validate_nat(al).ok());
        EXPECT_EQ(e.encode_nat(al), p);
      }
    }
  auto e = exponential_cat(chain(2), chain(2));
  EXPECT_EQ(e.cat.obj().size(0), 3);
  EXPECT_EQ(static_cast<std::size_t>(e.cat.arr().size(0)), pointwise_pairs(2, 2));
  auto e3 = exponential_cat(chain(3), chain(2));
  EXPECT_EQ(static_cast<std::size_t>(e3.cat.arr().size(0)), pointwise_pairs(3, 2));
}

TEST(FunctorCategory, CompositionIsPointwise) {
  auto a = chain(2), b = chain(3);
  auto e = exponential_cat(a, b);
  auto pts = points(e.cat.arr());
  for (const auto& p : pts)
    for (const auto& q : pts) {
      auto pa = e.decode_nat(p), qa = e.decode_nat(q);
      if (!(pa.target() == qa.source())) continue;
      Section r(1);
      r[0] = e.cat.compose(0, q[0], p[0]);
      ASSERT_GE(r[0], 0);
      auto composite = e.decode_nat(r);
      EXPECT_EQ(composite, vertical_compose(qa, pa));
      for (ElementId x = 0; x < a.obj().size(0); ++x)
        EXPECT_EQ(composite.at(0, x), b.compose(0, qa.at(0, x), pa.at(0, x)));
    }
  for (const auto& p : points(e.cat.obj())) {
    Section i{e.cat.identity(0, p[0])};
    EXPECT_EQ(e.decode_nat(i), identity_nat(e.decode(p)));
  }
}

TEST(FunctorCategory, TerminalExponentIsIdentity) {
  for (const auto& b : small_cats()) {
    auto e = exponential_cat(terminal_cat(point_base()), b);
    EXPECT_EQ(e.cat.obj().size(0), b.obj().size(0));
    EXPECT_EQ(e.cat.arr().size(0), b.arr().size(0));
    auto d = diagonal_functor(e);
    EXPECT_TRUE(is_iso(d.f0()).has_value());
    EXPECT_TRUE(is_iso(d.f1()).has_value());
  }
}

TEST(Currying, HomSetCardinalitiesAndRoundTrip) {
  for (const auto& ap : small_cats())
    for (const auto& a : small_cats())
      for (const auto& b : {chain(2), chain(3)}) {
        auto e = exponential_cat(a, b);
        auto pa = product_cat(ap, a);
        auto left = all_functors(pa.cat, b);
        auto right = all_functors(ap, e.cat);
        EXPECT_EQ(left.size(), right.size());
        for (const auto& f : left) {
          auto c = curry_functor(e, pa, f);
          EXPECT_TRUE(validate_functor(c).ok());
          EXPECT_EQ(uncurry_functor(e, pa, c), f);
        }
        for (const auto& g : right) EXPECT_EQ(curry_functor(e, pa, uncurry_functor(e, pa, g)), g);
      }
}

TEST(Currying, NaturalInTheParameter) {
  auto a = chain(2), b = chain(3), ap = chain(2), app = chain(3);
  auto e = exponential_cat(a, b);
  auto pa = product_cat(ap, a), ppa = product_cat(app, a);
  auto hs = all_functors(app, ap);
  auto fs = all_functors(pa.cat, b);
  Gen g(43);
  for (int round = 0; round < 25; ++round) {
    auto h = hs[g.uniform(0, static_cast<int>(hs.size()) - 1)];
    auto f = fs[g.uniform(0, static_cast<int>(fs.size()) - 1)];
    auto hx = ppa.times(pa, h, identity_functor(a));
    EXPECT_EQ(curry_functor(e, ppa, compose_functors(f, hx)), compose_functors(curry_functor(e, pa, f), h));
  }
}

TEST(Currying, EvalIsAFunctor) {
  auto e = exponential_cat(chain(2), chain(3));
  EXPECT_TRUE(validate_functor(e.eval).ok());
}

TEST(Diagonal, ProjectionAndNames) {
  auto a = chain(3);
  for (const auto& d : small_cats()) {
    auto ad = exponential_cat(d, a);
    auto delta = diagonal_functor(ad);
    EXPECT_TRUE(validate_functor(delta).ok());
    auto pa = product_cat(a, d);
    EXPECT_EQ(uncurry_functor(ad, pa, delta), pa.first);
    // Δx is the constant functor at x.
    for (ElementId x = 0; x < a.obj().size(0); ++x) {
      auto f = ad.decode({delta.on_obj(0, x)});
      for (ElementId y = 0; y < d.obj().size(0); ++y) EXPECT_EQ(f.on_obj(0, y), x);
    }
    for (const auto& g : all_functors(d, a)) EXPECT_EQ(ad.decode(name_of(ad, g)), g);
  }
}

TEST(ReindexComparison, IsIso) {
  auto d = chain(2), a = chain(3);
  auto ad = exponential_cat(d, a);
  {
    Elements el(terminal(point_base()));
    auto r = reindex_exponential_iso(el, ad);
    EXPECT_TRUE(r.iso);
    EXPECT_TRUE(same_tables(r.pulled, r.reindexed.cat));
  }
  {
    Elements el(finset(2));
    auto r = reindex_exponential_iso(el, ad);
    EXPECT_TRUE(r.iso);
    EXPECT_TRUE(validate_functor(r.comparison).ok());
    for (ObjectId c = 0; c < 2; ++c) EXPECT_EQ(r.reindexed.cat.obj().size(c), ad.cat.obj().size(0));
  }
  {
    auto base = chain_base(2);
    auto x = chain_presheaf(base, {2, 2}, {{1, 0}});
    auto i = chain_presheaf(base, {2, 3}, {{0, 1, 1}}, "i");
    auto cd = indiscrete(x), ca = discrete(chain_presheaf(base, {2, 1}, {{0}}, "a"));
    auto e = exponential_cat(cd, ca);
    Elements el(i);
    auto r = reindex_exponential_iso(el, e);
    EXPECT_TRUE(r.iso);
    EXPECT_TRUE(validate_functor(r.comparison).ok());
  }
}
