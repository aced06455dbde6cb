#include <gtest/gtest.h>

#include <set>

#include "intcat/ambient/exponential.hpp"
#include "intcat/ambient/search.hpp"
#include "intcat/ambient/slice.hpp"
#include "support.hpp"

using namespace intcat;
using namespace intcat::test;

namespace {

// X(1) = {a, b} -> X(0) = {*} on the chain 0 -> 1.
Presheaf two_to_one() {
  auto b = chain_base(2);
  return chain_presheaf(b, {1, 2}, {{0, 0}});
}

Presheaf two_identity() {
  auto b = chain_base(2);
  return chain_presheaf(b, {2, 2}, {{0, 1}}, "y");
}

}  // namespace

TEST(IndexCategory, BuiltinsAreCategories) {
  EXPECT_TRUE(validate_index_category(*point_base()).ok());
  EXPECT_TRUE(validate_index_category(*chain_base(2)).ok());
  EXPECT_EQ(chain_base(2)->arrow_count(), 3);
  EXPECT_TRUE(validate_index_category(*chain_base(4)).ok());
  EXPECT_TRUE(validate_index_category(*discrete_base({"a", "b"})).ok());
}

TEST(IndexCategory, BrokenCompositionIsNamed) {
  auto b = chain_base(2);
  auto comp = b->composition();
  // Make (id_1)∘(0<=1) land on id_0, which has the wrong target.
  auto up = *b->find_arrow("0<=1");
  auto id1 = *b->find_arrow("id_1");
  auto id0 = *b->find_arrow("id_0");
  comp[static_cast<std::size_t>(id1) * b->arrow_count() + up] = id0;
  IndexCategory broken(b->objects(), b->arrows(), b->identities(), comp);
  auto r = validate_index_category(broken);
  ASSERT_FALSE(r.ok());
  bool named = false;
  for (const auto& v : r.violations) named |= v.find("id_1") != std::string::npos && v.find("0<=1") != std::string::npos;
  EXPECT_TRUE(named);
}

TEST(Presheaf, TerminalIsSingletonEverywhere) {
  for (auto b : {point_base(), chain_base(2), chain_base(3)}) {
    auto t = terminal(b);
    for (ObjectId c = 0; c < t.stage_count(); ++c) EXPECT_EQ(t.size(c), 1);
    EXPECT_EQ(points(t).size(), 1u);
    EXPECT_TRUE(validate_presheaf(t).ok());
  }
  auto x = two_to_one();
  auto bang = to_terminal(x);
  EXPECT_TRUE(validate_map(bang).ok());
  EXPECT_EQ(hom_set(x, terminal(x.base())).size(), 1u);
}

TEST(Limits, FinsetProductSizes) {
  auto p = product(finset(2), finset(3));
  EXPECT_EQ(p.apex.size(0), 6);
  EXPECT_TRUE(validate_presheaf(p.apex).ok());
}

TEST(Limits, PullbackOfIdentitiesIsIsomorphic) {
  auto x = two_to_one();
  auto pb = pullback(identity_map(x), identity_map(x));
  auto leg = is_iso(pb.legs[0]);
  EXPECT_TRUE(leg.has_value());
}

TEST(Limits, EqualizerOfDistinctConstantsIsEmpty) {
  auto three = finset(3), two = finset(2, "b");
  auto f = tabulate(three, two, [](ObjectId, ElementId) { return 0; });
  auto g = tabulate(three, two, [](ObjectId, ElementId) { return 1; });
  auto eq = equalizer(f, g);
  EXPECT_EQ(eq.apex.size(0), 0);
}

TEST(Limits, MediatorsAreUniqueOnRandomCones) {
  Gen g(7);
  auto b = chain_base(3);
  for (int round = 0; round < 15; ++round) {
    auto x = random_chain_presheaf(b, g, 3);
    auto y = random_chain_presheaf(b, g, 3);
    auto z = random_chain_presheaf(b, g, 2);
    auto p = product(x, y);
    auto zx = hom_set(z, x), zy = hom_set(z, y);
    if (zx.empty() || zy.empty()) continue;
    auto f = zx[g.uniform(0, static_cast<int>(zx.size()) - 1)];
    auto h = zy[g.uniform(0, static_cast<int>(zy.size()) - 1)];
    auto m = p.mediator({f, h});
    EXPECT_TRUE(validate_map(m).ok());
    EXPECT_EQ(compose(p.legs[0], m), f);
    EXPECT_EQ(compose(p.legs[1], m), h);
    int factor = 0;
    for (const auto& k : hom_set(z, p.apex))
      if (compose(p.legs[0], k) == f && compose(p.legs[1], k) == h) ++factor;
    EXPECT_EQ(factor, 1);
  }
}

TEST(Limits, ProductPointsAreProductsOfPoints) {
  Gen g(11);
  auto b = chain_base(3);
  for (int round = 0; round < 10; ++round) {
    auto x = random_chain_presheaf(b, g, 3), y = random_chain_presheaf(b, g, 3);
    EXPECT_EQ(points(product(x, y).apex).size(), points(x).size() * points(y).size());
  }
}

TEST(Exponential, FinsetPower) {
  auto e = exponential(finset(2), finset(3));
  EXPECT_EQ(e.object().size(0), 9);
  auto t = terminal(point_base());
  auto e1 = exponential(t, finset(3));
  EXPECT_EQ(e1.object().size(0), 3);
}

TEST(Exponential, ChainBaseSizesMatchBruteForce) {
  auto x = two_to_one(), y = two_identity();
  auto e = exponential(x, y);
  EXPECT_TRUE(validate_presheaf(e.object()).ok());
  // (Y^X)(c) = Nat(y(c) × X, Y); frozen from a hand count.
  EXPECT_EQ(e.object().size(0), 2);
  EXPECT_EQ(e.object().size(1), 2);
  for (ObjectId c = 0; c < 2; ++c) {
    auto yc = representable(x.base(), c);
    EXPECT_EQ(static_cast<std::uint64_t>(e.object().size(c)), brute_nat_count(product(yc, x).apex, y));
  }
}

TEST(Exponential, RandomSizesMatchBruteForce) {
  Gen g(3);
  auto b = chain_base(2);
  for (int round = 0; round < 20; ++round) {
    auto x = random_chain_presheaf(b, g, 2), y = random_chain_presheaf(b, g, 3);
    auto e = exponential(x, y);
    for (ObjectId c = 0; c < 2; ++c)
      EXPECT_EQ(static_cast<std::uint64_t>(e.object().size(c)),
                brute_nat_count(product(representable(b, c), x).apex, y));
    // Global points of Y^X are the maps X -> Y.
    EXPECT_EQ(points(e.object()).size(), brute_nat_count(x, y));
  }
}

TEST(Exponential, CurryIsABijection) {
  Gen g(5);
  auto b = chain_base(2);
  for (int round = 0; round < 10; ++round) {
    auto z = random_chain_presheaf(b, g, 2), x = random_chain_presheaf(b, g, 2);
    auto y = random_chain_presheaf(b, g, 2);
    auto e = exponential(x, y);
    auto zx = product(z, x);
    auto left = hom_set(zx.apex, y);
    auto right = hom_set(z, e.object());
    EXPECT_EQ(left.size(), right.size());
    std::set<std::vector<std::vector<ElementId>>> images;
    for (const auto& f : left) {
      auto c = e.curry(zx, f);
      EXPECT_TRUE(validate_map(c).ok());
      EXPECT_EQ(e.uncurry(zx, c), f);
      images.insert(c.components());
    }
    EXPECT_EQ(images.size(), right.size());
    for (const auto& h : right) EXPECT_EQ(e.curry(zx, e.uncurry(zx, h)), h);
  }
}

TEST(Points, Counts) {
  EXPECT_EQ(points(finset(4)).size(), 4u);
  auto b = chain_base(2);
  auto empty_top = chain_presheaf(b, {1, 0}, {{}});
  EXPECT_EQ(points(empty_top).size(), 0u);
}

TEST(Elements, Shapes) {
  auto b = chain_base(2);
  auto el = elements_category(terminal(b));
  EXPECT_TRUE(el.base()->same_shape(*b));
  auto d = elements_category(finset(3));
  EXPECT_EQ(d.base()->object_count(), 3);
  EXPECT_EQ(d.base()->arrow_count(), 3);
  auto e = elements_category(two_to_one());
  EXPECT_EQ(e.base()->object_count(), 3);
  EXPECT_EQ(e.base()->arrow_count(), 5);
  EXPECT_TRUE(validate_index_category(*e.base()).ok());
}

TEST(Elements, SliceRoundTrip) {
  Gen g(13);
  auto b = chain_base(2);
  for (int round = 0; round < 10; ++round) {
    auto i = random_chain_presheaf(b, g, 2, false);
    auto x = random_chain_presheaf(b, g, 3);
    auto maps = hom_set(x, i);
    if (maps.empty()) continue;
    auto p = maps[g.uniform(0, static_cast<int>(maps.size()) - 1)];
    Elements el(i);
    auto fib = to_slice(el, p);
    EXPECT_TRUE(validate_presheaf(fib).ok());
    auto back = from_slice(el, fib);
    EXPECT_EQ(back.object().total_size(), x.total_size());
    // Hom cardinalities survive the equivalence.
    auto q = maps[g.uniform(0, static_cast<int>(maps.size()) - 1)];
    Over a{p}, c{q};
    EXPECT_EQ(hom_over(a, c).size(), brute_nat_count(fib, to_slice(el, q)));
  }
}

TEST(Slices, BaseChangeAlongPointIsFiber) {
  auto two = finset(2), one = finset(1, "o"), x = finset(5);
  auto i = tabulate(one, two, [](ObjectId, ElementId) { return 0; });
  auto p = tabulate(x, two, [](ObjectId, ElementId e) { return e % 2; });
  auto f = base_change(i, Over{p});
  EXPECT_EQ(f.object().size(0), 3);
}

TEST(Slices, SumReindexAdjunctionOnRandomInstances) {
  Gen g(17);
  auto b = chain_base(2);
  int checked = 0;
  for (int round = 0; round < 30 && checked < 10; ++round) {
    auto i_obj = random_chain_presheaf(b, g, 2, false), j_obj = random_chain_presheaf(b, g, 2);
    auto is = hom_set(j_obj, i_obj);
    if (is.empty()) continue;
    auto i = is[g.uniform(0, static_cast<int>(is.size()) - 1)];
    auto x = random_chain_presheaf(b, g, 2), y = random_chain_presheaf(b, g, 2);
    auto xs = hom_set(x, i_obj), ys = hom_set(y, j_obj);
    if (xs.empty() || ys.empty()) continue;
    Over xo{xs[0]}, yo{ys[0]};
    EXPECT_TRUE(check_sum_reindex_adjunction(i, yo, xo).ok());
    EXPECT_EQ(hom_over(dependent_sum(i, yo), xo).size(), hom_over(yo, base_change(i, xo)).size());
    ++checked;
  }
  EXPECT_GT(checked, 0);
}

TEST(Iso, Cases) {
  auto x = two_to_one();
  EXPECT_TRUE(is_iso(identity_map(x)).has_value());
  auto c = tabulate(finset(2), finset(1, "o"), [](ObjectId, ElementId) { return 0; });
  EXPECT_FALSE(is_iso(c).has_value());
  auto y = two_identity();
  auto swap = tabulate(y, y, [](ObjectId, ElementId e) { return 1 - e; });
  ASSERT_TRUE(validate_map(swap).ok());
  auto inv = is_iso(swap);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(compose(*inv, swap), identity_map(y));
}

TEST(Search, SerialAndParallelAgree) {
  Gen g(23);
  auto b = chain_base(3);
  for (int round = 0; round < 8; ++round) {
    auto x = random_chain_presheaf(b, g, 2), y = random_chain_presheaf(b, g, 3);
    auto s = exponential(x, y, Execution::serial);
    auto p = exponential(x, y, Execution::parallel);
    EXPECT_EQ(s.object(), p.object());
  }
}

// Random problems with several checks per variable, so that a failing check
// leaves later checks of the same variable unevaluated.
TEST(Search, SolutionsMatchExhaustiveEnumeration) {
  Gen g(41);
  for (int round = 0; round < 60; ++round) {
    SearchProblem p;
    const int n = g.uniform(2, 5);
    for (int v = 0; v < n; ++v) p.add_variable(g.uniform(1, 3));
    const int checks = g.uniform(1, 6);
    for (int k = 0; k < checks; ++k) {
      int a = g.uniform(0, n - 1), b = g.uniform(0, n - 1), m = g.uniform(2, 4), r = g.uniform(0, 3);
      p.check({a, b}, [a, b, m, r](const std::vector<int>& s) { return (s[a] + 2 * s[b]) % m != r % m; });
    }
    if (g.coin()) {
      int from = g.uniform(0, n - 1), to = g.uniform(0, n - 1);
      std::vector<int> map(p.domain[from]);
      for (auto& e : map) e = g.uniform(-1, p.domain[to] - 1);
      if (from != to) p.link(from, to, map);
    }
    std::vector<std::vector<int>> brute;
    std::vector<int> s(n, 0);
    while (true) {
      bool ok = true;
      for (const auto& c : p.checks) ok = ok && c.holds(s);
      for (const auto& l : p.links) ok = ok && l.map[s[l.from]] == s[l.to];
      if (ok) brute.push_back(s);
      int k = 0;
      while (k < n && ++s[k] == p.domain[k]) s[k++] = 0;
      if (k == n) break;
    }
    auto got = solve(p, Execution::serial);
    std::sort(got.begin(), got.end());
    std::sort(brute.begin(), brute.end());
    EXPECT_EQ(got, brute) << "round " << round;
    EXPECT_EQ(solve(p, Execution::parallel), solve(p, Execution::serial));
    EXPECT_EQ(count_solutions(p, Execution::serial), brute.size());
  }
}
