#include <gtest/gtest.h>

#include <set>

#include "intcat/ambient/exponential.hpp"
#include "support.hpp"

using namespace intcat;
using namespace intcat::test;

namespace {

InternalCategory chain(int n) { return chain_poset(n).category(); }

}  // namespace

TEST(InternalCategory, BasicValidity) {
  EXPECT_TRUE(validate_internal_category(discrete(finset(2))).ok());
  EXPECT_TRUE(validate_internal_category(chain(2)).ok());
  EXPECT_TRUE(validate_internal_category(divisor_poset(12).category()).ok());
  EXPECT_TRUE(validate_internal_category(powerset_poset(2).category()).ok());
}

TEST(InternalCategory, CorruptedCompositionIsNamed) {
  auto a = chain(3);
  auto comps = a.comp().components();
  // Redirect one non-trivial composite to an identity.
  const auto& pairs = a.pairs();
  ElementId victim = -1;
  for (ElementId k = 0; k < pairs.apex.size(0); ++k) {
    auto g = pairs.legs[0](0, k), f = pairs.legs[1](0, k);
    if (a.s(0, g) != a.t(0, g) && a.s(0, f) != a.t(0, f)) victim = k;
  }
  ASSERT_GE(victim, 0);
  comps[0][victim] = a.identity(0, 0);
  InternalCategory broken(a.obj(), a.arr(), a.src(), a.tgt(), a.id(),
                          PresheafMap(pairs.apex, a.arr(), comps));
  auto r = validate_internal_category(broken);
  ASSERT_FALSE(r.ok());
  auto g = a.arr().label(0, pairs.legs[0](0, victim)), f = a.arr().label(0, pairs.legs[1](0, victim));
  bool named = false;
  for (const auto& v : r.violations) named |= v.find(g) != std::string::npos && v.find(f) != std::string::npos;
  EXPECT_TRUE(named);
}

TEST(Functors, CompositionIsFunctionComposition) {
  auto a = chain(3);
  Gen g(29);
  auto all = all_functors(a, a);
  // Monotone endomaps of a 3-chain: C(5,3) = 10.
  EXPECT_EQ(all.size(), 10u);
  for (int round = 0; round < 20; ++round) {
    auto f = all[g.uniform(0, 9)], h = all[g.uniform(0, 9)], k = all[g.uniform(0, 9)];
    auto hf = compose_functors(h, f);
    EXPECT_TRUE(validate_functor(hf).ok());
    for (ElementId x = 0; x < 3; ++x) EXPECT_EQ(hf.on_obj(0, x), h.on_obj(0, f.on_obj(0, x)));
    EXPECT_EQ(compose_functors(compose_functors(k, h), f), compose_functors(k, compose_functors(h, f)));
    EXPECT_EQ(compose_functors(f, identity_functor(a)), f);
    EXPECT_EQ(compose_functors(identity_functor(a), f), f);
  }
}

TEST(Functors, BruteForceFunctorCounts) {
  // Monotone maps between small chains, counted directly.
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 3; ++m) {
      std::size_t count = 0;
      std::vector<int> f(n, 0);
      while (true) {
        bool mono = true;
        for (int i = 0; i + 1 < n; ++i) mono &= f[i] <= f[i + 1];
        count += mono;
        int k = 0;
        while (k < n && ++f[k] == m) f[k++] = 0;
        if (k == n) break;
      }
      EXPECT_EQ(all_functors(chain(n), chain(m)).size(), count) << n << " " << m;
    }
}

TEST(NatTrans, TwoCategoryLaws) {
  auto a = chain(2), b = chain(3);
  auto fs = all_functors(a, b);
  auto ls = all_functors(chain(1), a);
  Gen g(31);
  for (int round = 0; round < 40; ++round) {
    auto F = fs[g.uniform(0, static_cast<int>(fs.size()) - 1)];
    auto G = fs[g.uniform(0, static_cast<int>(fs.size()) - 1)];
    auto H = fs[g.uniform(0, static_cast<int>(fs.size()) - 1)];
    auto fg = all_nats(F, G), gh = all_nats(G, H);
    if (fg.empty() || gh.empty()) continue;
    auto al = fg[0], be = gh[0];
    auto ba = vertical_compose(be, al);
    EXPECT_TRUE(validate_nat(ba).ok());
    EXPECT_EQ(vertical_compose(al, identity_nat(F)), al);
    EXPECT_EQ(vertical_compose(identity_nat(G), al), al);
    auto L = ls[g.uniform(0, static_cast<int>(ls.size()) - 1)];
    EXPECT_TRUE(validate_nat(whisker_left(ba, L)).ok());
    auto R = all_functors(b, b)[g.uniform(0, 9)];
    EXPECT_EQ(whisker_right(R, identity_nat(F)), identity_nat(compose_functors(R, F)));
  }
}

TEST(NatTrans, InterchangeOnRandomGrids) {
  // α, α' : A -> B and β, β' : B -> C with composable verticals.
  auto A = chain(2), B = chain(3), C = chain(2);
  auto ab = all_functors(A, B), bc = all_functors(B, C);
  Gen g(37);
  int checked = 0;
  for (int round = 0; round < 400 && checked < 40; ++round) {
    auto pick = [&](const std::vector<InternalFunctor>& v) { return v[g.uniform(0, static_cast<int>(v.size()) - 1)]; };
    auto F = pick(ab), G = pick(ab), H = pick(ab);
    auto K = pick(bc), M = pick(bc), N = pick(bc);
    auto a1 = all_nats(F, G), a2 = all_nats(G, H), b1 = all_nats(K, M), b2 = all_nats(M, N);
    if (a1.empty() || a2.empty() || b1.empty() || b2.empty()) continue;
    auto al = a1[0], al2 = a2.back(), be = b1.back(), be2 = b2[0];
    auto lhs = horizontal_compose(vertical_compose(be2, be), vertical_compose(al2, al));
    auto rhs = vertical_compose(horizontal_compose(be2, al2), horizontal_compose(be, al));
    EXPECT_EQ(lhs, rhs);
    // Element-wise: both components equal the composite arrow in C.
    for (ElementId x = 0; x < A.obj().size(0); ++x) EXPECT_EQ(lhs.at(0, x), rhs.at(0, x));
    ++checked;
  }
  EXPECT_GE(checked, 10);
}

TEST(Discrete, StructureAndFunctorsArePoints) {
  auto x = finset(2);
  auto d = discrete(x);
  EXPECT_EQ(d.src(), identity_map(x));
  EXPECT_EQ(d.tgt(), identity_map(x));
  EXPECT_TRUE(same_tables(discrete(terminal(point_base())), terminal_cat(point_base())));
  for (int n = 0; n <= 3; ++n) {
    auto xs = finset(n);
    for (const auto& b : {chain(2), chain(3), divisor_poset(6).category()}) {
      auto e = exponential(xs, b.obj());
      EXPECT_EQ(all_functors(discrete(xs), b).size(), points(e.object()).size());
    }
  }
}

TEST(Indiscrete, Structure) {
  for (int n = 0; n <= 3; ++n) {
    auto ind = indiscrete(finset(n));
    EXPECT_TRUE(validate_internal_category(ind).ok());
    EXPECT_EQ(ind.arr().size(0), n * n);
    auto ext = points_of_cat(ind);
    for (ObjectId p = 0; p < ext.category->object_count(); ++p)
      for (ObjectId q = 0; q < ext.category->object_count(); ++q) EXPECT_EQ(ext.category->hom(p, q).size(), 1u);
  }
  EXPECT_TRUE(same_tables(indiscrete(terminal(point_base())), terminal_cat(point_base())));
}

TEST(Opposite, InvolutionAndOrderReversal) {
  for (const auto& a : {chain(3), divisor_poset(12).category(), indiscrete(finset(2)), discrete(finset(3))}) {
    EXPECT_TRUE(validate_internal_category(opposite(a)).ok());
    EXPECT_EQ(opposite(opposite(a)), a);
  }
  auto x = finset(3);
  EXPECT_EQ(opposite(discrete(x)), discrete(x));
  auto a = chain(3);
  auto leq = leq_table(a), rev = leq_table(opposite(a));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_EQ(leq[i][j], rev[j][i]);
}

TEST(Product, GridAndUnit) {
  auto p = product_cat(chain(2), chain(2));
  EXPECT_TRUE(validate_internal_category(p.cat).ok());
  EXPECT_EQ(p.cat.obj().size(0), 4);
  // The 2x2 grid has 9 order pairs (4 reflexive, 4 covering, 1 diagonal).
  EXPECT_EQ(p.cat.arr().size(0), 9);
  Poset grid{{"00", "01", "10", "11"}, {{"00", "01"}, {"00", "10"}, {"01", "11"}, {"10", "11"}}};
  // Same order relation as the directly built grid, objects in the same order.
  EXPECT_EQ(leq_table(p.cat), leq_table(grid.category()));
  EXPECT_TRUE(validate_functor(p.first).ok());
  EXPECT_TRUE(validate_functor(p.second).ok());
  EXPECT_EQ(p.cat.obj(), product(chain(2).obj(), chain(2).obj()).apex);
  auto a = chain(3);
  auto u = product_cat(a, terminal_cat(point_base()));
  EXPECT_TRUE(is_iso(u.first.f0()).has_value());
  EXPECT_TRUE(is_iso(u.first.f1()).has_value());
  auto fs = all_functors(a, a);
  auto pr = p.pair(identity_functor(chain(2)), identity_functor(chain(2)));
  EXPECT_TRUE(validate_functor(pr).ok());
  auto q = product_cat(a, a);
  auto t = q.times(q, fs[3], fs[7]);
  EXPECT_TRUE(validate_functor(t).ok());
}

TEST(PointsOfCat, Cases) {
  auto x = finset(3);
  auto ext = points_of_cat(discrete(x));
  EXPECT_EQ(ext.category->object_count(), 3);
  EXPECT_EQ(ext.category->arrow_count(), 3);
  auto a = divisor_poset(12).category();
  auto e = points_of_cat(a);
  EXPECT_TRUE(validate_index_category(*e.category).ok());
  EXPECT_EQ(e.category->arrow_count(), a.arr().size(0));
}

TEST(PointsOfCat, ChainBaseSections) {
  // Dis of a chain-base presheaf: sections only.
  auto b = chain_base(2);
  auto x = chain_presheaf(b, {2, 3}, {{0, 0, 1}});
  auto ext = points_of_cat(indiscrete(x));
  EXPECT_EQ(static_cast<std::size_t>(ext.category->object_count()), points(x).size());
  EXPECT_TRUE(validate_index_category(*ext.category).ok());
}

TEST(Reindex, AlongTerminalAndFinset) {
  auto a = divisor_poset(6).category();
  Elements top(terminal(point_base()));
  EXPECT_TRUE(same_tables(reindex_cat(top, a), a));
  Elements two(finset(2));
  auto r = reindex_cat(two, a);
  EXPECT_TRUE(validate_internal_category(r).ok());
  for (ObjectId c = 0; c < 2; ++c) {
    EXPECT_EQ(r.obj().size(c), a.obj().size(0));
    EXPECT_EQ(r.arr().size(c), a.arr().size(0));
  }
}

TEST(Reindex, DiscreteIsSumOfReindexedTerminal) {
  Gen g(41);
  auto b = chain_base(2);
  for (int round = 0; round < 6; ++round) {
    auto x = random_chain_presheaf(b, g, 3);
    Elements el(x);
    auto sum = total_cat(el, reindex_cat(el, terminal_cat(b)));
    EXPECT_TRUE(validate_internal_category(sum).ok());
    EXPECT_TRUE(same_tables(sum, discrete(x)));
  }
}

TEST(Reindex, DependentSumOfChainBaseCategory) {
  auto b = chain_base(2);
  auto i_obj = chain_presheaf(b, {2, 2}, {{0, 1}}, "i");
  auto j_obj = chain_presheaf(b, {2, 3}, {{0, 1, 1}}, "j");
  auto maps = hom_set(j_obj, i_obj);
  ASSERT_FALSE(maps.empty());
  Elements ej(j_obj), ei(i_obj);
  auto a = reindex_cat(ej, indiscrete(chain_presheaf(b, {2, 2}, {{1, 0}}, "a")));
  for (const auto& i : maps) {
    auto s = dependent_sum_cat(ej, ei, i, a);
    EXPECT_TRUE(validate_internal_category(s).ok());
    std::size_t total = 0;
    for (ObjectId o = 0; o < s.stage_count(); ++o) total += s.obj().size(o);
    EXPECT_EQ(total, total_cat(ej, a).obj().total_size());
  }
}

TEST(Adjunctions, IdentityAndDisUInd) {
  auto a = chain(3);
  auto id = identity_functor(a);
  EXPECT_TRUE(adjunction_check(id, id, identity_nat(id), identity_nat(id)).ok());
  auto r = dis_u_ind_adjunctions(finset(2), chain(2));
  EXPECT_TRUE(r.report.ok());
  EXPECT_EQ(r.dis_functors, 4u);
  EXPECT_EQ(r.maps_into_a0, 4u);
  EXPECT_EQ(r.ind_functors, 4u);
  EXPECT_EQ(r.maps_from_a0, 4u);
  for (int n = 0; n <= 3; ++n)
    for (const auto& c : {chain(2), divisor_poset(6).category(), indiscrete(finset(2))}) {
      auto q = dis_u_ind_adjunctions(finset(n), c);
      EXPECT_TRUE(q.report.ok());
    }
}

TEST(Adjunctions, BrokenUnitIsRejected) {
  // A unit into the wrong functor is reported, not accepted.
  auto a = chain(2);
  auto id = identity_functor(a);
  auto top = monotone(a, a, {1, 1});
  auto fs = all_nats(id, top);
  ASSERT_FALSE(fs.empty());
  EXPECT_FALSE(adjunction_check(id, id, fs[0], identity_nat(id)).ok());
}
