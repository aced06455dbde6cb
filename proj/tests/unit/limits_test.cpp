#include <gtest/gtest.h>

#include <numeric>

#include "intcat/limits/cones.hpp"
#include "support.hpp"

using namespace intcat;
using namespace intcat::test;

namespace {

InternalCategory chain(int n) { return chain_poset(n).category(); }

std::string vertex_label(const UniversalCertificate& u) {
  return u.cones.target().obj().label(0, u.vertex[0]);
}

// Stage 1 has a single object t; stage 0 has t0 -> z with t restricting to t0.
// Both stages have a terminal object but no global element is terminal.
InternalCategory non_gluing() {
  auto base = chain_base(2);
  auto obj = chain_presheaf(base, {2, 1}, {{0}}, "o");
  auto arr = chain_presheaf(base, {3, 1}, {{0}}, "a");
  const std::vector<int> s0{0, 1, 0}, t0{0, 1, 1};
  auto s = tabulate(arr, obj, [&](ObjectId c, ElementId e) { return c == 0 ? s0[e] : 0; });
  auto t = tabulate(arr, obj, [&](ObjectId c, ElementId e) { return c == 0 ? t0[e] : 0; });
  auto id = tabulate(obj, arr, [&](ObjectId, ElementId x) { return x; });
  return InternalCategory::from_tables(obj, arr, s, t, id, [&](ObjectId c, ElementId g, ElementId f) {
    for (ElementId k = 0; k < arr.size(c); ++k)
      if (s(c, k) == s(c, f) && t(c, k) == t(c, g)) return k;
    return -1;
  });
}

}  // namespace

TEST(Cones, LowerBoundsOfPairInDivisors) {
  auto a = divisor_poset(12).category();
  auto d = diagram_of(discrete(finset(2)), a, {"4", "6"});
  auto cones = cones_category(d);
  EXPECT_TRUE(validate_internal_category(cones.cat).ok());
  std::set<std::string> vertices;
  for (ElementId e = 0; e < cones.cat.obj().size(0); ++e) vertices.insert(a.obj().label(0, cones.vertex(0, e)));
  EXPECT_EQ(vertices, (std::set<std::string>{"1", "2"}));
  auto lim = universal_cone(d);
  ASSERT_TRUE(lim.ok());
  EXPECT_EQ(vertex_label(lim.value()), "2");
  auto colim = universal_cocone(d);
  ASSERT_TRUE(colim.ok());
  EXPECT_EQ(vertex_label(colim.value()), "12");
}

TEST(Cones, EmptyDiagram) {
  auto a = divisor_poset(12).category();
  auto d = diagram_of(initial_cat(point_base()), a, {});
  auto lim = universal_cone(d);
  ASSERT_TRUE(lim.ok());
  EXPECT_EQ(vertex_label(lim.value()), "12");
  auto colim = universal_cocone(d);
  ASSERT_TRUE(colim.ok());
  EXPECT_EQ(vertex_label(colim.value()), "1");
}

TEST(Cones, IncomparablePairHasNoProduct) {
  auto a = poset_category({"a", "b"}, {});
  auto d = diagram_of(discrete(finset(2)), a, {"a", "b"});
  auto lim = universal_cone(d);
  ASSERT_FALSE(lim.ok());
  EXPECT_NE(lim.refusal().reason.find("no universal cone"), std::string::npos);
}

TEST(Cones, MeetsAndJoinsMatchGcdAndLcm) {
  auto a = divisor_poset(60).category();
  std::vector<int> divisors;
  for (int k = 1; k <= 60; ++k)
    if (60 % k == 0) divisors.push_back(k);
  Gen g(7);
  for (int round = 0; round < 30; ++round) {
    const int n = g.uniform(0, 3);
    std::vector<std::string> labels;
    int meet = 60, join = 1;
    for (int i = 0; i < n; ++i) {
      int v = divisors[g.uniform(0, static_cast<int>(divisors.size()) - 1)];
      labels.push_back(std::to_string(v));
      meet = std::gcd(meet, v);
      join = std::lcm(join, v);
    }
    auto d = diagram_of(discrete(finset(n)), a, labels);
    auto lim = universal_cone(d);
    auto colim = universal_cocone(d);
    ASSERT_TRUE(lim.ok() && colim.ok());
    EXPECT_EQ(vertex_label(lim.value()), std::to_string(meet));
    EXPECT_EQ(vertex_label(colim.value()), std::to_string(join));
  }
}

TEST(Cones, OppositeSwapsLimitsAndColimits) {
  auto a = powerset_poset(2).category();
  auto d = diagram_of(chain(2), a, {"a", "ab"});
  auto colim = universal_cocone(d);
  auto dual = universal_cone(opposite_functor(d));
  ASSERT_TRUE(colim.ok() && dual.ok());
  EXPECT_EQ(vertex_label(colim.value()), "ab");
  EXPECT_EQ(vertex_label(dual.value()), "ab");
  auto lim = universal_cone(d);
  ASSERT_TRUE(lim.ok());
  EXPECT_EQ(vertex_label(lim.value()), "a");
}

TEST(Terminal, CertificateAndRefusal) {
  auto a = divisor_poset(12).category();
  auto top = is_internal_terminal(a, {element(a, "12")});
  ASSERT_TRUE(top.ok());
  EXPECT_TRUE(validate_map(top.value().witness).ok());
  auto six = is_internal_terminal(a, {element(a, "6")});
  ASSERT_FALSE(six.ok());
  EXPECT_NE(six.refusal().locus.find("stage"), std::string::npos);
  EXPECT_TRUE(is_internal_initial(a, {element(a, "1")}).ok());
  EXPECT_FALSE(is_internal_initial(a, {element(a, "2")}).ok());
}

TEST(Terminal, IndiscreteHasEveryPointTerminal) {
  auto a = indiscrete(finset(3));
  auto found = find_terminal(a);
  ASSERT_TRUE(found.ok());
  EXPECT_EQ(found.value().candidates.size(), 3u);
  auto initial = find_initial(a);
  ASSERT_TRUE(initial.ok());
  EXPECT_EQ(initial.value().candidates.size(), 3u);
}

TEST(Terminal, MissingAtOneStage) {
  auto base = chain_base(2);
  auto x = chain_presheaf(base, {2, 1}, {{0}});
  auto found = find_terminal(discrete(x));
  ASSERT_FALSE(found.ok());
  EXPECT_EQ(found.refusal().locus, "stage '0'");
}

TEST(Terminal, StagewiseTerminalsThatDoNotGlue) {
  auto a = non_gluing();
  ASSERT_TRUE(validate_internal_category(a).ok());
  auto found = find_terminal(a);
  ASSERT_FALSE(found.ok());
  EXPECT_NE(found.refusal().reason.find("do not glue"), std::string::npos);
}

TEST(Cones, IndexedFactorizationThroughProduct) {
  auto a = divisor_poset(12).category();
  auto d = diagram_of(discrete(finset(2)), a, {"4", "6"});
  auto lim = universal_cone(d);
  ASSERT_TRUE(lim.ok());
  const auto& cert = lim.value();
  // The cones with vertices 1 and 2, indexed by a two-element set.
  auto i = finset(2, "i");
  auto cone_at = [&](const std::string& v) {
    for (ElementId e = 0; e < cert.cones.cat.obj().size(0); ++e)
      if (a.obj().label(0, cert.cones.vertex(0, e)) == v) return e;
    return -1;
  };
  std::vector<ElementId> picks{cone_at("1"), cone_at("2")};
  auto family = tabulate(i, cert.cones.cat.obj(), [&](ObjectId, ElementId x) { return picks[x]; });
  auto f = indexed_cone_factorization(family, cert);
  ASSERT_TRUE(f.ok());
  EXPECT_EQ(a.arr().label(0, f.value().mediator(0, 0)), "1<=2");
  EXPECT_EQ(a.arr().label(0, f.value().mediator(0, 1)), "2<=2");
  EXPECT_EQ(f.value().solutions, 1u);
}

TEST(Comma, IdentitiesGiveArrowCategory) {
  for (int n = 1; n <= 4; ++n) {
    auto a = chain(n);
    auto id = identity_functor(a);
    auto comma = comma_category(id, id);
    EXPECT_TRUE(validate_internal_category(comma.cat).ok());
    // Objects are pairs i <= j; an arrow (i,j) -> (i',j') exists iff i <= i' and j <= j'.
    std::size_t objects = 0, arrows = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        ++objects;
        for (int i2 = i; i2 < n; ++i2)
          for (int j2 = std::max(i2, j); j2 < n; ++j2) ++arrows;
      }
    EXPECT_EQ(static_cast<std::size_t>(comma.cat.obj().size(0)), objects);
    EXPECT_EQ(static_cast<std::size_t>(comma.cat.arr().size(0)), arrows);
    EXPECT_TRUE(validate_nat(comma.alpha).ok());
  }
}

TEST(Comma, MediatorRecoversObjects) {
  auto a = chain(3);
  auto id = identity_functor(a);
  auto comma = comma_category(id, id);
  auto m = comma.mediate(id, id, identity_nat(id));
  EXPECT_TRUE(validate_functor(m).ok());
  for (ElementId x = 0; x < a.obj().size(0); ++x) {
    auto o = m.on_obj(0, x);
    EXPECT_EQ(comma.objects.coord(0, o, 0), x);
    EXPECT_EQ(comma.objects.coord(0, o, 2), a.identity(0, x));
  }
}

TEST(Comma, ConesMatchCommaOverDiagonal) {
  auto a = divisor_poset(12).category();
  for (bool co : {false, true}) {
    auto d = diagram_of(chain(2), a, {"2", "4"});
    auto ad = exponential_cat(d.source(), a);
    auto delta = diagonal_functor(ad);
    auto name = name_functor(ad, d);
    auto comma = co ? comma_category(name, delta) : comma_category(delta, name);
    auto cones = co ? cocones_category(d) : cones_category(d);
    auto cmp = cone_comma_comparison(cones, ad, comma);
    EXPECT_TRUE(validate_functor(cmp).ok());
    EXPECT_TRUE(is_iso(cmp.f0()).has_value());
    EXPECT_TRUE(is_iso(cmp.f1()).has_value());
  }
}

TEST(Comma, FiberOfProjection) {
  auto a = chain(3);
  auto id = identity_functor(a);
  auto comma = comma_category(id, id);
  auto fib = fiber_over(comma.px);
  EXPECT_TRUE(validate_internal_category(fib.cat).ok());
  // Over i the fiber is the up-set of i as a chain.
  const auto& el = fib.el;
  for (ObjectId o = 0; o < el.base()->object_count(); ++o) {
    auto [c, x] = el.point(o);
    EXPECT_EQ(fib.cat.obj().size(o), 3 - x);
  }
}

TEST(Cones, UniversalConeIsExternallyTerminal) {
  auto a = powerset_poset(2).category();
  auto d = diagram_of(discrete(finset(2)), a, {"a", "b"});
  auto lim = universal_cone(d);
  ASSERT_TRUE(lim.ok());
  auto ext = points_of_cat(lim.value().cones.cat);
  ObjectId at = -1;
  for (ObjectId p = 0; p < static_cast<ObjectId>(ext.objects.size()); ++p)
    if (ext.objects[p] == lim.value().cone) at = p;
  ASSERT_GE(at, 0);
  EXPECT_TRUE(is_externally_terminal(ext, at));
  EXPECT_EQ(vertex_label(lim.value()), "0");
}

TEST(Cones, ParallelMatchesSerial) {
  auto a = divisor_poset(60).category();
  auto d = diagram_of(chain(3), a, {"2", "6", "30"});
  auto s = cones_category(d, Execution::serial);
  auto p = cones_category(d, Execution::parallel);
  EXPECT_TRUE(same_tables(s.cat, p.cat));
}
