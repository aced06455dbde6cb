#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "intcat/cli/report.hpp"
#include "intcat/limits/stability.hpp"
#include "support.hpp"

using namespace intcat;
using namespace intcat::cli;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(INTCAT_FIXTURE_DIR) + "/" + name, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(INTCAT_FIXTURE_DIR))
    if (e.path().extension() == ".icat") out.push_back(e.path().filename().string());
  std::sort(out.begin(), out.end());
  return out;
}

const Json& task(const Report& r, const std::string& name) {
  for (const auto& t : r.data["tasks"])
    if (t["name"] == name) return t;
  throw std::runtime_error("no task " + name);
}

ParseError parse_error(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e;
  }
  throw std::runtime_error("document parsed");
}

}  // namespace

TEST(Parse, EmptyDocument) {
  auto doc = parse("");
  EXPECT_TRUE(doc.decls.empty());
  EXPECT_TRUE(doc.tasks().empty());
  EXPECT_EQ(doc.version, 1);
  EXPECT_EQ(parse(slurp("empty.icat")), doc);
}

TEST(Parse, DivisorFixtureHasSixElementsAndTwelveStrictPairs) {
  auto doc = parse(slurp("d12.icat"));
  const auto* d = doc.find("D12");
  ASSERT_NE(d, nullptr);
  auto p = poset_shorthand(*d);
  EXPECT_EQ(p.elements.size(), 6u);
  // Oracle: ordered pairs a != b of divisors of 12 with a | b.
  std::size_t pairs = 0;
  for (int a = 1; a <= 12; ++a)
    for (int b = 1; b <= 12; ++b)
      if (a != b && 12 % a == 0 && 12 % b == 0 && b % a == 0) ++pairs;
  EXPECT_EQ(pairs, 12u);
  EXPECT_EQ(p.order.size(), pairs);
  // The generated shorthand agrees with the written-out one.
  auto gen = parse("category D = divisors 12");
  auto q = poset_shorthand(gen.decls[0]);
  EXPECT_EQ(q.elements, p.elements);
  EXPECT_EQ(std::set(q.order.begin(), q.order.end()), std::set(p.order.begin(), p.order.end()));
}

TEST(Parse, DanglingDiagramReference) {
  auto e = parse_error("category C = chain 2\n\ntask t = limit Nope\n");
  EXPECT_EQ(e.kind(), "unresolved-name");
  EXPECT_EQ(e.location().line, 3);
  EXPECT_EQ(e.location().column, 16);
}

TEST(Parse, ReferenceToLaterDeclarationIsUnresolved) {
  auto e = parse_error("task t = complete-check C\ncategory C = chain 2\n");
  EXPECT_EQ(e.kind(), "unresolved-name");
  EXPECT_EQ(e.location().line, 1);
}

TEST(Parse, WrongKindIsArityMismatch) {
  auto e = parse_error("category C = chain 2\ntask t = limit C\n");
  EXPECT_EQ(e.kind(), "arity");
  EXPECT_EQ(e.location().line, 2);
  EXPECT_EQ(e.location().column, 16);
}

TEST(Parse, TooManyWords) {
  auto e = parse_error("category C = chain 2 3\n");
  EXPECT_EQ(e.kind(), "arity");
  EXPECT_EQ(e.location().column, 22);
}

TEST(Parse, SyntaxErrorsCarryLocations) {
  auto e = parse_error("category C = poset {\n  elements a b\n");
  EXPECT_EQ(e.kind(), "syntax");
  EXPECT_EQ(e.location().line, 3);
  e = parse_error("base B = point\n}\n");
  EXPECT_EQ(e.kind(), "syntax");
  EXPECT_EQ(e.location().line, 2);
  EXPECT_EQ(e.location().column, 1);
  e = parse_error("widget W = chain 2\n");
  EXPECT_EQ(e.kind(), "syntax");
  e = parse_error("category C = chain 2\ncategory C = chain 3\n");
  EXPECT_EQ(e.location().line, 2);
  e = parse_error("intcat 2\n");
  EXPECT_EQ(e.kind(), "syntax");
}

TEST(Parse, ReferencesAreRecorded) {
  auto doc = parse(slurp("d12.icat"));
  EXPECT_EQ(doc.find("R")->references, (std::vector<std::string>{"B", "D12"}));
  EXPECT_EQ(doc.tasks().size(), 4u);
}

TEST(RoundTrip, EveryFixture) {
  auto names = fixture_names();
  ASSERT_GE(names.size(), 20u);
  for (const auto& n : names) {
    SCOPED_TRACE(n);
    auto doc = parse(slurp(n));
    auto text = serialize(doc);
    auto again = parse(text);
    EXPECT_EQ(again, doc);
    EXPECT_EQ(serialize(again), text);
  }
}

TEST(RoundTrip, RandomPosetDocuments) {
  test::Gen g(31);
  for (int round = 0; round < 60; ++round) {
    std::ostringstream out;
    int n = g.uniform(1, 6);
    out << "category P = poset {\n  elements";
    for (int i = 0; i < n; ++i) out << " e" << i;
    out << "\n";
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (g.coin()) out << (g.coin() ? "  " : "  ; ") << "e" << i << " <= e" << j << (g.coin() ? " ;" : "") << "\n";
    out << "}\n";
    if (g.coin()) out << "# trailing comment\n";
    out << "task t = complete-check P\n";
    auto doc = parse(out.str());
    EXPECT_EQ(parse(serialize(doc)), doc);
  }
}

TEST(Run, DivisorFixtureTasks) {
  auto text = slurp("d12.icat");
  auto rep = run(parse(text), text, Options{});
  ASSERT_EQ(rep.data["tasks"].size(), 4u);
  EXPECT_EQ(task(rep, "complete")["status"], "certificate");
  EXPECT_EQ(task(rep, "complete")["top"], "12");
  EXPECT_EQ(task(rep, "lim")["vertex"], "2");
  EXPECT_TRUE(task(rep, "lim")["stability"]["ok"].get<bool>());
  EXPECT_EQ(task(rep, "colim")["vertex"], "12");
  const auto& aft = task(rep, "adjoint");
  EXPECT_EQ(aft["status"], "certificate");
  EXPECT_EQ(aft["galois_oracle"], "agrees");
  // L a = least b in the chain 1 | 2 | 4 | 12 with a | R b.
  std::map<std::string, std::string> expect{{"1", "0"}, {"2", "1"}, {"3", "3"}, {"4", "2"}, {"6", "3"}, {"12", "3"}};
  for (const auto& row : aft["left"]) EXPECT_EQ(expect.at(row["object"]), row["image"]);
  EXPECT_FALSE(rep.engine_fault);
}

TEST(Run, TaskFilterSelectsExactlyOne) {
  auto text = slurp("d12.icat");
  Options opt;
  opt.tasks = {"colim"};
  auto rep = run(parse(text), text, opt);
  ASSERT_EQ(rep.data["tasks"].size(), 1u);
  EXPECT_EQ(rep.data["tasks"][0]["name"], "colim");
}

TEST(Run, AftCounterexampleRefusesAndLeavesOthers) {
  auto text = slurp("aft-counterexample.icat");
  auto rep = run(parse(text), text, Options{});
  const auto& aft = task(rep, "adjoint");
  EXPECT_EQ(aft["status"], "refusal");
  EXPECT_FALSE(aft["witness"].empty());
  EXPECT_EQ(task(rep, "continuity")["status"], "refusal");
  EXPECT_EQ(task(rep, "complete")["status"], "certificate");
}

TEST(Run, AftWithoutCompletenessIsACapabilityRefusal) {
  std::string text =
      "category V = poset { elements 0 l r ; 0 <= l ; 0 <= r }\n"
      "category C = chain 2\n"
      "functor R : V -> C = monotone { 0 -> 0 ; l -> 1 ; r -> 1 }\n"
      "task a = aft R\n"
      "task b = complete-check C\n";
  auto rep = run(parse(text), text, Options{});
  EXPECT_EQ(task(rep, "a")["status"], "refusal");
  EXPECT_NE(task(rep, "a")["reason"].get<std::string>().find("capability missing"), std::string::npos);
  EXPECT_EQ(task(rep, "b")["status"], "certificate");
}

TEST(Run, CorruptedDeclarationFailsOnlyItsTasks) {
  auto text = slurp("isolation.icat");
  auto rep = run(parse(text), text, Options{});
  EXPECT_EQ(task(rep, "good")["status"], "certificate");
  EXPECT_EQ(task(rep, "bad")["status"], "error");
  EXPECT_FALSE(task(rep, "check-bad")["ok"].get<bool>());
  EXPECT_TRUE(task(rep, "check-good")["ok"].get<bool>());
  EXPECT_FALSE(rep.engine_fault);
}

TEST(Run, RefusalIsConfirmedExternally) {
  auto text = slurp("non-lattice.icat");
  auto rep = run(parse(text), text, Options{});
  const auto& t = task(rep, "terminal");
  EXPECT_EQ(t["status"], "refusal");
  EXPECT_TRUE(t["confirmation"]["confirmed"].get<bool>());
  EXPECT_EQ(task(rep, "coproduct")["status"], "refusal");
  EXPECT_TRUE(task(rep, "coproduct")["confirmation"]["confirmed"].get<bool>());
}

TEST(Run, SampledDualityRecordsSeed) {
  auto text = slurp("chain4.icat");
  Options a, b;
  a.seed = 1;
  b.seed = 2;
  auto ra = run(parse(text), text, a), rb = run(parse(text), text, b);
  EXPECT_EQ(task(ra, "dual")["discrepancies"].size(), 0u);
  EXPECT_NE(task(ra, "dual")["seed"], task(rb, "dual")["seed"]);
  EXPECT_EQ(ra.data["seed"], 1);
}

TEST(Run, SizeBoundRejectsDeclaration) {
  std::string text = "category P = powerset 3\ntask t = complete-check P\n";
  Options opt;
  opt.max_carrier = 10;
  auto rep = run(parse(text), text, opt);
  EXPECT_EQ(rep.data["declarations"][0]["status"], "error");
  EXPECT_EQ(task(rep, "t")["status"], "error");
}

TEST(Build, LatticeFormRejectsNonLattices) {
  std::string text =
      "category P = poset { elements a b }\n"
      "category L = lattice { elements a b }\n"
      "category M = lattice { elements 0 a 1 ; 0 <= a ; a <= 1 }\n";
  auto env = build(parse(text), Options{});
  EXPECT_TRUE(env.errors.count("L"));
  EXPECT_NE(env.errors["L"].find("not a lattice"), std::string::npos);
  EXPECT_TRUE(env.values.count("P"));
  EXPECT_TRUE(env.values.count("M"));
}

TEST(Emit, EmptyReportSkeleton) {
  auto rep = empty_report("", Options{});
  auto j = Json::parse(emit(rep, Format::machine));
  EXPECT_EQ(j["schema"], "intcat-report");
  EXPECT_EQ(j["schema_version"], kReportSchemaVersion);
  EXPECT_TRUE(j["tasks"].empty());
  EXPECT_EQ(j["input_sha256"], "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_NE(emit(rep, Format::human).find("tasks: 0"), std::string::npos);
}

TEST(Emit, WitnessTableInBothFormats) {
  auto text = slurp("d12.icat");
  Options opt;
  opt.tasks = {"lim"};
  auto rep = run(parse(text), text, opt);
  auto machine = Json::parse(emit(rep, Format::machine));
  ASSERT_FALSE(machine["tasks"][0]["witness"].empty());
  auto human = emit(rep, Format::human);
  EXPECT_NE(human.find("witness:"), std::string::npos);
  EXPECT_NE(human.find("mediator=1<=2"), std::string::npos);
}

TEST(Emit, MachineFormatIsDeterministic) {
  for (const auto& n : {"d12.icat", "chain-base-a.icat", "aft-counterexample.icat"}) {
    auto text = slurp(n);
    auto a = emit(run(parse(text), text, Options{}), Format::machine);
    auto b = emit(run(parse(text), text, Options{}), Format::machine);
    EXPECT_EQ(a, b) << n;
    EXPECT_EQ(a.find("millis"), std::string::npos);
  }
}

TEST(Emit, DigestIsSha256) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Explain, ListsDependencies) {
  auto text = explain(parse(slurp("d12.icat")));
  EXPECT_NE(text.find("functor R: uses B D12"), std::string::npos);
  EXPECT_NE(text.find("task adjoint:"), std::string::npos);
}

TEST(Build, PointsResolveByPerStageLabels) {
  auto text = slurp("chain-base-a.icat");
  auto env = build(parse(text), Options{});
  EXPECT_TRUE(env.errors.empty());
  const auto& x = env.as<Presheaf>("X");
  EXPECT_EQ(resolve_point(x, "a/q"), (Section{0, 1}));
  EXPECT_EQ(resolve_point(x, "{a;p}"), (Section{0, 0}));
  EXPECT_THROW(resolve_point(x, "b/p"), std::runtime_error);
}

TEST(Build, RestrictionsComposeFromGenerators) {
  auto env = build(parse(slurp("chain-base-b.icat")), Options{});
  ASSERT_TRUE(env.errors.empty());
  const auto& y = env.as<Presheaf>("Y");
  auto u = *y.base()->find_arrow("0<=2");
  EXPECT_EQ(y.label(0, y.restrict(u, 0)), "u");
}

TEST(Stability, TestObjectsOnTwoStageChain) {
  auto tests = test_objects(chain_base(2), 12);
  ASSERT_EQ(tests.size(), 6u);
  EXPECT_EQ(tests[0].name, "T");
  EXPECT_EQ(tests[4].name, "y(0)+y(1)");
  EXPECT_EQ(test_objects(chain_base(4), 12).size(), 12u);
}
