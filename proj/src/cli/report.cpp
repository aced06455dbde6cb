#include "intcat/cli/report.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>

#include "intcat/limits/stability.hpp"
#include "intcat/theorems/theorems.hpp"

namespace intcat::cli {

namespace {

constexpr std::size_t kListCap = 12;

Json capped(const std::vector<std::string>& items) {
  Json out = Json::array();
  for (std::size_t i = 0; i < items.size() && i < kListCap; ++i) out.push_back(items[i]);
  if (items.size() > kListCap) out.push_back("... " + std::to_string(items.size() - kListCap) + " more");
  return out;
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

bool one_stage(const InternalCategory& a) { return a.base()->object_count() == 1 && a.base()->arrow_count() == 1; }

/// Images of the shape objects, elements joined by ',' and stages by '|'.
std::string render_objects(const InternalFunctor& f) {
  std::string out;
  for (ObjectId c = 0; c < f.source().stage_count(); ++c) {
    if (c) out += '|';
    for (ElementId x = 0; x < f.source().obj().size(c); ++x) {
      if (x) out += ',';
      out += f.target().obj().label(c, f.on_obj(c, x));
    }
  }
  return out.empty() ? "()" : out;
}

Section apply(const PresheafMap& f, const Section& s) {
  Section r(s.size());
  for (std::size_t c = 0; c < s.size(); ++c) r[c] = f(static_cast<ObjectId>(c), s[c]);
  return r;
}

Json refusal_json(const Refusal& r) {
  Json j;
  j["status"] = "refusal";
  j["reason"] = r.reason;
  j["locus"] = r.locus;
  j["witness"] = capped(r.witness);
  return j;
}

Json cone_certificate(const UniversalCertificate& cert, const std::vector<TestObject>& tests) {
  const auto& a = cert.cones.target();
  const auto& shape = cert.cones.shape();
  const auto& base = *a.base();
  Json j;
  j["status"] = "certificate";
  j["vertex"] = point_label(a.obj(), cert.vertex);
  j["candidates"] = cert.candidates;
  Json legs = Json::array();
  for (ObjectId c = 0; c < a.stage_count(); ++c)
    for (ElementId x = 0; x < shape.obj().size(c); ++x)
      legs.push_back({{"stage", base.object_label(c)},
                      {"object", shape.obj().label(c, x)},
                      {"leg", a.arr().label(c, cert.leg(c, x))}});
  j["legs"] = legs;
  // The iso witness: the unique mediator from every cone at every stage.
  Json witness = Json::array();
  const auto& cones = cert.cones;
  for (ObjectId c = 0; c < a.stage_count(); ++c)
    for (ElementId e = 0; e < cones.objects.object().size(c); ++e)
      witness.push_back({{"stage", base.object_label(c)},
                         {"cone", e},
                         {"vertex", a.obj().label(c, cones.vertex(c, e))},
                         {"mediator", a.arr().label(c, cert.mediator(c, e))}});
  j["witness"] = witness;
  auto st = check_stability(cert, tests);
  j["stability"] = {{"checked", st.checked}, {"failures", st.failures}, {"ok", st.ok()}};
  return j;
}

Json cone_task(const Diagram& d, bool cocone, const Options& opt) {
  auto tests = test_objects(d.functor.target().base(), opt.max_index);
  auto r = cocone ? universal_cocone(d.functor) : universal_cone(d.functor);
  if (r) return cone_certificate(*r, tests);
  Json j = refusal_json(r.refusal());
  auto conf = confirm_refusal(cocone ? cocones_category(d.functor) : cones_category(d.functor), tests);
  j["confirmation"] = {{"global_cones", conf.global_cones}, {"confirmed", conf.confirmed}, {"evidence", capped(conf.evidence)}};
  return j;
}

Result<CompletenessCertificate> completeness(const InternalCategory& a) {
  if (one_stage(a)) return lattice_completeness_check(a);
  return capability_completeness_check(a, default_shapes(a.base()), search_provider());
}

Json complete_task(const InternalCategory& a) {
  auto r = completeness(a);
  if (!r) return refusal_json(r.refusal());
  Json j;
  j["status"] = "certificate";
  if (r->mode == CompletenessCertificate::Mode::lattice) {
    const auto& m = r->meets;
    auto label = [&](int k) { return a.obj().label(0, m.representative[k]); };
    j["mode"] = "lattice";
    j["classes"] = m.representative.size();
    j["top"] = label(m.top);
    Json meets = Json::array();
    for (std::size_t x = 0; x < m.representative.size(); ++x)
      for (std::size_t y = x; y < m.representative.size(); ++y)
        meets.push_back({{"a", label(static_cast<int>(x))}, {"b", label(static_cast<int>(y))}, {"meet", label(m.meet[x][y])}});
    j["meets"] = meets;
  } else {
    j["mode"] = "capability";
    j["shapes"] = r->shapes;
  }
  return j;
}

Json exponential_task(const InternalCategory& a, const InternalCategory& b, const Options& opt) {
  auto e = exponential_cat(a, b);
  std::size_t size = e.cat.obj().total_size() + e.cat.arr().total_size();
  if (size > opt.max_carrier)
    throw SizeBoundExceeded("exponential has carrier size " + std::to_string(size) + " > --max-carrier");
  Json j;
  std::vector<int> objs, arrs;
  for (ObjectId c = 0; c < e.cat.stage_count(); ++c) {
    objs.push_back(e.cat.obj().size(c));
    arrs.push_back(e.cat.arr().size(c));
  }
  auto laws = validate_internal_category(e.cat);
  laws.merge(validate_functor(e.eval), "eval: ");
  auto global = points(e.cat.obj()).size();
  auto brute = all_functors(a, b).size();
  j["status"] = laws.ok() && global == brute ? "certificate" : "validation";
  j["objects_per_stage"] = objs;
  j["arrows_per_stage"] = arrs;
  j["global_functors"] = global;
  j["enumerated_functors"] = brute;
  j["laws_ok"] = laws.ok();
  j["violations"] = capped(laws.violations);
  return j;
}

Json limit_functor_task(const InternalCategory& a, const std::string& shape_name) {
  InternalCategory shape;
  for (auto& s : default_shapes(a.base()))
    if (s.name == shape_name) shape = s.shape;
  auto r = limit_functor(a, shape, search_provider());
  if (!r) return refusal_json(r.refusal());
  Json j;
  j["status"] = r->report.ok() ? "certificate" : "validation";
  j["shape"] = shape_name;
  j["laws_ok"] = r->report.ok();
  j["violations"] = capped(r->report.violations);
  j["unit_iso"] = r->unit_iso;
  Json lim = Json::array();
  for (const auto& p : points(r->ad.cat.obj()))
    lim.push_back({{"diagram", render_objects(r->ad.decode(p))},
                   {"limit", point_label(a.obj(), apply(r->lim.f0(), p))}});
  j["lim"] = lim;
  return j;
}

Json aft_task(const InternalFunctor& right) {
  const auto& b = right.source();
  const auto& a = right.target();
  auto cap = completeness(b);
  if (!cap) {
    Json j = refusal_json(Refusal{"capability missing: the source of the functor has no completeness certificate",
                                  "source category", {cap.refusal().reason}});
    return j;
  }
  auto r = aft_left_adjoint(right, search_provider());
  if (!r) return refusal_json(r.refusal());
  Json j;
  j["status"] = r->report.ok() ? "certificate" : "validation";
  j["laws_ok"] = r->report.ok();
  j["violations"] = capped(r->report.violations);
  Json left = Json::array();
  for (const auto& p : points(a.obj()))
    left.push_back({{"object", point_label(a.obj(), p)}, {"image", point_label(b.obj(), apply(r->left.f0(), p))}});
  j["left"] = left;
  std::string oracle = "not applicable";
  if (one_stage(a) && one_stage(b)) {
    try {
      auto g = galois_oracle(right);
      bool agree = g.ok();
      for (ElementId x = 0; agree && x < a.obj().size(0); ++x) {
        auto l = r->left.on_obj(0, x), o = g->left[x];
        agree = !b.hom(0, l, o).empty() && !b.hom(0, o, l).empty();
      }
      oracle = agree ? "agrees" : "disagrees";
    } catch (const PreconditionError&) {
    }
  }
  j["galois_oracle"] = oracle;
  if (oracle == "disagrees") j["status"] = "validation";
  return j;
}

bool vertices_iso(const InternalCategory& a, const Section& x, const Section& y) {
  for (ObjectId c = 0; c < a.stage_count(); ++c) {
    bool iso = false;
    for (auto f : a.hom(c, x[c], y[c]))
      if (inverse_arrow(a, c, f)) iso = true;
    if (!iso) return false;
  }
  return true;
}

/// Colimit by duality against direct search; "agrees" compares outcomes.
Json duality_case(const InternalFunctor& d) {
  auto dual = colimit_via_duality(d, search_provider());
  auto direct = universal_cocone(d);
  Json j;
  if (dual) {
    j["status"] = "certificate";
    j["vertex"] = point_label(d.target().obj(), dual->vertex);
    j["agrees"] = direct.ok() && dual->agrees_with_search && vertices_iso(d.target(), dual->vertex, direct->vertex);
  } else {
    j = refusal_json(dual.refusal());
    j["agrees"] = !direct.ok();
  }
  return j;
}

Json duality_samples(const InternalCategory& a, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto shapes = default_shapes(a.base());
  std::vector<std::vector<InternalFunctor>> diagrams;
  for (const auto& s : shapes) diagrams.push_back(all_functors(s.shape, a));
  Json cases = Json::array();
  std::size_t agreements = 0;
  std::vector<std::string> discrepancies;
  for (int i = 0; i < samples; ++i) {
    auto k = std::uniform_int_distribution<std::size_t>(0, shapes.size() - 1)(rng);
    if (diagrams[k].empty()) {
      cases.push_back({{"shape", shapes[k].name}, {"outcome", "no diagrams of this shape"}});
      ++agreements;
      continue;
    }
    auto pick = std::uniform_int_distribution<std::size_t>(0, diagrams[k].size() - 1)(rng);
    const auto& d = diagrams[k][pick];
    auto c = duality_case(d);
    bool agree = c["agrees"].get<bool>();
    agreements += agree;
    auto name = shapes[k].name + " " + render_objects(d);
    if (!agree) discrepancies.push_back(name);
    cases.push_back({{"shape", shapes[k].name},
                     {"diagram", render_objects(d)},
                     {"outcome", c["status"] == "certificate" ? c["vertex"].get<std::string>() : "refused"},
                     {"agrees", agree}});
  }
  Json j;
  j["status"] = discrepancies.empty() ? "certificate" : "validation";
  j["seed"] = seed;
  j["samples"] = samples;
  j["agreements"] = agreements;
  j["discrepancies"] = discrepancies;
  j["cases"] = cases;
  return j;
}

Json continuity_task(const InternalFunctor& f) {
  auto rep = is_continuous(f, default_shapes(f.source().base()), search_provider());
  Json results = Json::array();
  for (const auto& r : rep.results)
    results.push_back({{"shape", r.shape},
                       {"checked", r.checked},
                       {"continuous", r.continuous},
                       {"reason", r.reason},
                       {"witness", capped(r.witness)}});
  Json j;
  j["status"] = rep.ok() ? "certificate" : "refusal";
  j["results"] = results;
  return j;
}

Json run_task(const Decl& t, const Environment& env, const Options& opt) {
  const auto& w = t.stmt.words;
  const auto& op = w[3];
  if (op == "validate") {
    Json j;
    j["status"] = "validation";
    if (auto e = env.errors.find(w[4]); e != env.errors.end()) {
      j["ok"] = false;
      j["violations"] = Json::array({e->second});
    } else {
      auto rep = validate_value(env.values.at(w[4]));
      j["ok"] = rep.ok();
      j["violations"] = capped(rep.violations);
    }
    return j;
  }
  for (const auto& r : t.references)
    if (auto e = env.errors.find(r); e != env.errors.end())
      return Json{{"status", "error"}, {"error", "declaration '" + r + "' failed: " + e->second}};
  if (op == "exponential") return exponential_task(env.as<InternalCategory>(w[4]), env.as<InternalCategory>(w[5]), opt);
  if (op == "limit" || op == "colimit") return cone_task(env.as<Diagram>(w[4]), op == "colimit", opt);
  if (op == "complete-check") return complete_task(env.as<InternalCategory>(w[4]));
  if (op == "limit-functor") return limit_functor_task(env.as<InternalCategory>(w[4]), w[5]);
  if (op == "aft") return aft_task(env.as<InternalFunctor>(w[4]));
  if (op == "continuity-check") return continuity_task(env.as<InternalFunctor>(w[4]));
  if (w.size() == 5) return duality_case(env.as<Diagram>(w[4]).functor);
  auto seed = opt.seed ^ fnv1a(t.name);
  return duality_samples(env.as<InternalCategory>(w[4]), std::stoi(w[6]), seed);
}

Json header(std::string_view input, const Options& opt) {
  Json j;
  j["schema"] = "intcat-report";
  j["schema_version"] = kReportSchemaVersion;
  j["format_version"] = kFormatVersion;
  j["engine"] = kEngineVersion;
  j["input_sha256"] = sha256_hex(input);
  j["seed"] = opt.seed;
  j["bounds"] = {{"max_carrier", opt.max_carrier}, {"max_index", opt.max_index}};
  j["declarations"] = Json::array();
  j["tasks"] = Json::array();
  return j;
}

void add_declarations(Report& rep, const SpecDocument& doc, const Environment& env) {
  for (const auto& d : doc.decls) {
    if (d.kind == DeclKind::task) continue;
    Json j{{"name", d.name}, {"kind", to_string(d.kind)}};
    if (auto e = env.errors.find(d.name); e != env.errors.end()) {
      j["status"] = "error";
      j["error"] = e->second;
    } else {
      j["status"] = "ok";
    }
    rep.data["declarations"].push_back(j);
  }
  if (!env.faults.empty()) rep.engine_fault = true;
}

// ---- human rendering ----

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render(std::ostringstream& out, const Json& v, int indent) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, val] : v.items()) {
    if (val.is_array() && !val.empty() && val.front().is_object()) {
      out << pad << key << ":\n";
      for (const auto& row : val) {
        out << pad << "  -";
        for (const auto& [k, x] : row.items()) out << " " << k << "=" << (x.is_structured() ? x.dump() : scalar(x));
        out << "\n";
      }
    } else if (val.is_array()) {
      out << pad << key << ": [";
      for (std::size_t i = 0; i < val.size(); ++i) out << (i ? ", " : "") << scalar(val[i]);
      out << "]\n";
    } else if (val.is_object()) {
      out << pad << key << ":\n";
      render(out, val, indent + 2);
    } else {
      out << pad << key << ": " << scalar(val) << "\n";
    }
  }
}

}  // namespace

std::string sha256_hex(std::string_view text) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw EngineFault("sha256_hex: digest failed");
  std::string out;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    out += buf;
  }
  return out;
}

Report empty_report(std::string_view input, const Options& options) { return Report{header(input, options), {}, false}; }

Report validate_document(const SpecDocument& doc, std::string_view input, const Options& options) {
  Report rep = empty_report(input, options);
  add_declarations(rep, doc, build(doc, options));
  return rep;
}

Report run(const SpecDocument& doc, std::string_view input, const Options& options) {
  Report rep = empty_report(input, options);
  auto env = build(doc, options);
  add_declarations(rep, doc, env);
  for (const auto* t : doc.tasks()) {
    if (!options.tasks.empty() && std::find(options.tasks.begin(), options.tasks.end(), t->name) == options.tasks.end())
      continue;
    auto start = std::chrono::steady_clock::now();
    Json j{{"name", t->name}, {"operation", t->stmt.words[3]}};
    j["arguments"] = std::vector<std::string>(t->stmt.words.begin() + 4, t->stmt.words.end());
    Json outcome;
    try {
      outcome = run_task(*t, env, options);
    } catch (const EngineFault& e) {
      outcome = Json{{"status", "engine-fault"}, {"error", e.what()}};
      rep.engine_fault = true;
    } catch (const std::exception& e) {
      outcome = Json{{"status", "error"}, {"error", e.what()}};
    }
    for (const auto& [k, v] : outcome.items()) j[k] = v;
    rep.data["tasks"].push_back(j);
    rep.millis.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
  }
  return rep;
}

std::string emit(const Report& report, Format format) {
  if (format == Format::machine) return report.data.dump(2) + "\n";
  const auto& d = report.data;
  std::ostringstream out;
  out << d["engine"].get<std::string>() << " report (schema " << d["schema_version"] << ", format "
      << d["format_version"] << ")\n";
  out << "input sha256 " << d["input_sha256"].get<std::string>() << "\n";
  out << "seed " << d["seed"] << ", max carrier " << d["bounds"]["max_carrier"] << ", max index "
      << d["bounds"]["max_index"] << "\n";
  std::size_t failed = 0;
  for (const auto& x : d["declarations"]) failed += x["status"] == "error";
  out << "declarations: " << d["declarations"].size() - failed << " ok, " << failed << " failed\n";
  for (const auto& x : d["declarations"])
    if (x["status"] == "error")
      out << "  " << x["kind"].get<std::string>() << " " << x["name"].get<std::string>() << ": "
          << x["error"].get<std::string>() << "\n";
  out << "tasks: " << d["tasks"].size() << "\n";
  for (std::size_t i = 0; i < d["tasks"].size(); ++i) {
    const auto& t = d["tasks"][i];
    out << "\n" << t["name"].get<std::string>() << " [" << t["operation"].get<std::string>();
    for (const auto& a : t["arguments"]) out << " " << a.get<std::string>();
    out << "] " << t["status"].get<std::string>();
    if (i < report.millis.size()) {
      char buf[32];
      std::snprintf(buf, sizeof buf, " (%.1f ms)", report.millis[i]);
      out << buf;
    }
    out << "\n";
    Json body = Json::object();
    for (const auto& [k, v] : t.items())
      if (k != "name" && k != "operation" && k != "arguments" && k != "status") body[k] = v;
    render(out, body, 2);
  }
  return out.str();
}

std::string explain(const SpecDocument& doc) {
  static const std::map<std::string, std::string> what{
      {"validate", "runs the exhaustive validator of"},
      {"exponential", "builds the functor category and counts its global objects against enumerated functors, for"},
      {"limit", "searches for a universal cone, checks its stability or confirms the refusal, for"},
      {"colimit", "searches for a universal cocone, checks its stability or confirms the refusal, for"},
      {"complete-check", "certifies completeness (lattice meets on one stage, limit functors otherwise) of"},
      {"limit-functor", "builds Lim with its unit and counit and checks both triangle identities, for"},
      {"aft", "requires a completeness certificate, then builds the left adjoint by fiber limits, for"},
      {"duality-check", "computes colimits as limits of cocone categories and compares with direct search, for"},
      {"continuity-check", "checks preservation of the generic limit of every default shape, for"}};
  std::ostringstream out;
  out << "format version " << doc.version << ", " << doc.decls.size() << " declarations\n";
  for (const auto& d : doc.decls) {
    out << to_string(d.kind) << " " << d.name;
    if (d.kind == DeclKind::task) {
      out << ": " << what.at(d.stmt.words[3]);
      for (std::size_t i = 4; i < d.stmt.words.size(); ++i) out << " " << d.stmt.words[i];
    } else if (!d.references.empty()) {
      out << ": uses";
      for (const auto& r : d.references) out << " " << r;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace intcat::cli
