#include "intcat/cli/build.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <tuple>

#include "intcat/core/constructions.hpp"
#include "intcat/limits/limit_functor.hpp"
#include "intcat/theorems/theorems.hpp"

namespace intcat::cli {

namespace {

class BuildError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string quote(const std::string& s) { return "'" + s + "'"; }

int small_int(const std::string& w, int max) {
  int n = std::stoi(w);
  if (n > max) throw BuildError("size " + w + " exceeds the limit " + std::to_string(max));
  return n;
}

ObjectId stage_of(const Base& b, const std::string& w) {
  auto c = b->find_object(w);
  if (!c) throw BuildError("unknown index object " + quote(w));
  return *c;
}

ElementId element_of(const Presheaf& x, ObjectId c, const std::string& w) {
  auto e = x.find(c, w);
  if (!e) throw BuildError("no element " + quote(w) + " at stage " + quote(x.base()->object_label(c)));
  return *e;
}

/// label -> label pairs from a block of "x -> y" statements.
std::map<std::string, std::string> pairs_of(const Stmt& s) {
  std::map<std::string, std::string> out;
  for (const auto& p : s.block)
    if (!out.emplace(p.words[0], p.words[2]).second) throw BuildError("duplicate entry for " + quote(p.words[0]));
  return out;
}

Base build_base(const Stmt& s) {
  const auto& k = s.words[3];
  if (k == "point") return point_base();
  if (k == "chain") return chain_base(small_int(s.words[4], 64));
  std::vector<std::string> objects;
  std::vector<IndexCategory::Arrow> arrows;
  std::vector<std::array<std::string, 3>> composites;
  std::vector<std::pair<std::string, std::array<std::string, 2>>> user;
  for (const auto& st : s.block) {
    if (st.words[0] == "objects")
      objects.insert(objects.end(), st.words.begin() + 1, st.words.end());
    else if (st.words[0] == "arrow")
      user.push_back({st.words[1], {st.words[3], st.words[5]}});
    else
      composites.push_back({st.words[1], st.words[2], st.words[4]});
  }
  auto index = [&](const std::string& o) {
    auto it = std::find(objects.begin(), objects.end(), o);
    if (it == objects.end()) throw BuildError("unknown index object " + quote(o));
    return static_cast<ObjectId>(it - objects.begin());
  };
  std::vector<ArrowId> ids;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    ids.push_back(static_cast<ArrowId>(arrows.size()));
    arrows.push_back({"id_" + objects[i], static_cast<ObjectId>(i), static_cast<ObjectId>(i)});
  }
  for (const auto& [label, ends] : user) arrows.push_back({label, index(ends[0]), index(ends[1])});
  const auto m = arrows.size();
  auto arrow_index = [&](const std::string& l) {
    for (std::size_t i = 0; i < m; ++i)
      if (arrows[i].label == l) return static_cast<ArrowId>(i);
    throw BuildError("unknown index arrow " + quote(l));
  };
  std::vector<ArrowId> comp(m * m, -1);
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t f = 0; f < m; ++f) {
      if (arrows[f].target != arrows[g].source) continue;
      if (ids[arrows[f].source] == static_cast<ArrowId>(f)) comp[g * m + f] = static_cast<ArrowId>(g);
      else if (ids[arrows[g].source] == static_cast<ArrowId>(g)) comp[g * m + f] = static_cast<ArrowId>(f);
    }
  for (const auto& [v, u, w] : composites) comp[arrow_index(v) * m + arrow_index(u)] = arrow_index(w);
  return std::make_shared<const IndexCategory>(objects, arrows, ids, comp);
}

Presheaf build_presheaf(const Stmt& s, const Base& b) {
  if (s.words.size() > 4) {
    const auto& k = s.words[5];
    if (k == "terminal") return terminal(b);
    if (k == "empty") return initial(b);
    if (k == "representable") return representable(b, stage_of(b, s.words[6]));
    return constant(b, std::vector<std::string>(s.words.begin() + 6, s.words.end()));
  }
  const int n = b->object_count();
  std::vector<std::vector<std::string>> carriers(n);
  std::vector<bool> given(n, false);
  std::map<ArrowId, const Stmt*> restrictions;
  for (const auto& st : s.block) {
    if (st.words[0] == "at") {
      auto c = stage_of(b, st.words[1]);
      if (given[c]) throw BuildError("stage " + quote(st.words[1]) + " listed twice");
      given[c] = true;
      carriers[c].assign(st.words.begin() + 3, st.words.end());
      std::set<std::string> distinct(carriers[c].begin(), carriers[c].end());
      if (distinct.size() != carriers[c].size()) throw BuildError("repeated element at stage " + quote(st.words[1]));
    } else {
      auto u = b->find_arrow(st.words[1]);
      if (!u) throw BuildError("unknown index arrow " + quote(st.words[1]));
      restrictions[*u] = &st;
    }
  }
  auto find = [&](ObjectId c, const std::string& l) {
    auto it = std::find(carriers[c].begin(), carriers[c].end(), l);
    if (it == carriers[c].end()) throw BuildError("no element " + quote(l) + " at stage " + quote(b->object_label(c)));
    return static_cast<ElementId>(it - carriers[c].begin());
  };
  const int m = b->arrow_count();
  std::vector<std::vector<ElementId>> action(m);
  std::vector<bool> known(m, false);
  for (ArrowId u = 0; u < m; ++u) {
    ObjectId c = b->source(u), c2 = b->target(u);
    if (b->is_identity(u)) {
      action[u].resize(carriers[c].size());
      std::iota(action[u].begin(), action[u].end(), 0);
      known[u] = true;
    } else if (auto it = restrictions.find(u); it != restrictions.end()) {
      auto table = pairs_of(*it->second);
      for (const auto& x : carriers[c2]) {
        auto t = table.find(x);
        if (t == table.end())
          throw BuildError("restriction along " + quote(b->arrow(u).label) + " misses " + quote(x));
        action[u].push_back(find(c, t->second));
      }
      if (table.size() != carriers[c2].size())
        throw BuildError("restriction along " + quote(b->arrow(u).label) + " names unknown elements");
      known[u] = true;
    }
  }
  // Restrictions not written out are composed from those that are.
  for (bool progress = true; progress;) {
    progress = false;
    for (ArrowId w = 0; w < m; ++w) {
      if (known[w]) continue;
      for (ArrowId v = 0; v < m && !known[w]; ++v)
        for (ArrowId u = 0; u < m && !known[w]; ++u) {
          if (!known[u] || !known[v] || b->is_identity(u) || b->is_identity(v) || b->compose(v, u) != w) continue;
          for (ElementId x = 0; x < static_cast<ElementId>(carriers[b->target(w)].size()); ++x)
            action[w].push_back(action[u][action[v][x]]);
          known[w] = true;
          progress = true;
        }
    }
  }
  for (ArrowId u = 0; u < m; ++u)
    if (!known[u]) throw BuildError("no restriction given along " + quote(b->arrow(u).label));
  return Presheaf(b, std::move(carriers), std::move(action));
}

PresheafMap build_map(const Stmt& s, const Presheaf& x, const Presheaf& y) {
  const int n = x.stage_count();
  std::vector<std::vector<ElementId>> comps(n);
  std::vector<bool> given(n, false);
  for (const auto& st : s.block) {
    auto c = stage_of(x.base(), st.words[1]);
    if (given[c]) throw BuildError("stage " + quote(st.words[1]) + " listed twice");
    given[c] = true;
    auto table = pairs_of(st);
    for (ElementId e = 0; e < x.size(c); ++e) {
      auto t = table.find(x.label(c, e));
      if (t == table.end()) throw BuildError("map misses " + quote(x.label(c, e)) + " at stage " + quote(st.words[1]));
      comps[c].push_back(element_of(y, c, t->second));
    }
    if (table.size() != static_cast<std::size_t>(x.size(c)))
      throw BuildError("map names unknown elements at stage " + quote(st.words[1]));
  }
  for (ObjectId c = 0; c < n; ++c)
    if (!given[c] && x.size(c) > 0) throw BuildError("map has no entries at stage " + quote(x.base()->object_label(c)));
  return PresheafMap(x, y, std::move(comps));
}

InternalCategory build_internal(const Stmt& s, const Environment& env) {
  std::map<std::string, std::string> part;
  const Stmt* compose = nullptr;
  for (const auto& st : s.block) {
    if (st.words[0] == "compose") compose = &st;
    else part[st.words[0]] = st.words[1];
  }
  const auto& obj = env.as<Presheaf>(part["objects"]);
  const auto& arr = env.as<Presheaf>(part["arrows"]);
  const auto& src = env.as<PresheafMap>(part["source"]);
  const auto& tgt = env.as<PresheafMap>(part["target"]);
  const auto& id = env.as<PresheafMap>(part["identity"]);
  if (!(src.source() == arr) || !(src.target() == obj) || !(tgt.source() == arr) || !(tgt.target() == obj))
    throw BuildError("source and target must be maps from the arrows to the objects");
  if (!(id.source() == obj) || !(id.target() == arr)) throw BuildError("identity must map the objects to the arrows");
  std::map<std::tuple<ObjectId, ElementId, ElementId>, ElementId> table;
  for (const auto& at : compose->block) {
    auto c = stage_of(obj.base(), at.words[1]);
    for (const auto& row : at.block) {
      auto key = std::make_tuple(c, element_of(arr, c, row.words[0]), element_of(arr, c, row.words[1]));
      if (!table.emplace(key, element_of(arr, c, row.words[3])).second)
        throw BuildError("composite of " + quote(row.words[0]) + " and " + quote(row.words[1]) + " given twice");
    }
  }
  return InternalCategory::from_tables(obj, arr, src, tgt, id, [&](ObjectId c, ElementId g, ElementId f) -> ElementId {
    if (auto it = table.find({c, g, f}); it != table.end()) return it->second;
    if (id(c, src(c, g)) == g) return f;
    if (id(c, tgt(c, f)) == f) return g;
    throw BuildError("no composite of " + quote(arr.label(c, g)) + " and " + quote(arr.label(c, f)) + " at stage " +
                     quote(obj.base()->object_label(c)));
  });
}

InternalCategory build_category(const Decl& d, const Environment& env) {
  const auto& s = d.stmt;
  const auto& k = s.words[3];
  if (k == "discrete") return discrete(env.as<Presheaf>(s.words[4]));
  if (k == "indiscrete") return indiscrete(env.as<Presheaf>(s.words[4]));
  if (k == "opposite") return opposite(env.as<InternalCategory>(s.words[4]));
  if (k == "terminal") return terminal_cat(env.as<Base>(s.words[4]));
  if (k == "product")
    return product_cat(env.as<InternalCategory>(s.words[4]), env.as<InternalCategory>(s.words[5])).cat;
  if (k == "internal") return build_internal(s, env);
  auto p = poset_shorthand(d);
  auto a = poset_category(p.elements, p.order);
  if (k == "lattice")
    if (auto check = lattice_completeness_check(a); !check)
      throw PreconditionError("not a lattice: " + check.refusal().reason);
  return a;
}

InternalFunctor build_functor(const Stmt& s, const Environment& env) {
  const auto& a = env.as<InternalCategory>(s.words[3]);
  const auto& b = env.as<InternalCategory>(s.words[5]);
  const auto& k = s.words[7];
  if (k == "identity") {
    if (!(a == b)) throw BuildError("identity functor between different categories");
    return identity_functor(a);
  }
  if (k == "maps") return InternalFunctor(a, b, env.as<PresheafMap>(s.words[8]), env.as<PresheafMap>(s.words[9]));
  auto table = pairs_of(s);
  auto f0 = tabulate(a.obj(), b.obj(), [&](ObjectId c, ElementId x) {
    auto t = table.find(a.obj().label(c, x));
    if (t == table.end()) throw BuildError("monotone map misses " + quote(a.obj().label(c, x)));
    return element_of(b.obj(), c, t->second);
  });
  return functor_from_objects(a, b, f0);
}

/// A diagram in a thin category determined by the image of each shape object.
InternalFunctor object_diagram(const InternalCategory& shape, const InternalCategory& a,
                               const std::vector<std::string>& words) {
  std::vector<Section> pts;
  for (const auto& w : words) pts.push_back(resolve_point(a.obj(), w));
  auto f0 = tabulate(shape.obj(), a.obj(), [&](ObjectId c, ElementId x) { return pts[x][c]; });
  return functor_from_objects(shape, a, f0);
}

Base preorder_of(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<std::string> objects;
  for (int i = 0; i < n; ++i) objects.push_back(std::to_string(i));
  return preorder_base(objects, order_closure(n, pairs));
}

Diagram build_diagram(const Stmt& s, const Environment& env) {
  const auto& a = env.as<InternalCategory>(s.words[3]);
  const auto& k = s.words[5];
  const auto& base = a.base();
  std::vector<std::string> args(s.words.begin() + 6, s.words.end());
  if (k == "empty") return {InternalFunctor(initial_cat(base), a, from_initial(a.obj()), from_initial(a.arr())), k};
  if (k == "identity") return {identity_functor(a), k};
  if (k == "functor") {
    const auto& f = env.as<InternalFunctor>(args[0]);
    if (!(f.target() == a)) throw BuildError("functor " + quote(args[0]) + " does not land in the category");
    return {f, k};
  }
  if (k == "parallel") {
    auto f = resolve_point(a.arr(), args[0]), g = resolve_point(a.arr(), args[1]);
    auto shape = shape_parallel_pair(base);
    Section ends[2] = {Section(a.stage_count()), Section(a.stage_count())};
    for (ObjectId c = 0; c < a.stage_count(); ++c) {
      if (a.s(c, f[c]) != a.s(c, g[c]) || a.t(c, f[c]) != a.t(c, g[c]))
        throw BuildError("arrows " + quote(args[0]) + " and " + quote(args[1]) + " are not parallel");
      ends[0][c] = a.s(c, f[c]);
      ends[1][c] = a.t(c, f[c]);
    }
    auto f0 = tabulate(shape.obj(), a.obj(), [&](ObjectId c, ElementId x) { return ends[x][c]; });
    // Shape arrows: id_0, id_1, f, g.
    auto f1 = tabulate(shape.arr(), a.arr(), [&](ObjectId c, ElementId u) {
      switch (u) {
        case 0: return a.identity(c, ends[0][c]);
        case 1: return a.identity(c, ends[1][c]);
        case 2: return f[c];
        default: return g[c];
      }
    });
    return {InternalFunctor(shape, a, f0, f1), k};
  }
  const int n = static_cast<int>(args.size());
  InternalCategory shape;
  if (k == "discrete") {
    shape = constant_cat(base, *preorder_of(n, {}));
  } else if (k == "chain") {
    shape = constant_cat(base, *chain_base(n));
  } else if (k == "span") {
    shape = constant_cat(base, *preorder_of(3, {{0, 1}, {0, 2}}));
  } else {
    shape = constant_cat(base, *preorder_of(3, {{0, 2}, {1, 2}}));
  }
  return {object_diagram(shape, a, args), k};
}

std::size_t carrier_size(const Value& v) {
  if (auto p = std::get_if<Presheaf>(&v)) return p->total_size();
  if (auto a = std::get_if<InternalCategory>(&v)) return a->obj().total_size() + a->arr().total_size();
  return 0;
}

}  // namespace

const Value* Environment::get(const std::string& name) const {
  auto it = values.find(name);
  return it == values.end() ? nullptr : &it->second;
}

ValidationReport validate_value(const Value& v) {
  struct {
    ValidationReport operator()(const Base& b) const { return validate_index_category(*b); }
    ValidationReport operator()(const Presheaf& x) const { return validate_presheaf(x); }
    ValidationReport operator()(const PresheafMap& f) const { return validate_map(f); }
    ValidationReport operator()(const InternalCategory& a) const { return validate_internal_category(a); }
    ValidationReport operator()(const InternalFunctor& f) const { return validate_functor(f); }
    ValidationReport operator()(const Diagram& d) const { return validate_functor(d.functor); }
  } visit;
  return std::visit(visit, v);
}

Section resolve_point(const Presheaf& x, const std::string& word) {
  const int n = x.stage_count();
  std::vector<std::string> parts;
  if (n > 1 && word.find('/') != std::string::npos) {
    std::size_t start = 0;
    for (std::size_t p; (p = word.find('/', start)) != std::string::npos; start = p + 1)
      parts.push_back(word.substr(start, p - start));
    parts.push_back(word.substr(start));
    if (static_cast<int>(parts.size()) != n) throw BuildError(quote(word) + " does not name one label per stage");
  }
  std::vector<Section> found;
  for (const auto& s : points(x)) {
    bool match = point_label(x, s) == word;
    if (!match && !parts.empty()) {
      match = true;
      for (ObjectId c = 0; c < n; ++c) match = match && x.label(c, s[c]) == parts[c];
    }
    if (!match && parts.empty()) {
      match = true;
      for (ObjectId c = 0; c < n; ++c) match = match && x.label(c, s[c]) == word;
    }
    if (match) found.push_back(s);
  }
  if (found.size() != 1)
    throw BuildError(quote(word) + (found.empty() ? " names no global element" : " names several global elements"));
  return found[0];
}

PosetShorthand poset_shorthand(const Decl& d) {
  const auto& s = d.stmt;
  if (d.kind != DeclKind::category) throw PreconditionError("poset_shorthand: " + d.name + " is not a category");
  const auto& k = s.words[3];
  PosetShorthand p;
  if (k == "divisors") {
    int n = small_int(s.words[4], 5040);
    for (int x = 1; x <= n; ++x)
      if (n % x == 0) p.elements.push_back(std::to_string(x));
    for (const auto& a : p.elements)
      for (const auto& b : p.elements)
        if (a != b && std::stoi(b) % std::stoi(a) == 0) p.order.emplace_back(a, b);
  } else if (k == "powerset") {
    int n = small_int(s.words[4], 5);
    auto name = [&](int m) {
      std::string out;
      for (int i = 0; i < n; ++i)
        if (m >> i & 1) out += static_cast<char>('a' + i);
      return out.empty() ? std::string("0") : out;
    };
    for (int m = 0; m < (1 << n); ++m) p.elements.push_back(name(m));
    for (int m = 0; m < (1 << n); ++m)
      for (int q = 0; q < (1 << n); ++q)
        if (m != q && (m & q) == m) p.order.emplace_back(name(m), name(q));
  } else if (k == "chain") {
    int n = small_int(s.words[4], 256);
    for (int i = 0; i < n; ++i) p.elements.push_back(std::to_string(i));
    for (int i = 0; i + 1 < n; ++i) p.order.emplace_back(p.elements[i], p.elements[i + 1]);
  } else if (k == "poset" || k == "lattice") {
    for (const auto& st : s.block) {
      if (st.words[0] == "elements") p.elements.insert(p.elements.end(), st.words.begin() + 1, st.words.end());
      else p.order.emplace_back(st.words[0], st.words[2]);
    }
  } else {
    throw PreconditionError("poset_shorthand: " + d.name + " is not an order shorthand");
  }
  return p;
}

Environment build(const SpecDocument& doc, const Options& options) {
  Environment env;
  for (const auto& d : doc.decls) {
    if (d.kind == DeclKind::task) continue;
    auto failed = std::find_if(d.references.begin(), d.references.end(),
                               [&](const std::string& r) { return env.errors.count(r) > 0; });
    if (failed != d.references.end()) {
      env.errors[d.name] = "depends on failed declaration " + quote(*failed);
      continue;
    }
    try {
      const auto& s = d.stmt;
      Value v;
      switch (d.kind) {
        case DeclKind::base: v = build_base(s); break;
        case DeclKind::presheaf: v = build_presheaf(s, env.as<Base>(s.words[3])); break;
        case DeclKind::map:
          v = build_map(s, env.as<Presheaf>(s.words[3]), env.as<Presheaf>(s.words[5]));
          break;
        case DeclKind::category: v = build_category(d, env); break;
        case DeclKind::functor: v = build_functor(s, env); break;
        case DeclKind::diagram: v = build_diagram(s, env); break;
        case DeclKind::task: break;
      }
      if (carrier_size(v) > options.max_carrier)
        throw SizeBoundExceeded("carrier size " + std::to_string(carrier_size(v)) + " exceeds --max-carrier " +
                                std::to_string(options.max_carrier));
      auto report = validate_value(v);
      if (!report.ok()) {
        env.errors[d.name] = "does not validate: " + report.violations.front() +
                             (report.violations.size() > 1
                                  ? " (and " + std::to_string(report.violations.size() - 1) + " more)"
                                  : std::string());
        continue;
      }
      env.values.emplace(d.name, std::move(v));
    } catch (const EngineFault& e) {
      env.faults.push_back(d.name + ": " + e.what());
      env.errors[d.name] = std::string("engine fault: ") + e.what();
    } catch (const std::exception& e) {
      env.errors[d.name] = e.what();
    }
  }
  return env;
}

}  // namespace intcat::cli
