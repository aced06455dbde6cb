#pragma once

// Shared fixtures, seeded generators and brute-force oracles for the tests.
// Oracles here deliberately avoid the engine's search kernel.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "intcat/ambient/presheaf.hpp"
#include "intcat/core/constructions.hpp"

namespace intcat::test {

struct Gen {
  explicit Gen(std::uint64_t seed) : rng(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
  bool coin() { return uniform(0, 1) == 1; }
  std::mt19937_64 rng;
};

/// A presheaf on chain_base(n) from its carrier sizes and the restrictions
/// step[i] : X(i+1) -> X(i).
inline Presheaf chain_presheaf(const Base& base, const std::vector<int>& sizes,
                               const std::vector<std::vector<int>>& step, const std::string& tag = "x") {
  const int n = base->object_count();
  std::vector<std::vector<std::string>> carriers(n);
  for (int c = 0; c < n; ++c)
    for (int e = 0; e < sizes[c]; ++e) carriers[c].push_back(tag + std::to_string(c) + "_" + std::to_string(e));
  std::vector<std::vector<ElementId>> action(base->arrow_count());
  for (ArrowId u = 0; u < base->arrow_count(); ++u) {
    int i = base->source(u), j = base->target(u);
    for (int e = 0; e < sizes[j]; ++e) {
      int v = e;
      for (int k = j; k > i; --k) v = step[k - 1][v];
      action[u].push_back(v);
    }
  }
  return Presheaf(base, std::move(carriers), std::move(action));
}

inline Presheaf random_chain_presheaf(const Base& base, Gen& g, int max_size, bool allow_empty = true) {
  const int n = base->object_count();
  std::vector<int> sizes(n);
  std::vector<std::vector<int>> step(n > 0 ? n - 1 : 0);
  for (int c = 0; c < n; ++c) sizes[c] = g.uniform(allow_empty ? 0 : 1, max_size);
  // X(i+1) nonempty forces X(i) nonempty.
  for (int c = n - 2; c >= 0; --c)
    if (sizes[c + 1] > 0 && sizes[c] == 0) sizes[c] = 1;
  for (int c = 0; c + 1 < n; ++c)
    for (int e = 0; e < sizes[c + 1]; ++e) step[c].push_back(g.uniform(0, sizes[c] - 1));
  return chain_presheaf(base, sizes, step);
}

inline Presheaf finset(int n, const std::string& tag = "e") {
  std::vector<std::string> l;
  for (int i = 0; i < n; ++i) l.push_back(tag + std::to_string(i));
  return constant(point_base(), l);
}

/// Number of natural transformations X -> Y by enumerating every tuple of
/// component functions (no pruning, no shared search code).
inline std::uint64_t brute_nat_count(const Presheaf& x, const Presheaf& y) {
  const auto& b = *x.base();
  std::vector<std::pair<ObjectId, ElementId>> slots;
  for (ObjectId c = 0; c < b.object_count(); ++c)
    for (ElementId e = 0; e < x.size(c); ++e) slots.emplace_back(c, e);
  std::vector<int> off(b.object_count() + 1, 0);
  for (ObjectId c = 0; c < b.object_count(); ++c) off[c + 1] = off[c] + x.size(c);
  for (auto [c, e] : slots)
    if (y.size(c) == 0) return 0;
  std::vector<int> val(slots.size(), 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (ArrowId u = 0; u < b.arrow_count() && ok; ++u) {
      auto c = b.source(u), c2 = b.target(u);
      for (ElementId e = 0; e < x.size(c2) && ok; ++e)
        ok = val[off[c] + x.restrict(u, e)] == y.restrict(u, val[off[c2] + e]);
    }
    if (ok) ++count;
    std::size_t k = 0;
    while (k < slots.size()) {
      if (++val[k] < y.size(slots[k].first)) break;
      val[k] = 0;
      ++k;
    }
    if (k == slots.size()) break;
  }
  return count;
}

// Finite lattices and posets as internal categories in FinSet.

struct Poset {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> order;
  InternalCategory category() const { return poset_category(elements, order); }
};

inline Poset divisor_poset(int n) {
  Poset p;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) p.elements.push_back(std::to_string(d));
  for (const auto& a : p.elements)
    for (const auto& b : p.elements)
      if (a != b && std::stoi(b) % std::stoi(a) == 0) p.order.emplace_back(a, b);
  return p;
}

inline Poset chain_poset(int n) {
  Poset p;
  for (int i = 0; i < n; ++i) p.elements.push_back(std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) p.order.emplace_back(p.elements[i], p.elements[i + 1]);
  return p;
}

/// Subsets of {a, b, ...} ordered by inclusion, labeled like "ab" ("0" for ∅).
inline Poset powerset_poset(int n) {
  Poset p;
  auto name = [&](int m) {
    std::string s;
    for (int i = 0; i < n; ++i)
      if (m >> i & 1) s += static_cast<char>('a' + i);
    return s.empty() ? std::string("0") : s;
  };
  for (int m = 0; m < (1 << n); ++m) p.elements.push_back(name(m));
  for (int m = 0; m < (1 << n); ++m)
    for (int k = 0; k < (1 << n); ++k)
      if (m != k && (m & k) == m) p.order.emplace_back(name(m), name(k));
  return p;
}

/// The ≤ relation of a poset category at its single stage, by object index.
inline std::vector<std::vector<bool>> leq_table(const InternalCategory& a) {
  const int n = a.obj().size(0);
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (ElementId f = 0; f < a.arr().size(0); ++f) leq[a.s(0, f)][a.t(0, f)] = true;
  return leq;
}

inline ElementId element(const InternalCategory& a, const std::string& label) {
  return *a.obj().find(0, label);
}

/// A monotone map between thin categories in FinSet from its object table.
inline InternalFunctor monotone(const InternalCategory& a, const InternalCategory& b, const std::vector<int>& f) {
  auto f0 = tabulate(a.obj(), b.obj(), [&](ObjectId, ElementId x) { return f[x]; });
  return functor_from_objects(a, b, f0);
}

/// A diagram from a thin shape into a poset category, by target labels.
inline InternalFunctor diagram_of(const InternalCategory& shape, const InternalCategory& a,
                                  const std::vector<std::string>& labels) {
  std::vector<int> f;
  for (const auto& l : labels) f.push_back(element(a, l));
  return monotone(shape, a, f);
}


/// A finite lattice on elements 0..n-1 (0 bottom, n-1 top) by its order.
struct FiniteLattice {
  std::vector<std::vector<bool>> leq;
  int size() const { return static_cast<int>(leq.size()); }
  std::string label(int i) const { return "x" + std::to_string(i); }
  int meet(int a, int b) const {
    int best = -1;
    for (int m = 0; m < size(); ++m)
      if (leq[m][a] && leq[m][b] && (best < 0 || leq[best][m])) best = m;
    return best;
  }
  Poset poset() const {
    Poset p;
    for (int i = 0; i < size(); ++i) p.elements.push_back(label(i));
    for (int i = 0; i < size(); ++i)
      for (int j = 0; j < size(); ++j)
        if (i != j && leq[i][j]) p.order.emplace_back(label(i), label(j));
    return p;
  }
};

/// Every lattice with n elements up to isomorphism: naturally labeled posets
/// on n - 2 points with a bottom and a top added, kept when all binary meets
/// exist, deduplicated by a canonical form over permutations of the middle.
inline std::vector<FiniteLattice> lattices_of_size(int n) {
  if (n <= 0) return {};
  if (n == 1) return {FiniteLattice{{{true}}}};
  const int k = n - 2;
  std::vector<std::pair<int, int>> slots;
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < j; ++i) slots.emplace_back(i, j);
  std::vector<int> perm(k);
  std::vector<FiniteLattice> out;
  std::vector<std::uint64_t> forms;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<std::vector<bool>> lt(k, std::vector<bool>(k, false));
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask >> s & 1) lt[slots[s].first][slots[s].second] = true;
    bool transitive = true;
    for (int a = 0; a < k && transitive; ++a)
      for (int b = 0; b < k && transitive; ++b)
        for (int c = 0; c < k && transitive; ++c)
          if (lt[a][b] && lt[b][c] && !lt[a][c]) transitive = false;
    if (!transitive) continue;
    FiniteLattice l;
    l.leq.assign(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) l.leq[0][i] = l.leq[i][n - 1] = l.leq[i][i] = true;
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        if (lt[a][b]) l.leq[a + 1][b + 1] = true;
    bool lattice = true;
    for (int a = 0; a < n && lattice; ++a)
      for (int b = 0; b < n && lattice; ++b) {
        int m = l.meet(a, b);
        for (int x = 0; x < n && m >= 0; ++x)
          if (l.leq[x][a] && l.leq[x][b] && !l.leq[x][m]) m = -1;
        lattice = m >= 0;
      }
    if (!lattice) continue;
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
      std::uint64_t code = 0;
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) code = code << 1 | (lt[perm[a]][perm[b]] ? 1 : 0);
      best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (std::find(forms.begin(), forms.end(), best) != forms.end()) continue;
    forms.push_back(best);
    out.push_back(std::move(l));
  }
  return out;
}

}  // namespace intcat::test
