#include "intcat/ambient/search.hpp"

#include <atomic>

#include "intcat/error.hpp"

#ifdef INTCAT_HAVE_OPENMP
#include <omp.h>
#endif

namespace intcat {

namespace {

#ifdef INTCAT_HAVE_OPENMP
std::atomic<Execution> g_default{Execution::parallel};
#else
std::atomic<Execution> g_default{Execution::serial};
#endif

// Static adjacency derived from a problem, shared read-only by all workers.
struct Compiled {
  const SearchProblem& p;
  std::vector<std::vector<int>> links_from;
  std::vector<std::vector<int>> checks_of;

  explicit Compiled(const SearchProblem& problem) : p(problem) {
    const auto n = p.domain.size();
    links_from.resize(n);
    checks_of.resize(n);
    for (std::size_t i = 0; i < p.links.size(); ++i) links_from[p.links[i].from].push_back(static_cast<int>(i));
    for (std::size_t i = 0; i < p.checks.size(); ++i)
      for (auto v : p.checks[i].vars) checks_of[v].push_back(static_cast<int>(i));
  }
};

// Depth-first search state for one worker.
class Solver {
 public:
  explicit Solver(const Compiled& c)
      : c_(c), value_(c.p.domain.size(), -1), pending_(c.p.checks.size()) {
    for (std::size_t i = 0; i < c.p.checks.size(); ++i)
      pending_[i] = static_cast<int>(c.p.checks[i].vars.size());
  }

  /// Assign var := val and propagate; records changes on the trail.
  bool assign(int var, int val) {
    if (value_[var] != -1) return value_[var] == val;
    if (val < 0 || val >= c_.p.domain[var]) return false;
    const auto& adm = c_.p.allowed[var];
    if (!adm.empty() && !adm[val]) return false;
    value_[var] = val;
    trail_.push_back(var);
    // Every counter drops before any check runs: undo_to restores all of them.
    for (auto ci : c_.checks_of[var]) --pending_[ci];
    for (auto ci : c_.checks_of[var])
      if (pending_[ci] == 0 && !c_.p.checks[ci].holds(value_)) return false;
    for (auto li : c_.links_from[var]) {
      const auto& l = c_.p.links[li];
      if (!assign(l.to, l.map[val])) return false;
    }
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      auto v = trail_.back();
      trail_.pop_back();
      for (auto ci : c_.checks_of[v]) ++pending_[ci];
      value_[v] = -1;
    }
  }

  int next_free(int from) const {
    const int n = static_cast<int>(value_.size());
    while (from < n && value_[from] != -1) ++from;
    return from;
  }

  template <class Emit>
  void descend(int from, Emit& emit) {
    int var = next_free(from);
    if (var == static_cast<int>(value_.size())) {
      emit(value_);
      return;
    }
    for (int val = 0; val < c_.p.domain[var]; ++val) {
      auto mark = trail_.size();
      if (assign(var, val)) descend(var + 1, emit);
      undo_to(mark);
    }
  }

  std::size_t trail_size() const { return trail_.size(); }

 private:
  const Compiled& c_;
  std::vector<int> value_;
  std::vector<int> pending_;
  std::vector<int> trail_;
};

bool checks_without_vars_hold(const SearchProblem& p) {
  std::vector<int> empty(p.domain.size(), -1);
  for (const auto& ch : p.checks)
    if (ch.vars.empty() && !ch.holds(empty)) return false;
  return true;
}

}  // namespace

Execution default_execution() { return g_default.load(); }
void set_default_execution(Execution mode) { g_default.store(mode); }

int SearchProblem::add_variable(int domain_size) {
  domain.push_back(domain_size);
  allowed.emplace_back();
  return static_cast<int>(domain.size()) - 1;
}

void SearchProblem::restrict_values(int var, std::vector<char> admissible) {
  if (static_cast<int>(admissible.size()) != domain[var])
    throw PreconditionError("restrict_values: mask size differs from domain size");
  auto& cur = allowed[var];
  if (cur.empty()) {
    cur = std::move(admissible);
  } else {
    for (std::size_t i = 0; i < cur.size(); ++i) cur[i] = cur[i] && admissible[i];
  }
}

void SearchProblem::link(int from, int to, std::vector<int> map) {
  if (static_cast<int>(map.size()) != domain[from])
    throw PreconditionError("link: map size differs from domain size");
  links.push_back({from, to, std::move(map)});
}

void SearchProblem::check(std::vector<int> vars, std::function<bool(const std::vector<int>&)> holds) {
  checks.push_back({std::move(vars), std::move(holds)});
}

std::vector<std::vector<int>> solve(const SearchProblem& problem, Execution mode) {
  std::vector<std::vector<int>> out;
  if (!checks_without_vars_hold(problem)) return out;
  Compiled compiled(problem);
  const int n = static_cast<int>(problem.domain.size());
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  if (mode == Execution::serial) {
    Solver s(compiled);
    auto emit = [&](const std::vector<int>& v) { out.push_back(v); };
    s.descend(0, emit);
    return out;
  }
  // Fan out over the values of variable 0; concatenating the per-value
  // results in value order reproduces the serial order exactly.
  const int branches = problem.domain[0];
  std::vector<std::vector<std::vector<int>>> parts(branches);
#ifdef INTCAT_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
  for (int val = 0; val < branches; ++val) {
    Solver s(compiled);
    auto& part = parts[val];
    auto emit = [&](const std::vector<int>& v) { part.push_back(v); };
    if (s.assign(0, val)) s.descend(1, emit);
  }
  for (auto& part : parts)
    for (auto& sol : part) out.push_back(std::move(sol));
  return out;
}

std::vector<std::vector<int>> solve(const SearchProblem& problem) {
  return solve(problem, default_execution());
}

std::uint64_t count_solutions(const SearchProblem& problem, Execution mode) {
  if (!checks_without_vars_hold(problem)) return 0;
  Compiled compiled(problem);
  if (problem.domain.empty()) return 1;
  const int branches = problem.domain[0];
  std::vector<std::uint64_t> counts(branches, 0);
  auto run = [&](int val) {
    Solver s(compiled);
    std::uint64_t k = 0;
    auto emit = [&](const std::vector<int>&) { ++k; };
    if (s.assign(0, val)) s.descend(1, emit);
    counts[val] = k;
  };
  if (mode == Execution::serial) {
    for (int val = 0; val < branches; ++val) run(val);
  } else {
#ifdef INTCAT_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (int val = 0; val < branches; ++val) run(val);
  }
  std::uint64_t total = 0;
  for (auto k : counts) total += k;
  return total;
}

}  // namespace intcat
