#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace intcat {

enum class Execution { serial, parallel };

/// Default used by every enumeration that does not take an explicit mode.
/// Parallel when the library was built with OpenMP.
Execution default_execution();
void set_default_execution(Execution mode);

/// A finite constraint problem over integer variables. Variables are branched
/// in index order; links and checks prune as soon as their inputs are known.
struct SearchProblem {
  /// value(to) = map[value(from)]; a -1 entry rejects value(from).
  struct Link {
    int from = 0;
    int to = 0;
    std::vector<int> map;
  };
  /// Predicate over the full assignment, evaluated once all vars are assigned.
  struct Check {
    std::vector<int> vars;
    std::function<bool(const std::vector<int>& assignment)> holds;
  };

  std::vector<int> domain;
  /// Optional per-variable admissible values (empty vector = all).
  std::vector<std::vector<char>> allowed;
  std::vector<Link> links;
  std::vector<Check> checks;

  int add_variable(int domain_size);
  void restrict_values(int var, std::vector<char> admissible);
  void link(int from, int to, std::vector<int> map);
  void check(std::vector<int> vars, std::function<bool(const std::vector<int>&)> holds);
};

/// Every satisfying assignment. Both modes return the same solutions in the
/// same order (the order of serial depth-first search).
std::vector<std::vector<int>> solve(const SearchProblem& problem, Execution mode);
std::vector<std::vector<int>> solve(const SearchProblem& problem);
std::uint64_t count_solutions(const SearchProblem& problem, Execution mode);

}  // namespace intcat
