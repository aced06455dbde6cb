#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "intcat/cli/document.hpp"
#include "intcat/core/functor.hpp"

namespace intcat::cli {

struct Options {
  /// Task names to run; empty runs every task.
  std::vector<std::string> tasks;
  std::uint64_t seed = 0;
  /// Largest total carrier size of any presheaf a declaration may produce.
  std::size_t max_carrier = 20000;
  /// Number of test objects used by the stability and refusal checks.
  int max_index = 12;
};

struct Diagram {
  InternalFunctor functor;
  std::string form;
};

using Value = std::variant<Base, Presheaf, PresheafMap, InternalCategory, InternalFunctor, Diagram>;

/// The declarations of a document, built and validated in order. A failed
/// declaration is recorded with its reason; declarations that reference it fail
/// with a dependency error and everything else is still built.
struct Environment {
  std::map<std::string, Value> values;
  std::map<std::string, std::string> errors;
  /// EngineFault messages raised while building.
  std::vector<std::string> faults;

  const Value* get(const std::string& name) const;
  template <class T>
  const T& as(const std::string& name) const {
    return std::get<T>(values.at(name));
  }
};

Environment build(const SpecDocument& doc, const Options& options);

/// Validator output for a built value of any declaration kind.
ValidationReport validate_value(const Value& v);

/// Resolves a global element of x by its point label, by per-stage labels
/// joined with '/', or by one label shared by every stage.
Section resolve_point(const Presheaf& x, const std::string& word);

/// Expands the order-theoretic category shorthands to element labels and
/// strict order pairs, exactly as written or generated.
struct PosetShorthand {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> order;
};
PosetShorthand poset_shorthand(const Decl& category);

}  // namespace intcat::cli
