#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace intcat {

/// Raised when an operation is called outside its precondition (mismatched
/// endpoints, bases, arities). Mathematical refusals are never exceptions.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an internal invariant of the engine breaks, e.g. a restriction
/// lands outside an enumerated carrier. Indicates an engine bug.
class EngineFault : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when a construction would exceed a configured size bound.
class SizeBoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A correct negative answer: no limit, no adjoint, not complete. The locus
/// names the index object / element / diagram where the obstruction sits.
struct Refusal {
  std::string reason;
  std::string locus;
  std::vector<std::string> witness;

  bool operator==(const Refusal&) const = default;
};

template <class T>
class Result {
 public:
  Result(T value) : v_(std::move(value)) {}
  Result(Refusal refusal) : v_(std::move(refusal)) {}

  bool ok() const { return v_.index() == 0; }
  explicit operator bool() const { return ok(); }

  const T& value() const& {
    if (!ok()) throw PreconditionError("Result::value on refusal: " + refusal().reason);
    return std::get<0>(v_);
  }
  T&& value() && {
    if (!ok()) throw PreconditionError("Result::value on refusal: " + refusal().reason);
    return std::get<0>(std::move(v_));
  }
  const T* operator->() const { return &value(); }
  const T& operator*() const { return value(); }

  const Refusal& refusal() const { return std::get<1>(v_); }

 private:
  std::variant<T, Refusal> v_;
};

struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string v) { violations.push_back(std::move(v)); }
  void merge(const ValidationReport& other, const std::string& prefix = {}) {
    for (const auto& v : other.violations) violations.push_back(prefix + v);
  }
};

}  // namespace intcat
