#pragma once

#include <string>
#include <vector>

#include "intcat/limits/cones.hpp"

namespace intcat {

struct TestObject {
  std::string name;
  Presheaf object;
};

/// ⊤, then every representable y(c), then y(c) + y(d) for c <= d, truncated
/// to at most `limit` objects.
std::vector<TestObject> test_objects(const Base& base, int limit);

/// True when the point p of Cns0, pulled back along I -> ⊤, is terminal
/// (initial, for cocones) among the global sections of I*Cns, counted by
/// exhaustive enumeration of I*Cns1.
bool externally_universal_at(const ConeCategory& cones, const Section& p, const TestObject& test);

struct StabilityCheck {
  std::vector<std::string> checked;
  /// Test objects at which the reindexed cone is not externally universal.
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
StabilityCheck check_stability(const UniversalCertificate& cert, const std::vector<TestObject>& tests);

struct RefusalConfirmation {
  std::size_t global_cones = 0;
  /// For every global cone, the first test object at which it is not externally
  /// universal; empty when some cone passes every test.
  std::vector<std::string> evidence;
  bool confirmed = false;
};
RefusalConfirmation confirm_refusal(const ConeCategory& cones, const std::vector<TestObject>& tests);

}  // namespace intcat
