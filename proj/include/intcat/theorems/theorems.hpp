#pragma once

#include <string>
#include <vector>

#include "intcat/limits/limit_functor.hpp"

namespace intcat {

/// Meets of a finite posetal category computed on its skeleton.
struct MeetTable {
  /// Skeleton class of every object, and one representative per class.
  std::vector<int> class_of;
  std::vector<ElementId> representative;
  /// meet[i][j] as a class index; top as a class index.
  std::vector<std::vector<int>> meet;
  int top = -1;
};

struct CompletenessCertificate {
  enum class Mode { lattice, capability };
  InternalCategory subject;
  Mode mode = Mode::lattice;
  MeetTable meets;                  // lattice mode
  std::vector<std::string> shapes;  // capability mode: shapes whose limit functor exists
};

/// Complete lattice up to equivalence, for a category over the one-object base.
/// Throws PreconditionError on any other base.
Result<CompletenessCertificate> lattice_completeness_check(const InternalCategory& a);

struct NamedShape {
  std::string name;
  InternalCategory shape;
};
/// empty, 1, discrete-2, chain-2, parallel-pair on the given base.
std::vector<NamedShape> default_shapes(const Base& base);

/// Certifies that Lim over each shape exists (the generic diagram over
/// (A^D)0 has a universal cone), which covers every diagram of that shape over
/// every index.
Result<CompletenessCertificate> capability_completeness_check(const InternalCategory& a,
                                                              const std::vector<NamedShape>& shapes,
                                                              const LimitProvider& provider);

struct InitialFromLimit {
  Section object;
  /// The universal cone over Id(A).
  UniversalCertificate cone;
  /// I : 1 -> A with I -| ! and counit π.
  InternalFunctor point;
  InternalNatTrans unit, counit;
  ValidationReport report;
  /// is_internal_initial certifies the same point.
  bool agrees = false;
};
Result<InitialFromLimit> initial_via_identity_limit(const InternalCategory& a, const LimitProvider& provider);

/// The limit of D' : E -> CoCns(D) transported from the limit of T D'.
struct TransportedLimit {
  UniversalCertificate projected;  // lim T D'
  PresheafMap mediator;            // h : D0 -> A1
  std::size_t factorizations = 0;  // maps D0 -> Cns(T D')1 over (γ, π)
  Section vertex;                  // L in CoCns(D)0
  ConeCategory cones;              // Cns(D')
  Section cone;                    // p, with T p = π
  TerminalCertificate certificate;
  /// p is among the terminal cones found by direct search in Cns(D').
  bool agrees_with_search = false;
};
Result<TransportedLimit> cocones_limit_transport(const ConeCategory& cocones, const InternalFunctor& diagram,
                                                 const LimitProvider& provider);

struct DualColimit {
  ConeCategory cocones;
  TransportedLimit identity_limit;
  TerminalCertificate initial;
  Section cocone;
  Section vertex;
  /// universal_cocone finds an isomorphic cocone.
  bool agrees_with_search = false;
};
Result<DualColimit> colimit_via_duality(const InternalFunctor& diagram, const LimitProvider& provider);

struct ContinuityResult {
  std::string shape;
  /// False when the source has no limit of the generic diagram of this shape.
  bool checked = false;
  bool continuous = false;
  std::string reason;
  std::vector<std::string> witness;
};
struct ContinuityReport {
  std::vector<ContinuityResult> results;
  bool ok() const;
};
/// F preserves the limit of the generic diagram of each shape.
ContinuityReport is_continuous(const InternalFunctor& f, const std::vector<NamedShape>& shapes,
                               const LimitProvider& provider);

struct AdjointConstruction {
  InternalFunctor right;  // R : B -> A
  InternalFunctor left;   // L : A -> B
  InternalNatTrans unit, counit;
  CommaCategory comma;  // A/R
  FiberCategory fibers;
  UniversalCertificate limit;  // of the fiber diagram into B over ∫A0
  InternalFunctor comparison;  // I : B -> A/R
  /// Functor and naturality laws, both triangle identities, α = (R π̂)(η P_A)
  /// and (R β_B)(α I) β_A⁻¹ = Id_R with β identities.
  ValidationReport report;
};
/// Refuses when a fiber diagram a/R -> B has no limit or R does not preserve it.
Result<AdjointConstruction> aft_left_adjoint(const InternalFunctor& r, const LimitProvider& provider);

/// L(a) = meet {b : a <= R b} for a monotone map of finite posets in FinSet.
struct GaloisAdjoint {
  std::vector<ElementId> left;  // indexed by objects of the source of L
};
Result<GaloisAdjoint> galois_oracle(const InternalFunctor& r);

}  // namespace intcat
