#pragma once

// The partial skew group ring A ⋆ G as a graded FiniteAlgebra: construction
// from a partial action, grading queries, graded simplicity, and the
// simplicity-transfer harnesses.

#include <array>
#include <optional>
#include <vector>

#include "psg/action.hpp"

namespace psg {

class GradedSkewRing {
 public:
  GradedSkewRing(FiniteAlgebra ring, std::vector<int> degree,
                 std::vector<std::vector<int>> slots, PartialRingAction action);

  const FiniteAlgebra& ring() const { return ring_; }
  const PartialRingAction& action() const { return action_; }
  const FiniteGroup& group() const { return action_.group; }

  // Degree of a basis vector of the skew ring.
  int degree(int basis_index) const { return degree_[basis_index]; }
  // Skew-ring basis indices of the component R_g.
  const std::vector<int>& component_slots(int g) const { return slots_[g]; }
  // The component subspace R_g = D_g delta_g.
  Subspace component_space(int g) const;

  // The degree-g part of r (as a skew-ring vector).
  Vec component(const Vec& r, int g) const;
  // Degrees with a nonzero component.
  std::vector<int> support(const Vec& r) const;

  // a delta_g as a skew-ring vector; a must lie in D_g.
  Vec embed(int g, const Vec& a) const;
  // Inverse of embed on R_g: the D_g coordinates, as an algebra vector.
  Vec project(int g, const Vec& r) const;

 private:
  FiniteAlgebra ring_;
  std::vector<int> degree_;
  std::vector<std::vector<int>> slots_;
  PartialRingAction action_;
};

// Builds A ⋆ G with basis { b delta_g : b in basis(D_g) }, multiplication
// (a delta_g)(b delta_h) = alpha_g(alpha_{g^-1}(a) b) delta_{gh}.
// The result is not assumed associative; see is_associative.
GradedSkewRing build_skew_ring(const PartialRingAction& action,
                               int guard_dim = kDefaultGuardDim);

struct AssocResult {
  bool associative;
  std::optional<std::array<int, 3>> witness;  // basis triple
};

AssocResult is_associative(const GradedSkewRing& R);

enum class GradedSimpleStatus { GradedSimple, NotGradedSimple, NonAssociative,
                                GuardExceeded };

struct GradedSimpleResult {
  GradedSimpleStatus status;
  std::optional<Subspace> witness;  // proper nonzero graded ideal
  bool graded_simple() const { return status == GradedSimpleStatus::GradedSimple; }
};

// Graded simple iff the ring is nonzero and every nonzero homogeneous
// element generates the whole ring as an ideal.
GradedSimpleResult is_graded_simple(const GradedSkewRing& R,
                                    int guard_dim = kDefaultGuardDim);

struct GatherRow {
  Vec u;  // nonzero idempotent of R_e, as a skew-ring vector
  bool center_is_field;
};

struct GatherReport {
  bool holds;  // the equivalence held for every idempotent
  bool simple;
  bool graded_simple;
  std::vector<GatherRow> rows;
};

// For every nonzero idempotent u of R_e, checks
//   simple(R)  <=>  graded_simple(R) and Z(uRu) is a field.
// Preconditions: abelian group, associative ring, R_e has a nonzero
// idempotent (PreconditionFailed otherwise).
GatherReport verify_gather(const GradedSkewRing& R,
                           int guard_dim = kDefaultGuardDim);

struct MainReport {
  bool holds;  // simple(A ⋆ G) <=> G-simple(A)
  bool simple;
  bool g_simple;
  std::optional<Subspace> simple_witness;    // proper ideal of the skew ring
  std::optional<Subspace> g_simple_witness;  // proper invariant ideal of A
};

// The simplicity-transfer harness. Preconditions: abelian group, outer
// action, every D_g unital (PreconditionFailed with details otherwise).
MainReport verify_main(const PartialRingAction& action,
                       int guard_dim = kDefaultGuardDim,
                       uint64_t pair_guard = kDefaultPairGuard);

}  // namespace psg
