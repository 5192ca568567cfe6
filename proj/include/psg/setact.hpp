#pragma once

// Partial actions of finite groups on finite sets: axiom validation,
// faithful/free/minimal classification, the induced action on the algebra
// of B-valued functions, and the set-dynamics simplicity harness.

#include <optional>
#include <string>
#include <vector>

#include "psg/action.hpp"
#include "psg/skew.hpp"

namespace psg {

struct SetPartialAction {
  int points = 0;  // X = {0, ..., points-1}
  FiniteGroup group;
  // subsets[g] = X_g (sorted); theta[g][x] = theta_g(x) for x in X_{g^-1},
  // -1 outside.
  std::vector<std::vector<int>> subsets;
  std::vector<std::vector<int>> theta;

  // The domain of theta_g, i.e. X_{g^-1} as recorded in the map itself.
  std::vector<int> theta_domain(int g) const;
};

Diagnostics validate_set_action(const SetPartialAction& act);

struct SetPropertyResult {
  bool holds;
  std::optional<int> witness_g;      // offending group element, if any
  std::optional<int> witness_point;  // offending point, if any
};

// Faithful: no non-identity g acts as the identity on a nonempty X_{g^-1}
// (an empty domain is vacuously faithful).
SetPropertyResult is_faithful(const SetPartialAction& act);
// Free: no non-identity g fixes a point of X_{g^-1}.
SetPropertyResult is_free(const SetPartialAction& act);

struct MinimalityResult {
  bool minimal;
  // For non-minimal actions: a proper nonempty invariant subset (the forward
  // closure of the first point whose orbit closure is proper).
  std::optional<std::vector<int>> witness_subset;
};

MinimalityResult is_minimal(const SetPartialAction& act);

// Forward closure of a point set under all theta_g.
std::vector<int> forward_closure(const SetPartialAction& act,
                                 const std::vector<int>& seed);

// Cross-oracle: all invariant subsets by full subset sweep (points <= 16).
std::vector<std::vector<int>> invariant_subsets(const SetPartialAction& act);

// The induced partial action on functions X -> B: D_g spanned by the basis
// vectors supported on X_g, alpha_g(f) = f ∘ theta_{g^-1}.
PartialRingAction induce_action(const SetPartialAction& act,
                                const FiniteAlgebra& coeff,
                                int guard_dim = kDefaultGuardDim);

struct SetDynReport {
  bool simple;
  bool minimal;
  bool free_;
  bool faithful;
  // The three-way equivalence: simple <=> minimal+free <=> minimal+faithful.
  bool holds;
};

// Preconditions: abelian group, coeff simple and unital.
SetDynReport verify_setdyn(const SetPartialAction& act, const FiniteAlgebra& coeff,
                           int guard_dim = kDefaultGuardDim);

}  // namespace psg
