#pragma once

// Partial actions of a finite group on a FiniteAlgebra: axiom validation,
// injectivity, G-invariant ideals and G-simplicity, outerness, and
// restriction of global actions.

#include <optional>
#include <string>
#include <vector>

#include "psg/algebra.hpp"
#include "psg/group.hpp"
#include "psg/semigroup.hpp"

namespace psg {

struct Diagnostics {
  std::vector<std::string> issues;
  bool ok() const { return issues.empty(); }
};

struct PartialRingAction {
  FiniteGroup group;
  FiniteAlgebra algebra;
  // Indexed by group element: domain ideal D_g and the map
  // alpha_g : D_{g^-1} -> D_g.
  std::vector<IdealHandle> domains;
  std::vector<IdealIso> maps;

  const IdealHandle& domain(int g) const { return domains[g]; }
  const IdealIso& map(int g) const { return maps[g]; }
  Vec apply(int g, const Vec& x) const { return maps[g].apply(algebra, x); }
};

struct GlobalAction {
  FiniteGroup group;
  FiniteAlgebra algebra;
  std::vector<Mat> maps;  // beta_g as matrices on the algebra's basis

  Vec apply(int g, const Vec& x) const {
    return mat_apply(maps[g], x, algebra.characteristic());
  }
};

// Checks every partial-action axiom; names the violated law and witnesses.
Diagnostics validate(const PartialRingAction& action);
Diagnostics validate(const GlobalAction& action);

// A global action seen as a partial action with D_g = A for every g.
PartialRingAction as_partial(const GlobalAction& beta);

// Restriction to a two-sided ideal: D_g = A ∩ beta_g(A), alpha_g = beta_g|.
PartialRingAction restrict_global(const GlobalAction& beta, const IdealHandle& A);

struct InjectivityResult {
  bool injective;
  std::optional<int> witness;  // g whose alpha_g is the identity on a
                               // nonzero D_g ∩ D_{g^-1}
};

InjectivityResult is_injective(const PartialRingAction& action);

// Is alpha_g(I ∩ D_{g^-1}) ⊆ I for every g?
bool is_G_invariant(const PartialRingAction& action, const Subspace& ideal);

// All G-invariant two-sided ideals, ascending by dimension.
std::vector<Subspace> invariant_ideals(const PartialRingAction& action,
                                       int guard_dim = kDefaultGuardDim);

// Smallest G-invariant two-sided ideal containing the generators.
Subspace invariant_ideal_closure(const PartialRingAction& action,
                                 const std::vector<Vec>& generators);

enum class GSimpleStatus { GSimple, NotGSimple, GuardExceeded };

struct GSimpleResult {
  GSimpleStatus status;
  std::optional<Subspace> witness;  // proper nonzero invariant ideal
  bool g_simple() const { return status == GSimpleStatus::GSimple; }
};

GSimpleResult is_G_simple(const PartialRingAction& action,
                          int guard_dim = kDefaultGuardDim);

struct OuterAtResult {
  bool outer;                        // no non-identity g is Inner at u
  std::optional<int> inner_g;        // first g with an inner witness
  int outer_count = 0;               // per-g verdicts among non-identity g
  int not_in_domain_count = 0;       // u outside D_{g^-1}, counted as outer
};

// Outer at u: for every non-identity g, alpha_g is not inner at u.
// u outside D_{g^-1} counts as outer (not-inner); the sub-case is reported.
OuterAtResult is_outer_at(const PartialRingAction& action, const Vec& u,
                          uint64_t pair_guard = kDefaultPairGuard);

struct OuterResult {
  bool outer;
  std::optional<Vec> witness;  // first idempotent at which the action is outer
};

OuterResult is_outer(const PartialRingAction& action,
                     int guard_dim = kDefaultGuardDim,
                     uint64_t pair_guard = kDefaultPairGuard);

// Every non-identity alpha_g is outer at every nonzero idempotent.
bool is_strongly_outer(const PartialRingAction& action,
                       int guard_dim = kDefaultGuardDim,
                       uint64_t pair_guard = kDefaultPairGuard);

// Every D_g has an identity element (for finite rings this is exactly the
// local-unit condition).
bool all_domains_unital(const PartialRingAction& action);

}  // namespace psg
