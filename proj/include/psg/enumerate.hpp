#pragma once

// Deterministic exhaustive enumeration of instances: ring isomorphisms and
// automorphisms, global and partial ring actions, and set partial actions.

#include <vector>

#include "psg/action.hpp"
#include "psg/setact.hpp"

namespace psg {

// All linear multiplicative bijections src -> dst as matrices of images
// (row r = image of src basis vector r, in dst coordinates). Backtracking
// over basis images with structure-constant pruning.
std::vector<Mat> ring_isomorphisms(const FiniteAlgebra& src, const FiniteAlgebra& dst,
                                   int guard_dim = 8);

std::vector<Mat> algebra_automorphisms(const FiniteAlgebra& A, int guard_dim = 8);

// All group homomorphisms G -> Aut(A), as global actions.
std::vector<GlobalAction> enumerate_global_actions(const FiniteGroup& G,
                                                   const FiniteAlgebra& A,
                                                   int guard_dim = 8);

// All partial actions of G on A: choose a two-sided ideal D_g per inverse
// pair, a ring isomorphism D_{g^-1} -> D_g per pair, then filter by
// validate(). With unital_domains_only, only ideals with an identity are
// offered as domains.
std::vector<PartialRingAction> enumerate_partial_actions(
    const FiniteGroup& G, const FiniteAlgebra& A, bool unital_domains_only,
    int guard_dim = kDefaultGuardDim, uint64_t bound = 1u << 22);

// All set partial actions of G on {0,...,points-1}: choose X_g per inverse
// pair, a bijection per pair, then filter by validate_set_action().
std::vector<SetPartialAction> enumerate_set_actions(const FiniteGroup& G, int points,
                                                    uint64_t bound = 1u << 22);

}  // namespace psg
