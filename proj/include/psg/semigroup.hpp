#pragma once

// Innerness and outerness of ideal isomorphisms at idempotents, working in
// the multiplicative semigroup of a FiniteAlgebra: idempotent order and
// equivalence, right-ideal homomorphisms, corner-pair witnesses.

#include <optional>
#include <utility>
#include <vector>

#include "psg/algebra.hpp"

namespace psg {

// Returns whether v <= u, i.e. uv = vu = v. Both must be idempotent.
bool idempotent_leq(const FiniteAlgebra& A, const Vec& u, const Vec& v);

// The corner subspace u*S*v = span{ u b_i v }.
Subspace corner_space(const FiniteAlgebra& A, const Vec& u, const Vec& v);

// Witness (a, b) with a in uSv, b in vSu, ab = u, ba = v; first pair in
// lexicographic order, or nullopt if the idempotents are not equivalent.
std::optional<std::pair<Vec, Vec>> equivalent_idempotents(
    const FiniteAlgebra& A, const Vec& u, const Vec& v,
    uint64_t pair_guard = kDefaultPairGuard);

// Hom_S(uS, vS) through the lambda-bijection: each c in vSu defines the
// homomorphism x -> c*x on uS. Returns the lambda-values c, sorted.
std::vector<Vec> right_ideal_homs(const FiniteAlgebra& A, const Vec& u,
                                  const Vec& v,
                                  uint64_t guard = kDefaultPairGuard);

// The right ideal uS = span{ u*b_i }, together with u itself when u != 0.
Subspace right_ideal(const FiniteAlgebra& A, const Vec& u);

// A linear multiplicative bijection between two ideals of the same algebra,
// given by the images of the source basis.
class IdealIso {
 public:
  IdealIso(const FiniteAlgebra& A, IdealHandle source, IdealHandle target,
           Mat images_of_source_basis);

  static IdealIso identity(const FiniteAlgebra& A, IdealHandle ideal);

  const IdealHandle& source() const { return source_; }
  const IdealHandle& target() const { return target_; }
  // x must lie in the source ideal.
  Vec apply(const FiniteAlgebra& A, const Vec& x) const;
  const Mat& images() const { return images_; }

  // Structured validity check; returns a human-readable issue or nullopt.
  std::optional<std::string> check(const FiniteAlgebra& A) const;

 private:
  IdealHandle source_, target_;
  Mat images_;  // images_[r] = image of source_.space.basis()[r]
};

enum class Innerness { Inner, Outer, NotInDomain };

struct InnernessWitness {
  Vec u;         // the idempotent
  Vec alpha_u;   // its image
  Vec a, b;      // a in uS*alpha(u), b in alpha(u)*S*u, ab = u, ba = alpha(u)
};

struct InnerResult {
  Innerness verdict;
  std::optional<InnernessWitness> witness;  // present iff Inner
};

// Decides innerness of alpha at u through the corner-pair characterization:
// alpha is inner at u iff u lies in the source ideal and there are
// a in u*S*alpha(u), b in alpha(u)*S*u with ab = u, ba = alpha(u) and
// alpha(x) = b x a on a basis of uSu.
InnerResult is_inner_at(const FiniteAlgebra& A, const IdealIso& alpha,
                        const Vec& u, uint64_t pair_guard = kDefaultPairGuard);

// Re-derives every invariant of a witness from scratch.
bool verify_innerness_witness(const FiniteAlgebra& A, const IdealIso& alpha,
                              const InnernessWitness& w);

struct StrongOuterResult {
  bool strongly_outer;            // no nonzero idempotent is Inner
  std::optional<Vec> inner_at;    // first idempotent where alpha is inner
  int outer_count = 0;            // idempotents with verdict Outer
  int not_in_domain_count = 0;    // idempotents outside the source ideal
};

StrongOuterResult is_strongly_outer(const FiniteAlgebra& A, const IdealIso& alpha,
                                    int guard_dim = kDefaultGuardDim,
                                    uint64_t pair_guard = kDefaultPairGuard);

struct MinimalIdempotentsResult {
  std::vector<Vec> minimal;  // <=-minimal nonzero idempotents
  bool complete;             // every nonzero idempotent dominates one of them
};

MinimalIdempotentsResult minimal_idempotents(const FiniteAlgebra& A,
                                             int guard_dim = kDefaultGuardDim);

}  // namespace psg
