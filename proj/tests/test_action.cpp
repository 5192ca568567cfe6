#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "psg/action.hpp"
#include "psg/enumerate.hpp"

using namespace psg;

namespace {

// The coordinate swap on F_2 x F_2 as a global Z/2 action.
GlobalAction swap_global() {
  FiniteAlgebra f2 = field_algebra(2);
  FiniteAlgebra A = product_algebra({f2, f2});
  Mat swap = {{0, 1}, {1, 0}};
  return GlobalAction{FiniteGroup::cyclic(2), A, {mat_identity(2), swap}};
}

// The trivial Z/2 action on a ring (beta_g = id).
GlobalAction trivial_global(const FiniteAlgebra& A) {
  return GlobalAction{FiniteGroup::cyclic(2), A,
                      {mat_identity(A.dim()), mat_identity(A.dim())}};
}

}  // namespace

TEST_CASE("global action validation") {
  CHECK(validate(swap_global()).ok());
  // A non-multiplicative map is rejected.
  FiniteAlgebra m2 = matrix_algebra(2, 2);
  Mat bogus = mat_identity(4);
  bogus[0][1] = 1;  // adds e01 to the image of e00: not a ring map
  GlobalAction bad{FiniteGroup::cyclic(2), m2, {mat_identity(4), bogus}};
  CHECK(!validate(bad).ok());
}

TEST_CASE("partial action validation and the swap example") {
  PartialRingAction action = as_partial(swap_global());
  CHECK(validate(action).ok());
  CHECK(is_injective(action).injective);
  CHECK(all_domains_unital(action));

  // The two proper nonzero ideals are exchanged, so only 0 and A are
  // invariant, and the action is G-simple.
  auto inv = invariant_ideals(action);
  REQUIRE(inv.size() == 2);
  CHECK(inv[0].is_zero());
  CHECK(inv[1].is_full());
  CHECK(is_G_simple(action).g_simple());

  // Outer, witnessed at the identity element (1,1).
  auto outer = is_outer(action);
  CHECK(outer.outer);
  REQUIRE(outer.witness);
  CHECK(*outer.witness == Vec{0, 1});  // first nonzero idempotent in order
  auto at_one = is_outer_at(action, Vec{1, 1});
  CHECK(at_one.outer);
  CHECK(at_one.outer_count == 1);
  CHECK(at_one.not_in_domain_count == 0);
}

TEST_CASE("validation diagnostics name the violated law") {
  // Claim D_g is one factor but keep alpha_g as the full swap: shapes break.
  FiniteAlgebra f2 = field_algebra(2);
  FiniteAlgebra A = product_algebra({f2, f2});
  FiniteGroup G = FiniteGroup::cyclic(2);
  IdealHandle full{Subspace::full(2, 2), true, true};
  IdealHandle factor = make_ideal(A, Subspace::span(2, 2, {{1, 0}}));
  // alpha_g: the identity on the first factor, while D_g claims the second.
  IdealHandle other = make_ideal(A, Subspace::span(2, 2, {{0, 1}}));
  std::vector<IdealHandle> domains{full, other};
  std::vector<IdealIso> maps{IdealIso::identity(A, full),
                             IdealIso::identity(A, factor)};
  PartialRingAction broken{G, A, domains, maps};
  auto d = validate(broken);
  CHECK(!d.ok());

  // A non-involutive alpha_g on its own domain violates axiom (iii).
  FiniteAlgebra f23 = product_algebra({f2, f2, f2});
  IdealHandle full3{Subspace::full(2, 3), true, true};
  Mat cycle = {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};  // 3-cycle, order 3
  Mat rows = {f23.basis_vector(1), f23.basis_vector(2), f23.basis_vector(0)};
  PartialRingAction not_involutive{
      FiniteGroup::cyclic(2), f23, {full3, full3},
      {IdealIso::identity(f23, full3), IdealIso(f23, full3, full3, rows)}};
  CHECK(!validate(not_involutive).ok());
}

TEST_CASE("injectivity") {
  CHECK(!is_injective(as_partial(trivial_global(field_algebra(2)))).injective);
  CHECK(is_injective(as_partial(swap_global())).injective);
  auto r = is_injective(as_partial(trivial_global(field_algebra(2))));
  REQUIRE(r.witness);
  CHECK(*r.witness == 1);
}

TEST_CASE("G-simplicity and invariant ideals for the trivial action") {
  FiniteAlgebra f2 = field_algebra(2);
  FiniteAlgebra f23 = product_algebra({f2, f2, f2});
  PartialRingAction trivial = as_partial(trivial_global(f23));
  // Every ideal is invariant under the identity.
  CHECK(invariant_ideals(trivial).size() == all_ideals(f23).size());
  auto gs = is_G_simple(trivial);
  CHECK(!gs.g_simple());
  REQUIRE(gs.witness);
  CHECK(gs.witness->dim() == 1);
  // The invariant closure of a point indicator stays proper.
  CHECK(invariant_ideal_closure(trivial, {Vec{1, 0, 0}}).dim() == 1);
  // Simple coefficient ring: G-simple for any action.
  CHECK(is_G_simple(as_partial(trivial_global(matrix_algebra(2, 2)))).g_simple());
}

TEST_CASE("invariant closure agrees with the invariant ideal lattice") {
  PartialRingAction action = as_partial(swap_global());
  for (const auto& v : all_vectors(2, 2)) {
    if (vec_is_zero(v)) continue;
    Subspace closure = invariant_ideal_closure(action, {v});
    // Smallest invariant ideal containing v, from the lattice.
    Subspace best(2, 2);
    bool found = false;
    for (const auto& ideal : invariant_ideals(action))
      if (ideal.contains(v) && (!found || ideal.dim() < best.dim())) {
        best = ideal;
        found = true;
      }
    REQUIRE(found);
    CHECK(closure == best);
  }
}

TEST_CASE("restriction of a global action") {
  // Swap of points 1 and 2 on functions {0,1,2} -> F_2.
  FiniteAlgebra S = function_algebra(3, field_algebra(2));
  Mat swap12 = {{1, 0, 0}, {0, 0, 1}, {0, 1, 0}};
  GlobalAction beta{FiniteGroup::cyclic(2), S, {mat_identity(3), swap12}};
  REQUIRE(validate(beta).ok());

  // Restrict to the ideal of functions supported on {0, 1}.
  IdealHandle ideal = make_ideal(S, Subspace::span(2, 3, {{1, 0, 0}, {0, 1, 0}}));
  PartialRingAction alpha = restrict_global(beta, ideal);
  CHECK(validate(alpha).ok());
  CHECK(alpha.algebra.dim() == 2);
  // D_g = I ∩ beta_g(I) is the span of the indicator of point 0.
  CHECK(alpha.domains[1].space.dim() == 1);

  // Every restriction of every global Z/2 action on F_2^3 validates.
  FiniteAlgebra f2 = field_algebra(2);
  FiniteAlgebra f23 = product_algebra({f2, f2, f2});
  for (const auto& g : enumerate_global_actions(FiniteGroup::cyclic(2), f23))
    for (const auto& ideal3 : all_ideals(f23)) {
      PartialRingAction restricted = restrict_global(g, make_ideal(f23, ideal3));
      CHECK(validate(restricted).ok());
    }
}

TEST_CASE("non-unital domains are detected") {
  // A = F_2[x]/(x^2) on basis {1, x}; the ideal (x) has zero multiplication.
  std::vector<uint8_t> sc = {1, 0, 0, 1, 0, 1, 0, 0};
  FiniteAlgebra A(2, 2, sc, Vec{1, 0});
  FiniteGroup G = FiniteGroup::cyclic(2);
  IdealHandle full{Subspace::full(2, 2), true, true};
  IdealHandle rad = make_ideal(A, Subspace::span(2, 2, {{0, 1}}));
  PartialRingAction action{
      G, A, {full, rad},
      {IdealIso::identity(A, full), IdealIso::identity(A, rad)}};
  REQUIRE(validate(action).ok());
  CHECK(!all_domains_unital(action));
  // With the zero ideal as domain the condition is vacuous.
  IdealHandle zero = make_ideal(A, Subspace(2, 2));
  PartialRingAction action0{
      G, A, {full, zero},
      {IdealIso::identity(A, full), IdealIso::identity(A, zero)}};
  REQUIRE(validate(action0).ok());
  CHECK(all_domains_unital(action0));
}

TEST_CASE("strong outerness of a ring action") {
  CHECK(!is_strongly_outer(as_partial(trivial_global(field_algebra(2)))));
  // The free two-point swap has no fixed idempotent to be inner at.
  CHECK(is_strongly_outer(as_partial(swap_global())));
}
