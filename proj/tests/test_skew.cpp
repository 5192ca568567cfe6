#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "psg/skew.hpp"

using namespace psg;

namespace {

GlobalAction swap_global() {
  FiniteAlgebra f2 = field_algebra(2);
  FiniteAlgebra A = product_algebra({f2, f2});
  return GlobalAction{FiniteGroup::cyclic(2), A,
                      {mat_identity(2), Mat{{0, 1}, {1, 0}}}};
}

GlobalAction trivial_global(const FiniteAlgebra& A) {
  return GlobalAction{FiniteGroup::cyclic(2), A,
                      {mat_identity(A.dim()), mat_identity(A.dim())}};
}

}  // namespace

TEST_CASE("group algebra F_2[Z/2]: graded simple but not simple") {
  PartialRingAction action = as_partial(trivial_global(field_algebra(2)));
  GradedSkewRing R = build_skew_ring(action);
  CHECK(R.ring().dim() == 2);
  CHECK(is_associative(R).associative);
  CHECK(R.ring().identity());

  // (1 + delta_g)^2 = 1 + 2 delta_g + 1 = 0 in characteristic 2.
  Vec x = R.ring().add(R.embed(0, Vec{1}), R.embed(1, Vec{1}));
  CHECK(vec_is_zero(R.ring().mul(x, x)));

  auto simple = is_simple(R.ring());
  CHECK(!simple.simple());
  REQUIRE(simple.witness);
  CHECK(simple.witness->contains(x));  // the nilpotent ideal span{1 + delta_g}

  auto graded = is_graded_simple(R);
  CHECK(graded.graded_simple());

  // The center equivalence agrees with both sides false.
  auto gather = verify_gather(R);
  CHECK(gather.holds);
  CHECK(!gather.simple);
  CHECK(gather.graded_simple);
  for (const auto& row : gather.rows) CHECK(!row.center_is_field);
}

TEST_CASE("swap skew ring: sixteen elements, simple") {
  PartialRingAction action = as_partial(swap_global());
  GradedSkewRing R = build_skew_ring(action);
  CHECK(R.ring().dim() == 4);
  CHECK(R.ring().order() == 16);
  CHECK(is_associative(R).associative);
  CHECK(is_simple(R.ring()).simple());
  CHECK(is_graded_simple(R).graded_simple());
  auto gather = verify_gather(R);
  CHECK(gather.holds);
  CHECK(gather.simple);
}

TEST_CASE("grading law: products of homogeneous elements are homogeneous") {
  for (auto action : {as_partial(swap_global()),
                      as_partial(trivial_global(matrix_algebra(2, 2)))}) {
    GradedSkewRing R = build_skew_ring(action);
    const auto& G = R.group();
    for (int i = 0; i < R.ring().dim(); ++i)
      for (int j = 0; j < R.ring().dim(); ++j) {
        Vec prod = R.ring().basis_product(i, j);
        int expected = G.mul(R.degree(i), R.degree(j));
        for (int g = 0; g < G.order(); ++g)
          if (g != expected) CHECK(vec_is_zero(R.component(prod, g)));
      }
  }
}

TEST_CASE("embed and project round trip") {
  PartialRingAction action = as_partial(swap_global());
  GradedSkewRing R = build_skew_ring(action);
  for (int g = 0; g < 2; ++g)
    for (const auto& a : action.domains[g].space.elements()) {
      Vec r = R.embed(g, a);
      CHECK(R.project(g, r) == a);
      if (!vec_is_zero(a)) CHECK(R.support(r) == std::vector<int>{g});
    }
  // delta-multiplication law on embedded elements:
  // (a delta_g)(b delta_h) = alpha_g(alpha_{g^-1}(a) b) delta_{gh}.
  const auto& A = action.algebra;
  for (const auto& a : all_vectors(2, 2))
    for (const auto& b : all_vectors(2, 2)) {
      Vec lhs = R.ring().mul(R.embed(1, a), R.embed(1, b));
      Vec expected = R.embed(0, A.mul(action.apply(1, a), b));
      // alpha is an involution here, so alpha_g(alpha_{g^-1}(a) b)
      // = alpha(alpha(a) b).
      CHECK(lhs == R.embed(0, action.apply(1, A.mul(action.apply(1, a), b))));
      (void)expected;
    }
}

TEST_CASE("partial domains shrink the skew ring") {
  // D_g = one factor of F_2 x F_2, identity map: dim 2 + 1 = 3.
  FiniteAlgebra f2 = field_algebra(2);
  FiniteAlgebra A = product_algebra({f2, f2});
  IdealHandle full{Subspace::full(2, 2), true, true};
  IdealHandle factor = make_ideal(A, Subspace::span(2, 2, {{1, 0}}));
  PartialRingAction action{
      FiniteGroup::cyclic(2), A, {full, factor},
      {IdealIso::identity(A, full), IdealIso::identity(A, factor)}};
  REQUIRE(validate(action).ok());
  GradedSkewRing R = build_skew_ring(action);
  CHECK(R.ring().dim() == 3);
  CHECK(is_associative(R).associative);
  CHECK(R.component_space(1).dim() == 1);
}

TEST_CASE("simplicity transfer harness") {
  // Outer, unital domains, abelian: simple <=> G-simple, both true.
  auto main_report = verify_main(as_partial(swap_global()));
  CHECK(main_report.holds);
  CHECK(main_report.simple);
  CHECK(main_report.g_simple);
  // Non-outer action: precondition fails.
  CHECK_THROWS_AS(verify_main(as_partial(trivial_global(field_algebra(2)))),
                  PreconditionFailed);
}

TEST_CASE("simple skew ring requires an injective action") {
  // The trivial action is not injective and its skew ring is not simple;
  // the proof's ideal generated by 1 delta_e - 1 delta_g is proper.
  PartialRingAction action = as_partial(trivial_global(field_algebra(2)));
  GradedSkewRing R = build_skew_ring(action);
  Vec gen = R.ring().sub(R.embed(0, Vec{1}), R.embed(1, Vec{1}));
  auto closed = ideal_closure(R.ring(), {gen});
  CHECK(!closed.space.is_full());
  CHECK(!is_simple(R.ring()).simple());
  CHECK(!is_injective(action).injective);
}

TEST_CASE("guard on skew construction") {
  PartialRingAction action = as_partial(trivial_global(matrix_algebra(2, 2)));
  CHECK_THROWS_AS(build_skew_ring(action, /*guard_dim=*/4), GuardExceeded);
}
