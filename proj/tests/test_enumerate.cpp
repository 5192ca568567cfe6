#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "psg/enumerate.hpp"

using namespace psg;

namespace {

FiniteAlgebra f4() {
  std::vector<uint8_t> sc = {1, 0, 0, 1, 0, 1, 1, 1};
  return FiniteAlgebra(2, 2, sc, Vec{1, 0});
}

}  // namespace

TEST_CASE("automorphism group sizes") {
  FiniteAlgebra f2 = field_algebra(2);
  CHECK(algebra_automorphisms(f2).size() == 1);
  // F_2 x F_2: the identity and the coordinate swap.
  CHECK(algebra_automorphisms(product_algebra({f2, f2})).size() == 2);
  // F_2^3: the symmetric group on three coordinates.
  CHECK(algebra_automorphisms(product_algebra({f2, f2, f2})).size() == 6);
  // M_2(F_2): all automorphisms are conjugations, PGL_2(F_2) has order 6.
  CHECK(algebra_automorphisms(matrix_algebra(2, 2)).size() == 6);
  // F_4: identity and Frobenius.
  CHECK(algebra_automorphisms(f4()).size() == 2);
}

TEST_CASE("isomorphisms respect ring structure, not just dimension") {
  FiniteAlgebra f2 = field_algebra(2);
  FiniteAlgebra f22 = product_algebra({f2, f2});
  // F_4 and F_2 x F_2 have the same dimension but are not isomorphic.
  CHECK(ring_isomorphisms(f4(), f22).empty());
  CHECK(ring_isomorphisms(f22, f4()).empty());
  // Every reported isomorphism really is multiplicative and bijective.
  for (const auto& rows : ring_isomorphisms(f22, f22)) {
    auto img = [&](const Vec& x) {
      Vec y(2, 0);
      for (int r = 0; r < 2; ++r) vec_axpy(y, x[r], rows[r], 2);
      return y;
    };
    for (const auto& x : all_vectors(2, 2))
      for (const auto& y : all_vectors(2, 2))
        CHECK(img(f22.mul(x, y)) == f22.mul(img(x), img(y)));
  }
}

TEST_CASE("global action counts") {
  FiniteAlgebra f2 = field_algebra(2);
  FiniteAlgebra f23 = product_algebra({f2, f2, f2});
  // Z/2 on F_2: only the trivial action.
  CHECK(enumerate_global_actions(FiniteGroup::cyclic(2), f2).size() == 1);
  // Z/2 on F_2^3: the identity and the three transpositions.
  CHECK(enumerate_global_actions(FiniteGroup::cyclic(2), f23).size() == 4);
  // Z/3 on F_2^3: the identity and the two 3-cycles.
  CHECK(enumerate_global_actions(FiniteGroup::cyclic(3), f23).size() == 3);
  // Each is a genuine homomorphism into the automorphisms.
  for (const auto& act : enumerate_global_actions(FiniteGroup::cyclic(3), f23))
    CHECK(validate(act).ok());
}

TEST_CASE("partial ring action counts for Z/2, unital domains") {
  FiniteGroup G = FiniteGroup::cyclic(2);
  FiniteAlgebra f2 = field_algebra(2);
  auto count = [&](const FiniteAlgebra& A) {
    auto acts = enumerate_partial_actions(G, A, /*unital_domains_only=*/true);
    for (const auto& a : acts) {
      CHECK(validate(a).ok());
      CHECK(all_domains_unital(a));
    }
    return acts.size();
  };
  CHECK(count(f2) == 2);                              // D_g = 0 or A
  CHECK(count(product_algebra({f2, f2})) == 5);
  CHECK(count(product_algebra({f2, f2, f2})) == 14);
  CHECK(count(matrix_algebra(2, 2)) == 5);            // 0, or A with Aut-choice
}

TEST_CASE("partial enumeration includes non-global actions") {
  FiniteGroup G = FiniteGroup::cyclic(2);
  FiniteAlgebra f2 = field_algebra(2);
  FiniteAlgebra f22 = product_algebra({f2, f2});
  bool found_proper = false;
  for (const auto& a : enumerate_partial_actions(G, f22, true))
    if (!a.domains[1].space.is_full() && !a.domains[1].space.is_zero())
      found_proper = true;
  CHECK(found_proper);
}

TEST_CASE("set partial action counts for Z/2") {
  FiniteGroup G = FiniteGroup::cyclic(2);
  auto count = [&](int pts) {
    auto acts = enumerate_set_actions(G, pts);
    for (const auto& a : acts) CHECK(validate_set_action(a).ok());
    return acts.size();
  };
  CHECK(count(1) == 2);
  CHECK(count(2) == 5);
  CHECK(count(3) == 14);
}

TEST_CASE("set and unital-ring enumerations agree on commutative F_2 rings") {
  // Functions {0,..,n-1} -> F_2 with unital ideals are exactly indicator
  // ideals, so partial ring actions on F_2^n correspond to set actions.
  FiniteGroup G = FiniteGroup::cyclic(2);
  FiniteAlgebra f2 = field_algebra(2);
  CHECK(enumerate_partial_actions(G, f2, true).size() ==
        enumerate_set_actions(G, 1).size());
  CHECK(enumerate_partial_actions(G, product_algebra({f2, f2}), true).size() ==
        enumerate_set_actions(G, 2).size());
  CHECK(enumerate_partial_actions(G, product_algebra({f2, f2, f2}), true).size() ==
        enumerate_set_actions(G, 3).size());
}

TEST_CASE("enumeration bounds") {
  FiniteGroup G = FiniteGroup::cyclic(2);
  FiniteAlgebra f2 = field_algebra(2);
  FiniteAlgebra f23 = product_algebra({f2, f2, f2});
  CHECK_THROWS_AS(enumerate_partial_actions(G, f23, true, kDefaultGuardDim,
                                            /*bound=*/4),
                  BoundsTooLarge);
  CHECK_THROWS_AS(enumerate_set_actions(G, 3, /*bound=*/4), BoundsTooLarge);
  CHECK_THROWS_AS(algebra_automorphisms(matrix_algebra(2, 2), /*guard_dim=*/2),
                  GuardExceeded);
}
