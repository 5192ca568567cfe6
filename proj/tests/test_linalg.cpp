#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "psg/linalg.hpp"

using namespace psg;

TEST_CASE("prime field arithmetic") {
  for (int p : {2, 3, 5, 7}) {
    for (int a = 1; a < p; ++a) {
      uint8_t inv = fp_inv(static_cast<uint8_t>(a), p);
      CHECK(fp_mul(static_cast<uint8_t>(a), inv, p) == 1);
    }
  }
  CHECK(fp_add(2, 2, 3) == 1);
  CHECK(fp_sub(0, 1, 3) == 2);
  CHECK(is_prime(2));
  CHECK(is_prime(7));
  CHECK(!is_prime(1));
  CHECK(!is_prime(6));
}

TEST_CASE("vector operations") {
  Vec a{1, 0, 1}, b{1, 1, 0};
  CHECK(vec_add(a, b, 2) == Vec{0, 1, 1});
  CHECK(vec_sub(a, b, 3) == Vec{0, 2, 1});
  CHECK(vec_scale(a, 2, 3) == Vec{2, 0, 2});
  Vec y{0, 0, 0};
  vec_axpy(y, 2, a, 3);
  CHECK(y == Vec{2, 0, 2});
  CHECK(vec_is_zero(Vec{0, 0}));
  CHECK(!vec_is_zero(a));
}

TEST_CASE("matrix operations") {
  Mat m{{1, 1}, {0, 1}};
  CHECK(mat_apply(m, Vec{1, 1}, 2) == Vec{0, 1});
  CHECK(mat_mul(m, m, 2) == mat_identity(2));
  CHECK(mat_invertible(m, 2));
  auto inv = mat_inverse(m, 2);
  REQUIRE(inv);
  CHECK(mat_mul(m, *inv, 2) == mat_identity(2));
  Mat singular{{1, 1}, {1, 1}};
  CHECK(!mat_invertible(singular, 2));
  CHECK(!mat_inverse(singular, 2));
}

TEST_CASE("nullspace and solve") {
  // x0 + x1 = 0, x1 + x2 = 0 over F_2 has kernel spanned by (1,1,1).
  Mat m{{1, 1, 0}, {0, 1, 1}};
  Mat ns = nullspace(m, 3, 2);
  REQUIRE(ns.size() == 1);
  CHECK(ns[0] == Vec{1, 1, 1});
  for (const auto& v : ns) CHECK(vec_is_zero(mat_apply(m, v, 2)));

  auto sol = solve(m, Vec{1, 0}, 3, 2);
  REQUIRE(sol);
  CHECK(mat_apply(m, *sol, 2) == Vec{1, 0});
  // Inconsistent system: x0 = 0 and x0 = 1.
  CHECK(!solve(Mat{{1, 0}, {1, 0}}, Vec{0, 1}, 2, 2));
}

TEST_CASE("subspace canonical form and membership") {
  Subspace s1 = Subspace::span(2, 3, {{1, 1, 0}, {0, 1, 1}});
  Subspace s2 = Subspace::span(2, 3, {{1, 0, 1}, {0, 1, 1}});
  CHECK(s1 == s2);  // same plane, different generators
  CHECK(s1.dim() == 2);
  CHECK(s1.contains(Vec{1, 0, 1}));
  CHECK(!s1.contains(Vec{1, 0, 0}));
  auto coords = s1.coordinates(Vec{1, 0, 1});
  REQUIRE(coords);
  CHECK(s1.from_coordinates(*coords) == Vec{1, 0, 1});
  CHECK(!s1.coordinates(Vec{0, 0, 1}));
  CHECK(Subspace::full(2, 3).is_full());
  CHECK(Subspace(2, 3).is_zero());
}

// Oracle: compute intersection and sum by sweeping every vector of F_2^4.
TEST_CASE("intersection and sum against the element sweep oracle") {
  std::vector<std::pair<Mat, Mat>> cases = {
      {{{1, 0, 0, 0}, {0, 1, 0, 0}}, {{0, 1, 0, 0}, {0, 0, 1, 0}}},
      {{{1, 1, 0, 0}, {0, 0, 1, 1}}, {{1, 0, 1, 0}, {0, 1, 0, 1}}},
      {{{1, 1, 1, 1}}, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}},
  };
  for (const auto& [ga, gb] : cases) {
    Subspace a = Subspace::span(2, 4, ga);
    Subspace b = Subspace::span(2, 4, gb);
    Subspace meet_oracle(2, 4), join_oracle(2, 4);
    for (const auto& v : all_vectors(2, 4)) {
      if (a.contains(v) && b.contains(v)) meet_oracle.insert(v);
    }
    for (const auto& x : a.basis()) join_oracle.insert(x);
    for (const auto& x : b.basis()) join_oracle.insert(x);
    CHECK(a.intersect(b) == meet_oracle);
    CHECK(a.sum(b) == join_oracle);
  }
}

TEST_CASE("subspace element enumeration") {
  Subspace s = Subspace::span(2, 3, {{1, 0, 1}, {0, 1, 0}});
  CHECK(s.size() == 4);
  auto elems = s.elements();
  REQUIRE(elems.size() == 4);
  CHECK(std::is_sorted(elems.begin(), elems.end()));
  for (const auto& e : elems) CHECK(s.contains(e));
}

TEST_CASE("all subspaces counts match Gaussian binomials") {
  // F_2^3: 1 + 7 + 7 + 1 subspaces; F_3^2: 1 + 4 + 1.
  CHECK(all_subspaces(2, 3).size() == 16);
  CHECK(all_subspaces(3, 2).size() == 6);
  // Distinctness.
  auto subs = all_subspaces(2, 3);
  for (size_t i = 0; i < subs.size(); ++i)
    for (size_t j = i + 1; j < subs.size(); ++j) CHECK(!(subs[i] == subs[j]));
}

TEST_CASE("all vectors is lexicographic and complete") {
  auto vs = all_vectors(2, 3);
  REQUIRE(vs.size() == 8);
  CHECK(vs.front() == Vec{0, 0, 0});
  CHECK(std::is_sorted(vs.begin(), vs.end()));
  auto vs3 = all_vectors(3, 2);
  CHECK(vs3.size() == 9);
}
