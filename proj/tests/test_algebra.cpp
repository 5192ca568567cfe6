#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "psg/algebra.hpp"

using namespace psg;

namespace {

// F_4 = F_2[t]/(t^2 + t + 1) on the basis {1, t}.
FiniteAlgebra f4() {
  // 1*1=1, 1*t=t, t*1=t, t*t=1+t.
  std::vector<uint8_t> sc = {1, 0, 0, 1, 0, 1, 1, 1};
  return FiniteAlgebra(2, 2, sc, Vec{1, 0});
}

// The two-dimensional ring with all products zero.
FiniteAlgebra zero_mult(int dim) {
  return FiniteAlgebra(2, dim, std::vector<uint8_t>(dim * dim * dim, 0));
}

// Independent closure oracle: the two-sided ideal generated by g is the
// span of g, xg, gx, and xgy over all ring elements x, y.
Subspace ideal_oracle(const FiniteAlgebra& A, const Vec& g) {
  Subspace s(A.characteristic(), A.dim());
  s.insert(g);
  auto elems = all_vectors(A.characteristic(), A.dim());
  for (const auto& x : elems) {
    s.insert(A.mul(x, g));
    s.insert(A.mul(g, x));
    for (const auto& y : elems) s.insert(A.mul(A.mul(x, g), y));
  }
  return s;
}

}  // namespace

TEST_CASE("standard constructions are well-formed") {
  FiniteAlgebra f2 = field_algebra(2);
  CHECK(f2.dim() == 1);
  CHECK(f2.identity() == Vec{1});
  CHECK(!f2.associativity_violation());

  FiniteAlgebra m2 = matrix_algebra(2, 2);
  CHECK(m2.dim() == 4);
  CHECK(m2.identity() == Vec{1, 0, 0, 1});  // e00 + e11
  CHECK(!m2.is_commutative());
  CHECK(!m2.associativity_violation());
  // e01 * e10 = e00, e10 * e01 = e11.
  CHECK(m2.mul(m2.basis_vector(1), m2.basis_vector(2)) == m2.basis_vector(0));
  CHECK(m2.mul(m2.basis_vector(2), m2.basis_vector(1)) == m2.basis_vector(3));

  FiniteAlgebra f23 = product_algebra({f2, f2, f2});
  CHECK(f23.dim() == 3);
  CHECK(f23.is_commutative());
  CHECK(f23.identity() == Vec{1, 1, 1});

  FiniteAlgebra fn = function_algebra(3, f2);
  CHECK(fn.dim() == 3);
  CHECK(fn.identity() == Vec{1, 1, 1});
  CHECK(fn.show(Vec{1, 0, 1}) == "1@x0 + 1@x2");
}

TEST_CASE("multiplication matrices agree with direct multiplication") {
  FiniteAlgebra m2 = matrix_algebra(2, 2);
  for (const auto& x : all_vectors(2, 4))
    for (const auto& y : all_vectors(2, 4)) {
      CHECK(mat_apply(m2.left_mul_matrix(x), y, 2) == m2.mul(x, y));
      CHECK(mat_apply(m2.right_mul_matrix(x), y, 2) == m2.mul(y, x));
    }
}

TEST_CASE("find_identity") {
  CHECK(find_identity(matrix_algebra(2, 2)) == Vec{1, 0, 0, 1});
  CHECK(find_identity(f4()) == Vec{1, 0});
  CHECK(!find_identity(zero_mult(2)));
}

TEST_CASE("ideal closure against the element sweep oracle") {
  FiniteAlgebra f2 = field_algebra(2);
  for (const auto& A :
       {product_algebra({f2, f2, f2}), matrix_algebra(2, 2), f4(), zero_mult(2)}) {
    for (const auto& g : all_vectors(2, A.dim())) {
      auto closed = ideal_closure(A, {g});
      CHECK(closed.space == ideal_oracle(A, g));
      CHECK(closed.two_sided());
    }
  }
}

TEST_CASE("all ideals against the subspace sweep oracle") {
  FiniteAlgebra f2 = field_algebra(2);
  for (const auto& A :
       {field_algebra(2), product_algebra({f2, f2}), product_algebra({f2, f2, f2}),
        matrix_algebra(2, 2), f4(), zero_mult(2)}) {
    auto fast = all_ideals(A);
    auto sweep = all_ideals_by_subspace_sweep(A);
    REQUIRE(fast.size() == sweep.size());
    for (size_t i = 0; i < fast.size(); ++i) CHECK(fast[i] == sweep[i]);
  }
  // F_2^3 has exactly the 8 coordinate-subset ideals.
  CHECK(all_ideals(product_algebra({f2, f2, f2})).size() == 8);
  // M_2(F_2) is simple: only the trivial ideals.
  CHECK(all_ideals(matrix_algebra(2, 2)).size() == 2);
}

TEST_CASE("simplicity agrees with the ideal lattice") {
  FiniteAlgebra f2 = field_algebra(2);
  for (const auto& A :
       {field_algebra(2), product_algebra({f2, f2}), product_algebra({f2, f2, f2}),
        matrix_algebra(2, 2), f4(), zero_mult(1), zero_mult(2)}) {
    auto r = is_simple(A);
    REQUIRE(r.status != SimpleStatus::GuardExceeded);
    bool product_nonzero = false;
    for (int i = 0; i < A.dim() && !product_nonzero; ++i)
      for (int j = 0; j < A.dim(); ++j)
        if (!vec_is_zero(A.basis_product(i, j))) { product_nonzero = true; break; }
    bool oracle = product_nonzero && all_ideals(A).size() == 2;
    CHECK(r.simple() == oracle);
    if (!r.simple() && A.dim() > 1) {
      REQUIRE(r.witness);
      CHECK(!r.witness->is_zero());
      CHECK(!r.witness->is_full());
      CHECK(absorbs(A, *r.witness, true, true));
    }
  }
  CHECK(is_simple(matrix_algebra(2, 2)).simple());
  CHECK(is_simple(f4()).simple());
  CHECK(!is_simple(zero_mult(1)).simple());  // R*R = 0
  CHECK(is_simple(matrix_algebra(2, 2), /*guard_dim=*/3).status ==
        SimpleStatus::GuardExceeded);
}

TEST_CASE("idempotents") {
  FiniteAlgebra f2 = field_algebra(2);
  auto f23 = product_algebra({f2, f2, f2});
  auto idem = idempotents(f23);
  CHECK(idem.size() == 8);  // every 0/1 vector
  CHECK(std::is_sorted(idem.begin(), idem.end()));
  CHECK(nonzero_idempotents(f23).size() == 7);
  // M_2(F_2): 0, 1, and six rank-one idempotents.
  CHECK(idempotents(matrix_algebra(2, 2)).size() == 8);
  // F_4 is a field: only 0 and 1.
  CHECK(idempotents(f4()).size() == 2);
}

TEST_CASE("center") {
  Subspace zm2 = center(matrix_algebra(2, 2));
  CHECK(zm2.dim() == 1);
  CHECK(zm2.contains(Vec{1, 0, 0, 1}));
  FiniteAlgebra f2 = field_algebra(2);
  CHECK(center(product_algebra({f2, f2})).dim() == 2);  // commutative
}

TEST_CASE("subalgebra and corner") {
  FiniteAlgebra m2 = matrix_algebra(2, 2);
  Vec e00 = m2.basis_vector(0);
  FiniteAlgebra c = corner(m2, e00);
  CHECK(c.dim() == 1);
  CHECK(c.identity());
  CHECK(is_field(c));
  CHECK_THROWS_AS(corner(m2, m2.basis_vector(1)), NotIdempotent);

  // Subalgebra without a provided identity finds one when it exists.
  FiniteAlgebra f2 = field_algebra(2);
  auto f22 = product_algebra({f2, f2});
  Subspace factor = Subspace::span(2, 2, {{1, 0}});
  FiniteAlgebra sub = subalgebra(f22, factor);
  CHECK(sub.dim() == 1);
  CHECK(sub.identity() == Vec{1});
  CHECK_THROWS_AS(
      subalgebra(matrix_algebra(2, 2), Subspace::span(2, 4, {{0, 1, 0, 0}, {0, 0, 1, 0}})),
      BadShape);
}

TEST_CASE("is_field") {
  CHECK(is_field(field_algebra(2)));
  CHECK(is_field(field_algebra(3)));
  CHECK(is_field(f4()));
  FiniteAlgebra f2 = field_algebra(2);
  CHECK(!is_field(product_algebra({f2, f2})));  // zero divisors
  CHECK(!is_field(matrix_algebra(2, 2)));       // non-commutative
  CHECK(!is_field(zero_mult(1)));               // no identity
}

TEST_CASE("element sugar") {
  FiniteAlgebra m2 = matrix_algebra(2, 2);
  Element a(m2, m2.basis_vector(1)), b(m2, m2.basis_vector(2));
  CHECK((a * b).vec() == m2.basis_vector(0));
  CHECK((a + a).vec() == m2.zero());
  CHECK_THROWS_AS(Element(m2, Vec{1}), BadShape);
}

TEST_CASE("constructor rejects malformed data") {
  CHECK_THROWS_AS(FiniteAlgebra(4, 1, {1}), BadShape);           // not prime
  CHECK_THROWS_AS(FiniteAlgebra(2, 2, {1, 0, 0}), BadShape);     // wrong count
  CHECK_THROWS_AS(FiniteAlgebra(2, 1, {2}), BadShape);           // residue range
  CHECK_THROWS_AS(FiniteAlgebra(2, 1, {1}, Vec{0}), BadShape);   // bogus identity
  // b0*b0 = b1, b1*b0 = b0, rest zero: (b0 b0) b0 = b0 but b0 (b0 b0) = 0.
  std::vector<uint8_t> sc = {0, 1, 0, 0, 1, 0, 0, 0};
  CHECK_THROWS_AS(FiniteAlgebra(2, 2, sc), AssociativityViolation);
}
