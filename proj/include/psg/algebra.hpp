#pragma once

// Finite rings of prime characteristic, represented as algebras over the
// prime field F_p by structure constants: b_i * b_j = sum_k c[i][j][k] b_k.

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "psg/errors.hpp"
#include "psg/linalg.hpp"

namespace psg {

inline constexpr int kDefaultGuardDim = 16;
inline constexpr uint64_t kDefaultPairGuard = 1u << 20;

struct Guards {
  int dim = kDefaultGuardDim;          // exhaustive element sweeps
  uint64_t pairs = kDefaultPairGuard;  // corner pair searches
};

class FiniteAlgebra {
 public:
  enum class Check { Full, SkipAssociativity };

  // constants has d*d*d entries, index ((i*d + j)*d + k).
  FiniteAlgebra(int p, int dim, std::vector<uint8_t> constants,
                std::optional<Vec> identity = std::nullopt,
                std::vector<std::string> labels = {},
                Check check = Check::Full);

  int characteristic() const { return p_; }
  int dim() const { return dim_; }
  uint64_t order() const;  // p^dim
  const std::optional<Vec>& identity() const { return one_; }
  const std::vector<std::string>& labels() const { return labels_; }

  uint8_t constant(int i, int j, int k) const {
    return sc_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k];
  }
  Vec basis_product(int i, int j) const;
  Vec basis_vector(int i) const;
  Vec zero() const { return Vec(dim_, 0); }

  Vec mul(const Vec& x, const Vec& y) const;
  Vec add(const Vec& x, const Vec& y) const { return vec_add(x, y, p_); }
  Vec sub(const Vec& x, const Vec& y) const { return vec_sub(x, y, p_); }

  // Matrix of y -> x*y (rows act on column vectors).
  Mat left_mul_matrix(const Vec& x) const;
  // Matrix of y -> y*x.
  Mat right_mul_matrix(const Vec& x) const;
  const Mat& basis_left_matrix(int i) const { return lmat_[i]; }
  const Mat& basis_right_matrix(int i) const { return rmat_[i]; }

  std::optional<std::array<int, 3>> associativity_violation() const;
  bool is_idempotent(const Vec& x) const;
  bool is_commutative() const;

  std::string show(const Vec& x) const;

 private:
  int p_;
  int dim_;
  std::vector<uint8_t> sc_;
  std::optional<Vec> one_;
  std::vector<std::string> labels_;
  std::vector<Mat> lmat_, rmat_;  // per-basis multiplication operators
};

// --- standard constructions ---------------------------------------------

// The prime field F_p as a one-dimensional algebra.
FiniteAlgebra field_algebra(int p);
// M_n(F_p) on the matrix-unit basis e_00, e_01, ..., ordered row-major.
FiniteAlgebra matrix_algebra(int p, int n);
// Direct product; requires at least one factor, all of the same characteristic.
FiniteAlgebra product_algebra(const std::vector<FiniteAlgebra>& factors);
// Functions {0,..,point_count-1} -> coeff with pointwise operations.
// Basis index (x, j) -> x*dim(coeff) + j.
FiniteAlgebra function_algebra(int point_count, const FiniteAlgebra& coeff);

// Solves 1*b_i = b_i*1 = b_i; independent of any stored identity.
std::optional<Vec> find_identity(const FiniteAlgebra& A);

// --- ideals ---------------------------------------------------------------

struct IdealHandle {
  Subspace space;
  bool is_left = false;
  bool is_right = false;
  bool two_sided() const { return is_left && is_right; }
};

// Does the subspace absorb multiplication on the requested sides?
bool absorbs(const FiniteAlgebra& A, const Subspace& s, bool left, bool right);
IdealHandle make_ideal(const FiniteAlgebra& A, const Subspace& s);

// Smallest two-sided ideal containing the generators (worklist closure).
IdealHandle ideal_closure(const FiniteAlgebra& A, const std::vector<Vec>& generators);

// All two-sided ideals, as join-closure of the principal ideals.
std::vector<Subspace> all_ideals(const FiniteAlgebra& A, int guard_dim = kDefaultGuardDim);
// Cross-oracle: sweep every subspace and filter ideals (dim <= 6).
std::vector<Subspace> all_ideals_by_subspace_sweep(const FiniteAlgebra& A);

enum class SimpleStatus { Simple, NotSimple, GuardExceeded };

struct SimpleResult {
  SimpleStatus status;
  // For NotSimple: a proper nonzero ideal (first witness in element order).
  std::optional<Subspace> witness;
  bool simple() const { return status == SimpleStatus::Simple; }
};

// Simple iff R*R != {0} and every nonzero element generates R as an ideal.
SimpleResult is_simple(const FiniteAlgebra& A, int guard_dim = kDefaultGuardDim);

// All x with x*x = x, lexicographic on coefficient vectors (0 included).
std::vector<Vec> idempotents(const FiniteAlgebra& A, int guard_dim = kDefaultGuardDim);
std::vector<Vec> nonzero_idempotents(const FiniteAlgebra& A,
                                     int guard_dim = kDefaultGuardDim);

// Solution space of x*b_i = b_i*x for all i.
Subspace center(const FiniteAlgebra& A);

// A subalgebra on an explicit multiplicatively closed subspace, with induced
// structure constants. Throws BadShape if the subspace is not closed.
FiniteAlgebra subalgebra(const FiniteAlgebra& A, const Subspace& s,
                         std::optional<Vec> identity_in_A = std::nullopt);

// The corner ring uAu, unital with identity u (throws NotIdempotent).
FiniteAlgebra corner(const FiniteAlgebra& A, const Vec& u);

// Commutative, unital, and every nonzero element invertible.
bool is_field(const FiniteAlgebra& A);

// --- element sugar ---------------------------------------------------------

class Element {
 public:
  Element(const FiniteAlgebra& A, Vec v) : a_(&A), v_(std::move(v)) {
    if (static_cast<int>(v_.size()) != A.dim())
      throw BadShape("Element: coefficient vector length mismatch");
  }
  const Vec& vec() const { return v_; }
  const FiniteAlgebra& algebra() const { return *a_; }
  friend Element operator+(const Element& x, const Element& y) {
    return Element(*x.a_, x.a_->add(x.v_, y.v_));
  }
  friend Element operator-(const Element& x, const Element& y) {
    return Element(*x.a_, x.a_->sub(x.v_, y.v_));
  }
  friend Element operator*(const Element& x, const Element& y) {
    return Element(*x.a_, x.a_->mul(x.v_, y.v_));
  }
  friend bool operator==(const Element& x, const Element& y) { return x.v_ == y.v_; }

 private:
  const FiniteAlgebra* a_;
  Vec v_;
};

}  // namespace psg
