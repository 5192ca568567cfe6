#pragma once

// Dense linear algebra over the prime field F_p.
// Subspaces are kept in reduced row echelon form so that equality,
// membership and intersection are cheap and canonical.

#include <cstdint>
#include <optional>
#include <vector>

namespace psg {

using Vec = std::vector<uint8_t>;  // coefficient vector, entries in [0, p)
using Mat = std::vector<Vec>;      // row-major

bool is_prime(int p);

inline uint8_t fp_add(uint8_t a, uint8_t b, int p) {
  return static_cast<uint8_t>((a + b) % p);
}
inline uint8_t fp_sub(uint8_t a, uint8_t b, int p) {
  return static_cast<uint8_t>((a + p - b) % p);
}
inline uint8_t fp_mul(uint8_t a, uint8_t b, int p) {
  return static_cast<uint8_t>((a * b) % p);
}
uint8_t fp_inv(uint8_t a, int p);

bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b, int p);
Vec vec_sub(const Vec& a, const Vec& b, int p);
Vec vec_scale(const Vec& a, uint8_t c, int p);
// y += c*x
void vec_axpy(Vec& y, uint8_t c, const Vec& x, int p);

// Applies a matrix (rows) to a column vector: (Mx)_i = sum_j M[i][j] x_j.
Vec mat_apply(const Mat& m, const Vec& x, int p);
Mat mat_mul(const Mat& a, const Mat& b, int p);
Mat mat_identity(int n);
bool mat_invertible(const Mat& m, int p);
std::optional<Mat> mat_inverse(const Mat& m, int p);

// Basis of { x : Mx = 0 }, rows of the result.
Mat nullspace(const Mat& m, int n_cols, int p);
// One solution of Mx = b, if any.
std::optional<Vec> solve(const Mat& m, const Vec& b, int n_cols, int p);

class Subspace {
 public:
  Subspace(int p, int ambient);
  static Subspace span(int p, int ambient, const Mat& vectors);
  static Subspace full(int p, int ambient);

  int characteristic() const { return p_; }
  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const Mat& basis() const { return rows_; }

  // Inserts a vector, returns true if the dimension grew.
  bool insert(Vec v);
  // Residue after eliminating all pivots.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  // Coordinates of v in terms of basis(), if v lies in the subspace.
  std::optional<Vec> coordinates(const Vec& v) const;
  // Linear combination of basis() with the given coordinates.
  Vec from_coordinates(const Vec& coords) const;

  bool operator==(const Subspace& other) const;

  Subspace intersect(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;

  bool is_full() const { return dim() == ambient_; }
  bool is_zero() const { return rows_.empty(); }

  // Number of elements, p^dim.
  uint64_t size() const;
  // All elements, sorted lexicographically on coefficient vectors.
  std::vector<Vec> elements() const;

 private:
  int p_;
  int ambient_;
  Mat rows_;                 // RREF, pivot columns strictly increasing
  std::vector<int> pivots_;  // pivot column of each row
};

// All subspaces of F_p^n, by increasing dimension; canonical RREF enumeration.
// Intended for small n (the callers guard at n <= 6).
std::vector<Subspace> all_subspaces(int p, int n);

// All vectors of F_p^n in lexicographic order (0 first).
std::vector<Vec> all_vectors(int p, int n);

}  // namespace psg
