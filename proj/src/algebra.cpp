#include "psg/algebra.hpp"

#include <algorithm>
#include <set>

namespace psg {

FiniteAlgebra::FiniteAlgebra(int p, int dim, std::vector<uint8_t> constants,
                             std::optional<Vec> identity,
                             std::vector<std::string> labels, Check check)
    : p_(p), dim_(dim), sc_(std::move(constants)), one_(std::move(identity)),
      labels_(std::move(labels)) {
  if (!is_prime(p_)) throw BadShape("characteristic must be prime");
  if (dim_ < 0) throw BadShape("negative dimension");
  if (sc_.size() != static_cast<size_t>(dim_) * dim_ * dim_)
    throw BadShape("structure constants must have d*d*d entries");
  for (uint8_t c : sc_)
    if (c >= p_) throw BadShape("structure constant out of range mod p");
  if (!labels_.empty() && labels_.size() != static_cast<size_t>(dim_))
    throw BadShape("label count mismatch");
  lmat_.resize(dim_);
  rmat_.resize(dim_);
  for (int i = 0; i < dim_; ++i) {
    Mat l(dim_, Vec(dim_, 0)), r(dim_, Vec(dim_, 0));
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) {
        l[k][j] = constant(i, j, k);  // (b_i * b_j)_k
        r[k][j] = constant(j, i, k);  // (b_j * b_i)_k
      }
    lmat_[i] = std::move(l);
    rmat_[i] = std::move(r);
  }
  if (check == Check::Full) {
    if (auto bad = associativity_violation())
      throw AssociativityViolation((*bad)[0], (*bad)[1], (*bad)[2]);
  }
  if (one_) {
    if (static_cast<int>(one_->size()) != dim_)
      throw BadShape("identity vector length mismatch");
    for (int i = 0; i < dim_; ++i) {
      Vec b = basis_vector(i);
      if (mul(*one_, b) != b || mul(b, *one_) != b)
        throw BadShape("claimed identity fails 1*b_i = b_i*1 = b_i");
    }
  }
}

uint64_t FiniteAlgebra::order() const {
  uint64_t n = 1;
  for (int i = 0; i < dim_; ++i) n *= static_cast<uint64_t>(p_);
  return n;
}

Vec FiniteAlgebra::basis_product(int i, int j) const {
  Vec r(dim_);
  for (int k = 0; k < dim_; ++k) r[k] = constant(i, j, k);
  return r;
}

Vec FiniteAlgebra::basis_vector(int i) const {
  Vec v(dim_, 0);
  v[i] = 1;
  return v;
}

Vec FiniteAlgebra::mul(const Vec& x, const Vec& y) const {
  std::vector<int> acc(dim_, 0);
  for (int i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      int c = x[i] * y[j];
      const uint8_t* row = &sc_[(static_cast<size_t>(i) * dim_ + j) * dim_];
      for (int k = 0; k < dim_; ++k) acc[k] += c * row[k];
    }
  }
  Vec r(dim_);
  for (int k = 0; k < dim_; ++k) r[k] = static_cast<uint8_t>(acc[k] % p_);
  return r;
}

Mat FiniteAlgebra::left_mul_matrix(const Vec& x) const {
  Mat m(dim_, Vec(dim_, 0));
  for (int i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (int r = 0; r < dim_; ++r)
      for (int c = 0; c < dim_; ++c)
        m[r][c] = fp_add(m[r][c], fp_mul(x[i], lmat_[i][r][c], p_), p_);
  }
  return m;
}

Mat FiniteAlgebra::right_mul_matrix(const Vec& x) const {
  Mat m(dim_, Vec(dim_, 0));
  for (int i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (int r = 0; r < dim_; ++r)
      for (int c = 0; c < dim_; ++c)
        m[r][c] = fp_add(m[r][c], fp_mul(x[i], rmat_[i][r][c], p_), p_);
  }
  return m;
}

std::optional<std::array<int, 3>> FiniteAlgebra::associativity_violation() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      Vec ij = basis_product(i, j);
      for (int k = 0; k < dim_; ++k) {
        Vec lhs = mul(ij, basis_vector(k));
        Vec rhs = mul(basis_vector(i), basis_product(j, k));
        if (lhs != rhs) return std::array<int, 3>{i, j, k};
      }
    }
  return std::nullopt;
}

bool FiniteAlgebra::is_idempotent(const Vec& x) const { return mul(x, x) == x; }

bool FiniteAlgebra::is_commutative() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      if (basis_product(i, j) != basis_product(j, i)) return false;
  return true;
}

std::string FiniteAlgebra::show(const Vec& x) const {
  std::string out;
  for (int i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    if (!out.empty()) out += " + ";
    std::string name = labels_.empty() ? "b" + std::to_string(i) : labels_[i];
    if (x[i] != 1) out += std::to_string(int(x[i])) + "*";
    out += name;
  }
  return out.empty() ? "0" : out;
}

FiniteAlgebra field_algebra(int p) {
  return FiniteAlgebra(p, 1, {1}, Vec{1}, {"1"});
}

FiniteAlgebra matrix_algebra(int p, int n) {
  if (n < 1) throw BadShape("matrix_algebra: n must be positive");
  int d = n * n;
  auto idx = [n](int a, int b) { return a * n + b; };
  std::vector<uint8_t> sc(static_cast<size_t>(d) * d * d, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int e = 0; e < n; ++e)
          if (b == c)
            sc[(static_cast<size_t>(idx(a, b)) * d + idx(c, e)) * d + idx(a, e)] = 1;
  Vec one(d, 0);
  std::vector<std::string> labels(d);
  for (int a = 0; a < n; ++a) {
    one[idx(a, a)] = 1;
    for (int b = 0; b < n; ++b)
      labels[idx(a, b)] = "e" + std::to_string(a) + std::to_string(b);
  }
  return FiniteAlgebra(p, d, std::move(sc), std::move(one), std::move(labels));
}

FiniteAlgebra product_algebra(const std::vector<FiniteAlgebra>& factors) {
  if (factors.empty()) throw BadShape("product_algebra: no factors");
  int p = factors[0].characteristic();
  int d = 0;
  for (const auto& f : factors) {
    if (f.characteristic() != p)
      throw BadShape("product_algebra: mixed characteristics");
    d += f.dim();
  }
  std::vector<uint8_t> sc(static_cast<size_t>(d) * d * d, 0);
  std::vector<std::string> labels(d);
  Vec one(d, 0);
  bool unital = true;
  int off = 0;
  for (size_t f = 0; f < factors.size(); ++f) {
    const auto& B = factors[f];
    for (int i = 0; i < B.dim(); ++i) {
      labels[off + i] = (B.labels().empty() ? "b" + std::to_string(i) : B.labels()[i]) +
                        "#" + std::to_string(f);
      for (int j = 0; j < B.dim(); ++j)
        for (int k = 0; k < B.dim(); ++k)
          sc[(static_cast<size_t>(off + i) * d + (off + j)) * d + (off + k)] =
              B.constant(i, j, k);
    }
    if (B.identity())
      for (int i = 0; i < B.dim(); ++i) one[off + i] = (*B.identity())[i];
    else
      unital = false;
    off += B.dim();
  }
  return FiniteAlgebra(p, d, std::move(sc),
                       unital ? std::optional<Vec>(one) : std::nullopt,
                       std::move(labels));
}

FiniteAlgebra function_algebra(int point_count, const FiniteAlgebra& coeff) {
  if (point_count < 1) throw BadShape("function_algebra: need at least one point");
  std::vector<FiniteAlgebra> factors(point_count, coeff);
  auto A = product_algebra(factors);
  // Relabel to point notation: basis (x, j) at index x*dim(coeff)+j.
  std::vector<std::string> labels(A.dim());
  for (int x = 0; x < point_count; ++x)
    for (int j = 0; j < coeff.dim(); ++j)
      labels[x * coeff.dim() + j] =
          (coeff.labels().empty() ? "b" + std::to_string(j) : coeff.labels()[j]) +
          "@x" + std::to_string(x);
  return FiniteAlgebra(A.characteristic(), A.dim(),
                       [&] {
                         std::vector<uint8_t> sc;
                         sc.reserve(static_cast<size_t>(A.dim()) * A.dim() * A.dim());
                         for (int i = 0; i < A.dim(); ++i)
                           for (int j = 0; j < A.dim(); ++j)
                             for (int k = 0; k < A.dim(); ++k)
                               sc.push_back(A.constant(i, j, k));
                         return sc;
                       }(),
                       A.identity(), std::move(labels));
}

std::optional<Vec> find_identity(const FiniteAlgebra& A) {
  int d = A.dim();
  if (d == 0) return std::nullopt;
  Mat system;
  Vec rhs;
  for (int i = 0; i < d; ++i) {
    const Mat& r = A.basis_right_matrix(i);  // x -> x*b_i
    const Mat& l = A.basis_left_matrix(i);   // x -> b_i*x
    for (int row = 0; row < d; ++row) {
      system.push_back(r[row]);
      rhs.push_back(row == i ? 1 : 0);
      system.push_back(l[row]);
      rhs.push_back(row == i ? 1 : 0);
    }
  }
  return solve(system, rhs, d, A.characteristic());
}

bool absorbs(const FiniteAlgebra& A, const Subspace& s, bool left, bool right) {
  for (const auto& x : s.basis())
    for (int i = 0; i < A.dim(); ++i) {
      if (left && !s.contains(mat_apply(A.basis_left_matrix(i), x, A.characteristic())))
        return false;
      if (right && !s.contains(mat_apply(A.basis_right_matrix(i), x, A.characteristic())))
        return false;
    }
  return true;
}

IdealHandle make_ideal(const FiniteAlgebra& A, const Subspace& s) {
  IdealHandle h{s, absorbs(A, s, true, false), absorbs(A, s, false, true)};
  return h;
}

IdealHandle ideal_closure(const FiniteAlgebra& A, const std::vector<Vec>& generators) {
  int p = A.characteristic();
  Subspace s(p, A.dim());
  for (const auto& g : generators) s.insert(g);
  std::vector<Vec> work(s.basis().begin(), s.basis().end());
  while (!work.empty() && !s.is_full()) {
    Vec v = std::move(work.back());
    work.pop_back();
    for (int i = 0; i < A.dim() && !s.is_full(); ++i) {
      Vec l = mat_apply(A.basis_left_matrix(i), v, p);
      if (s.insert(l)) work.push_back(std::move(l));
      Vec r = mat_apply(A.basis_right_matrix(i), v, p);
      if (s.insert(r)) work.push_back(std::move(r));
    }
  }
  return IdealHandle{std::move(s), true, true};
}

std::vector<Subspace> all_ideals(const FiniteAlgebra& A, int guard_dim) {
  if (A.dim() > guard_dim)
    throw GuardExceeded("all_ideals: dimension " + std::to_string(A.dim()) +
                        " exceeds guard " + std::to_string(guard_dim));
  std::vector<Subspace> ideals;
  auto push_unique = [&](const Subspace& s) {
    for (const auto& t : ideals)
      if (t == s) return false;
    ideals.push_back(s);
    return true;
  };
  push_unique(Subspace(A.characteristic(), A.dim()));
  for (const auto& v : all_vectors(A.characteristic(), A.dim())) {
    if (vec_is_zero(v)) continue;
    push_unique(ideal_closure(A, {v}).space);
  }
  // Close under joins: every ideal is a join of principal ideals.
  bool grew = true;
  while (grew) {
    grew = false;
    size_t n = ideals.size();
    for (size_t a = 0; a < n; ++a)
      for (size_t b = a + 1; b < n; ++b)
        if (push_unique(ideals[a].sum(ideals[b]))) grew = true;
  }
  std::sort(ideals.begin(), ideals.end(),
            [](const Subspace& x, const Subspace& y) {
              if (x.dim() != y.dim()) return x.dim() < y.dim();
              return x.basis() < y.basis();
            });
  return ideals;
}

std::vector<Subspace> all_ideals_by_subspace_sweep(const FiniteAlgebra& A) {
  if (A.dim() > 6)
    throw GuardExceeded("all_ideals_by_subspace_sweep: dim > 6");
  std::vector<Subspace> out;
  for (const auto& s : all_subspaces(A.characteristic(), A.dim()))
    if (absorbs(A, s, true, true)) out.push_back(s);
  std::sort(out.begin(), out.end(), [](const Subspace& x, const Subspace& y) {
    if (x.dim() != y.dim()) return x.dim() < y.dim();
    return x.basis() < y.basis();
  });
  return out;
}

SimpleResult is_simple(const FiniteAlgebra& A, int guard_dim) {
  if (A.dim() == 0) throw BadShape("is_simple: zero ring");
  if (A.dim() > guard_dim) return {SimpleStatus::GuardExceeded, std::nullopt};
  bool product_nonzero = false;
  for (int i = 0; i < A.dim() && !product_nonzero; ++i)
    for (int j = 0; j < A.dim(); ++j)
      if (!vec_is_zero(A.basis_product(i, j))) { product_nonzero = true; break; }
  if (!product_nonzero) {
    // R*R = {0}: not simple by convention; any 1-dim subspace is an ideal
    // but only proper when dim > 1.
    std::optional<Subspace> w;
    if (A.dim() > 1)
      w = Subspace::span(A.characteristic(), A.dim(), {A.basis_vector(0)});
    return {SimpleStatus::NotSimple, w};
  }
  for (const auto& v : all_vectors(A.characteristic(), A.dim())) {
    if (vec_is_zero(v)) continue;
    auto closed = ideal_closure(A, {v});
    if (!closed.space.is_full())
      return {SimpleStatus::NotSimple, closed.space};
  }
  return {SimpleStatus::Simple, std::nullopt};
}

std::vector<Vec> idempotents(const FiniteAlgebra& A, int guard_dim) {
  if (A.dim() > guard_dim)
    throw GuardExceeded("idempotents: dimension " + std::to_string(A.dim()) +
                        " exceeds guard " + std::to_string(guard_dim));
  std::vector<Vec> out;
  for (const auto& v : all_vectors(A.characteristic(), A.dim()))
    if (A.is_idempotent(v)) out.push_back(v);
  return out;
}

std::vector<Vec> nonzero_idempotents(const FiniteAlgebra& A, int guard_dim) {
  auto all = idempotents(A, guard_dim);
  std::vector<Vec> out;
  for (auto& v : all)
    if (!vec_is_zero(v)) out.push_back(std::move(v));
  return out;
}

Subspace center(const FiniteAlgebra& A) {
  int p = A.characteristic(), d = A.dim();
  Mat system;
  for (int i = 0; i < d; ++i) {
    const Mat& r = A.basis_right_matrix(i);
    const Mat& l = A.basis_left_matrix(i);
    for (int row = 0; row < d; ++row) {
      Vec diff(d);
      for (int c = 0; c < d; ++c) diff[c] = fp_sub(r[row][c], l[row][c], p);
      system.push_back(std::move(diff));
    }
  }
  Subspace s(p, d);
  for (auto& v : nullspace(system, d, p)) s.insert(std::move(v));
  return s;
}

FiniteAlgebra subalgebra(const FiniteAlgebra& A, const Subspace& s,
                         std::optional<Vec> identity_in_A) {
  int d = s.dim();
  std::vector<uint8_t> sc(static_cast<size_t>(d) * d * d, 0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Vec prod = A.mul(s.basis()[i], s.basis()[j]);
      auto coords = s.coordinates(prod);
      if (!coords)
        throw BadShape("subalgebra: subspace not closed under multiplication");
      for (int k = 0; k < d; ++k)
        sc[(static_cast<size_t>(i) * d + j) * d + k] = (*coords)[k];
    }
  std::optional<Vec> one;
  if (identity_in_A) {
    auto coords = s.coordinates(*identity_in_A);
    if (!coords) throw BadShape("subalgebra: identity not in subspace");
    one = *coords;
  } else {
    FiniteAlgebra probe(A.characteristic(), d, sc);
    one = find_identity(probe);
  }
  return FiniteAlgebra(A.characteristic(), d, std::move(sc), std::move(one));
}

FiniteAlgebra corner(const FiniteAlgebra& A, const Vec& u) {
  if (!A.is_idempotent(u)) throw NotIdempotent("corner: u*u != u");
  Subspace s(A.characteristic(), A.dim());
  for (int i = 0; i < A.dim(); ++i)
    s.insert(A.mul(A.mul(u, A.basis_vector(i)), u));
  std::optional<Vec> one;
  if (!vec_is_zero(u)) one = u;
  return subalgebra(A, s, one);
}

bool is_field(const FiniteAlgebra& A) {
  if (A.dim() == 0) return false;
  if (!A.is_commutative()) return false;
  auto one = A.identity() ? A.identity() : find_identity(A);
  if (!one || vec_is_zero(*one)) return false;
  for (const auto& v : all_vectors(A.characteristic(), A.dim())) {
    if (vec_is_zero(v)) continue;
    if (!mat_invertible(A.left_mul_matrix(v), A.characteristic())) return false;
  }
  return true;
}

}  // namespace psg
