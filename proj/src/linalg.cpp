#include "psg/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <stdexcept>

namespace psg {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

uint8_t fp_inv(uint8_t a, int p) {
  if (a % p == 0) throw std::domain_error("fp_inv: zero has no inverse");
  for (int x = 1; x < p; ++x)
    if ((a * x) % p == 1) return static_cast<uint8_t>(x);
  throw std::domain_error("fp_inv: p is not prime");
}

bool vec_is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](uint8_t c) { return c == 0; });
}

Vec vec_add(const Vec& a, const Vec& b, int p) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = fp_add(a[i], b[i], p);
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b, int p) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = fp_sub(a[i], b[i], p);
  return r;
}

Vec vec_scale(const Vec& a, uint8_t c, int p) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = fp_mul(a[i], c, p);
  return r;
}

void vec_axpy(Vec& y, uint8_t c, const Vec& x, int p) {
  for (size_t i = 0; i < y.size(); ++i)
    y[i] = fp_add(y[i], fp_mul(c, x[i], p), p);
}

Vec mat_apply(const Mat& m, const Vec& x, int p) {
  Vec r(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i) {
    int acc = 0;
    for (size_t j = 0; j < x.size(); ++j) acc += m[i][j] * x[j];
    r[i] = static_cast<uint8_t>(acc % p);
  }
  return r;
}

Mat mat_mul(const Mat& a, const Mat& b, int p) {
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Mat r(n, Vec(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (size_t j = 0; j < m; ++j)
        r[i][j] = fp_add(r[i][j], fp_mul(a[i][t], b[t][j], p), p);
    }
  return r;
}

Mat mat_identity(int n) {
  Mat r(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) r[i][i] = 1;
  return r;
}

bool mat_invertible(const Mat& m, int p) {
  if (m.empty()) return true;
  if (m.size() != m[0].size()) return false;
  Subspace s(p, static_cast<int>(m[0].size()));
  for (const auto& row : m) s.insert(row);
  return s.dim() == static_cast<int>(m.size());
}

std::optional<Mat> mat_inverse(const Mat& m, int p) {
  int n = static_cast<int>(m.size());
  // Gauss-Jordan on [m | I].
  Mat aug(n, Vec(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int piv = -1;
    for (int r = row; r < n; ++r)
      if (aug[r][col] != 0) { piv = r; break; }
    if (piv < 0) return std::nullopt;
    std::swap(aug[row], aug[piv]);
    uint8_t inv = fp_inv(aug[row][col], p);
    for (int j = 0; j < 2 * n; ++j) aug[row][j] = fp_mul(aug[row][j], inv, p);
    for (int r = 0; r < n; ++r) {
      if (r == row || aug[r][col] == 0) continue;
      uint8_t c = aug[r][col];
      for (int j = 0; j < 2 * n; ++j)
        aug[r][j] = fp_sub(aug[r][j], fp_mul(c, aug[row][j], p), p);
    }
    ++row;
  }
  if (row < n) return std::nullopt;
  Mat inv(n, Vec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

Mat nullspace(const Mat& m, int n_cols, int p) {
  Mat rows = m;
  std::vector<int> pivot_col;
  int row = 0;
  int n_rows = static_cast<int>(rows.size());
  for (int col = 0; col < n_cols && row < n_rows; ++col) {
    int piv = -1;
    for (int r = row; r < n_rows; ++r)
      if (rows[r][col] != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(rows[row], rows[piv]);
    uint8_t inv = fp_inv(rows[row][col], p);
    for (int j = 0; j < n_cols; ++j) rows[row][j] = fp_mul(rows[row][j], inv, p);
    for (int r = 0; r < n_rows; ++r) {
      if (r == row || rows[r][col] == 0) continue;
      uint8_t c = rows[r][col];
      for (int j = 0; j < n_cols; ++j)
        rows[r][j] = fp_sub(rows[r][j], fp_mul(c, rows[row][j], p), p);
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(n_cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  Mat basis;
  for (int free = 0; free < n_cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n_cols, 0);
    v[free] = 1;
    for (size_t r = 0; r < pivot_col.size(); ++r)
      v[pivot_col[r]] = fp_sub(0, rows[r][free], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Mat& m, const Vec& b, int n_cols, int p) {
  int n_rows = static_cast<int>(m.size());
  Mat aug(n_rows, Vec(n_cols + 1, 0));
  for (int i = 0; i < n_rows; ++i) {
    for (int j = 0; j < n_cols; ++j) aug[i][j] = m[i][j];
    aug[i][n_cols] = b[i];
  }
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < n_cols && row < n_rows; ++col) {
    int piv = -1;
    for (int r = row; r < n_rows; ++r)
      if (aug[r][col] != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(aug[row], aug[piv]);
    uint8_t inv = fp_inv(aug[row][col], p);
    for (int j = 0; j <= n_cols; ++j) aug[row][j] = fp_mul(aug[row][j], inv, p);
    for (int r = 0; r < n_rows; ++r) {
      if (r == row || aug[r][col] == 0) continue;
      uint8_t c = aug[r][col];
      for (int j = 0; j <= n_cols; ++j)
        aug[r][j] = fp_sub(aug[r][j], fp_mul(c, aug[row][j], p), p);
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (int r = row; r < n_rows; ++r)
    if (aug[r][n_cols] != 0) return std::nullopt;
  Vec x(n_cols, 0);
  for (size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = aug[r][n_cols];
  return x;
}

Subspace::Subspace(int p, int ambient) : p_(p), ambient_(ambient) {
  if (!is_prime(p)) throw std::invalid_argument("Subspace: p must be prime");
  if (ambient < 0) throw std::invalid_argument("Subspace: negative ambient");
}

Subspace Subspace::span(int p, int ambient, const Mat& vectors) {
  Subspace s(p, ambient);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

Subspace Subspace::full(int p, int ambient) {
  return span(p, ambient, mat_identity(ambient));
}

Vec Subspace::reduce(Vec v) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    uint8_t c = v[pivots_[r]];
    if (c != 0)
      for (int j = 0; j < ambient_; ++j)
        v[j] = fp_sub(v[j], fp_mul(c, rows_[r][j], p_), p_);
  }
  return v;
}

bool Subspace::insert(Vec v) {
  if (static_cast<int>(v.size()) != ambient_)
    throw std::invalid_argument("Subspace::insert: wrong length");
  v = reduce(std::move(v));
  int lead = -1;
  for (int j = 0; j < ambient_; ++j)
    if (v[j] != 0) { lead = j; break; }
  if (lead < 0) return false;
  uint8_t inv = fp_inv(v[lead], p_);
  for (int j = 0; j < ambient_; ++j) v[j] = fp_mul(v[j], inv, p_);
  // Back-substitute into existing rows, then insert keeping pivots sorted.
  for (size_t r = 0; r < rows_.size(); ++r) {
    uint8_t c = rows_[r][lead];
    if (c != 0)
      for (int j = 0; j < ambient_; ++j)
        rows_[r][j] = fp_sub(rows_[r][j], fp_mul(c, v[j], p_), p_);
  }
  size_t pos = 0;
  while (pos < rows_.size() && pivots_[pos] < lead) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, lead);
  return true;
}

bool Subspace::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  for (const auto& row : other.rows_)
    if (!contains(row)) return false;
  return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  Vec coords(rows_.size(), 0);
  Vec w = v;
  for (size_t r = 0; r < rows_.size(); ++r) {
    uint8_t c = w[pivots_[r]];
    coords[r] = c;
    if (c != 0)
      for (int j = 0; j < ambient_; ++j)
        w[j] = fp_sub(w[j], fp_mul(c, rows_[r][j], p_), p_);
  }
  if (!vec_is_zero(w)) return std::nullopt;
  return coords;
}

Vec Subspace::from_coordinates(const Vec& coords) const {
  Vec v(ambient_, 0);
  for (size_t r = 0; r < rows_.size(); ++r) vec_axpy(v, coords[r], rows_[r], p_);
  return v;
}

bool Subspace::operator==(const Subspace& other) const {
  return p_ == other.p_ && ambient_ == other.ambient_ && rows_ == other.rows_;
}

Subspace Subspace::intersect(const Subspace& other) const {
  // Zassenhaus: echelonize rows [a|a] and [b|0]; rows with zero left block
  // carry the intersection in the right block.
  int n = ambient_;
  Mat work;
  for (const auto& r : rows_) {
    Vec row(2 * n, 0);
    for (int j = 0; j < n; ++j) { row[j] = r[j]; row[n + j] = r[j]; }
    work.push_back(std::move(row));
  }
  for (const auto& r : other.rows_) {
    Vec row(2 * n, 0);
    for (int j = 0; j < n; ++j) row[j] = r[j];
    work.push_back(std::move(row));
  }
  Subspace big(p_, 2 * n);
  for (auto& r : work) big.insert(std::move(r));
  Subspace result(p_, n);
  for (const auto& r : big.basis()) {
    bool left_zero = true;
    for (int j = 0; j < n; ++j)
      if (r[j] != 0) { left_zero = false; break; }
    if (left_zero) result.insert(Vec(r.begin() + n, r.end()));
  }
  return result;
}

Subspace Subspace::sum(const Subspace& other) const {
  Subspace s = *this;
  for (const auto& r : other.rows_) s.insert(r);
  return s;
}

uint64_t Subspace::size() const {
  uint64_t n = 1;
  for (int i = 0; i < dim(); ++i) n *= static_cast<uint64_t>(p_);
  return n;
}

std::vector<Vec> Subspace::elements() const {
  std::vector<Vec> out;
  out.reserve(size());
  Vec coords(dim(), 0);
  while (true) {
    out.push_back(from_coordinates(coords));
    int k = dim() - 1;
    while (k >= 0 && coords[k] == p_ - 1) coords[k--] = 0;
    if (k < 0) break;
    ++coords[k];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vec> all_vectors(int p, int n) {
  std::vector<Vec> out;
  Vec v(n, 0);
  while (true) {
    out.push_back(v);
    int k = n - 1;
    while (k >= 0 && v[k] == p - 1) v[k--] = 0;
    if (k < 0) break;
    ++v[k];
  }
  return out;
}

namespace {

// Enumerate RREF matrices with the given pivot columns by filling the free
// entries (row r, column j) with j > pivot[r], j not a pivot, in all ways.
void enumerate_rref(int p, int n, const std::vector<int>& pivots,
                    std::vector<Subspace>& out) {
  int r = static_cast<int>(pivots.size());
  std::vector<bool> is_pivot(n, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::pair<int, int>> free_slots;
  for (int row = 0; row < r; ++row)
    for (int col = pivots[row] + 1; col < n; ++col)
      if (!is_pivot[col]) free_slots.emplace_back(row, col);
  Mat m(r, Vec(n, 0));
  for (int row = 0; row < r; ++row) m[row][pivots[row]] = 1;
  std::vector<uint8_t> fill(free_slots.size(), 0);
  while (true) {
    for (size_t i = 0; i < free_slots.size(); ++i)
      m[free_slots[i].first][free_slots[i].second] = fill[i];
    out.push_back(Subspace::span(p, n, m));
    int k = static_cast<int>(fill.size()) - 1;
    while (k >= 0 && fill[k] == p - 1) fill[k--] = 0;
    if (k < 0) break;
    ++fill[k];
  }
}

void pivot_combinations(int n, int r, int start, std::vector<int>& cur,
                        const std::function<void(const std::vector<int>&)>& f) {
  if (static_cast<int>(cur.size()) == r) {
    f(cur);
    return;
  }
  for (int c = start; c < n; ++c) {
    cur.push_back(c);
    pivot_combinations(n, r, c + 1, cur, f);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Subspace> all_subspaces(int p, int n) {
  std::vector<Subspace> out;
  for (int r = 0; r <= n; ++r) {
    std::vector<int> cur;
    pivot_combinations(n, r, 0, cur, [&](const std::vector<int>& pivots) {
      enumerate_rref(p, n, pivots, out);
    });
  }
  return out;
}

}  // namespace psg
