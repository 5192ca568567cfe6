#include "psg/semigroup.hpp"

#include <string>

namespace psg {

namespace {
void require_idempotent(const FiniteAlgebra& A, const Vec& x, const char* who) {
  if (!A.is_idempotent(x))
    throw NotIdempotent(std::string(who) + ": element is not idempotent");
}
}  // namespace

bool idempotent_leq(const FiniteAlgebra& A, const Vec& u, const Vec& v) {
  require_idempotent(A, u, "idempotent_leq");
  require_idempotent(A, v, "idempotent_leq");
  return A.mul(u, v) == v && A.mul(v, u) == v;
}

Subspace corner_space(const FiniteAlgebra& A, const Vec& u, const Vec& v) {
  Subspace s(A.characteristic(), A.dim());
  for (int i = 0; i < A.dim(); ++i)
    s.insert(A.mul(A.mul(u, A.basis_vector(i)), v));
  return s;
}

Subspace right_ideal(const FiniteAlgebra& A, const Vec& u) {
  Subspace s(A.characteristic(), A.dim());
  for (int i = 0; i < A.dim(); ++i) s.insert(A.mul(u, A.basis_vector(i)));
  return s;
}

std::optional<std::pair<Vec, Vec>> equivalent_idempotents(const FiniteAlgebra& A,
                                                          const Vec& u, const Vec& v,
                                                          uint64_t pair_guard) {
  require_idempotent(A, u, "equivalent_idempotents");
  require_idempotent(A, v, "equivalent_idempotents");
  Subspace usv = corner_space(A, u, v);
  Subspace vsu = corner_space(A, v, u);
  if (usv.size() * vsu.size() > pair_guard)
    throw GuardExceeded("equivalent_idempotents: corner pair search too large");
  for (const auto& a : usv.elements())
    for (const auto& b : vsu.elements())
      if (A.mul(a, b) == u && A.mul(b, a) == v)
        return std::make_pair(a, b);
  return std::nullopt;
}

std::vector<Vec> right_ideal_homs(const FiniteAlgebra& A, const Vec& u,
                                  const Vec& v, uint64_t guard) {
  require_idempotent(A, u, "right_ideal_homs");
  require_idempotent(A, v, "right_ideal_homs");
  Subspace vsu = corner_space(A, v, u);
  if (vsu.size() > guard)
    throw GuardExceeded("right_ideal_homs: corner too large");
  return vsu.elements();
}

IdealIso::IdealIso(const FiniteAlgebra& A, IdealHandle source, IdealHandle target,
                   Mat images_of_source_basis)
    : source_(std::move(source)), target_(std::move(target)),
      images_(std::move(images_of_source_basis)) {
  if (static_cast<int>(images_.size()) != source_.space.dim())
    throw BadShape("IdealIso: one image per source basis vector required");
  for (const auto& row : images_)
    if (static_cast<int>(row.size()) != A.dim())
      throw BadShape("IdealIso: image vector length mismatch");
}

IdealIso IdealIso::identity(const FiniteAlgebra& A, IdealHandle ideal) {
  Mat images = ideal.space.basis();
  return IdealIso(A, ideal, ideal, std::move(images));
}

Vec IdealIso::apply(const FiniteAlgebra& A, const Vec& x) const {
  auto coords = source_.space.coordinates(x);
  if (!coords) throw BadShape("IdealIso::apply: element not in source ideal");
  Vec out(A.dim(), 0);
  for (size_t r = 0; r < images_.size(); ++r)
    vec_axpy(out, (*coords)[r], images_[r], A.characteristic());
  return out;
}

std::optional<std::string> IdealIso::check(const FiniteAlgebra& A) const {
  if (!source_.two_sided()) return "source is not a two-sided ideal";
  if (!target_.two_sided()) return "target is not a two-sided ideal";
  if (source_.space.dim() != target_.space.dim())
    return "source and target have different dimensions";
  Subspace image(A.characteristic(), A.dim());
  for (const auto& row : images_) {
    if (!target_.space.contains(row)) return "an image falls outside the target ideal";
    image.insert(row);
  }
  if (image.dim() != source_.space.dim()) return "map is not injective";
  const Mat& basis = source_.space.basis();
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < basis.size(); ++j) {
      Vec prod = A.mul(basis[i], basis[j]);
      Vec lhs = apply(A, prod);
      Vec rhs = A.mul(images_[i], images_[j]);
      if (lhs != rhs) return "map is not multiplicative on a basis pair";
    }
  return std::nullopt;
}

InnerResult is_inner_at(const FiniteAlgebra& A, const IdealIso& alpha,
                        const Vec& u, uint64_t pair_guard) {
  require_idempotent(A, u, "is_inner_at");
  if (!alpha.source().space.contains(u))
    return {Innerness::NotInDomain, std::nullopt};
  Vec alpha_u = alpha.apply(A, u);
  Subspace left = corner_space(A, u, alpha_u);         // candidates for a
  Subspace right = corner_space(A, alpha_u, u);        // candidates for b
  if (left.size() * right.size() > pair_guard)
    throw GuardExceeded("is_inner_at: corner pair search too large");
  Mat usu_basis = corner_space(A, u, u).basis();
  for (const auto& a : left.elements())
    for (const auto& b : right.elements()) {
      if (A.mul(a, b) != u || A.mul(b, a) != alpha_u) continue;
      bool conjugates = true;
      for (const auto& x : usu_basis)
        if (alpha.apply(A, x) != A.mul(A.mul(b, x), a)) { conjugates = false; break; }
      if (conjugates)
        return {Innerness::Inner, InnernessWitness{u, alpha_u, a, b}};
    }
  return {Innerness::Outer, std::nullopt};
}

bool verify_innerness_witness(const FiniteAlgebra& A, const IdealIso& alpha,
                              const InnernessWitness& w) {
  if (!A.is_idempotent(w.u)) return false;
  if (!alpha.source().space.contains(w.u)) return false;
  if (alpha.apply(A, w.u) != w.alpha_u) return false;
  if (!corner_space(A, w.u, w.alpha_u).contains(w.a)) return false;
  if (!corner_space(A, w.alpha_u, w.u).contains(w.b)) return false;
  if (A.mul(w.a, w.b) != w.u) return false;
  if (A.mul(w.b, w.a) != w.alpha_u) return false;
  Subspace usu = corner_space(A, w.u, w.u);
  for (const auto& x : usu.basis())
    if (alpha.apply(A, x) != A.mul(A.mul(w.b, x), w.a)) return false;
  return true;
}

StrongOuterResult is_strongly_outer(const FiniteAlgebra& A, const IdealIso& alpha,
                                    int guard_dim, uint64_t pair_guard) {
  StrongOuterResult r{true, std::nullopt, 0, 0};
  for (const auto& u : nonzero_idempotents(A, guard_dim)) {
    auto inner = is_inner_at(A, alpha, u, pair_guard);
    switch (inner.verdict) {
      case Innerness::Inner:
        if (!r.inner_at) r.inner_at = u;
        r.strongly_outer = false;
        break;
      case Innerness::Outer:
        ++r.outer_count;
        break;
      case Innerness::NotInDomain:
        ++r.not_in_domain_count;
        break;
    }
  }
  return r;
}

MinimalIdempotentsResult minimal_idempotents(const FiniteAlgebra& A, int guard_dim) {
  auto es = nonzero_idempotents(A, guard_dim);
  std::vector<Vec> minimal;
  for (const auto& v : es) {
    bool is_min = true;
    for (const auto& w : es) {
      if (w == v) continue;
      if (idempotent_leq(A, v, w)) { is_min = false; break; }  // w <= v, w != v
    }
    if (is_min) minimal.push_back(v);
  }
  bool complete = true;
  for (const auto& u : es) {
    bool dominated = false;
    for (const auto& m : minimal)
      if (idempotent_leq(A, u, m)) { dominated = true; break; }  // m <= u
    if (!dominated) { complete = false; break; }
  }
  return {std::move(minimal), complete};
}

}  // namespace psg
