#include "psg/skew.hpp"

namespace psg {

GradedSkewRing::GradedSkewRing(FiniteAlgebra ring, std::vector<int> degree,
                               std::vector<std::vector<int>> slots,
                               PartialRingAction action)
    : ring_(std::move(ring)), degree_(std::move(degree)), slots_(std::move(slots)),
      action_(std::move(action)) {}

Subspace GradedSkewRing::component_space(int g) const {
  Subspace s(ring_.characteristic(), ring_.dim());
  for (int slot : slots_[g]) s.insert(ring_.basis_vector(slot));
  return s;
}

Vec GradedSkewRing::component(const Vec& r, int g) const {
  Vec out(ring_.dim(), 0);
  for (int slot : slots_[g]) out[slot] = r[slot];
  return out;
}

std::vector<int> GradedSkewRing::support(const Vec& r) const {
  std::vector<int> out;
  for (int g = 0; g < group().order(); ++g)
    if (!vec_is_zero(component(r, g))) out.push_back(g);
  return out;
}

Vec GradedSkewRing::embed(int g, const Vec& a) const {
  auto coords = action_.domains[g].space.coordinates(a);
  if (!coords) throw BadShape("GradedSkewRing::embed: element not in D_g");
  Vec out(ring_.dim(), 0);
  for (size_t i = 0; i < coords->size(); ++i) out[slots_[g][i]] = (*coords)[i];
  return out;
}

Vec GradedSkewRing::project(int g, const Vec& r) const {
  Vec coords(slots_[g].size(), 0);
  for (size_t i = 0; i < slots_[g].size(); ++i) coords[i] = r[slots_[g][i]];
  return action_.domains[g].space.from_coordinates(coords);
}

GradedSkewRing build_skew_ring(const PartialRingAction& action, int guard_dim) {
  const auto& A = action.algebra;
  const auto& G = action.group;
  int p = A.characteristic();
  int n = G.order();
  std::vector<std::vector<int>> slots(n);
  std::vector<int> degree;
  int total = 0;
  for (int g = 0; g < n; ++g) {
    int dg = action.domains[g].space.dim();
    for (int i = 0; i < dg; ++i) {
      slots[g].push_back(total + i);
      degree.push_back(g);
    }
    total += dg;
  }
  if (total > guard_dim)
    throw GuardExceeded("build_skew_ring: dimension " + std::to_string(total) +
                        " exceeds guard " + std::to_string(guard_dim));
  std::vector<uint8_t> sc(static_cast<size_t>(total) * total * total, 0);
  std::vector<std::string> labels(total);
  for (int g = 0; g < n; ++g) {
    const Mat& dg_basis = action.domains[g].space.basis();
    for (size_t i = 0; i < dg_basis.size(); ++i) {
      labels[slots[g][i]] = A.show(dg_basis[i]) + " d" + std::to_string(g);
      for (int h = 0; h < n; ++h) {
        const Mat& dh_basis = action.domains[h].space.basis();
        int gh = G.mul(g, h);
        for (size_t j = 0; j < dh_basis.size(); ++j) {
          // alpha_g(alpha_{g^-1}(a) * b) delta_{gh}
          Vec pulled = action.apply(G.inv(g), dg_basis[i]);
          Vec prod = A.mul(pulled, dh_basis[j]);
          Vec pushed = action.apply(g, prod);
          auto coords = action.domains[gh].space.coordinates(pushed);
          if (!coords)
            throw BadShape("build_skew_ring: product escapes D_gh; invalid action");
          int row = slots[g][i], col = slots[h][j];
          for (size_t k = 0; k < coords->size(); ++k)
            sc[(static_cast<size_t>(row) * total + col) * total + slots[gh][k]] =
                (*coords)[k];
        }
      }
    }
  }
  FiniteAlgebra ring(p, total, sc, std::nullopt, labels,
                     FiniteAlgebra::Check::SkipAssociativity);
  if (auto one = find_identity(ring))
    ring = FiniteAlgebra(p, total, std::move(sc), std::move(one), std::move(labels),
                         FiniteAlgebra::Check::SkipAssociativity);
  return GradedSkewRing(std::move(ring), std::move(degree), std::move(slots), action);
}

AssocResult is_associative(const GradedSkewRing& R) {
  auto bad = R.ring().associativity_violation();
  if (bad) return {false, *bad};
  return {true, std::nullopt};
}

GradedSimpleResult is_graded_simple(const GradedSkewRing& R, int guard_dim) {
  const auto& ring = R.ring();
  if (ring.dim() == 0) return {GradedSimpleStatus::NotGradedSimple, std::nullopt};
  if (!is_associative(R).associative)
    return {GradedSimpleStatus::NonAssociative, std::nullopt};
  if (ring.dim() > guard_dim)
    return {GradedSimpleStatus::GuardExceeded, std::nullopt};
  for (int g = 0; g < R.group().order(); ++g) {
    Subspace comp = R.component_space(g);
    for (const auto& r : comp.elements()) {
      if (vec_is_zero(r)) continue;
      auto closed = ideal_closure(ring, {r});
      if (!closed.space.is_full())
        return {GradedSimpleStatus::NotGradedSimple, closed.space};
    }
  }
  return {GradedSimpleStatus::GradedSimple, std::nullopt};
}

GatherReport verify_gather(const GradedSkewRing& R, int guard_dim) {
  if (!R.group().abelian())
    throw PreconditionFailed("verify_gather: the grading group is not abelian");
  if (!is_associative(R).associative)
    throw PreconditionFailed("verify_gather: the skew ring is not associative");
  const auto& ring = R.ring();
  Subspace re = R.component_space(R.group().identity());
  std::vector<Vec> units;
  for (const auto& u : re.elements())
    if (!vec_is_zero(u) && ring.is_idempotent(u)) units.push_back(u);
  if (units.empty())
    throw PreconditionFailed("verify_gather: R_e has no nonzero idempotent");
  auto simple = is_simple(ring, guard_dim);
  if (simple.status == SimpleStatus::GuardExceeded)
    throw GuardExceeded("verify_gather: simplicity sweep exceeds guard");
  auto graded = is_graded_simple(R, guard_dim);
  if (graded.status == GradedSimpleStatus::GuardExceeded)
    throw GuardExceeded("verify_gather: graded sweep exceeds guard");
  GatherReport report;
  report.simple = simple.simple();
  report.graded_simple = graded.graded_simple();
  report.holds = true;
  for (const auto& u : units) {
    FiniteAlgebra c = corner(ring, u);
    bool field = is_field(subalgebra(c, center(c)));
    report.rows.push_back({u, field});
    bool rhs = report.graded_simple && field;
    if (report.simple != rhs) report.holds = false;
  }
  return report;
}

MainReport verify_main(const PartialRingAction& action, int guard_dim,
                       uint64_t pair_guard) {
  if (!action.group.abelian())
    throw PreconditionFailed("verify_main: the group is not abelian");
  if (!all_domains_unital(action))
    throw PreconditionFailed("verify_main: some D_g lacks an identity element");
  auto outer = is_outer(action, guard_dim, pair_guard);
  if (!outer.outer)
    throw PreconditionFailed("verify_main: the action is not outer");
  GradedSkewRing R = build_skew_ring(action, guard_dim);
  auto assoc = is_associative(R);
  if (!assoc.associative)
    throw PreconditionFailed(
        "verify_main: skew ring not associative despite unital domains");
  auto simple = is_simple(R.ring(), guard_dim);
  if (simple.status == SimpleStatus::GuardExceeded)
    throw GuardExceeded("verify_main: simplicity sweep exceeds guard");
  auto gsimple = is_G_simple(action, guard_dim);
  if (gsimple.status == GSimpleStatus::GuardExceeded)
    throw GuardExceeded("verify_main: invariant sweep exceeds guard");
  MainReport r;
  r.simple = simple.simple();
  r.g_simple = gsimple.g_simple();
  r.holds = r.simple == r.g_simple;
  r.simple_witness = simple.witness;
  r.g_simple_witness = gsimple.witness;
  return r;
}

}  // namespace psg
