#include "psg/action.hpp"

namespace psg {

namespace {

std::string gname(int g) { return "g" + std::to_string(g); }

Subspace map_subspace(const FiniteAlgebra& A, const IdealIso& iso,
                      const Subspace& s) {
  Subspace out(A.characteristic(), A.dim());
  for (const auto& x : s.basis()) out.insert(iso.apply(A, x));
  return out;
}

}  // namespace

Diagnostics validate(const PartialRingAction& action) {
  Diagnostics d;
  const auto& G = action.group;
  const auto& A = action.algebra;
  int n = G.order();
  if (static_cast<int>(action.domains.size()) != n ||
      static_cast<int>(action.maps.size()) != n) {
    d.issues.push_back("one domain ideal and one map per group element required");
    return d;
  }
  int e = G.identity();
  if (!action.domains[e].space.is_full())
    d.issues.push_back("axiom (i): D_e is a proper subspace of A");
  // Domains must be two-sided ideals.
  for (int g = 0; g < n; ++g) {
    if (!absorbs(A, action.domains[g].space, true, true))
      d.issues.push_back("D_" + gname(g) + " is not a two-sided ideal");
    else if (!action.domains[g].two_sided())
      d.issues.push_back("D_" + gname(g) + " is not flagged two-sided");
  }
  // Each alpha_g must be a ring isomorphism D_{g^-1} -> D_g.
  for (int g = 0; g < n; ++g) {
    const auto& iso = action.maps[g];
    if (!(iso.source().space == action.domains[G.inv(g)].space))
      d.issues.push_back("alpha_" + gname(g) + " has source != D_" + gname(G.inv(g)));
    if (!(iso.target().space == action.domains[g].space))
      d.issues.push_back("alpha_" + gname(g) + " has target != D_" + gname(g));
    if (auto issue = iso.check(A))
      d.issues.push_back("alpha_" + gname(g) + ": " + *issue);
  }
  if (!d.ok()) return d;  // the laws below assume well-formed maps
  // Axiom (i): alpha_e = id.
  for (const auto& x : action.domains[e].space.basis())
    if (action.apply(e, x) != x) {
      d.issues.push_back("axiom (i): alpha_e is not the identity");
      break;
    }
  // Axiom (ii): alpha_g(D_{g^-1} ∩ D_h) = D_g ∩ D_{gh}.
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      Subspace lhs_domain =
          action.domains[G.inv(g)].space.intersect(action.domains[h].space);
      Subspace lhs = map_subspace(A, action.maps[g], lhs_domain);
      Subspace rhs =
          action.domains[g].space.intersect(action.domains[G.mul(g, h)].space);
      if (!(lhs == rhs))
        d.issues.push_back("axiom (ii) fails for (g,h) = (" + gname(g) + "," +
                           gname(h) + ")");
    }
  // Axiom (iii): alpha_g(alpha_h(x)) = alpha_{gh}(x) on D_{h^-1} ∩ D_{(gh)^-1}.
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      int gh = G.mul(g, h);
      Subspace dom = action.domains[G.inv(h)].space.intersect(
          action.domains[G.inv(gh)].space);
      for (const auto& x : dom.basis()) {
        Vec via_h;
        try {
          via_h = action.apply(g, action.apply(h, x));
        } catch (const BadShape&) {
          d.issues.push_back("axiom (iii): alpha_h(x) escapes D_{g^-1} for (g,h) = (" +
                             gname(g) + "," + gname(h) + ")");
          break;
        }
        if (via_h != action.apply(gh, x)) {
          d.issues.push_back("axiom (iii) fails for (g,h) = (" + gname(g) + "," +
                             gname(h) + ")");
          break;
        }
      }
    }
  // Derived: alpha_{g^-1} inverts alpha_g.
  for (int g = 0; g < n; ++g)
    for (const auto& x : action.domains[G.inv(g)].space.basis())
      if (action.apply(G.inv(g), action.apply(g, x)) != x) {
        d.issues.push_back("alpha_" + gname(G.inv(g)) + " does not invert alpha_" +
                           gname(g));
        break;
      }
  return d;
}

Diagnostics validate(const GlobalAction& action) {
  Diagnostics d;
  const auto& G = action.group;
  const auto& A = action.algebra;
  int n = G.order();
  if (static_cast<int>(action.maps.size()) != n) {
    d.issues.push_back("one automorphism per group element required");
    return d;
  }
  if (action.maps[G.identity()] != mat_identity(A.dim()))
    d.issues.push_back("beta_e is not the identity");
  for (int g = 0; g < n; ++g) {
    if (!mat_invertible(action.maps[g], A.characteristic()))
      d.issues.push_back("beta_" + gname(g) + " is not bijective");
    for (int i = 0; i < A.dim(); ++i)
      for (int j = 0; j < A.dim(); ++j) {
        Vec lhs = action.apply(g, A.basis_product(i, j));
        Vec rhs = A.mul(action.apply(g, A.basis_vector(i)),
                        action.apply(g, A.basis_vector(j)));
        if (lhs != rhs) {
          d.issues.push_back("beta_" + gname(g) + " is not multiplicative");
          i = A.dim();
          break;
        }
      }
  }
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      if (mat_mul(action.maps[g], action.maps[h], A.characteristic()) !=
          action.maps[G.mul(g, h)]) {
        d.issues.push_back("beta_" + gname(g) + " ∘ beta_" + gname(h) +
                           " != beta_" + gname(G.mul(g, h)));
      }
  return d;
}

PartialRingAction as_partial(const GlobalAction& beta) {
  const auto& A = beta.algebra;
  IdealHandle full{Subspace::full(A.characteristic(), A.dim()), true, true};
  std::vector<IdealHandle> domains(beta.group.order(), full);
  std::vector<IdealIso> maps;
  maps.reserve(beta.group.order());
  for (int g = 0; g < beta.group.order(); ++g) {
    Mat images(A.dim());
    for (int i = 0; i < A.dim(); ++i) images[i] = beta.apply(g, A.basis_vector(i));
    maps.emplace_back(A, full, full, std::move(images));
  }
  return PartialRingAction{beta.group, A, std::move(domains), std::move(maps)};
}

PartialRingAction restrict_global(const GlobalAction& beta, const IdealHandle& ideal) {
  const auto& A = beta.algebra;
  if (!absorbs(A, ideal.space, true, true))
    throw NotAnIdeal("restrict_global: the subspace is not a two-sided ideal");
  int n = beta.group.order();
  const Subspace& a_space = ideal.space;
  std::vector<Subspace> beta_a;
  beta_a.reserve(n);
  for (int g = 0; g < n; ++g) {
    Subspace img(A.characteristic(), A.dim());
    for (const auto& x : a_space.basis()) img.insert(beta.apply(g, x));
    beta_a.push_back(a_space.intersect(img));
  }
  // The restricted algebra is the ideal itself, with induced constants.
  FiniteAlgebra restricted = subalgebra(A, a_space);
  std::vector<IdealHandle> domains;
  std::vector<IdealIso> maps;
  for (int g = 0; g < n; ++g) {
    // Express D_g in the coordinates of the restricted algebra.
    Subspace dg(A.characteristic(), restricted.dim());
    for (const auto& x : beta_a[g].basis()) dg.insert(*a_space.coordinates(x));
    domains.push_back(make_ideal(restricted, dg));
  }
  for (int g = 0; g < n; ++g) {
    Mat images;
    for (const auto& coords : domains[beta.group.inv(g)].space.basis()) {
      Vec x = a_space.from_coordinates(coords);
      Vec y = beta.apply(g, x);
      images.push_back(*a_space.coordinates(y));
    }
    maps.emplace_back(restricted, domains[beta.group.inv(g)], domains[g],
                      std::move(images));
  }
  return PartialRingAction{beta.group, std::move(restricted), std::move(domains),
                           std::move(maps)};
}

InjectivityResult is_injective(const PartialRingAction& action) {
  const auto& G = action.group;
  for (int g = 0; g < G.order(); ++g) {
    if (g == G.identity()) continue;
    Subspace k =
        action.domains[g].space.intersect(action.domains[G.inv(g)].space);
    if (k.is_zero()) continue;
    bool fixes = true;
    for (const auto& x : k.basis())
      if (action.apply(g, x) != x) { fixes = false; break; }
    if (fixes) return {false, g};
  }
  return {true, std::nullopt};
}

bool is_G_invariant(const PartialRingAction& action, const Subspace& ideal) {
  const auto& G = action.group;
  for (int g = 0; g < G.order(); ++g) {
    Subspace dom = ideal.intersect(action.domains[G.inv(g)].space);
    for (const auto& x : dom.basis())
      if (!ideal.contains(action.apply(g, x))) return false;
  }
  return true;
}

std::vector<Subspace> invariant_ideals(const PartialRingAction& action,
                                       int guard_dim) {
  std::vector<Subspace> out;
  for (const auto& ideal : all_ideals(action.algebra, guard_dim))
    if (is_G_invariant(action, ideal)) out.push_back(ideal);
  return out;
}

Subspace invariant_ideal_closure(const PartialRingAction& action,
                                 const std::vector<Vec>& generators) {
  const auto& A = action.algebra;
  const auto& G = action.group;
  Subspace s = ideal_closure(A, generators).space;
  bool grew = true;
  while (grew && !s.is_full()) {
    grew = false;
    for (int g = 0; g < G.order(); ++g) {
      Subspace dom = s.intersect(action.domains[G.inv(g)].space);
      for (const auto& x : dom.basis())
        if (s.insert(action.apply(g, x))) grew = true;
    }
    if (grew) {
      Subspace closed = ideal_closure(A, s.basis()).space;
      if (closed.dim() > s.dim()) s = std::move(closed);
    }
  }
  return s;
}

GSimpleResult is_G_simple(const PartialRingAction& action, int guard_dim) {
  const auto& A = action.algebra;
  if (A.dim() == 0) return {GSimpleStatus::NotGSimple, std::nullopt};
  if (A.dim() > guard_dim) return {GSimpleStatus::GuardExceeded, std::nullopt};
  for (const auto& v : all_vectors(A.characteristic(), A.dim())) {
    if (vec_is_zero(v)) continue;
    Subspace closure = invariant_ideal_closure(action, {v});
    if (!closure.is_full()) return {GSimpleStatus::NotGSimple, closure};
  }
  return {GSimpleStatus::GSimple, std::nullopt};
}

OuterAtResult is_outer_at(const PartialRingAction& action, const Vec& u,
                          uint64_t pair_guard) {
  OuterAtResult r{true, std::nullopt, 0, 0};
  const auto& G = action.group;
  for (int g = 0; g < G.order(); ++g) {
    if (g == G.identity()) continue;
    auto inner = is_inner_at(action.algebra, action.maps[g], u, pair_guard);
    switch (inner.verdict) {
      case Innerness::Inner:
        r.outer = false;
        if (!r.inner_g) r.inner_g = g;
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

OuterResult is_outer(const PartialRingAction& action, int guard_dim,
                     uint64_t pair_guard) {
  for (const auto& u : nonzero_idempotents(action.algebra, guard_dim))
    if (is_outer_at(action, u, pair_guard).outer) return {true, u};
  return {false, std::nullopt};
}

bool is_strongly_outer(const PartialRingAction& action, int guard_dim,
                       uint64_t pair_guard) {
  const auto& G = action.group;
  for (int g = 0; g < G.order(); ++g) {
    if (g == G.identity()) continue;
    auto r = is_strongly_outer(action.algebra, action.maps[g], guard_dim, pair_guard);
    if (!r.strongly_outer) return false;
  }
  return true;
}

bool all_domains_unital(const PartialRingAction& action) {
  for (const auto& d : action.domains) {
    if (d.space.is_zero()) continue;  // zero ideal: vacuously has local units
    FiniteAlgebra sub = subalgebra(action.algebra, d.space);
    if (!find_identity(sub)) return false;
  }
  return true;
}

}  // namespace psg
