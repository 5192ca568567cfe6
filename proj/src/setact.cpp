#include "psg/setact.hpp"

#include <algorithm>

namespace psg {

namespace {
std::string gname(int g) { return "g" + std::to_string(g); }

bool sorted_contains(const std::vector<int>& s, int x) {
  return std::binary_search(s.begin(), s.end(), x);
}
}  // namespace

std::vector<int> SetPartialAction::theta_domain(int g) const {
  std::vector<int> out;
  for (int x = 0; x < points; ++x)
    if (theta[g][x] >= 0) out.push_back(x);
  return out;
}

Diagnostics validate_set_action(const SetPartialAction& act) {
  Diagnostics d;
  const auto& G = act.group;
  int n = G.order();
  if (act.points < 1) {
    d.issues.push_back("the point set must be non-empty");
    return d;
  }
  if (static_cast<int>(act.subsets.size()) != n ||
      static_cast<int>(act.theta.size()) != n) {
    d.issues.push_back("one subset and one map per group element required");
    return d;
  }
  for (int g = 0; g < n; ++g) {
    if (static_cast<int>(act.theta[g].size()) != act.points) {
      d.issues.push_back("theta_" + gname(g) + " has the wrong length");
      return d;
    }
    for (int x : act.subsets[g])
      if (x < 0 || x >= act.points) {
        d.issues.push_back("X_" + gname(g) + " contains an out-of-range point");
        return d;
      }
    if (!std::is_sorted(act.subsets[g].begin(), act.subsets[g].end())) {
      d.issues.push_back("X_" + gname(g) + " must be sorted");
      return d;
    }
    for (int v : act.theta[g])
      if (v < -1 || v >= act.points) {
        d.issues.push_back("theta_" + gname(g) + " maps to an out-of-range point");
        return d;
      }
  }
  int e = G.identity();
  if (static_cast<int>(act.subsets[e].size()) != act.points)
    d.issues.push_back("axiom (i): X_e != X");
  for (int x = 0; x < act.points; ++x)
    if (act.theta[e][x] != x) {
      d.issues.push_back("axiom (i): theta_e is not the identity");
      break;
    }
  // theta_g must be a bijection X_{g^-1} -> X_g.
  for (int g = 0; g < n; ++g) {
    const auto& dom = act.subsets[G.inv(g)];
    const auto& img = act.subsets[g];
    std::vector<int> seen;
    bool ok = true;
    for (int x = 0; x < act.points; ++x) {
      bool in_dom = sorted_contains(dom, x);
      if (in_dom != (act.theta[g][x] >= 0)) {
        d.issues.push_back("theta_" + gname(g) + " domain differs from X_" +
                           gname(G.inv(g)));
        ok = false;
        break;
      }
      if (act.theta[g][x] >= 0) {
        if (!sorted_contains(img, act.theta[g][x])) {
          d.issues.push_back("theta_" + gname(g) + " maps outside X_" + gname(g));
          ok = false;
          break;
        }
        seen.push_back(act.theta[g][x]);
      }
    }
    if (!ok) continue;
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
      d.issues.push_back("theta_" + gname(g) + " is not injective");
    else if (seen != img)
      d.issues.push_back("theta_" + gname(g) + " is not onto X_" + gname(g));
  }
  if (!d.ok()) return d;
  // Axiom (ii): theta_g(X_{g^-1} ∩ X_h) = X_g ∩ X_{gh}.
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      std::vector<int> lhs, rhs;
      for (int x = 0; x < act.points; ++x) {
        if (act.theta[g][x] >= 0 && sorted_contains(act.subsets[h], x))
          lhs.push_back(act.theta[g][x]);
        if (sorted_contains(act.subsets[g], x) &&
            sorted_contains(act.subsets[G.mul(g, h)], x))
          rhs.push_back(x);
      }
      std::sort(lhs.begin(), lhs.end());
      if (lhs != rhs)
        d.issues.push_back("axiom (ii) fails for (g,h) = (" + gname(g) + "," +
                           gname(h) + ")");
    }
  // Axiom (iii): theta_g(theta_h(x)) = theta_{gh}(x).
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      int gh = G.mul(g, h);
      for (int x = 0; x < act.points; ++x) {
        if (act.theta[h][x] < 0 || act.theta[gh][x] < 0) continue;
        int y = act.theta[h][x];
        if (act.theta[g][y] < 0 || act.theta[g][y] != act.theta[gh][x]) {
          d.issues.push_back("axiom (iii) fails for (g,h,x) = (" + gname(g) + "," +
                             gname(h) + "," + std::to_string(x) + ")");
          break;
        }
      }
    }
  return d;
}

SetPropertyResult is_faithful(const SetPartialAction& act) {
  const auto& G = act.group;
  for (int g = 0; g < G.order(); ++g) {
    if (g == G.identity()) continue;
    // g witnesses unfaithfulness only when theta_g is the identity on a
    // nonempty domain; an empty domain is vacuously faithful (otherwise
    // injectivity of the induced ring action could not imply faithfulness).
    bool nonempty = false, moves = false;
    for (int x = 0; x < act.points; ++x)
      if (act.theta[g][x] >= 0) {
        nonempty = true;
        if (act.theta[g][x] != x) { moves = true; break; }
      }
    if (nonempty && !moves) return {false, g, std::nullopt};
  }
  return {true, std::nullopt, std::nullopt};
}

SetPropertyResult is_free(const SetPartialAction& act) {
  const auto& G = act.group;
  for (int g = 0; g < G.order(); ++g) {
    if (g == G.identity()) continue;
    for (int x = 0; x < act.points; ++x)
      if (act.theta[g][x] == x) return {false, g, x};
  }
  return {true, std::nullopt, std::nullopt};
}

std::vector<int> forward_closure(const SetPartialAction& act,
                                 const std::vector<int>& seed) {
  std::vector<bool> in(act.points, false);
  std::vector<int> work = seed;
  for (int x : seed) in[x] = true;
  while (!work.empty()) {
    int x = work.back();
    work.pop_back();
    for (int g = 0; g < act.group.order(); ++g) {
      int y = act.theta[g][x];
      if (y >= 0 && !in[y]) {
        in[y] = true;
        work.push_back(y);
      }
    }
  }
  std::vector<int> out;
  for (int x = 0; x < act.points; ++x)
    if (in[x]) out.push_back(x);
  return out;
}

MinimalityResult is_minimal(const SetPartialAction& act) {
  for (int x = 0; x < act.points; ++x) {
    auto orbit = forward_closure(act, {x});
    if (static_cast<int>(orbit.size()) != act.points)
      return {false, std::move(orbit)};
  }
  return {true, std::nullopt};
}

std::vector<std::vector<int>> invariant_subsets(const SetPartialAction& act) {
  if (act.points > 16) throw GuardExceeded("invariant_subsets: too many points");
  std::vector<std::vector<int>> out;
  for (uint32_t mask = 0; mask < (1u << act.points); ++mask) {
    bool invariant = true;
    for (int g = 0; g < act.group.order() && invariant; ++g)
      for (int x = 0; x < act.points; ++x) {
        if (!(mask & (1u << x))) continue;
        int y = act.theta[g][x];
        if (y >= 0 && !(mask & (1u << y))) { invariant = false; break; }
      }
    if (invariant) {
      std::vector<int> s;
      for (int x = 0; x < act.points; ++x)
        if (mask & (1u << x)) s.push_back(x);
      out.push_back(std::move(s));
    }
  }
  return out;
}

PartialRingAction induce_action(const SetPartialAction& act,
                                const FiniteAlgebra& coeff, int guard_dim) {
  if (act.points * coeff.dim() > guard_dim)
    throw GuardExceeded("induce_action: function algebra dimension exceeds guard");
  FiniteAlgebra A = function_algebra(act.points, coeff);
  const auto& G = act.group;
  int db = coeff.dim();
  auto slot = [db](int x, int j) { return x * db + j; };
  std::vector<IdealHandle> domains;
  for (int g = 0; g < G.order(); ++g) {
    Subspace s(A.characteristic(), A.dim());
    for (int x : act.subsets[g])
      for (int j = 0; j < db; ++j) s.insert(A.basis_vector(slot(x, j)));
    domains.push_back(IdealHandle{std::move(s), true, true});
  }
  std::vector<IdealIso> maps;
  for (int g = 0; g < G.order(); ++g) {
    // alpha_g(f) = f ∘ theta_{g^-1} sends the basis function supported at x
    // to the one supported at theta_g(x).
    Mat images;
    for (const auto& bvec : domains[G.inv(g)].space.basis()) {
      Vec img(A.dim(), 0);
      for (int x = 0; x < act.points; ++x)
        for (int j = 0; j < db; ++j) {
          uint8_t c = bvec[slot(x, j)];
          if (c == 0) continue;
          int y = act.theta[g][x];
          if (y < 0)
            throw BadShape("induce_action: domain basis escapes X_{g^-1}");
          img[slot(y, j)] = fp_add(img[slot(y, j)], c, A.characteristic());
        }
      images.push_back(std::move(img));
    }
    maps.emplace_back(A, domains[G.inv(g)], domains[g], std::move(images));
  }
  return PartialRingAction{G, std::move(A), std::move(domains), std::move(maps)};
}

SetDynReport verify_setdyn(const SetPartialAction& act, const FiniteAlgebra& coeff,
                           int guard_dim) {
  if (!act.group.abelian())
    throw PreconditionFailed("verify_setdyn: the group is not abelian");
  if (!find_identity(coeff))
    throw PreconditionFailed("verify_setdyn: the coefficient ring is not unital");
  auto coeff_simple = is_simple(coeff, guard_dim);
  if (!coeff_simple.simple())
    throw PreconditionFailed("verify_setdyn: the coefficient ring is not simple");
  PartialRingAction alpha = induce_action(act, coeff, guard_dim);
  GradedSkewRing R = build_skew_ring(alpha, guard_dim);
  auto simple = is_simple(R.ring(), guard_dim);
  if (simple.status == SimpleStatus::GuardExceeded)
    throw GuardExceeded("verify_setdyn: simplicity sweep exceeds guard");
  SetDynReport r;
  r.simple = simple.simple();
  r.minimal = is_minimal(act).minimal;
  r.free_ = is_free(act).holds;
  r.faithful = is_faithful(act).holds;
  bool two = r.minimal && r.free_;
  bool three = r.minimal && r.faithful;
  r.holds = (r.simple == two) && (two == three);
  return r;
}

}  // namespace psg
