#include "psg/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace psg {

std::vector<Mat> ring_isomorphisms(const FiniteAlgebra& src, const FiniteAlgebra& dst,
                                   int guard_dim) {
  if (src.characteristic() != dst.characteristic()) return {};
  if (src.dim() != dst.dim()) return {};
  int d = src.dim();
  int p = src.characteristic();
  if (d > guard_dim)
    throw GuardExceeded("ring_isomorphisms: dimension exceeds guard");
  if (d == 0) return {Mat{}};
  auto candidates = all_vectors(p, d);
  std::vector<Mat> out;
  Mat images;
  // Checks every multiplicative constraint whose data is already assigned.
  auto consistent = [&](int k) {
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        Vec prod = src.basis_product(i, j);
        bool ready = true;
        for (int m = k; m < d; ++m)
          if (prod[m] != 0) { ready = false; break; }
        if (!ready) continue;
        Vec mapped(d, 0);
        for (int m = 0; m < k; ++m) vec_axpy(mapped, prod[m], images[m], p);
        if (mapped != dst.mul(images[i], images[j])) return false;
      }
    return true;
  };
  Subspace spanned(p, d);
  std::function<void(int)> rec = [&](int k) {
    if (k == d) {
      out.push_back(images);
      return;
    }
    for (const auto& cand : candidates) {
      if (spanned.contains(cand)) continue;  // keeps the map injective
      images.push_back(cand);
      Subspace saved = spanned;
      spanned.insert(cand);
      if (consistent(k + 1)) rec(k + 1);
      spanned = std::move(saved);
      images.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<Mat> algebra_automorphisms(const FiniteAlgebra& A, int guard_dim) {
  return ring_isomorphisms(A, A, guard_dim);
}

std::vector<GlobalAction> enumerate_global_actions(const FiniteGroup& G,
                                                   const FiniteAlgebra& A,
                                                   int guard_dim) {
  auto auts = algebra_automorphisms(A, guard_dim);
  // ring_isomorphisms yields rows = images of basis vectors; as an operator
  // on column vectors that is the transpose.
  std::vector<Mat> ops;
  for (const auto& rows : auts) {
    Mat op(A.dim(), Vec(A.dim(), 0));
    for (int r = 0; r < A.dim(); ++r)
      for (int c = 0; c < A.dim(); ++c) op[c][r] = rows[r][c];
    ops.push_back(std::move(op));
  }
  int id_idx = -1;
  for (size_t i = 0; i < ops.size(); ++i)
    if (ops[i] == mat_identity(A.dim())) { id_idx = static_cast<int>(i); break; }
  int n = G.order();
  std::vector<GlobalAction> out;
  std::vector<int> assign(n, 0);
  assign[G.identity()] = id_idx;
  std::vector<int> free_slots;
  for (int g = 0; g < n; ++g)
    if (g != G.identity()) free_slots.push_back(g);
  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == free_slots.size()) {
      for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
          if (mat_mul(ops[assign[g]], ops[assign[h]], A.characteristic()) !=
              ops[assign[G.mul(g, h)]])
            return;
      std::vector<Mat> maps;
      for (int g = 0; g < n; ++g) maps.push_back(ops[assign[g]]);
      out.push_back(GlobalAction{G, A, std::move(maps)});
      return;
    }
    for (size_t a = 0; a < ops.size(); ++a) {
      assign[free_slots[k]] = static_cast<int>(a);
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

namespace {

// One choice for an inverse pair {g, g^-1}: the two domain subspaces and the
// ambient-coordinate images of alpha_g and alpha_{g^-1}.
struct PairChoice {
  Subspace dom_g;      // D_g
  Subspace dom_ginv;   // D_{g^-1}
  Mat fwd;             // images of D_{g^-1} basis under alpha_g (ambient)
  Mat bwd;             // images of D_g basis under alpha_{g^-1} (ambient)
};

Mat ambient_images(const Subspace& src, const Subspace& dst, const Mat& sub_rows) {
  Mat out;
  for (const auto& row : sub_rows) out.push_back(dst.from_coordinates(row));
  return out;
}

// Inverts a bijective linear map given by ambient images of src's basis.
Mat invert_images(int p, const Subspace& src, const Subspace& dst, const Mat& fwd) {
  int n = src.ambient();
  Mat cols(n, Vec(fwd.size(), 0));  // system matrix, columns = fwd images
  for (size_t c = 0; c < fwd.size(); ++c)
    for (int r = 0; r < n; ++r) cols[r][c] = fwd[c][r];
  Mat out;
  for (const auto& t : dst.basis()) {
    auto coeffs = solve(cols, t, static_cast<int>(fwd.size()), p);
    if (!coeffs) throw BadShape("invert_images: map is not onto the target");
    out.push_back(src.from_coordinates(*coeffs));
  }
  return out;
}

}  // namespace

std::vector<PartialRingAction> enumerate_partial_actions(const FiniteGroup& G,
                                                         const FiniteAlgebra& A,
                                                         bool unital_domains_only,
                                                         int guard_dim,
                                                         uint64_t bound) {
  int p = A.characteristic();
  auto ideals = all_ideals(A, guard_dim);
  if (unital_domains_only) {
    std::vector<Subspace> keep;
    for (const auto& s : ideals) {
      if (s.is_zero()) { keep.push_back(s); continue; }
      if (find_identity(subalgebra(A, s))) keep.push_back(s);
    }
    ideals = std::move(keep);
    bool a_ok = false;
    for (const auto& s : ideals) a_ok = a_ok || s.is_full();
    if (!a_ok) return {};  // D_e = A must itself be unital
  }
  // Inverse pairs of non-identity elements.
  std::vector<std::pair<int, int>> pairs;
  for (int g = 0; g < G.order(); ++g) {
    if (g == G.identity()) continue;
    int gi = G.inv(g);
    if (g <= gi) pairs.emplace_back(g, gi);
  }
  // Per-pair choices.
  std::vector<std::vector<PairChoice>> choices(pairs.size());
  uint64_t estimate = 1;
  for (size_t pi = 0; pi < pairs.size(); ++pi) {
    auto [g, gi] = pairs[pi];
    for (const auto& dst_sp : ideals) {
      for (const auto& src_sp : ideals) {
        if (src_sp.dim() != dst_sp.dim()) continue;
        if (g == gi && !(src_sp == dst_sp)) continue;
        FiniteAlgebra sub_src = subalgebra(A, src_sp);
        FiniteAlgebra sub_dst = subalgebra(A, dst_sp);
        for (const auto& iso : ring_isomorphisms(sub_src, sub_dst, guard_dim)) {
          Mat fwd = ambient_images(src_sp, dst_sp, iso);
          Mat bwd = invert_images(p, src_sp, dst_sp, fwd);
          choices[pi].push_back(PairChoice{dst_sp, src_sp, std::move(fwd),
                                           std::move(bwd)});
        }
      }
    }
    estimate *= std::max<uint64_t>(1, choices[pi].size());
    if (estimate > bound)
      throw BoundsTooLarge("enumerate_partial_actions", estimate);
  }
  IdealHandle full{Subspace::full(p, A.dim()), true, true};
  std::vector<PartialRingAction> out;
  std::vector<size_t> pick(pairs.size(), 0);
  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == pairs.size()) {
      std::vector<IdealHandle> domains(G.order(), full);
      std::vector<std::optional<IdealIso>> maps(G.order());
      maps[G.identity()] = IdealIso::identity(A, full);
      for (size_t pi = 0; pi < pairs.size(); ++pi) {
        const auto& c = choices[pi][pick[pi]];
        auto [g, gi] = pairs[pi];
        domains[g] = make_ideal(A, c.dom_g);
        domains[gi] = make_ideal(A, c.dom_ginv);
        maps[g] = IdealIso(A, domains[gi], domains[g], c.fwd);
        maps[gi] = IdealIso(A, domains[g], domains[gi], c.bwd);
      }
      std::vector<IdealIso> flat;
      for (auto& m : maps) flat.push_back(std::move(*m));
      PartialRingAction action{G, A, std::move(domains), std::move(flat)};
      if (validate(action).ok()) out.push_back(std::move(action));
      return;
    }
    for (pick[k] = 0; pick[k] < choices[k].size(); ++pick[k]) rec(k + 1);
  };
  if (std::all_of(choices.begin(), choices.end(),
                  [](const auto& c) { return !c.empty(); }))
    rec(0);
  return out;
}

namespace {

std::vector<std::vector<int>> subsets_of(int n) {
  std::vector<std::vector<int>> out;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int x = 0; x < n; ++x)
      if (mask & (1u << x)) s.push_back(x);
    out.push_back(std::move(s));
  }
  return out;
}

struct SetPairChoice {
  std::vector<int> x_g, x_ginv;      // X_g and X_{g^-1}
  std::vector<int> theta_g, theta_ginv;  // full-length maps, -1 off domain
};

}  // namespace

std::vector<SetPartialAction> enumerate_set_actions(const FiniteGroup& G, int points,
                                                    uint64_t bound) {
  auto subsets = subsets_of(points);
  std::vector<std::pair<int, int>> pairs;
  for (int g = 0; g < G.order(); ++g) {
    if (g == G.identity()) continue;
    int gi = G.inv(g);
    if (g <= gi) pairs.emplace_back(g, gi);
  }
  std::vector<std::vector<SetPairChoice>> choices(pairs.size());
  uint64_t estimate = 1;
  for (size_t pi = 0; pi < pairs.size(); ++pi) {
    auto [g, gi] = pairs[pi];
    for (const auto& src : subsets) {      // X_{g^-1}
      for (const auto& dst : subsets) {    // X_g
        if (src.size() != dst.size()) continue;
        if (g == gi && src != dst) continue;
        std::vector<int> target = dst;
        std::sort(target.begin(), target.end());
        do {
          std::vector<int> fwd(points, -1), bwd(points, -1);
          for (size_t i = 0; i < src.size(); ++i) {
            fwd[src[i]] = target[i];
            bwd[target[i]] = src[i];
          }
          choices[pi].push_back(SetPairChoice{dst, src, fwd, bwd});
        } while (std::next_permutation(target.begin(), target.end()));
      }
    }
    estimate *= std::max<uint64_t>(1, choices[pi].size());
    if (estimate > bound) throw BoundsTooLarge("enumerate_set_actions", estimate);
  }
  std::vector<int> everything(points);
  std::iota(everything.begin(), everything.end(), 0);
  std::vector<int> id_map(points);
  std::iota(id_map.begin(), id_map.end(), 0);
  std::vector<SetPartialAction> out;
  std::vector<size_t> pick(pairs.size(), 0);
  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == pairs.size()) {
      SetPartialAction act{points, G,
                           std::vector<std::vector<int>>(G.order(), everything),
                           std::vector<std::vector<int>>(G.order(), id_map)};
      for (size_t pi = 0; pi < pairs.size(); ++pi) {
        const auto& c = choices[pi][pick[pi]];
        auto [g, gi] = pairs[pi];
        act.subsets[g] = c.x_g;
        act.subsets[gi] = c.x_ginv;
        act.theta[g] = c.theta_g;
        act.theta[gi] = c.theta_ginv;
      }
      if (validate_set_action(act).ok()) out.push_back(std::move(act));
      return;
    }
    for (pick[k] = 0; pick[k] < choices[k].size(); ++pick[k]) rec(k + 1);
  };
  rec(0);
  return out;
}

}  // namespace psg
