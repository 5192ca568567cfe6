#include "psg/suites.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <thread>

#include "psg/enumerate.hpp"
#include "psg/skew.hpp"

namespace psg {

namespace {

enum class ItemStatus { Pass, Fail, Skip, GuardSkip };

struct Item {
  ItemStatus status = ItemStatus::Pass;
  std::string message;
};

Item pass() { return {ItemStatus::Pass, ""}; }
Item fail(std::string msg) { return {ItemStatus::Fail, std::move(msg)}; }
Item skip(std::string msg) { return {ItemStatus::Skip, std::move(msg)}; }

// Runs fn(i) for i in [0, n) on `jobs` workers; every item writes only its
// own slot, so the aggregate is independent of scheduling.
template <typename F>
void parallel_for(int n, int jobs, F&& fn) {
  jobs = std::max(1, std::min(jobs, std::max(1, n)));
  if (jobs == 1 || n <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> workers;
  for (int t = 0; t < jobs; ++t)
    workers.emplace_back([&] {
      for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
    });
  for (auto& w : workers) w.join();
}

template <typename F>
SuiteReport run_items(const std::string& name, int n, int jobs, F&& item) {
  std::vector<Item> results(n);
  parallel_for(n, jobs, [&](int i) {
    try {
      results[i] = item(i);
    } catch (const GuardExceeded& e) {
      results[i] = {ItemStatus::GuardSkip, e.what()};
    } catch (const std::exception& e) {
      results[i] = fail(std::string("exception: ") + e.what());
    }
  });
  SuiteReport r;
  r.suite = name;
  r.instances = n;
  for (const auto& it : results) {
    switch (it.status) {
      case ItemStatus::Pass: ++r.passes; break;
      case ItemStatus::Skip: ++r.skipped; break;
      case ItemStatus::GuardSkip: ++r.guard_skips; r.failures.push_back(it.message); break;
      case ItemStatus::Fail: r.failures.push_back(it.message); break;
    }
  }
  return r;
}

std::string show_vec(const Vec& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

// --- shared instance builders ---------------------------------------------

// The fixed swap instance: functions {0,1,2} -> F_2 with the ring
// automorphism exchanging points 1 and 2, as a full-ideal isomorphism.
struct SwapInstance {
  FiniteAlgebra S;
  IdealIso swap;
  Vec all_ones, point0;
};

SwapInstance swap_instance() {
  FiniteAlgebra S = function_algebra(3, field_algebra(2));
  IdealHandle full{Subspace::full(2, 3), true, true};
  Mat images = {S.basis_vector(0), S.basis_vector(2), S.basis_vector(1)};
  IdealIso swap(S, full, full, images);
  return SwapInstance{std::move(S), std::move(swap), Vec{1, 1, 1}, Vec{1, 0, 0}};
}

struct RingInstance {
  std::string label;
  PartialRingAction action;
};

// Criterion set shared by the simplicity, graded-center, and
// injectivity-graded suites: all unital-domain partial actions of Z/2 and
// all global actions of Z/3 on the ring catalog.
std::vector<RingInstance> sweep_ring_instances(int guard_dim) {
  std::vector<RingInstance> out;
  FiniteGroup z2 = FiniteGroup::cyclic(2);
  FiniteGroup z3 = FiniteGroup::cyclic(3);
  for (const auto& [name, A] : catalog_rings()) {
    auto partials = enumerate_partial_actions(z2, A, /*unital_domains_only=*/true,
                                              guard_dim);
    for (size_t i = 0; i < partials.size(); ++i)
      out.push_back(RingInstance{"Z2 partial #" + std::to_string(i) + " on " + name,
                                 std::move(partials[i])});
    auto globals = enumerate_global_actions(z3, A);
    for (size_t i = 0; i < globals.size(); ++i)
      out.push_back(RingInstance{"Z3 global #" + std::to_string(i) + " on " + name,
                                 as_partial(globals[i])});
  }
  return out;
}

struct SetInstance {
  std::string label;
  SetPartialAction action;
};

std::vector<SetInstance> sweep_set_instances(int max_points) {
  std::vector<SetInstance> out;
  for (int n : {2, 3}) {
    FiniteGroup G = FiniteGroup::cyclic(n);
    for (int points = 1; points <= max_points; ++points) {
      auto acts = enumerate_set_actions(G, points);
      for (size_t i = 0; i < acts.size(); ++i)
        out.push_back(SetInstance{"Z" + std::to_string(n) + " on " +
                                      std::to_string(points) + " points #" +
                                      std::to_string(i),
                                  std::move(acts[i])});
    }
  }
  return out;
}

// All isomorphisms between equal-dimension two-sided ideals of A, in
// ambient coordinates.
std::vector<IdealIso> all_ideal_isos(const FiniteAlgebra& A, int guard_dim) {
  std::vector<IdealIso> out;
  auto ideals = all_ideals(A, guard_dim);
  for (const auto& src : ideals)
    for (const auto& dst : ideals) {
      if (src.dim() != dst.dim()) continue;
      FiniteAlgebra sub_src = subalgebra(A, src);
      FiniteAlgebra sub_dst = subalgebra(A, dst);
      for (const auto& rows : ring_isomorphisms(sub_src, sub_dst, guard_dim)) {
        Mat images;
        for (const auto& r : rows) images.push_back(dst.from_coordinates(r));
        out.emplace_back(A, make_ideal(A, src), make_ideal(A, dst),
                         std::move(images));
      }
    }
  return out;
}

// --- suite: swap3 ----------------------------------------------------------
// Fixed instance: the point-swap on functions {0,1,2} -> F_2 is inner at
// the indicator of the fixed point and outer at the all-ones idempotent.

SuiteReport suite_swap3(const Guards& guards, int jobs) {
  auto inst = swap_instance();
  return run_items("swap3", 2, jobs, [&](int i) -> Item {
    if (i == 0) {
      auto r = is_inner_at(inst.S, inst.swap, inst.point0, guards.pairs);
      if (r.verdict != Innerness::Inner)
        return fail("expected Inner at the fixed-point indicator");
      if (!r.witness || !verify_innerness_witness(inst.S, inst.swap, *r.witness))
        return fail("inner witness at the fixed-point indicator does not verify");
      return pass();
    }
    auto r = is_inner_at(inst.S, inst.swap, inst.all_ones, guards.pairs);
    if (r.verdict != Innerness::Outer)
      return fail("expected Outer at the all-ones idempotent");
    return pass();
  });
}

// --- suite: hom-count ------------------------------------------------------
// For idempotents u, v: the right-ideal homomorphisms uS -> vS are exactly
// the left multiplications by elements of vSu, counted through an
// independent function-table oracle, and composition matches corner
// multiplication.

Item check_hom_counts(const std::string& name, const FiniteAlgebra& A,
                      int guard_dim) {
  auto idems = idempotents(A, guard_dim);
  std::vector<std::vector<Vec>> uS_elems(idems.size());
  for (size_t i = 0; i < idems.size(); ++i)
    uS_elems[i] = right_ideal(A, idems[i]).elements();
  for (size_t iu = 0; iu < idems.size(); ++iu)
    for (size_t iv = 0; iv < idems.size(); ++iv) {
      const Vec& u = idems[iu];
      const Vec& v = idems[iv];
      // Independent oracle: distinct tables of x -> c0*x on uS, c0 in vS.
      std::set<std::vector<Vec>> tables;
      for (const auto& c0 : right_ideal(A, v).elements()) {
        std::vector<Vec> table;
        for (const auto& x : uS_elems[iu]) table.push_back(A.mul(c0, x));
        tables.insert(std::move(table));
      }
      uint64_t vSu = corner_space(A, v, u).size();
      if (tables.size() != vSu)
        return fail(name + ": |Hom(uS,vS)| = " + std::to_string(tables.size()) +
                    " but |vSu| = " + std::to_string(vSu) + " for u=" +
                    show_vec(u) + ", v=" + show_vec(v));
      auto lambda_values = right_ideal_homs(A, u, v);
      if (lambda_values.size() != tables.size())
        return fail(name + ": lambda-value count " +
                    std::to_string(lambda_values.size()) +
                    " disagrees with the table oracle for u=" + show_vec(u) +
                    ", v=" + show_vec(v));
    }
  // Composition corresponds to corner multiplication: beta_d ∘ beta_c =
  // beta_{dc}, with dc landing in wSu.
  for (size_t iu = 0; iu < idems.size(); ++iu)
    for (size_t iv = 0; iv < idems.size(); ++iv)
      for (size_t iw = 0; iw < idems.size(); ++iw) {
        const Vec& u = idems[iu];
        const Vec& v = idems[iv];
        const Vec& w = idems[iw];
        Subspace wSu = corner_space(A, w, u);
        Mat uS_basis = right_ideal(A, u).basis();
        for (const auto& c : corner_space(A, v, u).elements())
          for (const auto& d : corner_space(A, w, v).elements()) {
            Vec dc = A.mul(d, c);
            if (!wSu.contains(dc))
              return fail(name + ": composite value d*c escapes wSu");
            for (const auto& x : uS_basis)
              if (A.mul(d, A.mul(c, x)) != A.mul(dc, x))
                return fail(name + ": beta_d ∘ beta_c != beta_{dc} at x=" +
                            show_vec(x));
          }
      }
  return pass();
}

SuiteReport suite_hom_count(const Guards& guards, int jobs) {
  auto catalog = catalog_rings();
  return run_items("hom-count", static_cast<int>(catalog.size()), jobs,
                   [&](int i) -> Item {
                     return check_hom_counts(catalog[i].first, catalog[i].second,
                                             guards.dim);
                   });
}

// --- suite: inner-descent --------------------------------------------------
// Innerness descends along the idempotent order: inner at u and v <= u
// imply inner at v. The reverse implication fails on the swap3 instance.

SuiteReport suite_inner_descent(const Guards& guards, int jobs) {
  struct Entry {
    std::string label;
    const FiniteAlgebra* A;
    IdealIso iso;
  };
  auto catalog = catalog_rings();
  std::vector<Entry> entries;
  for (const auto& [name, A] : catalog) {
    auto isos = all_ideal_isos(A, guards.dim);
    for (size_t i = 0; i < isos.size(); ++i)
      entries.push_back(Entry{name + " iso #" + std::to_string(i), &A,
                              std::move(isos[i])});
  }
  int n = static_cast<int>(entries.size()) + 1;  // + the reversal check
  auto inst = swap_instance();
  SuiteReport r = run_items("inner-descent", n, jobs, [&](int i) -> Item {
    if (i == n - 1) {
      // Reverse implication must fail somewhere: the swap is inner at the
      // smaller idempotent yet outer at the larger one.
      bool inner_small =
          is_inner_at(inst.S, inst.swap, inst.point0, guards.pairs).verdict ==
          Innerness::Inner;
      bool outer_large =
          is_inner_at(inst.S, inst.swap, inst.all_ones, guards.pairs).verdict ==
          Innerness::Outer;
      if (!(inner_small && outer_large))
        return fail("the reverse implication unexpectedly holds on the swap "
                    "instance");
      return pass();
    }
    const auto& entry = entries[i];
    const auto& A = *entry.A;
    auto idems = nonzero_idempotents(A, guards.dim);
    for (const auto& u : idems) {
      if (is_inner_at(A, entry.iso, u, guards.pairs).verdict != Innerness::Inner)
        continue;
      for (const auto& v : idems) {
        if (!idempotent_leq(A, u, v)) continue;  // tests v <= u
        if (is_inner_at(A, entry.iso, v, guards.pairs).verdict != Innerness::Inner)
          return fail(entry.label + ": inner at u=" + show_vec(u) +
                      " but not inner at v=" + show_vec(v) + " <= u");
      }
    }
    return pass();
  });
  return r;
}

// --- suite: simplicity -----------------------------------------------------
// For every outer instance of the ring sweep (abelian group, unital
// domains): the skew ring is simple iff the base ring is G-simple.

SuiteReport suite_simplicity(const Guards& guards, int jobs) {
  auto instances = sweep_ring_instances(guards.dim);
  return run_items("simplicity", static_cast<int>(instances.size()), jobs,
                   [&](int i) -> Item {
                     const auto& inst = instances[i];
                     if (!is_outer(inst.action, guards.dim, guards.pairs).outer)
                       return skip(inst.label + ": not outer");
                     auto r = verify_main(inst.action, guards.dim, guards.pairs);
                     if (!r.holds)
                       return fail(inst.label + ": simple=" +
                                   (r.simple ? "true" : "false") + " but G-simple=" +
                                   (r.g_simple ? "true" : "false"));
                     return pass();
                   });
}

// --- suite: graded-center --------------------------------------------------
// For every skew ring of the ring sweep and every nonzero idempotent u of
// the identity component: simple iff graded simple and Z(uRu) is a field.

SuiteReport suite_graded_center(const Guards& guards, int jobs) {
  auto instances = sweep_ring_instances(guards.dim);
  return run_items("graded-center", static_cast<int>(instances.size()), jobs,
                   [&](int i) -> Item {
                     const auto& inst = instances[i];
                     GradedSkewRing R = build_skew_ring(inst.action, guards.dim);
                     if (R.ring().dim() == 0)
                       return skip(inst.label + ": zero skew ring");
                     auto report = verify_gather(R, guards.dim);
                     if (!report.holds) {
                       std::string detail;
                       for (const auto& row : report.rows)
                         if ((report.simple) !=
                             (report.graded_simple && row.center_is_field)) {
                           detail = " at u=" + show_vec(row.u);
                           break;
                         }
                       return fail(inst.label + ": equivalence fails" + detail +
                                   " (simple=" + (report.simple ? "true" : "false") +
                                   ", graded=" +
                                   (report.graded_simple ? "true" : "false") + ")");
                     }
                     return pass();
                   });
}

// --- suite: injectivity-graded ---------------------------------------------
// On the ring sweep: a simple skew ring forces an injective action, and
// graded simplicity coincides with G-simplicity (all domains unital).

SuiteReport suite_injectivity_graded(const Guards& guards, int jobs) {
  auto instances = sweep_ring_instances(guards.dim);
  return run_items(
      "injectivity-graded", static_cast<int>(instances.size()), jobs,
      [&](int i) -> Item {
        const auto& inst = instances[i];
        GradedSkewRing R = build_skew_ring(inst.action, guards.dim);
        if (R.ring().dim() == 0) return skip(inst.label + ": zero skew ring");
        auto simple = is_simple(R.ring(), guards.dim);
        if (simple.status == SimpleStatus::GuardExceeded)
          return {ItemStatus::GuardSkip, inst.label + ": simplicity guard"};
        if (simple.simple() && !is_injective(inst.action).injective)
          return fail(inst.label + ": simple skew ring from a non-injective action");
        auto graded = is_graded_simple(R, guards.dim);
        auto gsimple = is_G_simple(inst.action, guards.dim);
        if (graded.status == GradedSimpleStatus::GuardExceeded ||
            gsimple.status == GSimpleStatus::GuardExceeded)
          return {ItemStatus::GuardSkip, inst.label + ": guard"};
        if (graded.graded_simple() != gsimple.g_simple())
          return fail(inst.label + ": graded-simple=" +
                      (graded.graded_simple() ? "true" : "false") +
                      " but G-simple=" + (gsimple.g_simple() ? "true" : "false"));
        return pass();
      });
}

// --- suite: set-dynamics ---------------------------------------------------
// Three-way equivalence for induced set actions: skew ring simple iff the
// action is minimal and free iff it is minimal and faithful.

SuiteReport suite_set_dynamics(const Guards& guards, int jobs) {
  struct Job {
    std::string label;
    const SetPartialAction* action;
    const FiniteAlgebra* coeff;
  };
  auto sets = sweep_set_instances(3);
  static const FiniteAlgebra f2 = field_algebra(2);
  static const FiniteAlgebra m2 = matrix_algebra(2, 2);
  std::vector<Job> work;
  for (const auto& inst : sets) {
    work.push_back(Job{inst.label + " over F2", &inst.action, &f2});
    if (inst.action.points <= 2)
      work.push_back(Job{inst.label + " over M2(F2)", &inst.action, &m2});
  }
  // One induced skew ring (the trivial Z/3 action on two points over
  // M_2(F_2)) has dimension 24; its simplicity sweep exits early on the
  // first proper ideal, so the element guard is widened rather than skipped.
  int wide_guard = std::max(guards.dim, 24);
  return run_items("set-dynamics", static_cast<int>(work.size()), jobs,
                   [&](int i) -> Item {
                     const auto& job = work[i];
                     auto r = verify_setdyn(*job.action, *job.coeff, wide_guard);
                     if (!r.holds)
                       return fail(job.label + ": simple=" +
                                   (r.simple ? "true" : "false") + ", minimal=" +
                                   (r.minimal ? "true" : "false") + ", free=" +
                                   (r.free_ ? "true" : "false") + ", faithful=" +
                                   (r.faithful ? "true" : "false"));
                     return pass();
                   });
}

// --- suite: globalization --------------------------------------------------
// For a global action restricted to an ideal: the restricted map is inner
// at an idempotent of the ideal exactly when the global map is.

SuiteReport suite_globalization(const Guards& guards, int jobs) {
  struct Entry {
    std::string label;
    const FiniteAlgebra* A;
    GlobalAction beta;
  };
  auto catalog = catalog_rings();
  std::vector<Entry> entries;
  for (int n : {2, 3}) {
    FiniteGroup G = FiniteGroup::cyclic(n);
    for (const auto& [name, A] : catalog) {
      auto globals = enumerate_global_actions(G, A);
      for (size_t i = 0; i < globals.size(); ++i)
        entries.push_back(Entry{"Z" + std::to_string(n) + " global #" +
                                    std::to_string(i) + " on " + name,
                                &A, std::move(globals[i])});
    }
  }
  return run_items(
      "globalization", static_cast<int>(entries.size()), jobs, [&](int i) -> Item {
        const auto& entry = entries[i];
        const auto& A = *entry.A;
        const auto& G = entry.beta.group;
        IdealHandle full{Subspace::full(A.characteristic(), A.dim()), true, true};
        // beta_g as full-ideal isomorphisms.
        std::vector<IdealIso> beta_iso;
        for (int g = 0; g < G.order(); ++g) {
          Mat rows;
          for (int r = 0; r < A.dim(); ++r)
            rows.push_back(entry.beta.apply(g, A.basis_vector(r)));
          beta_iso.emplace_back(A, full, full, std::move(rows));
        }
        for (const auto& ideal : all_ideals(A, guards.dim)) {
          if (ideal.is_zero()) continue;
          PartialRingAction alpha = restrict_global(entry.beta, make_ideal(A, ideal));
          for (const auto& u : nonzero_idempotents(A, guards.dim)) {
            if (!ideal.contains(u)) continue;
            Vec u_local = *ideal.coordinates(u);
            for (int g = 0; g < G.order(); ++g) {
              if (g == G.identity()) continue;
              bool inner_alpha =
                  is_inner_at(alpha.algebra, alpha.maps[g], u_local,
                              guards.pairs).verdict == Innerness::Inner;
              bool inner_beta =
                  is_inner_at(A, beta_iso[g], u, guards.pairs).verdict ==
                  Innerness::Inner;
              if (inner_alpha != inner_beta)
                return fail(entry.label + ": at u=" + show_vec(u) + ", g=" +
                            std::to_string(g) + ": restricted inner=" +
                            (inner_alpha ? "true" : "false") + ", global inner=" +
                            (inner_beta ? "true" : "false"));
            }
          }
        }
        return pass();
      });
}

// --- suite: faithful-minimal-free ------------------------------------------
// For abelian set actions: faithful and minimal together imply free.

SuiteReport suite_faithful_minimal_free(const Guards&, int jobs) {
  auto sets = sweep_set_instances(3);
  return run_items("faithful-minimal-free", static_cast<int>(sets.size()), jobs,
                   [&](int i) -> Item {
                     const auto& inst = sets[i];
                     if (!is_faithful(inst.action).holds ||
                         !is_minimal(inst.action).minimal)
                       return pass();  // hypothesis empty, implication holds
                     if (!is_free(inst.action).holds)
                       return fail(inst.label +
                                   ": faithful and minimal but not free");
                     return pass();
                   });
}

}  // namespace

std::vector<std::pair<std::string, FiniteAlgebra>> catalog_rings() {
  FiniteAlgebra f2 = field_algebra(2);
  return {
      {"F2", f2},
      {"F2^2", product_algebra({f2, f2})},
      {"F2^3", product_algebra({f2, f2, f2})},
      {"M2(F2)", matrix_algebra(2, 2)},
  };
}

std::vector<std::string> suite_names() {
  return {"swap3",          "hom-count",          "inner-descent",
          "simplicity",     "graded-center",      "injectivity-graded",
          "set-dynamics",   "globalization",      "faithful-minimal-free"};
}

bool is_suite_name(const std::string& name) {
  auto names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

SuiteReport run_suite(const std::string& name, const Guards& guards, int jobs) {
  if (name == "swap3") return suite_swap3(guards, jobs);
  if (name == "hom-count") return suite_hom_count(guards, jobs);
  if (name == "inner-descent") return suite_inner_descent(guards, jobs);
  if (name == "simplicity") return suite_simplicity(guards, jobs);
  if (name == "graded-center") return suite_graded_center(guards, jobs);
  if (name == "injectivity-graded") return suite_injectivity_graded(guards, jobs);
  if (name == "set-dynamics") return suite_set_dynamics(guards, jobs);
  if (name == "globalization") return suite_globalization(guards, jobs);
  if (name == "faithful-minimal-free")
    return suite_faithful_minimal_free(guards, jobs);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

nlohmann::json suite_report_json(const SuiteReport& r) {
  nlohmann::json out;
  out["suite"] = r.suite;
  out["instances"] = r.instances;
  out["passes"] = r.passes;
  out["skipped"] = r.skipped;
  out["guard_skips"] = r.guard_skips;
  out["failures"] = r.failures;
  out["notes"] = r.notes;
  out["holds"] = r.holds();
  return out;
}

std::string suite_report_text(const SuiteReport& r) {
  std::ostringstream out;
  out << "suite " << r.suite << ": " << r.instances << " instances, " << r.passes
      << " passes, " << r.skipped << " skipped, " << r.guard_skips
      << " guard-skips — " << (r.holds() ? "PASS" : "FAIL") << "\n";
  for (const auto& f : r.failures) out << "  failure: " << f << "\n";
  for (const auto& n : r.notes) out << "  note: " << n << "\n";
  return out.str();
}

}  // namespace psg
