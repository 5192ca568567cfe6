// psg — partial skew group ring workbench.
//
// Subcommands: validate, analyze, skew, induce, verify, enumerate.
// Exit codes: 0 = all checks pass, 1 = a property or law assertion failed,
// 2 = usage or parse error, 3 = a guard or bound was exceeded.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "psg/enumerate.hpp"
#include "psg/io.hpp"
#include "psg/skew.hpp"
#include "psg/suites.hpp"

namespace {

constexpr const char* kEngineVersion = "psg 1.0.0";

using psg::json;

json vec_json(const psg::Vec& v) {
  json out = json::array();
  for (uint8_t x : v) out.push_back(static_cast<int>(x));
  return out;
}

json subspace_json(const psg::Subspace& s) {
  json out = json::array();
  for (const auto& row : s.basis()) out.push_back(vec_json(row));
  return out;
}

std::string guard_note(int dim) {
  return "exhaustively verified within guard d <= " + std::to_string(dim);
}

void write_report(const json& report, const std::string& out_path) {
  if (out_path.empty()) return;
  std::ofstream out(out_path, std::ios::binary);
  out << report.dump(2) << "\n";
}

// Shared analysis of a partial ring action; fills verdict fields and
// returns false if any intrinsic validity check failed.
bool analyze_ring_action(const psg::PartialRingAction& action,
                         const psg::Guards& guards, json& report,
                         std::ostream& text) {
  auto diag = psg::validate(action);
  report["valid"] = diag.ok();
  report["diagnostics"] = diag.issues;
  text << "valid: " << (diag.ok() ? "yes" : "no") << "\n";
  for (const auto& issue : diag.issues) text << "  issue: " << issue << "\n";
  if (!diag.ok()) return false;

  auto inj = psg::is_injective(action);
  report["injective"]["holds"] = inj.injective;
  if (inj.witness) report["injective"]["witness_g"] = *inj.witness;
  else report["injective"]["method"] = "all degrees checked";
  text << "injective: " << (inj.injective ? "yes" : "no") << "\n";

  report["domains_unital"] = psg::all_domains_unital(action);

  auto gs = psg::is_G_simple(action, guards.dim);
  switch (gs.status) {
    case psg::GSimpleStatus::GSimple:
      report["g_simple"]["holds"] = true;
      report["g_simple"]["method"] = guard_note(guards.dim);
      break;
    case psg::GSimpleStatus::NotGSimple:
      report["g_simple"]["holds"] = false;
      if (gs.witness) report["g_simple"]["witness_ideal"] = subspace_json(*gs.witness);
      break;
    case psg::GSimpleStatus::GuardExceeded:
      report["g_simple"]["guard_exceeded"] = true;
      break;
  }
  text << "G-simple: "
       << (gs.status == psg::GSimpleStatus::GSimple
               ? "yes"
               : gs.status == psg::GSimpleStatus::NotGSimple ? "no"
                                                             : "guard exceeded")
       << "\n";

  auto outer = psg::is_outer(action, guards.dim, guards.pairs);
  report["outer"]["holds"] = outer.outer;
  if (outer.witness) {
    report["outer"]["witness_u"] = vec_json(*outer.witness);
    text << "outer: yes, at u = " << action.algebra.show(*outer.witness) << "\n";
  } else {
    report["outer"]["method"] = "all nonzero idempotents checked";
    text << "outer: no\n";
  }
  report["strongly_outer"] = psg::is_strongly_outer(action, guards.dim, guards.pairs);

  psg::GradedSkewRing R = psg::build_skew_ring(action, guards.dim);
  report["skew"]["dim"] = R.ring().dim();
  auto assoc = psg::is_associative(R);
  report["skew"]["associative"] = assoc.associative;
  if (assoc.witness)
    report["skew"]["associativity_witness"] = {(*assoc.witness)[0],
                                               (*assoc.witness)[1],
                                               (*assoc.witness)[2]};
  text << "skew ring: dim " << R.ring().dim() << ", associative: "
       << (assoc.associative ? "yes" : "no") << "\n";
  if (assoc.associative && R.ring().dim() > 0) {
    auto simple = psg::is_simple(R.ring(), guards.dim);
    if (simple.status == psg::SimpleStatus::GuardExceeded) {
      report["skew"]["simple"]["guard_exceeded"] = true;
      text << "skew simple: guard exceeded\n";
    } else {
      report["skew"]["simple"]["holds"] = simple.simple();
      if (simple.witness)
        report["skew"]["simple"]["witness_ideal"] = subspace_json(*simple.witness);
      else
        report["skew"]["simple"]["method"] = guard_note(guards.dim);
      text << "skew simple: " << (simple.simple() ? "yes" : "no") << "\n";
    }
    auto graded = psg::is_graded_simple(R, guards.dim);
    report["skew"]["graded_simple"]["holds"] = graded.graded_simple();
    if (graded.witness)
      report["skew"]["graded_simple"]["witness_ideal"] =
          subspace_json(*graded.witness);
    text << "skew graded simple: " << (graded.graded_simple() ? "yes" : "no")
         << "\n";
  }
  return true;
}

bool analyze_set_action(const psg::SetPartialAction& act, json& report,
                        std::ostream& text) {
  auto diag = psg::validate_set_action(act);
  report["valid"] = diag.ok();
  report["diagnostics"] = diag.issues;
  text << "valid: " << (diag.ok() ? "yes" : "no") << "\n";
  for (const auto& issue : diag.issues) text << "  issue: " << issue << "\n";
  if (!diag.ok()) return false;
  auto faithful = psg::is_faithful(act);
  auto free_r = psg::is_free(act);
  auto minimal = psg::is_minimal(act);
  report["faithful"]["holds"] = faithful.holds;
  if (faithful.witness_g) report["faithful"]["witness_g"] = *faithful.witness_g;
  report["free"]["holds"] = free_r.holds;
  if (free_r.witness_g) {
    report["free"]["witness_g"] = *free_r.witness_g;
    report["free"]["witness_point"] = *free_r.witness_point;
  }
  report["minimal"]["holds"] = minimal.minimal;
  if (minimal.witness_subset)
    report["minimal"]["witness_subset"] = *minimal.witness_subset;
  report["invariant_subset_count"] = psg::invariant_subsets(act).size();
  text << "faithful: " << (faithful.holds ? "yes" : "no") << "\n"
       << "free: " << (free_r.holds ? "yes" : "no") << "\n"
       << "minimal: " << (minimal.minimal ? "yes" : "no") << "\n";
  return true;
}

std::optional<psg::FiniteAlgebra> coeff_by_name(const std::string& name) {
  for (const auto& [label, A] : psg::catalog_rings())
    if (label == name) return A;
  if (name == "F3") return psg::field_algebra(3);
  return std::nullopt;
}

int run_validate(const std::string& path) {
  auto file = psg::parse_instance(path);
  psg::Diagnostics diag;
  if (const auto* ra = std::get_if<psg::PartialRingAction>(&file.instance))
    diag = psg::validate(*ra);
  else if (const auto* ga = std::get_if<psg::GlobalAction>(&file.instance))
    diag = psg::validate(*ga);
  else
    diag = psg::validate_set_action(std::get<psg::SetPartialAction>(file.instance));
  if (diag.ok()) {
    std::cout << "valid\n";
    return 0;
  }
  for (const auto& issue : diag.issues) std::cout << "issue: " << issue << "\n";
  return 1;
}

int run_analyze(const std::string& path, int guard_dim, const std::string& out_path) {
  auto file = psg::parse_instance(path);
  psg::Guards guards = file.guards;
  if (guard_dim > 0) guards.dim = guard_dim;
  json report;
  report["engine"] = kEngineVersion;
  report["instance"] = psg::serialize_instance(file);
  report["guard_dim"] = guards.dim;
  bool ok;
  if (const auto* sa = std::get_if<psg::SetPartialAction>(&file.instance)) {
    ok = analyze_set_action(*sa, report, std::cout);
  } else {
    psg::PartialRingAction action =
        std::holds_alternative<psg::GlobalAction>(file.instance)
            ? psg::as_partial(std::get<psg::GlobalAction>(file.instance))
            : std::get<psg::PartialRingAction>(file.instance);
    ok = analyze_ring_action(action, guards, report, std::cout);
  }
  write_report(report, out_path);
  return ok ? 0 : 1;
}

int run_skew(const std::string& path, int guard_dim, const std::string& out_path) {
  auto file = psg::parse_instance(path);
  if (std::holds_alternative<psg::SetPartialAction>(file.instance))
    throw psg::ParseError("skew requires a ring-action or global-action instance");
  psg::Guards guards = file.guards;
  if (guard_dim > 0) guards.dim = guard_dim;
  psg::PartialRingAction action =
      std::holds_alternative<psg::GlobalAction>(file.instance)
          ? psg::as_partial(std::get<psg::GlobalAction>(file.instance))
          : std::get<psg::PartialRingAction>(file.instance);
  auto diag = psg::validate(action);
  if (!diag.ok()) {
    for (const auto& issue : diag.issues) std::cout << "issue: " << issue << "\n";
    return 1;
  }
  json report;
  report["engine"] = kEngineVersion;
  report["guard_dim"] = guards.dim;
  psg::GradedSkewRing R = psg::build_skew_ring(action, guards.dim);
  report["dim"] = R.ring().dim();
  std::cout << "skew ring dim: " << R.ring().dim() << "\n";
  auto assoc = psg::is_associative(R);
  report["associative"] = assoc.associative;
  std::cout << "associative: " << (assoc.associative ? "yes" : "no") << "\n";
  bool all_ok = true;
  if (assoc.associative && R.ring().dim() > 0) {
    auto simple = psg::is_simple(R.ring(), guards.dim);
    auto graded = psg::is_graded_simple(R, guards.dim);
    report["simple"] = simple.simple();
    report["graded_simple"] = graded.graded_simple();
    std::cout << "simple: " << (simple.simple() ? "yes" : "no") << "\n";
    std::cout << "graded simple: " << (graded.graded_simple() ? "yes" : "no")
              << "\n";
    if (action.group.abelian()) {
      try {
        auto gather = psg::verify_gather(R, guards.dim);
        report["center_equivalence"] = gather.holds;
        std::cout << "center equivalence: " << (gather.holds ? "holds" : "FAILS")
                  << "\n";
        all_ok = all_ok && gather.holds;
      } catch (const psg::PreconditionFailed& e) {
        report["center_equivalence_skipped"] = e.what();
      }
    }
  }
  write_report(report, out_path);
  return all_ok ? 0 : 1;
}

int run_induce(const std::string& path, const std::string& coeff_name,
               int guard_dim, const std::string& out_path) {
  auto file = psg::parse_instance(path);
  const auto* sa = std::get_if<psg::SetPartialAction>(&file.instance);
  if (!sa) throw psg::ParseError("induce requires a set-action instance");
  auto coeff = coeff_by_name(coeff_name);
  if (!coeff)
    throw psg::ParseError("unknown coefficient ring '" + coeff_name +
                          "' (expected F2, F2^2, F2^3, M2(F2), or F3)");
  psg::Guards guards = file.guards;
  if (guard_dim > 0) guards.dim = guard_dim;
  auto diag = psg::validate_set_action(*sa);
  if (!diag.ok()) {
    for (const auto& issue : diag.issues) std::cout << "issue: " << issue << "\n";
    return 1;
  }
  psg::PartialRingAction induced = psg::induce_action(*sa, *coeff, guards.dim);
  auto rdiag = psg::validate(induced);
  std::cout << "induced action on dim " << induced.algebra.dim()
            << " function ring: " << (rdiag.ok() ? "valid" : "INVALID") << "\n";
  psg::InstanceFile out_file{induced, guards};
  write_report(psg::serialize_instance(out_file), out_path);
  return rdiag.ok() ? 0 : 1;
}

int run_verify(const std::string& suite, int guard_dim, uint64_t pair_guard,
               int jobs, const std::string& out_path) {
  std::vector<std::string> names;
  if (suite == "all") names = psg::suite_names();
  else if (psg::is_suite_name(suite)) names = {suite};
  else throw psg::ParseError("unknown suite '" + suite + "'");
  psg::Guards guards;
  if (guard_dim > 0) guards.dim = guard_dim;
  if (pair_guard > 0) guards.pairs = pair_guard;
  json reports = json::array();
  bool all_hold = true;
  for (const auto& name : names) {
    auto r = psg::run_suite(name, guards, jobs);
    std::cout << psg::suite_report_text(r);
    reports.push_back(psg::suite_report_json(r));
    all_hold = all_hold && r.holds();
  }
  json doc;
  doc["engine"] = kEngineVersion;
  doc["guard_dim"] = guards.dim;
  doc["reports"] = std::move(reports);
  write_report(doc, out_path);
  return all_hold ? 0 : 1;
}

int run_enumerate(const std::string& spec_path, const std::string& out_path) {
  std::ifstream in(spec_path);
  if (!in) throw psg::ParseError("cannot open '" + spec_path + "'");
  json spec;
  try {
    spec = json::parse(in);
  } catch (const json::exception& e) {
    throw psg::ParseError(std::string("spec: ") + e.what());
  }
  if (!spec.is_object() || !spec.contains("kind") || !spec["kind"].is_string())
    throw psg::ParseError("spec requires a string field 'kind'");
  std::string kind = spec["kind"].get<std::string>();
  int cyclic = spec.value("cyclic_group", 0);
  if (cyclic < 1) throw psg::ParseError("spec requires 'cyclic_group' >= 1");
  psg::FiniteGroup G = psg::FiniteGroup::cyclic(cyclic);
  uint64_t bound = spec.value("bound", uint64_t{1} << 22);
  json instances = json::array();
  if (kind == "set") {
    int points = spec.value("points", 0);
    if (points < 1 || points > 8)
      throw psg::ParseError("spec requires 'points' in 1..8");
    for (const auto& act : psg::enumerate_set_actions(G, points, bound))
      instances.push_back(
          psg::serialize_instance(psg::InstanceFile{act, psg::Guards{}}));
  } else if (kind == "partial" || kind == "global") {
    if (spec.contains("ring") && !spec["ring"].is_string())
      throw psg::ParseError("spec field 'ring' must name a catalog ring");
    std::string ring = spec.value("ring", "");
    auto A = coeff_by_name(ring);
    if (!A) throw psg::ParseError("spec requires 'ring' naming a catalog ring");
    if (kind == "global") {
      for (const auto& beta : psg::enumerate_global_actions(G, *A))
        instances.push_back(
            psg::serialize_instance(psg::InstanceFile{beta, psg::Guards{}}));
    } else {
      bool unital = spec.value("unital_domains_only", true);
      for (const auto& act : psg::enumerate_partial_actions(
               G, *A, unital, psg::kDefaultGuardDim, bound))
        instances.push_back(
            psg::serialize_instance(psg::InstanceFile{act, psg::Guards{}}));
    }
  } else {
    throw psg::ParseError("spec 'kind' must be partial, global, or set");
  }
  std::cout << "instances: " << instances.size() << "\n";
  json doc;
  doc["engine"] = kEngineVersion;
  doc["count"] = instances.size();
  doc["instances"] = std::move(instances);
  write_report(doc, out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"partial skew group ring workbench"};
  app.require_subcommand(1);

  std::string path, out_path, coeff_name = "F2", suite = "all", spec_path;
  int guard_dim = 0;
  uint64_t pair_guard = 0;
  int jobs = 1;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--guard-dim", guard_dim, "element-sweep dimension guard");
    cmd->add_option("--out", out_path, "write a JSON report to this path");
  };

  auto* cmd_validate = app.add_subcommand("validate", "check instance axioms");
  cmd_validate->add_option("file", path, "instance file")->required();

  auto* cmd_analyze = app.add_subcommand("analyze", "run every applicable check");
  cmd_analyze->add_option("file", path, "instance file")->required();
  add_common(cmd_analyze);

  auto* cmd_skew = app.add_subcommand("skew", "build the skew ring and check it");
  cmd_skew->add_option("file", path, "instance file")->required();
  add_common(cmd_skew);

  auto* cmd_induce =
      app.add_subcommand("induce", "induce a ring action from a set action");
  cmd_induce->add_option("file", path, "set-action instance file")->required();
  cmd_induce->add_option("--coeff", coeff_name, "coefficient ring name")
      ->required();
  add_common(cmd_induce);

  auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
  cmd_verify->add_option("--suite", suite, "suite name or 'all'");
  cmd_verify->add_option("--jobs", jobs, "worker threads (output-invariant)");
  cmd_verify->add_option("--pair-guard", pair_guard, "corner pair search guard");
  add_common(cmd_verify);

  auto* cmd_enumerate =
      app.add_subcommand("enumerate", "enumerate instances from a spec");
  cmd_enumerate->add_option("--spec", spec_path, "enumeration spec file")
      ->required();
  cmd_enumerate->add_option("--out", out_path, "write instances to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_validate->parsed()) return run_validate(path);
    if (cmd_analyze->parsed()) return run_analyze(path, guard_dim, out_path);
    if (cmd_skew->parsed()) return run_skew(path, guard_dim, out_path);
    if (cmd_induce->parsed())
      return run_induce(path, coeff_name, guard_dim, out_path);
    if (cmd_verify->parsed())
      return run_verify(suite, guard_dim, pair_guard, jobs, out_path);
    if (cmd_enumerate->parsed()) return run_enumerate(spec_path, out_path);
  } catch (const psg::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const psg::RangeError& e) {
    std::cerr << "range error: " << e.what() << "\n";
    return 2;
  } catch (const psg::GuardExceeded& e) {
    std::cerr << "guard exceeded: " << e.what() << "\n";
    return 3;
  } catch (const psg::BoundsTooLarge& e) {
    std::cerr << "bounds too large: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
