#include "groupext/cli.hpp"

#include <fstream>
#include <functional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "groupext/cohomology.hpp"
#include "groupext/extension.hpp"
#include "groupext/families.hpp"
#include "groupext/isomorphism.hpp"
#include "groupext/ok_catalog.hpp"
#include "groupext/presentation.hpp"
#include "groupext/verifier.hpp"

namespace groupext {

namespace {

using nlohmann::ordered_json;

struct GlobalOpts {
  int cap = kDefaultOrderCap;
  bool json = false;
  bool no_timing = false;
  std::string report_path;
  unsigned seed = 0;
  bool seed_set = false;
};

void write_report_file(const GlobalOpts& g, const ordered_json& j) {
  if (g.report_path.empty()) return;
  std::ofstream f(g.report_path);
  if (!f) throw std::runtime_error("cannot open report file: " + g.report_path);
  f << j.dump(2) << "\n";
}

ordered_json census_json(const Group& g) {
  ordered_json j = ordered_json::object();
  for (auto [o, c] : order_census(g)) j[std::to_string(o)] = c;
  return j;
}

std::string census_text(const Group& g) {
  std::string s;
  for (auto [o, c] : order_census(g)) {
    if (!s.empty()) s += " ";
    s += std::to_string(o) + "^" + std::to_string(c);
  }
  return s;
}

int finish(const GlobalOpts& g, std::ostream& out, const ordered_json& j,
           const std::string& text, int status) {
  if (g.json)
    out << j.dump(2) << "\n";
  else
    out << text;
  write_report_file(g, j);
  return status;
}

int run_build(const GlobalOpts& g, const std::string& spec_text, std::ostream& out) {
  Group grp = build_from_spec(parse_presentation(spec_text), g.cap);
  Classification cls = classify(grp);
  ordered_json j;
  j["tool_version"] = kToolVersion;
  j["command"] = "build";
  j["spec"] = spec_text;
  j["order"] = grp.order;
  j["classification"] = to_string(cls);
  j["abelian"] = grp.is_abelian();
  j["order_census"] = census_json(grp);
  std::string text = "order " + std::to_string(grp.order) + "\nclassification " +
                     to_string(cls) + "\norder census " + census_text(grp) + "\n";
  return finish(g, out, j, text, 0);
}

int run_order(const GlobalOpts& g, const std::string& spec_text, std::ostream& out) {
  Group grp = build_from_spec(parse_presentation(spec_text), g.cap);
  ordered_json j;
  j["tool_version"] = kToolVersion;
  j["command"] = "order";
  j["spec"] = spec_text;
  j["order"] = grp.order;
  return finish(g, out, j, std::to_string(grp.order) + "\n", 0);
}

int run_classify(const GlobalOpts& g, const std::string& spec_text, std::ostream& out) {
  Group grp = build_from_spec(parse_presentation(spec_text), g.cap);
  Classification cls = classify(grp);
  ordered_json j;
  j["tool_version"] = kToolVersion;
  j["command"] = "classify";
  j["spec"] = spec_text;
  j["classification"] = to_string(cls);
  return finish(g, out, j, to_string(cls) + "\n", 0);
}

int run_aut(const GlobalOpts& g, const std::string& spec_text, bool maps, std::ostream& out) {
  Group grp = build_from_spec(parse_presentation(spec_text), g.cap);
  auto auts = automorphism_group(grp);
  ordered_json j;
  j["tool_version"] = kToolVersion;
  j["command"] = "aut";
  j["spec"] = spec_text;
  j["aut_order"] = auts.size();
  if (maps) {
    j["maps"] = ordered_json::array();
    for (const Automorphism& f : auts) j["maps"].push_back(f.map);
  }
  return finish(g, out, j, "|Aut| = " + std::to_string(auts.size()) + "\n", 0);
}

int run_inn_out(const GlobalOpts& g, const std::string& spec_text, std::ostream& out) {
  Group grp = build_from_spec(parse_presentation(spec_text), g.cap);
  auto auts = automorphism_group(grp);
  InnOut io = inn_out_from(grp, auts);
  ordered_json j;
  j["tool_version"] = kToolVersion;
  j["command"] = "inn-out";
  j["spec"] = spec_text;
  j["aut_order"] = auts.size();
  j["inn_order"] = io.inn.size();
  j["out_order"] = io.out_reps.size();
  std::string text = "|Aut| = " + std::to_string(auts.size()) +
                     "\n|Inn| = " + std::to_string(io.inn.size()) +
                     "\n|Out| = " + std::to_string(io.out_reps.size()) + "\n";
  return finish(g, out, j, text, 0);
}

int run_h2(const GlobalOpts& g, const std::string& spec_text, int m,
           const std::vector<int>& action, bool oracle, std::ostream& out) {
  Group grp = build_from_spec(parse_presentation(spec_text), g.cap);
  if (!grp.is_abelian()) throw SemanticError("h2: coefficients must be abelian");
  GroupSpec spec = parse_presentation(spec_text);
  Automorphism act;
  if (action.empty()) {
    act = identity_automorphism(grp.order);
  } else {
    // interpret units through the parse tree's cyclic factor shape
    std::vector<int> factors;
    std::function<bool(const GroupSpec&)> collect = [&](const GroupSpec& s) {
      if (s.kind == GroupSpec::Kind::Z) {
        factors.push_back(s.param);
        return true;
      }
      if (s.kind == GroupSpec::Kind::Direct)
        return collect(s.children[0]) && collect(s.children[1]);
      return false;
    };
    if (!collect(spec))
      throw SemanticError("h2: --action requires a cyclic or product-of-cyclic spec");
    if (factors.size() != action.size())
      throw SemanticError("h2: one action unit per cyclic factor required");
    act = multiplication_automorphism(factors, action);
  }
  AbelianModule mod = make_module(grp, act);
  AbelianInvariants inv = h2_cyclic(m, mod);
  ordered_json j;
  j["tool_version"] = kToolVersion;
  j["command"] = "h2";
  j["spec"] = spec_text;
  j["quotient"] = m;
  j["action"] = action;
  j["invariants"] = inv;
  j["h2_order"] = invariants_order(inv);
  std::string text = "H^2(Z" + std::to_string(m) + ", A) order " +
                     std::to_string(invariants_order(inv)) + ", invariants [";
  for (size_t i = 0; i < inv.size(); ++i) text += (i ? "," : "") + std::to_string(inv[i]);
  text += "]\n";
  if (oracle) {
    auto classes = cocycle_classes(m, mod);
    j["oracle_classes"] = classes.size();
    text += "factor-set oracle classes " + std::to_string(classes.size()) + "\n";
  }
  return finish(g, out, j, text, 0);
}

int run_ext(const GlobalOpts& g, const std::string& spec_text, int p, bool with_scan,
            std::ostream& out) {
  Group kernel = build_from_spec(parse_presentation(spec_text), g.cap);
  ExtensionProblem prob;
  prob.kernel = kernel;
  prob.p = p;
  prob.cap = g.cap;
  std::vector<Extension> exts = enumerate_extensions(prob);
  ordered_json j;
  j["tool_version"] = kToolVersion;
  j["command"] = "ext";
  j["kernel"] = spec_text;
  j["prime"] = p;
  j["classes"] = ordered_json::array();
  std::string text = std::to_string(exts.size()) + " extension class(es) of " + spec_text +
                     " by Z" + std::to_string(p) + "\n";
  for (size_t i = 0; i < exts.size(); ++i) {
    const Extension& e = exts[i];
    Classification cls = classify(e.total);
    ordered_json cj;
    cj["class_index"] = i;
    cj["split"] = is_split(e);
    cj["total_order"] = e.total.order;
    cj["classification"] = to_string(cls);
    text += "class " + std::to_string(i) + ": order " + std::to_string(e.total.order) +
            (is_split(e) ? ", split, " : ", non-split, ") + to_string(cls);
    if (with_scan) {
      cj["findings"] = ordered_json::array();
      auto fs = scan(e.total, ScanOptions{g.cap, false});
      for (const Finding& f : fs) {
        cj["findings"].push_back(finding_to_json(f));
        text += " " + to_string(f.descriptor);
      }
    }
    text += "\n";
    j["classes"].push_back(std::move(cj));
  }
  return finish(g, out, j, text, 0);
}

int run_ok_scan(const GlobalOpts& g, const std::string& spec_text, bool all, std::ostream& out) {
  Group grp = build_from_spec(parse_presentation(spec_text), g.cap);
  auto findings = scan(grp, ScanOptions{g.cap, all});
  ordered_json j;
  j["tool_version"] = kToolVersion;
  j["command"] = "ok-scan";
  j["spec"] = spec_text;
  j["findings"] = ordered_json::array();
  std::string text;
  for (const Finding& f : findings) {
    j["findings"].push_back(finding_to_json(f));
    text += to_string(f.descriptor) + " witness [";
    for (size_t i = 0; i < f.witness.size(); ++i) {
      if (i) text += ",";
      text += grp.labels[f.witness[i]];
    }
    text += "]\n";
  }
  if (findings.empty()) text = "admissible: no obstruction found\n";
  return finish(g, out, j, text, findings.empty() ? 0 : 1);
}

int run_verify(const GlobalOpts& g, const Report& r, std::ostream& out) {
  ordered_json j = report_to_json(r, !g.no_timing);
  std::string text = r.command + ": " + std::to_string(r.cases.size()) + " case(s), verdict " +
                     (r.verdict == Verdict::Confirmed ? "confirmed" : "counterexample") + "\n";
  if (r.verdict != Verdict::Confirmed) {
    const CaseRecord& c = r.cases[r.first_counterexample];
    text += "first counterexample: kernel " + c.kernel + ", p=" + std::to_string(c.prime) +
            ", class " + std::to_string(c.class_index) + ", classification " +
            to_string(c.classification) + "\n";
  }
  std::string agg;
  for (const std::string& k : admissible_kinds(r)) agg += (agg.empty() ? "" : ", ") + k;
  text += "admissible classifications: " + (agg.empty() ? "(none)" : agg) + "\n";
  if (!g.no_timing) text += "elapsed " + std::to_string(r.timing_ms) + " ms\n";
  return finish(g, out, j, text, r.verdict == Verdict::Confirmed ? 0 : 1);
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite group construction, extension enumeration and obstruction scanning"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--cap", g.cap, "group order cap")->capture_default_str();
  app.add_flag("--json", g.json, "emit JSON on stdout");
  app.add_flag("--no-timing", g.no_timing, "zero out timing_ms for byte-stable reports");
  app.add_option("--report", g.report_path, "write a JSON report to this path");
  auto* seed_opt = app.add_option("--seed", g.seed, "seed for sampled associativity checks");

  std::string spec_text;
  auto add_spec = [&](CLI::App* sub) {
    sub->fallthrough();
    sub->add_option("spec", spec_text, "group presentation, e.g. \"Z5 x| Z4 [2]\"")->required();
  };

  auto* build_cmd = app.add_subcommand("build", "build a group and print its profile");
  add_spec(build_cmd);
  auto* order_cmd = app.add_subcommand("order", "print the group order");
  add_spec(order_cmd);
  auto* classify_cmd = app.add_subcommand("classify", "classify against the SO(3) taxonomy");
  add_spec(classify_cmd);

  bool aut_maps = false;
  auto* aut_cmd = app.add_subcommand("aut", "automorphism group size");
  add_spec(aut_cmd);
  aut_cmd->add_flag("--maps", aut_maps, "include the image maps in JSON output");

  auto* innout_cmd = app.add_subcommand("inn-out", "inner/outer automorphism decomposition");
  add_spec(innout_cmd);

  int h2_m = 2;
  std::vector<int> h2_action;
  bool h2_oracle = false;
  auto* h2_cmd = app.add_subcommand("h2", "second cohomology of a cyclic quotient");
  add_spec(h2_cmd);
  h2_cmd->add_option("-m,--quotient", h2_m, "cyclic quotient order")->capture_default_str();
  h2_cmd->add_option("--action", h2_action, "one multiplication unit per cyclic factor")
      ->delimiter(',');
  h2_cmd->add_flag("--oracle", h2_oracle, "cross-check with the factor-set oracle");

  int ext_p = 2;
  bool ext_scan = false;
  auto* ext_cmd = app.add_subcommand("ext", "enumerate extension classes by Z_p");
  add_spec(ext_cmd);
  ext_cmd->add_option("-p,--prime", ext_p, "quotient prime")->capture_default_str();
  ext_cmd->add_flag("--scan", ext_scan, "scan each class for obstructions");

  bool scan_all = false;
  auto* scan_cmd = app.add_subcommand("ok-scan", "scan for obstruction-kernel subgroups");
  add_spec(scan_cmd);
  scan_cmd->add_flag("--all", scan_all, "list every parameterization, not one per kind");

  auto* verify_cmd = app.add_subcommand("verify", "run a theorem sweep");
  verify_cmd->require_subcommand(1);
  verify_cmd->fallthrough();
  int t3_nmax = 48, t4_nmax = 24, ns_pmax = 13;
  std::vector<int> t3_primes{2, 3, 5, 7}, t4_primes{2, 3, 5}, t56_primes{2, 3, 5, 7};
  auto* t3 = verify_cmd->add_subcommand("theorem3", "extensions of cyclic kernels");
  t3->fallthrough();
  t3->add_option("--n-max", t3_nmax, "")->capture_default_str();
  t3->add_option("--primes", t3_primes, "")->delimiter(',');
  auto* t4 = verify_cmd->add_subcommand("theorem4", "extensions of dihedral kernels");
  t4->fallthrough();
  t4->add_option("--n-max", t4_nmax, "")->capture_default_str();
  t4->add_option("--primes", t4_primes, "")->delimiter(',');
  auto* t56 = verify_cmd->add_subcommand("theorem5-6", "extensions of A4 and S4");
  t56->fallthrough();
  t56->add_option("--primes", t56_primes, "")->delimiter(',');
  auto* ns = verify_cmd->add_subcommand("nonsolvable", "PSL(2,p) case checks");
  ns->fallthrough();
  ns->add_option("--p-max", ns_pmax, "")->capture_default_str();

  std::vector<const char*> argv;
  argv.push_back("groupext");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  if (seed_opt->count() > 0) set_validation_seed(g.seed);

  try {
    if (*build_cmd) return run_build(g, spec_text, out);
    if (*order_cmd) return run_order(g, spec_text, out);
    if (*classify_cmd) return run_classify(g, spec_text, out);
    if (*aut_cmd) return run_aut(g, spec_text, aut_maps, out);
    if (*innout_cmd) return run_inn_out(g, spec_text, out);
    if (*h2_cmd) return run_h2(g, spec_text, h2_m, h2_action, h2_oracle, out);
    if (*ext_cmd) return run_ext(g, spec_text, ext_p, ext_scan, out);
    if (*scan_cmd) return run_ok_scan(g, spec_text, scan_all, out);
    if (*verify_cmd) {
      if (*t3) return run_verify(g, verify_cyclic_kernel(t3_nmax, t3_primes, g.cap), out);
      if (*t4) return run_verify(g, verify_dihedral_kernel(t4_nmax, t4_primes, g.cap), out);
      if (*t56) return run_verify(g, verify_a4_s4(t56_primes, g.cap), out);
      if (*ns) return run_verify(g, verify_nonsolvable(ns_pmax, g.cap), out);
    }
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const SemanticError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  err << "unknown subcommand\n";
  return 2;
}

}  // namespace groupext
