// Command-line front end. Exit codes: 0 pass, 1 check failure, 2 usage or
// validation error (reported as JSON on stderr).

#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ckrgap/bounds.hpp"
#include "ckrgap/io.hpp"
#include "ckrgap/reproduce.hpp"
#include "ckrgap/search.hpp"
#include "ckrgap/sperner.hpp"

using namespace ckrgap;

namespace {

struct Common {
  int k = 4;
  int n = 0;
  std::string component;
  std::string c;
  std::string lambda;
  std::string format = "json";
  std::string out = "-";
  std::string instance;
  std::uint64_t budget = 2'000'000'000;
  unsigned threads = 1;
  bool include_zero = false;
  bool json = false;
  bool no_timing = false;
};

int fail(const std::string& code, const std::string& message, int status) {
  Json err{{"error", code}, {"message", message}};
  std::cerr << err.dump() << "\n";
  return status;
}

std::optional<Rational> opt_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return parse_rational(text);
}

std::array<Rational, 4> parse_lambda(const std::string& text) {
  std::array<Rational, 4> out;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    const std::size_t comma = text.find(',', pos);
    if ((i < 3) != (comma != std::string::npos)) invalid_parameter("--lambda needs four comma-separated values");
    out[i] = parse_rational(text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
    pos = comma + 1;
  }
  return out;
}

GapParams params_from(const Common& o) {
  if (o.lambda.empty()) invalid_parameter("--lambda is required");
  if (o.c.empty()) invalid_parameter("--c is required");
  GapParams p;
  p.lambda = parse_lambda(o.lambda);
  p.c = parse_rational(o.c);
  p.n = o.n;
  p.validate();
  return p;
}

// Builds the instance named by --component (J, I1..I4, combined).
InstanceFile build_instance(const Common& o) {
  if (o.n < 1) invalid_parameter("--n must be positive");
  InstanceMeta meta;
  if (o.component == "J") {
    if (o.k != 3) invalid_parameter("J lives on Delta_{3,n}; pass --k 3");
    return {build_amm_j(o.n), meta};
  }
  if (o.k != 4) invalid_parameter("components live on Delta_{4,n}; pass --k 4");
  if (o.component == "combined") {
    GapParams p = params_from(o);
    meta.c = p.c;
    meta.lambda = p.lambda;
    return {combine(p), meta};
  }
  auto which = parse_component(o.component);
  if (!which) invalid_parameter("unknown component '" + o.component + "'");
  meta.c = opt_rational(o.c);
  if (*which != Component::I3) meta.c.reset();
  return {build_component(*which, o.n, meta.c), meta};
}

InstanceFile load_instance(const Common& o) {
  if (!o.instance.empty()) return parse_instance(read_text_file(o.instance));
  if (o.component.empty()) invalid_parameter("pass --instance PATH or --component");
  return build_instance(o);
}

void emit_report(RunReport& report, const Common& o, std::chrono::steady_clock::time_point start) {
  if (!o.no_timing) {
    report.timing_ms(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
  }
  write_text_file(o.out, o.json ? report.to_json(!o.no_timing) : report.to_table());
}

void add_common(CLI::App* cmd, Common& o, bool instance_flags) {
  cmd->add_option("--k", o.k, "simplex dimension k (3 for J, 4 otherwise)");
  cmd->add_option("--n", o.n, "discretization level n");
  cmd->add_option("--c", o.c, "red-region parameter c (decimal or p/q)");
  cmd->add_option("--lambda", o.lambda, "convex weights a,b,c,d");
  cmd->add_option("--out", o.out, "output path, - for stdout");
  if (instance_flags) {
    cmd->add_option("--component", o.component, "J, I1, I2, I3, I4 or combined");
    cmd->add_option("--instance", o.instance, "instance file (JSON or DIMACS-like)");
  }
}

void add_report_flags(CLI::App* cmd, Common& o) {
  cmd->add_flag("--json", o.json, "emit the report as JSON");
  cmd->add_flag("--no-timing", o.no_timing, "omit the timing field");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integrality-gap instances for the simplex relaxation of multiway cut"};
  app.require_subcommand(1);
  Common o;
  std::string cut_name, cut_file, alpha, mode = "exhaustive", suite = "all";
  int terminal = 0, grid = 2000;
  bool face_restricted = false, no_red = false, optional_checks = false;

  auto* gen = app.add_subcommand("gen", "write an instance file");
  add_common(gen, o, true);
  gen->add_option("--format", o.format, "json or dimacs");
  gen->add_flag("--include-zero-edges", o.include_zero, "list zero-weight edges too");

  auto* eval = app.add_subcommand("eval-cut", "evaluate a cut on an instance");
  add_common(eval, o, true);
  add_report_flags(eval, o);
  eval->add_option("--cut", cut_name, "Q0, P_ext, P_prime, P3 or Lemma5Tight");
  eval->add_option("--cut-file", cut_file, "labeling JSON file");
  eval->add_option("--alpha", alpha, "radius fraction for Lemma5Tight");

  auto* mincut = app.add_subcommand("min-cut", "terminal versus opposite side minimum cut (max-flow)");
  add_common(mincut, o, true);
  add_report_flags(mincut, o);
  mincut->add_option("--terminal", terminal, "terminal 1..3, 0 for all");

  auto* enumerate = app.add_subcommand("enumerate", "exact minimum over non-opposite cuts");
  add_common(enumerate, o, true);
  add_report_flags(enumerate, o);
  enumerate->add_option("--budget", o.budget, "labeling or search-node ceiling");
  enumerate->add_option("--threads", o.threads, "workers for exhaustive mode");
  enumerate->add_option("--mode", mode, "exhaustive or bnb");

  auto* sperner = app.add_subcommand("sperner-verify", "exhaustive monochromatic-hyperedge oracle");
  add_common(sperner, o, false);
  add_report_flags(sperner, o);
  sperner->add_option("--budget", o.budget, "labeling ceiling");
  sperner->add_flag("--face-restricted", face_restricted, "allow label k on the facet opposite s_k");

  auto* optimize = app.add_subcommand("optimize", "maximize the asymptotic two-term bound");
  add_common(optimize, o, false);
  add_report_flags(optimize, o);
  optimize->add_option("--grid", grid, "c grid points");
  optimize->add_flag("--no-red", no_red, "pin lambda_3 = 0");

  auto* limits = app.add_subcommand("limits", "certificate cuts and the beta maximum");
  add_common(limits, o, false);
  add_report_flags(limits, o);

  auto* reproduce = app.add_subcommand("reproduce", "run an acceptance suite");
  add_common(reproduce, o, false);
  add_report_flags(reproduce, o);
  reproduce->add_option("--suite", suite, "constants, lemmas, enumeration or all");
  reproduce->add_option("--budget", o.budget, "labeling ceiling for enumeration checks");
  reproduce->add_option("--threads", o.threads, "workers for exhaustive search");
  reproduce->add_flag("--optional", optional_checks, "include the Delta_{4,3} face-count sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("usage", e.what(), 2);
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    if (gen->parsed()) {
      auto format = parse_format(o.format);
      if (!format) invalid_parameter("--format must be json or dimacs");
      InstanceFile f = build_instance(o);
      write_text_file(o.out, emit_instance(f.weights, f.meta, *format, o.include_zero));
      return 0;
    }

    if (eval->parsed()) {
      InstanceFile f = load_instance(o);
      const auto& g = f.weights.graph();
      std::optional<CutLabeling> p;
      if (!cut_file.empty()) {
        p = parse_labeling(read_text_file(cut_file));
      } else {
        auto which = parse_named_cut(cut_name);
        if (!which) invalid_parameter("pass --cut NAME or --cut-file PATH");
        std::optional<Rational> param = *which == NamedCut::Lemma5Tight ? opt_rational(alpha) : f.meta.c;
        if (*which == NamedCut::P3 && !o.c.empty()) param = parse_rational(o.c);
        p = named_cut(*which, g.n(), param);
      }
      if (p->graph().k() != g.k() || p->graph().n() != g.n()) {
        invalid_parameter("cut and instance live on different graphs");
      }
      RunReport report("eval-cut");
      report.parameter("tag", f.weights.tag());
      report.parameter("k", g.k());
      report.parameter("n", g.n());
      if (!cut_name.empty()) report.parameter("cut", cut_name);
      report.result("cost", cost(*p, f.weights), "direct-evaluation");
      report.result("cut_size", Json(delta(*p).size()), "direct-evaluation");
      report.result("non_opposite", Json(is_non_opposite(*p)), "direct-evaluation");
      if (g.k() == 3) report.result("fragmenting", Json(is_fragmenting(*p)), "direct-evaluation");
      emit_report(report, o, start);
      return 0;
    }

    if (mincut->parsed()) {
      if (o.component.empty() && o.instance.empty()) {
        o.component = "J";
        o.k = 3;
      }
      InstanceFile f = load_instance(o);
      if (terminal < 0 || terminal > 3) invalid_parameter("--terminal must be 0..3");
      RunReport report("min-cut");
      report.parameter("tag", f.weights.tag());
      report.parameter("n", f.weights.graph().n());
      for (int i = 1; i <= 3; ++i) {
        if (terminal != 0 && terminal != i) continue;
        report.result("s" + std::to_string(i), min_terminal_face_cut(f.weights, i), "max-flow");
      }
      emit_report(report, o, start);
      return 0;
    }

    if (enumerate->parsed()) {
      InstanceFile f = load_instance(o);
      SearchBudget b;
      b.max_labelings = o.budget;
      b.threads = o.threads;
      if (mode == "bnb" || mode == "branch-and-bound") {
        b.mode = SearchBudget::Mode::BranchAndBound;
      } else if (mode != "exhaustive") {
        invalid_parameter("--mode must be exhaustive or bnb");
      }
      SearchResult r = min_non_opposite_cost(f.weights, b);
      RunReport report("enumerate");
      report.parameter("tag", f.weights.tag());
      report.parameter("k", f.weights.graph().k());
      report.parameter("n", f.weights.graph().n());
      report.parameter("mode", mode);
      report.parameter("budget", o.budget);
      report.result("explored", Json(r.explored), "enumeration");
      report.result("proven_optimal", Json(r.proven_optimal), "enumeration");
      if (r.argmin) {
        report.result("min_cost", r.min_cost, "enumeration");
        report.result("argmin", Json(std::vector<int>(r.argmin->labels().begin(), r.argmin->labels().end())),
                      "enumeration");
      }
      if (f.meta.lambda && f.meta.c && r.proven_optimal) {
        GapParams p{*f.meta.lambda, *f.meta.c, f.weights.graph().n()};
        TheoremBound tb = theorem2_bound(p, p.n);
        report.result("two_term_bound", tb.bound, "formula");
        report.regime("two_term_bound", tb.in_regime ? "in-regime" : "out-of-regime");
        CheckOutcome c{"min-vs-bound", "minimum meets the finite two-term bound", to_fraction_string(tb.bound),
                       to_fraction_string(r.min_cost), "exact", "enumeration", verify_theorem2(p, r), ""};
        report.check(c);
      }
      if (!r.proven_optimal) {
        report.check({"search", "search completes within budget", "proven optimal", "budget exhausted", "", "enumeration",
                      false, "budget-exhausted"});
      }
      emit_report(report, o, start);
      return report.all_passed() ? 0 : 1;
    }

    if (sperner->parsed()) {
      ExtremalResult r = exhaustive_extremal(o.k, o.n, face_restricted, o.budget);
      RunReport report("sperner-verify");
      report.parameter("k", o.k);
      report.parameter("n", o.n);
      report.parameter("face_restricted", face_restricted);
      report.result("labelings", Json(r.explored), "enumeration");
      report.result("max_monochromatic", Rational(static_cast<long>(r.max_monochromatic)), "enumeration");
      report.result("witness", Json(std::vector<int>(r.witness.begin(), r.witness.end())), "enumeration");
      if (!face_restricted) {
        Rational bound = mv_bound(o.k, o.n);
        report.result("mv_bound", bound, "formula");
        report.check({"max-equals-bound", "maximum monochromatic count equals C(n+k-3, k-1)", to_fraction_string(bound),
                      std::to_string(r.max_monochromatic), "exact", "enumeration",
                      Rational(static_cast<long>(r.max_monochromatic)) == bound, ""});
      } else {
        for (const auto& [z, stats] : r.by_inadmissible) {
          Rational beta = inadmissible_beta(o.k, o.n, z);
          if (beta > 1 / factorial(o.k - 2)) continue;
          Rational bound = nonmon_bound(o.k, o.n, beta);
          report.check({"inadmissible-" + std::to_string(z), "non-monochromatic count bound",
                        ">= " + to_fraction_string(bound), std::to_string(stats.second), "exact", "enumeration",
                        Rational(static_cast<long>(stats.second)) >= bound, ""});
        }
      }
      emit_report(report, o, start);
      return report.all_passed() ? 0 : 1;
    }

    if (optimize->parsed()) {
      OptimizeConfig cfg;
      cfg.c_grid = grid;
      if (no_red) cfg.allow = {true, true, false, true};
      OptimizeResult r = optimize_params(cfg);
      RunReport report("optimize");
      report.parameter("grid", grid);
      report.parameter("no_red", no_red);
      report.result("c", r.params.c, "formula");
      for (std::size_t i = 0; i < 4; ++i) report.result("lambda_" + std::to_string(i + 1), r.params.lambda[i], "formula");
      report.result("term_i", r.bound.term_i, "formula");
      report.result("term_ii", r.bound.term_ii, "formula");
      report.result("bound", r.bound.bound, "formula");
      emit_report(report, o, start);
      return 0;
    }

    if (limits->parsed()) {
      RunReport report("limits");
      BetaMax b = beta_max();
      report.result("beta_max_c", Json(b.c), "formula");
      report.result("beta_max", Json(b.beta), "formula");
      if (!o.lambda.empty()) {
        GapParams p = params_from(o);
        std::optional<int> n;
        if (o.n > 0) n = o.n;
        LimitationCertificates cert = limitation_certificates(p, n);
        const char* prov = n ? "direct-evaluation" : "formula";
        report.parameter("lambda", o.lambda);
        report.parameter("c", o.c);
        if (n) report.parameter("n", *n);
        report.result("P_ext", cert.ext, prov);
        report.result("P_prime", cert.prime, prov);
        if (cert.caps) report.result("P3", *cert.caps, prov);
        report.result("limitation_min", cert.min, prov);
        TheoremBound tb = theorem2_bound(p, n);
        report.result("two_term_bound", tb.bound, "formula");
        if (n) report.regime("two_term_bound", tb.in_regime ? "in-regime" : "out-of-regime");
        if (n && *n > 0) {
          GapReport gr = make_gap_report(p);
          report.result("total_weight", gr.total_weight, "direct-evaluation");
          report.result("lp_identity_value", gr.lp_value, "direct-evaluation");
          report.result("gap_estimate", gr.gap_estimate, "formula");
          for (const auto& cut : gr.certified_cuts) {
            report.check({"envelope-" + cut.name, "finite-n cost within computed correction",
                          to_fraction_string(cut.formula), to_fraction_string(cut.cost), to_fraction_string(cut.correction),
                          "direct-evaluation", cut.within_envelope, ""});
          }
        }
      }
      emit_report(report, o, start);
      return report.all_passed() ? 0 : 1;
    }

    if (reproduce->parsed()) {
      ReproduceOptions ro;
      ro.suite = suite;
      ro.budget = o.budget;
      ro.threads = o.threads;
      ro.optional_checks = optional_checks;
      RunReport report("reproduce");
      report.parameter("suite", suite);
      report.parameter("budget", o.budget);
      report.parameter("threads", o.threads);
      for (const CheckOutcome& c : run_reproduce(ro)) {
        if (c.id == "enumeration.combined-minimum") report.regime(c.id, "out-of-regime (n = 3 < 10)");
        report.check(c);
      }
      emit_report(report, o, start);
      if (!report.all_passed()) {
        for (const auto& c : report.json()["checks"]) {
          if (!c["pass"].get<bool>()) {
            std::cerr << Json{{"failed", c["id"]}, {"error", c.value("error", "check-failed")}}.dump() << "\n";
          }
        }
        return 1;
      }
      return 0;
    }
  } catch (const Error& e) {
    return fail(e.code(), e.what(), e.code() == "budget-exhausted" ? 1 : 2);
  } catch (const std::exception& e) {
    return fail("internal", e.what(), 2);
  }
  return 2;
}
