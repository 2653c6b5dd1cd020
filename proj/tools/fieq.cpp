// Command-line frontend.  Subcommands map one-to-one onto library
// operations; every report is JSON, written to stdout or --out.
//
// Exit codes:
//   0  inequality holds / operation succeeded
//   1  inequality violated (the report names a witness)
//   2  structural infeasibility (negative cycle, vanishing factor, ...)
//   3  I/O or argument error

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fieq/generate.hpp"
#include "fieq/io.hpp"
#include "fieq/json_report.hpp"

namespace {

using nlohmann::json;

struct GlobalOptions {
  double tolerance = fieq::kDefaultTolerance;
  std::string out;
  std::uint64_t seed = 0;
  bool no_timestamp = false;
};

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

int emit(const GlobalOptions& opts, json report, int exit_code) {
  if (!opts.no_timestamp) report["timestamp"] = utc_timestamp();
  const std::string text = report.dump(2) + "\n";
  if (opts.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(opts.out);
    if (!f) throw fieq::io_error("cannot open \"" + opts.out + "\" for writing");
    f << text;
  }
  return exit_code;
}

int emit_defect(const GlobalOptions& opts, const fieq::DefectReport& report) {
  return emit(opts, fieq::to_json(report), report.holds() ? 0 : 1);
}

void add_global_flags(CLI::App* cmd, GlobalOptions& opts) {
  cmd->add_option("--tolerance", opts.tolerance, "absolute tolerance (default 1e-9)");
  cmd->add_option("--out", opts.out, "write the JSON report to this path instead of stdout");
  cmd->add_option("--seed", opts.seed, "seed for randomized subcommands");
  cmd->add_flag("--no-timestamp", opts.no_timestamp, "omit the timestamp field from reports");
}

int dispatch(CLI::App& app, const GlobalOptions& opts);

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-domain toolkit for Sincov-type functional inequalities"};
  app.require_subcommand(1);
  GlobalOptions opts;

  // defect
  std::string input, second, kind_name;
  CLI::App* defect = app.add_subcommand("defect", "scan a defect kind over all ordered triples");
  defect->add_option("--kind", kind_name, "sincov|additive|triangle|submultiplicative|main|add")
      ->required();
  defect->add_option("--input", input, "first kernel file")->required();
  defect->add_option("--second", second, "second kernel file (kinds main/add)");
  add_global_flags(defect, opts);

  // closure
  CLI::App* closure = app.add_subcommand("closure", "all-pairs shortest-path closure");
  closure->add_option("--input", input, "kernel file")->required();
  add_global_flags(closure, opts);

  // represent
  CLI::App* represent =
      app.add_subcommand("represent", "canonical potentials and their sup representation");
  represent->add_option("--input", input, "kernel file")->required();
  add_global_flags(represent, opts);

  // verify-ct
  CLI::App* verify_ct =
      app.add_subcommand("verify-ct", "check the representation biconditional");
  verify_ct->add_option("--input", input, "kernel file")->required();
  add_global_flags(verify_ct, opts);

  // check-add / check-main
  std::string s_path, g_path, t_path, f_path, t_imag_path;
  CLI::App* check_add = app.add_subcommand("check-add", "scan the additive inequality");
  check_add->add_option("--s", s_path, "S kernel file")->required();
  check_add->add_option("--g", g_path, "G kernel file")->required();
  add_global_flags(check_add, opts);

  CLI::App* check_main = app.add_subcommand("check-main", "scan the multiplicative inequality");
  check_main->add_option("--t", t_path, "T kernel file")->required();
  check_main->add_option("--f", f_path, "F kernel file")->required();
  check_main->add_option("--t-imag", t_imag_path, "imaginary part of T (complex scan)");
  add_global_flags(check_main, opts);

  // decompose / compose
  std::string h1_path, h2_path, out_a, out_b;
  CLI::App* decompose = app.add_subcommand("decompose", "split (S, G) into H1 = G+S, H2 = G-S");
  decompose->add_option("--s", s_path, "S kernel file")->required();
  decompose->add_option("--g", g_path, "G kernel file")->required();
  decompose->add_option("--h1-out", out_a, "write H1 to this kernel file");
  decompose->add_option("--h2-out", out_b, "write H2 to this kernel file");
  add_global_flags(decompose, opts);

  CLI::App* compose =
      app.add_subcommand("compose", "compose subadditive H1, H2 into S = H1-H2, G = H1+H2");
  compose->add_option("--h1", h1_path, "H1 kernel file")->required();
  compose->add_option("--h2", h2_path, "H2 kernel file")->required();
  compose->add_option("--s-out", out_a, "write S to this kernel file");
  compose->add_option("--g-out", out_b, "write G to this kernel file");
  add_global_flags(compose, opts);

  // synth-g
  std::string objective_name = "sum";
  bool symmetric = false, zero_diagonal = false;
  CLI::App* synth = app.add_subcommand("synth-g", "minimal majorant G for S by linear programming");
  synth->add_option("--s", s_path, "S kernel file")->required();
  synth->add_option("--objective", objective_name, "sum|max (default sum)");
  synth->add_flag("--symmetric", symmetric, "constrain G to be symmetric");
  synth->add_flag("--zero-diagonal", zero_diagonal, "constrain G to vanish on the diagonal");
  add_global_flags(synth, opts);

  // build-ch
  std::string f1_path, f2_path;
  CLI::App* build_ch = app.add_subcommand("build-ch", "build (S, G) from two potential families");
  build_ch->add_option("--f1", f1_path, "first family file")->required();
  build_ch->add_option("--f2", f2_path, "second family file")->required();
  add_global_flags(build_ch, opts);

  // probe / gamma / zero-prop
  CLI::App* probe = app.add_subcommand("probe", "diagnostic probe of the derived inequalities");
  probe->add_option("--t", t_path, "T kernel file")->required();
  probe->add_option("--f", f_path, "F kernel file")->required();
  probe->add_option("--t-imag", t_imag_path, "imaginary part of T");
  add_global_flags(probe, opts);

  CLI::App* gamma = app.add_subcommand("gamma", "Gamma(f,g) = F(f,g)F(g,f) - 1");
  gamma->add_option("--f", f_path, "F kernel file")->required();
  add_global_flags(gamma, opts);

  CLI::App* zero_prop = app.add_subcommand("zero-prop", "zero propagation check for F");
  zero_prop->add_option("--f", f_path, "F kernel file")->required();
  add_global_flags(zero_prop, opts);

  // gruss
  std::string sample_f, sample_g;
  CLI::App* gruss = app.add_subcommand(
      "gruss", "integral mean of one sample, or the Gruss inequality check for two");
  gruss->add_option("--f", sample_f, "function sample file")->required();
  gruss->add_option("--g", sample_g, "second sample file (enables the inequality check)");
  add_global_flags(gruss, opts);

  // richard
  int dim = 5;
  long long trials = 100000;
  CLI::App* richard = app.add_subcommand("richard", "cosine-functional defect scan");
  richard->add_option("--dim", dim, "vector dimension (default 5)");
  richard->add_option("--trials", trials, "number of sampled triples (default 100000)");
  add_global_flags(richard, opts);

  // gen
  std::string gen_kind_name, gen_out;
  std::size_t gen_n = 3;
  double gen_scale = 1.0;
  CLI::App* gen = app.add_subcommand("gen", "generate certified instances");
  gen->add_option("--kind", gen_kind_name,
                  "sincov|subadditive|submultiplicative|add-pair|main-pair|coboundary")
      ->required();
  gen->add_option("--n", gen_n, "number of points (default 3)");
  gen->add_option("--scale", gen_scale, "entry scale (default 1.0)");
  gen->add_option("--out-prefix", gen_out,
                  "write kernels to <prefix>.json or <prefix>.{s,g,t,f}.json");
  add_global_flags(gen, opts);

  // factorize / pams
  std::string base_label, potential_out;
  CLI::App* factorize = app.add_subcommand("factorize", "Sincov factorization T(f,g) = P(f)/P(g)");
  factorize->add_option("--input", input, "kernel file")->required();
  factorize->add_option("--base", base_label, "base point (default: first label)");
  factorize->add_option("--potential-out", potential_out, "write the potential to this file");
  add_global_flags(factorize, opts);

  CLI::App* pams = app.add_subcommand("pams", "least constant bound on the Sincov defect");
  pams->add_option("--input", input, "kernel file")->required();
  add_global_flags(pams, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 3;
  }

  try {
    using namespace fieq;
    if (defect->parsed()) {
      const DefectKind kind = defect_kind_from_string(kind_name);
      const Kernel a = load_kernel(input);
      if (defect_kind_takes_two_kernels(kind)) {
        if (second.empty()) throw argument_error("kind " + kind_name + " needs --second");
        return emit_defect(opts, defect_scan(kind, a, load_kernel(second), opts.tolerance));
      }
      if (!second.empty()) throw argument_error("kind " + kind_name + " takes a single kernel");
      return emit_defect(opts, defect_scan(kind, a, opts.tolerance));
    }
    if (closure->parsed()) {
      const Kernel closed = triangle_closure(load_kernel(input));
      return emit(opts, kernel_to_json(closed), 0);
    }
    if (represent->parsed()) {
      const Kernel h = load_kernel(input);
      const PotentialFamily family = canonical_potentials(h);
      const Kernel rep = sup_representation(family);
      json j;
      j["family"] = family_to_json(family);
      j["representation"] = kernel_to_json(rep);
      j["max_deviation_from_input"] = max_abs_diff(rep, h);
      return emit(opts, j, 0);
    }
    if (verify_ct->parsed()) {
      const CorollaryCtReport report = verify_corollary_ct(load_kernel(input), opts.tolerance);
      return emit(opts, to_json(report), report.hypothesis_holds ? 0 : 1);
    }
    if (check_add->parsed()) {
      return emit_defect(
          opts, fieq::check_add(load_kernel(s_path), load_kernel(g_path), opts.tolerance));
    }
    if (check_main->parsed()) {
      const Kernel t = load_kernel(t_path);
      const Kernel f = load_kernel(f_path);
      const DefectReport report =
          t_imag_path.empty() ? fieq::check_main(t, f, opts.tolerance)
                              : fieq::check_main(t, load_kernel(t_imag_path), f, opts.tolerance);
      return emit_defect(opts, report);
    }
    if (decompose->parsed()) {
      const DecomposeResult r =
          decompose_p2(load_kernel(s_path), load_kernel(g_path), opts.tolerance);
      if (!out_a.empty()) write_kernel(r.h1, out_a);
      if (!out_b.empty()) write_kernel(r.h2, out_b);
      return emit(opts, to_json(r), 0);
    }
    if (compose->parsed()) {
      const ComposeResult r =
          compose_p3(load_kernel(h1_path), load_kernel(h2_path), opts.tolerance);
      if (!out_a.empty()) write_kernel(r.s, out_a);
      if (!out_b.empty()) write_kernel(r.g, out_b);
      return emit(opts, to_json(r), r.add_check.holds() ? 0 : 1);
    }
    if (synth->parsed()) {
      SynthesisOptions options;
      if (objective_name == "sum") {
        options.objective = LPObjective::sum;
      } else if (objective_name == "max") {
        options.objective = LPObjective::max;
      } else {
        throw argument_error("unknown objective: \"" + objective_name + "\"");
      }
      options.symmetric = symmetric;
      options.zero_diagonal = zero_diagonal;
      const LPOutcome outcome = synthesize_min_g(load_kernel(s_path), options);
      return emit(opts, to_json(outcome), outcome.status == LPStatus::optimal ? 0 : 2);
    }
    if (build_ch->parsed()) {
      const BuildChResult r =
          fieq::build_ch(load_family(f1_path), load_family(f2_path), opts.tolerance);
      return emit(opts, to_json(r), r.add_check.holds() ? 0 : 1);
    }
    if (probe->parsed()) {
      std::optional<Kernel> t_im;
      if (!t_imag_path.empty()) t_im = load_kernel(t_imag_path);
      const ProbeReport report =
          theorem_probe(load_kernel(t_path), load_kernel(f_path), t_im, opts.tolerance);
      const bool ok =
          report.main_ok && report.bound_f_ok && report.bound_gamma_ok && report.bound_1_ok;
      return emit(opts, to_json(report), ok ? 0 : 1);
    }
    if (gamma->parsed()) {
      return emit(opts, kernel_to_json(gamma_kernel(load_kernel(f_path))), 0);
    }
    if (zero_prop->parsed()) {
      const ZeroPropReport report = zero_propagation_check(load_kernel(f_path), opts.tolerance);
      return emit(opts, to_json(report), report.confirmed && report.submult_ok ? 0 : 1);
    }
    if (gruss->parsed()) {
      const FunctionSample f = load_function_sample(sample_f);
      if (sample_g.empty()) {
        return emit(opts, to_json(integral_mean(f)), 0);
      }
      const GrussReport report =
          gruss_check(f, load_function_sample(sample_g),
                      opts.tolerance == kDefaultTolerance ? 1e-8 : opts.tolerance);
      return emit(opts, to_json(report), report.holds ? 0 : 1);
    }
    if (richard->parsed()) {
      return emit(opts, to_json(richard_scan(dim, trials, opts.seed)), 0);
    }
    if (gen->parsed()) {
      GeneratorSpec spec;
      spec.kind = gen_kind_from_string(gen_kind_name);
      spec.n = gen_n;
      spec.seed = opts.seed;
      spec.scale = gen_scale;
      const GeneratedInstance instance = generate(spec);
      if (!gen_out.empty()) {
        if (instance.kernels.size() == 1) {
          write_kernel(instance.kernels[0], gen_out + ".json");
        } else {
          for (std::size_t i = 0; i < instance.kernels.size(); ++i) {
            write_kernel(instance.kernels[i], gen_out + "." + instance.roles[i] + ".json");
          }
        }
      }
      return emit(opts, to_json(instance), 0);
    }
    if (factorize->parsed()) {
      const Kernel t = load_kernel(input);
      const FactorizeResult r = base_label.empty()
                                    ? gronau_factorize(t, opts.tolerance)
                                    : gronau_factorize(t, base_label, opts.tolerance);
      if (!potential_out.empty()) write_potential(r.phi, potential_out);
      return emit(opts, to_json(r), 0);
    }
    if (pams->parsed()) {
      const Kernel t = load_kernel(input);
      const DefectReport scan = defect_scan(DefectKind::sincov, t, opts.tolerance);
      json j;
      j["c"] = scan.max_defect;
      j["argmax"] = scan.argmax;
      j["constant_f"] = constant_f_from_c(scan.max_defect);
      return emit(opts, j, 0);
    }
  } catch (const fieq::negative_cycle_error& e) {
    json j;
    j["error"] = "negative cycle";
    j["message"] = e.what();
    j["cycle"] = e.cycle;
    j["cycle_weight"] = e.weight;
    emit(opts, j, 0);
    return 2;
  } catch (const fieq::structure_error& e) {
    json j;
    j["error"] = "structural infeasibility";
    j["message"] = e.what();
    emit(opts, j, 0);
    return 2;
  } catch (const fieq::error& e) {
    json j;
    j["error"] = "argument or I/O error";
    j["message"] = e.what();
    std::cerr << j.dump(2) << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "{\"error\": \"internal\", \"message\": " << json(e.what()).dump() << "}\n";
    return 3;
  }
  return 3;
}
