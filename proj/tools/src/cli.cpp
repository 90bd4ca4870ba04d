#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "fplab/cli/commands.hpp"
#include "fplab/cli/diagram.hpp"
#include "fplab/errors.hpp"

namespace fplab::cli {

namespace {

struct TargetArgs {
  std::string type;
  std::string pseudo;
  std::vector<int> ct;
  bool double_points = false;

  void add_to(CLI::App* app, bool with_ct) {
    app->add_option("--type", type, "2-type vector, e.g. 2,4,5");
    app->add_option("--pseudo", pseudo, "pseudo type vector, e.g. 1,1,2,2");
    if (with_ct) app->add_option("--ct", ct, "pairwise intersections of t generic lines, extended by r points")->expected(2);
    app->add_flag("--double", double_points, "use the double point scheme on the support");
  }

  [[nodiscard]] Target resolve() const {
    Target t;
    if (!type.empty()) t.type = TypeVector2(parse_int_list(type));
    if (!pseudo.empty()) t.pseudo = PseudoTypeVector(parse_int_list(pseudo));
    if (ct.size() == 2) t.ct = std::pair{ct[0], ct[1]};
    t.double_points = double_points;
    return t;
  }
};

void write_file(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw ValidationError("cannot write '" + path + "'");
  f << text;
}

void print_report(const RunReport& r, const std::string& json_path, std::ostream& out) {
  if (json_path != "-") {
    out << render(r);
    if (r.details.contains("diagrams")) {
      for (const auto& [label, text] : r.details["diagrams"].items()) {
        out << "diagram " << label << ":\n" << text.get<std::string>();
      }
    }
  }
  if (!json_path.empty()) write_file(json_path, emit(r) + "\n", out);
}

std::string scan_text(const ScanResult& s) {
  std::ostringstream os;
  const auto& d = s.summary.details;
  os << "type vectors        " << d["vectors"] << "\n"
     << "hf unique           " << d["hf_unique"] << "\n"
     << "hf non-unique       " << d["hf_nonunique"] << "\n"
     << "betti unique        " << d["betti_unique"] << "\n"
     << "hf-unique only      " << d["hf_unique_betti_nonunique"] << "\n"
     << "confirmed by oracle " << d["confirmed"] << " (mismatch " << d["confirmed_mismatch"]
     << ", deviating where non-unique " << d["confirmed_expected_nonunique"] << ")\n";
  os << "non-unique verdicts:\n";
  for (const auto& w : d["witnesses"]) {
    os << "  " << w["type"].dump() << "  " << (w["hf_unique"].get<bool>() ? "hf-unique " : "hf-nonunique ")
       << "betti-nonunique  " << w["witness"]["kind"].get<std::string>() << " at " << w["witness"]["segment"].dump()
       << " = " << w["witness"]["values"].dump();
    if (w.contains("observed_delta_h")) os << "  observed hf " << w["observed_delta_h"];
    if (w.contains("observed_betti")) os << "  observed diagrams " << w["observed_betti"] << " (lower bound)";
    os << "\n";
  }
  os << "verdict: " << to_string(s.summary.verdict) << "\n";
  return os.str();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hilbert functions and Betti numbers of reduced and double points in the plane", "fplab"};
  app.require_subcommand(1);
  std::string json_path;
  app.add_option("--json", json_path, "write the JSON report to PATH ('-' for stdout)");
  unsigned jobs = 1;
  app.add_option("--jobs", jobs, "worker threads for scan, extremal and reproduce")->check(CLI::Range(1u, 256u));

  std::uint64_t seed = 0;
  std::string mode = "modular";
  int trials = -1;

  TargetArgs predict_args;
  auto* predict = app.add_subcommand("predict", "type-level predictions, no oracle run");
  predict_args.add_to(predict, true);

  TargetArgs verify_args;
  VerifyOptions vo;
  std::string dump_path;
  auto* verify = app.add_subcommand("verify", "build a configuration and compare the oracle with the prediction");
  verify_args.add_to(verify, true);
  verify->add_option("--config", vo.config, "standard|spread-out|standard-pseudo|generic|ct|ctr|ch|lattice|cubic");
  verify->add_option("--seed", seed);
  verify->add_option("--mode", mode)->check(CLI::IsMember({"exact", "modular"}));
  verify->add_flag("--generic-lines", vo.generic_lines, "generic configurations use random lines");
  verify->add_option("--width", vo.lattice_width, "lattice width (0 picks a default)");
  verify->add_flag("--scatter", vo.lattice_scatter, "lattice rows take random positions");
  verify->add_option("--points", vo.cubic_points, "number of points for --config cubic");
  verify->add_option("--dump-matrices", dump_path, "write every condition matrix to PATH");

  ScanOptions so;
  auto* scan = app.add_subcommand("scan", "classify every 2-type vector up to a bound");
  scan->add_option("--max-sigma", so.max_sigma, "largest entry n_r");
  scan->add_option("--what", so.what)->check(CLI::IsMember({"hf", "betti"}));
  scan->add_option("--trials", trials, "seeds per family for confirmed vectors");
  scan->add_option("--confirm-max", so.confirm_max, "confirm vectors with n_r up to this bound");
  scan->add_option("--seed", seed);
  scan->add_option("--mode", mode)->check(CLI::IsMember({"exact", "modular"}));

  ExtremalOptions eo;
  std::vector<int> extremal_ct;
  std::string extremal_dh;
  auto* extremal = app.add_subcommand("extremal", "sample supports with the Hilbert function of C_{t,r}");
  auto* ct_opt = extremal->add_option("--ct", extremal_ct, "t r")->expected(2);
  auto* dh_opt = extremal->add_option("--delta-h", extremal_dh, "support first difference (1,...,t-1[,r])");
  ct_opt->excludes(dh_opt);
  extremal->add_option("--trials", trials, "accepted samples");
  extremal->add_option("--strategies", eo.strategies, "samplers to rotate through (free,line-heavy,perturbed,conic-heavy)")
      ->delimiter(',');
  extremal->add_option("--seed", seed);
  extremal->add_option("--mode", mode)->check(CLI::IsMember({"exact", "modular"}));

  ReproduceOptions ro;
  auto* reproduce = app.add_subcommand("reproduce", "recompute a printed example in exact arithmetic");
  reproduce->add_option("id", ro.id, "example id or 'all'")->required();
  reproduce->add_option("--seed", seed);
  reproduce->add_option("--trials", trials, "seed budget for witness searches");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (predict->parsed()) {
      const auto r = cmd_predict({predict_args.resolve()});
      print_report(r, json_path, out);
      return r.exit_code();
    }
    if (verify->parsed()) {
      vo.target = verify_args.resolve();
      vo.seed = seed;
      vo.mode = arithmetic_mode_from_string(mode);
      std::ofstream dump;
      if (!dump_path.empty()) {
        dump.open(dump_path);
        if (!dump) throw ValidationError("cannot write '" + dump_path + "'");
        vo.dump = &dump;
      }
      const auto r = cmd_verify(vo);
      print_report(r, json_path, out);
      return r.exit_code();
    }
    if (scan->parsed()) {
      so.seed = seed;
      so.mode = arithmetic_mode_from_string(mode);
      so.jobs = jobs;
      if (trials >= 0) so.trials = trials;
      const auto s = cmd_scan(so);
      if (json_path != "-") out << scan_text(s);
      if (!json_path.empty()) {
        std::string lines;
        for (const auto& item : s.items) lines += emit(item, -1) + "\n";
        lines += emit(s.summary, -1) + "\n";
        write_file(json_path, lines, out);
      }
      return s.summary.exit_code();
    }
    if (extremal->parsed()) {
      if (extremal_ct.size() == 2) {
        eo.t = extremal_ct[0];
        eo.r = extremal_ct[1];
      } else if (!extremal_dh.empty()) {
        std::tie(eo.t, eo.r) = ct_shape_from_delta_h(parse_int_list(extremal_dh));
      } else {
        throw ValidationError("extremal needs --ct t r or --delta-h");
      }
      eo.seed = seed;
      eo.mode = arithmetic_mode_from_string(mode);
      eo.jobs = jobs;
      if (trials >= 0) eo.trials = trials;
      const auto r = cmd_extremal(eo);
      print_report(r, json_path, out);
      if (json_path != "-") {
        out << "pointwise minimum h: " << r.details["pointwise_min_h"].dump() << "\n"
            << "C_{t,r} attains it: " << (r.details["attains_minimum"].get<bool>() ? "yes" : "no") << "\n"
            << "conjecture check (" << r.details["claim"].get<std::string>()
            << "): " << r.details["conjecture_verdict"].get<std::string>() << "\n";
      }
      return r.exit_code();
    }
    if (reproduce->parsed()) {
      ro.seed = seed;
      ro.jobs = jobs;
      if (trials >= 0) ro.trials = trials;
      const auto r = cmd_reproduce(ro);
      print_report(r, json_path, out);
      return r.exit_code();
    }
  } catch (const ValidationError& e) {
    err << "fplab: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotAnHVectorError& e) {
    err << "fplab: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnsupportedError& e) {
    err << "fplab: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DegeneracyError& e) {
    err << "fplab: degenerate configuration: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const SamplingError& e) {
    err << "fplab: sampling failed: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const std::exception& e) {
    err << "fplab: " << e.what() << "\n";
    return kExitMismatch;
  }
  return kExitUsage;
}

}  // namespace fplab::cli
