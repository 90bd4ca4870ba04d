#include <charconv>
#include <sstream>

#include "fplab/cli/commands.hpp"
#include "fplab/cli/diagram.hpp"
#include "fplab/errors.hpp"

namespace fplab::cli {

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const auto comma = s.find(',', pos);
    const auto end = comma == std::string::npos ? s.size() : comma;
    int value = 0;
    const char* first = s.data() + pos;
    const char* last = s.data() + end;
    while (first < last && *first == ' ') ++first;
    while (last > first && last[-1] == ' ') --last;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (first == last || ec != std::errc{} || ptr != last) {
      throw ValidationError("malformed integer list '" + s + "'");
    }
    out.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::pair<int, int> ct_shape_from_delta_h(const std::vector<int>& d) {
  // (1, ..., t-1) is C_t; (1, ..., t-1, r) with 0 < r <= t is C_{t,r}.
  std::size_t k = 0;
  while (k < d.size() && d[k] == static_cast<int>(k) + 1) ++k;
  if (k == d.size()) {
    if (k == 0) throw ValidationError("empty first difference");
    const int t = static_cast<int>(k) + 1;
    return {t, 0};
  }
  if (k + 1 != d.size() || k == 0 || d[k] < 1 || d[k] > static_cast<int>(k) + 1) {
    throw ValidationError("first difference is not of the form (1, ..., t-1) or (1, ..., t-1, r)");
  }
  return {static_cast<int>(k) + 1, d[k]};
}

namespace {

json target_json(const Target& t) {
  json j = json::object();
  j["type"] = t.type ? json(std::vector<int>(t.type->entries().begin(), t.type->entries().end())) : json(nullptr);
  j["pseudo"] =
      t.pseudo ? json(std::vector<int>(t.pseudo->entries().begin(), t.pseudo->entries().end())) : json(nullptr);
  j["ct"] = t.ct ? json::array({t.ct->first, t.ct->second}) : json(nullptr);
  j["double"] = t.double_points;
  return j;
}

int target_count(const Target& t) { return (t.type ? 1 : 0) + (t.pseudo ? 1 : 0) + (t.ct ? 1 : 0); }

void require_single_target(const Target& t) {
  if (target_count(t) != 1) throw ValidationError("exactly one of --type, --pseudo, --ct is required");
}

void check_ct(int t, int r) {
  if (t < 2) throw ValidationError("C_t needs t >= 2");
  if (r < 0 || r > t) throw ValidationError("C_{t,r} needs 0 <= r <= t");
}

std::string default_config(const Target& t) {
  if (t.ct) return t.ct->second == 0 ? "ct" : "ctr";
  if (t.pseudo) return "standard-pseudo";
  return t.double_points ? "spread-out" : "standard";
}

// Quantities predicted for the target; each entry becomes one check when the
// oracle runs. `soft` marks values that are realized by some configurations
// but not forced by the type.
struct Expectation {
  std::optional<OSequence> delta_h;
  bool delta_h_soft = false;
  std::optional<int> regularity;
  bool regularity_soft = false;
  std::optional<BettiTable> betti;
  bool betti_soft = false;
  std::string betti_label = "betti";
  std::optional<int> min_gen_count;
  bool min_gen_soft = false;
  json predictions = nullptr;
};

Expectation expect_for(const Target& t, const std::string& config) {
  Expectation e;
  if (t.type && !t.double_points) {
    const auto p = predict_pseudo(PseudoTypeVector(*t.type));
    // k-configurations share the Hilbert function but not necessarily the resolution.
    const bool k_config = config == "ch";
    e.delta_h = hf_from_type_vector(*t.type);
    e.regularity = p.regularity;
    e.regularity_soft = false;
    e.betti = p.betti;
    e.betti_soft = k_config;
    e.min_gen_count = p.min_gen_count;
    e.min_gen_soft = k_config;
    e.predictions = to_json(p);
    e.predictions["delta_h"] = to_json(*e.delta_h);
    e.predictions["kind"] = "reduced-linear";
  } else if (t.type) {
    const auto c = classify_double_scheme(*t.type);
    const bool spread = config == "spread-out";
    const bool linear = config != "ch";
    e.delta_h = c.predicted_delta_h;
    e.delta_h_soft = !(c.hf_unique && linear) && !spread;
    e.regularity = c.regularity;
    e.regularity_soft = !linear;
    if (c.predicted_betti) {
      e.betti = c.predicted_betti;
      e.betti_soft = !linear;
    } else if (spread) {
      e.betti = bdl_betti_run(c.pseudo_type);
      e.betti_soft = true;
      e.betti_label = "betti (all-no-split run)";
    }
    e.predictions = to_json(c);
    e.predictions["kind"] = "double";
  } else if (t.pseudo && !t.double_points) {
    const auto p = predict_pseudo(*t.pseudo);
    const bool standard = config == "standard-pseudo";
    e.delta_h = p.delta_h;
    e.delta_h_soft = !p.hf_unique && !standard;
    e.regularity = p.regularity;
    if (p.betti) {
      e.betti = p.betti;
    } else if (standard) {
      e.betti = bdl_betti_run(*t.pseudo);
      e.betti_soft = true;
      e.betti_label = "betti (all-no-split run)";
    }
    e.min_gen_count = p.min_gen_count;
    e.predictions = to_json(p);
    e.predictions["kind"] = "reduced-pseudo";
  } else if (t.pseudo) {
    // No theory for doubling a pseudo linear configuration; the oracle just reports.
    e.predictions = json{{"kind", "double-pseudo"}};
  } else {
    const auto [ct, r] = *t.ct;
    e.predictions = json{{"kind", t.double_points ? "double-ct" : "ct"}, {"t", ct}, {"r", r}};
    if (!t.double_points) {
      const auto base = ct_delta_h(ct);
      std::vector<std::int64_t> v(base.values().begin(), base.values().end());
      if (r > 0) v.push_back(r);
      e.delta_h = OSequence(std::move(v));
    } else {
      try {
        e.delta_h = ztr_delta_h(ct, r);
      } catch (const UnsupportedError&) {
        e.predictions["note"] = "no tabulated or closed-form value for these (t, r)";
      }
    }
    if (e.delta_h) e.predictions["delta_h"] = to_json(*e.delta_h);
  }
  return e;
}

}  // namespace

Configuration build_configuration(const VerifyOptions& o) {
  const auto& t = o.target;
  const std::string name = o.config.empty() ? default_config(t) : o.config;
  // Cubic points are addressed by count; a type is optional and only compared against.
  if (name == "cubic") {
    if (target_count(t) > 1 || t.ct) throw ValidationError("--config cubic takes at most one of --type, --pseudo");
  } else {
    require_single_target(t);
  }
  Configuration c;
  if (t.ct) {
    const auto [ct, r] = *t.ct;
    check_ct(ct, r);
    if (name == "ct" && r == 0) {
      c = ct_config(ct, o.seed);
    } else if (name == "ctr" || name == "ct") {
      c = ctr_config(ct, r, o.seed);
    } else {
      throw ValidationError("--ct supports --config ct or ctr, not '" + name + "'");
    }
  } else if (name == "cubic") {
    c = points_on_cubic(o.cubic_points, o.seed);
  } else if (t.type) {
    if (name == "standard") {
      c = standard_linear_config(*t.type);
    } else if (name == "spread-out") {
      c = spread_out_config(*t.type);
    } else if (name == "standard-pseudo") {
      c = standard_pseudo_config(PseudoTypeVector(*t.type));
    } else if (name == "generic") {
      c = generic_linear_config(*t.type, o.seed, o.generic_lines);
    } else if (name == "ch") {
      c = ch_config(*t.type, o.seed);
    } else if (name == "lattice") {
      c = lattice_pseudo_config(PseudoTypeVector(*t.type), o.seed, o.lattice_width, o.lattice_scatter);
    } else {
      throw ValidationError("--type does not support --config '" + name + "'");
    }
  } else {
    if (name == "standard-pseudo" || name == "standard") {
      c = standard_pseudo_config(*t.pseudo);
    } else if (name == "generic") {
      c = generic_pseudo_config(*t.pseudo, o.seed, o.generic_lines);
    } else if (name == "lattice") {
      c = lattice_pseudo_config(*t.pseudo, o.seed, o.lattice_width, o.lattice_scatter);
    } else {
      throw ValidationError("--pseudo does not support --config '" + name + "'");
    }
  }
  if (t.double_points) c = doubled(c);
  c.validate();
  return c;
}

RunReport cmd_predict(const PredictOptions& o) {
  const auto& t = o.target;
  require_single_target(t);
  if (t.ct) check_ct(t.ct->first, t.ct->second);
  RunReport r;
  r.command = "predict";
  r.inputs = target_json(t);
  auto e = expect_for(t, default_config(t));
  r.predictions = e.predictions;
  r.settle();
  return r;
}

RunReport cmd_verify(const VerifyOptions& o) {
  const auto& t = o.target;
  const std::string config = o.config.empty() ? default_config(t) : o.config;
  const auto c = build_configuration(o);

  RunReport r;
  r.command = "verify";
  r.inputs = target_json(t);
  r.inputs["config"] = config;
  r.inputs["seed"] = o.seed;
  r.inputs["mode"] = to_string(o.mode);
  if (config == "cubic") r.inputs["points"] = o.cubic_points;
  r.arithmetic_mode = o.mode;

  // A cubic run has no type-level prediction; it only compares when a type is given.
  Expectation e;
  if (config == "cubic") {
    if (t.type) {
      const auto cls = classify_double_scheme(*t.type);
      e.delta_h = t.double_points ? cls.predicted_delta_h : hf_from_type_vector(*t.type);
      e.delta_h_soft = true;
      e.predictions = json{{"kind", "cubic-vs-type"}, {"delta_h", to_json(*e.delta_h)}};
    } else {
      e.predictions = json{{"kind", "cubic"}};
    }
  } else {
    e = expect_for(t, config);
  }
  r.predictions = e.predictions;

  OracleOptions opts;
  opts.mode = o.mode;
  opts.dump = o.dump;
  const auto res = analyze(c, opts);
  r.oracle_results = OracleSection{res.hf, res.betti};

  if (e.delta_h) r.check("delta_h", to_json(*e.delta_h), to_json(res.hf.delta_h), e.delta_h_soft);
  if (e.regularity) r.check("regularity", *e.regularity, res.hf.regularity, e.regularity_soft);
  if (e.betti) r.check(e.betti_label, to_json(*e.betti), to_json(res.betti), e.betti_soft);
  if (e.min_gen_count) r.check("min_gen_count", *e.min_gen_count, res.betti.generator_count(), e.min_gen_soft);
  r.check("degree conservation", c.degree(), res.hf.delta_h.sum());
  r.check("hilbert series identity", true, res.betti.consistent_with(res.hf.delta_h));

  r.details["configuration"] = to_json(c);
  r.details["escalations"] = res.escalations;
  r.details["macaulay"] = macaulay_diagram(res.betti);
  r.settle();
  // A run with nothing but bookkeeping checks has no prediction to compare.
  if (!e.delta_h && !e.regularity && !e.betti && r.verdict == Verdict::Match) r.verdict = Verdict::NotApplicable;
  return r;
}

std::string render(const RunReport& r) {
  std::ostringstream os;
  os << r.command << ": " << r.inputs.dump() << "\n";
  if (r.predictions && !r.predictions->is_null()) {
    for (const auto& [k, v] : r.predictions->items()) {
      if (v.is_object() || v.is_array() || !v.is_null()) os << "  predicted " << k << " = " << v.dump() << "\n";
    }
  }
  if (r.oracle_results) {
    const auto& hf = r.oracle_results->hf;
    os << "  oracle h = " << json(hf.h).dump() << "\n";
    os << "  oracle delta_h = " << hf.delta_h.to_string() << "  alpha=" << hf.alpha << " sigma=" << hf.sigma
       << " reg=" << hf.regularity << " degree=" << hf.degree << "\n";
    if (r.oracle_results->betti) {
      os << "  oracle " << r.oracle_results->betti->to_string() << "\n";
      std::istringstream diagram(macaulay_diagram(*r.oracle_results->betti));
      for (std::string line; std::getline(diagram, line);) os << "    " << line << "\n";
    }
  }
  for (const auto& c : r.checks) {
    os << "  [" << (c.ok ? "ok" : c.soft ? "differs" : "FAIL") << "] " << c.name << ": expected " << c.expected.dump()
       << ", got " << c.actual.dump() << "\n";
  }
  os << "verdict: " << to_string(r.verdict) << " (" << to_string(r.arithmetic_mode) << ")\n";
  return os.str();
}

}  // namespace fplab::cli
