#include "fplab/cli/report.hpp"

#include "fplab/errors.hpp"

namespace fplab::cli {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Match: return "match";
    case Verdict::Mismatch: return "mismatch";
    case Verdict::NotApplicable: return "not-applicable";
    case Verdict::ExpectedNonunique: return "expected-nonunique";
  }
  fail_internal("unknown verdict");
}

Verdict verdict_from_string(const std::string& s) {
  for (auto v : {Verdict::Match, Verdict::Mismatch, Verdict::NotApplicable, Verdict::ExpectedNonunique}) {
    if (to_string(v) == s) return v;
  }
  throw ValidationError("unknown verdict '" + s + "'");
}

bool RunReport::check(std::string name, const json& expected, const json& actual, bool soft) {
  const bool ok = expected == actual;
  checks.push_back({std::move(name), expected, actual, ok, soft});
  return ok;
}

void RunReport::settle() {
  if (checks.empty()) {
    verdict = Verdict::NotApplicable;
    return;
  }
  bool hard_fail = false;
  bool soft_fail = false;
  for (const auto& c : checks) {
    if (c.ok) continue;
    (c.soft ? soft_fail : hard_fail) = true;
  }
  verdict = hard_fail ? Verdict::Mismatch : soft_fail ? Verdict::ExpectedNonunique : Verdict::Match;
}

json to_json(const OSequence& s) { return json(std::vector<std::int64_t>(s.values().begin(), s.values().end())); }

OSequence osequence_from_json(const json& j) { return OSequence(j.get<std::vector<std::int64_t>>()); }

json to_json(const BettiTable& b) { return json{{"beta1", b.beta1}, {"beta2", b.beta2}}; }

BettiTable betti_from_json(const json& j) {
  return BettiTable(j.at("beta1").get<std::vector<int>>(), j.at("beta2").get<std::vector<int>>());
}

json to_json(const HFRecord& h) {
  return json{{"h", h.h},         {"delta_h", to_json(h.delta_h)}, {"alpha", h.alpha},
              {"sigma", h.sigma}, {"regularity", h.regularity},    {"degree", h.degree}};
}

HFRecord hf_record_from_json(const json& j) {
  HFRecord h;
  h.h = j.at("h").get<std::vector<std::int64_t>>();
  h.delta_h = osequence_from_json(j.at("delta_h"));
  h.alpha = j.at("alpha").get<int>();
  h.sigma = j.at("sigma").get<int>();
  h.regularity = j.at("regularity").get<int>();
  h.degree = j.at("degree").get<long>();
  return h;
}

namespace {

json coords_json(const std::array<Rational, 3>& c) {
  return json::array({format_rational(c[0]), format_rational(c[1]), format_rational(c[2])});
}

std::array<Rational, 3> coords_from(const json& j) {
  if (!j.is_array() || j.size() != 3) throw ValidationError("expected three rational coordinates");
  return {parse_rational(j[0].get<std::string>()), parse_rational(j[1].get<std::string>()),
          parse_rational(j[2].get<std::string>())};
}

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

json to_json(const Configuration& c) {
  json pts = json::array();
  for (const auto& p : c.points) {
    pts.push_back({{"coords", coords_json(p.point.coords())},
                   {"multiplicity", p.multiplicity},
                   {"line", p.line ? json(*p.line) : json(nullptr)}});
  }
  json lines = json::array();
  for (const auto& l : c.lines) lines.push_back(coords_json(l.coeffs()));
  return json{{"kind", to_string(c.kind)}, {"points", pts}, {"lines", lines}};
}

Configuration configuration_from_json(const json& j) {
  Configuration c;
  c.kind = config_kind_from_string(j.at("kind").get<std::string>());
  for (const auto& l : j.at("lines")) {
    auto a = coords_from(l);
    c.lines.emplace_back(a[0], a[1], a[2]);
  }
  for (const auto& p : j.at("points")) {
    auto a = coords_from(p.at("coords"));
    std::optional<std::size_t> line;
    if (!p.at("line").is_null()) line = p.at("line").get<std::size_t>();
    c.points.push_back({ProjPoint(a[0], a[1], a[2]), p.at("multiplicity").get<int>(), line});
  }
  c.validate();
  return c;
}

json to_json(const PseudoPrediction& p) {
  return json{{"hf_unique", p.hf_unique},
              {"delta_h", to_json(p.delta_h)},
              {"delta_h_status", p.hf_unique ? "unique" : "realized-by-standard-not-universal"},
              {"regularity", optional_json(p.regularity)},
              {"betti_unique", optional_json(p.betti_unique)},
              {"betti", p.betti ? to_json(*p.betti) : json(nullptr)},
              {"min_gen_count", optional_json(p.min_gen_count)}};
}

json to_json(const DoubleSchemeClassification& c) {
  return json{{"pseudo_type", c.pseudo_type.entries()},
              {"hf_unique", c.hf_unique},
              {"betti_unique", c.betti_unique},
              {"delta_h", to_json(c.predicted_delta_h)},
              {"regularity", c.regularity},
              {"betti", c.predicted_betti ? to_json(*c.predicted_betti) : json(nullptr)}};
}

json to_json(const RunReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"ok", c.ok}, {"soft", c.soft}});
  }
  json oracle = nullptr;
  if (r.oracle_results) {
    oracle = {{"hf", to_json(r.oracle_results->hf)},
              {"betti", r.oracle_results->betti ? to_json(*r.oracle_results->betti) : json(nullptr)}};
  }
  return json{{"schema", kSchemaVersion},
              {"command", r.command},
              {"inputs", r.inputs},
              {"predictions", r.predictions ? *r.predictions : json(nullptr)},
              {"oracle_results", oracle},
              {"verdict", to_string(r.verdict)},
              {"arithmetic_mode", to_string(r.arithmetic_mode)},
              {"checks", checks},
              {"details", r.details}};
}

RunReport report_from_json(const json& j) {
  if (j.at("schema").get<std::string>() != kSchemaVersion) {
    throw ValidationError("unsupported report schema " + j.at("schema").dump());
  }
  RunReport r;
  r.command = j.at("command").get<std::string>();
  r.inputs = j.at("inputs");
  if (!j.at("predictions").is_null()) r.predictions = j.at("predictions");
  if (const auto& o = j.at("oracle_results"); !o.is_null()) {
    OracleSection s;
    s.hf = hf_record_from_json(o.at("hf"));
    if (!o.at("betti").is_null()) s.betti = betti_from_json(o.at("betti"));
    r.oracle_results = std::move(s);
  }
  r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  r.arithmetic_mode = arithmetic_mode_from_string(j.at("arithmetic_mode").get<std::string>());
  for (const auto& c : j.at("checks")) {
    r.checks.push_back({c.at("name").get<std::string>(), c.at("expected"), c.at("actual"), c.at("ok").get<bool>(),
                        c.at("soft").get<bool>()});
  }
  r.details = j.at("details");
  return r;
}

std::string emit(const RunReport& r, int indent) { return to_json(r).dump(indent); }

RunReport parse_report(const std::string& text) { return report_from_json(json::parse(text)); }

}  // namespace fplab::cli
