#include <cstdio>
#include <functional>
#include <map>

#include "fplab/cli/commands.hpp"
#include "fplab/cli/diagram.hpp"
#include "fplab/cli/fixtures.hpp"
#include "fplab/cli/pool.hpp"
#include "fplab/errors.hpp"

namespace fplab::cli {

namespace {

OracleOptions exact() {
  OracleOptions o;
  o.mode = ArithmeticMode::Exact;
  return o;
}

json seq(const std::vector<int>& v) { return json(v); }
json seq(const OSequence& s) { return to_json(s); }
json seq(const PseudoTypeVector& t) { return json(std::vector<int>(t.entries().begin(), t.entries().end())); }

OSequence delta_of(const std::vector<long long>& h) {
  const std::vector<std::int64_t> v(h.begin(), h.end());
  return first_difference_of(v);
}

BettiTable fixture_betti(const Fixture& f, const std::string& prefix) {
  return BettiTable(f.ints(prefix + "beta1"), f.ints(prefix + "beta2"));
}

void add_diagram(RunReport& r, const std::string& label, const BettiTable& b) {
  r.details["diagrams"][label] = macaulay_diagram(b);
}

// Distinct values of key(seed) over seeds 0..budget-1, first seed for each.
template <class T, class Fn>
std::vector<std::pair<T, std::uint64_t>> search_seeds(int budget, unsigned jobs, Fn fn) {
  const auto all = parallel_map<T>(static_cast<std::size_t>(budget), [&](std::size_t s) { return fn(s); }, jobs);
  std::vector<std::pair<T, std::uint64_t>> out;
  for (std::size_t s = 0; s < all.size(); ++s) {
    bool seen = false;
    for (const auto& [v, _] : out) seen = seen || v == all[s];
    if (!seen) out.emplace_back(all[s], s);
  }
  return out;
}

void pseudo_3_6_6_7_12_14(RunReport& r, const ReproduceOptions&) {
  const auto& f = builtin_fixture("pseudo-3-6-6-7-12-14");
  const PseudoTypeVector t(f.ints("pseudo"));
  r.check("standard O-sequence", seq(f.ints("delta_h")), seq(standard_osequence(t)));
  const auto hf = hilbert_function(standard_pseudo_config(t), exact());
  r.check("oracle delta_h of the standard pseudo configuration", seq(f.ints("delta_h")), seq(hf.delta_h));
}

void ex_2_4_5(RunReport& r, const ReproduceOptions&) {
  const auto& f = builtin_fixture("ex-2-4-5");
  const TypeVector2 t(f.ints("type"));
  const auto cls = classify_double_scheme(t);
  r.check("associated pseudo type", seq(f.ints("pseudo")), seq(cls.pseudo_type));
  r.check("predicted delta_h", seq(f.ints("delta_h")), seq(cls.predicted_delta_h));
  const auto res = analyze(doubled(spread_out_config(t)), exact());
  r.oracle_results = OracleSection{res.hf, res.betti};
  r.check("oracle h", json(f.longs("hf")), json(res.hf.h));
  r.check("oracle delta_h", seq(f.ints("delta_h")), seq(res.hf.delta_h));
  r.check("oracle betti", to_json(fixture_betti(f, "")), to_json(res.betti));
  if (cls.predicted_betti) r.check("predicted betti", to_json(fixture_betti(f, "")), to_json(*cls.predicted_betti));
  add_diagram(r, "ex-2-4-5", res.betti);
}

void special(RunReport& r, const ReproduceOptions&) {
  const auto& f = builtin_fixture("special-4-5-8-9-10");
  const TypeVector2 t(f.ints("type"));
  const auto spread = hilbert_function(doubled(spread_out_config(t)), exact());
  const auto standard = hilbert_function(doubled(standard_linear_config(t)), exact());
  r.check("spread-out double delta_h", seq(f.ints("spread_out_delta_h")), seq(spread.delta_h));
  r.check("standard double delta_h", seq(f.ints("standard_delta_h")), seq(standard.delta_h));
  r.check("predicted delta_h (spread-out)", seq(f.ints("spread_out_delta_h")),
          seq(classify_double_scheme(t).predicted_delta_h));
}

void betti_2_3_4_5(RunReport& r, const ReproduceOptions& o) {
  const auto& f = builtin_fixture("betti-2-3-4-5");
  const TypeVector2 t(f.ints("type"));
  const auto a = fixture_betti(f, "diagram_a_");
  const auto b = fixture_betti(f, "diagram_b_");
  const auto spread = analyze(doubled(spread_out_config(t)), exact());
  r.oracle_results = OracleSection{spread.hf, spread.betti};
  r.check("spread-out double delta_h", seq(f.ints("delta_h")), seq(spread.hf.delta_h));

  struct Seen {
    OSequence dh;
    BettiTable betti;
    bool operator==(const Seen&) const = default;
  };
  const auto found = search_seeds<Seen>(o.trials, o.jobs, [&](std::size_t s) {
    const auto res = analyze(doubled(lattice_pseudo_config(PseudoTypeVector(t), o.seed + s)), exact());
    return Seen{res.hf.delta_h, res.betti};
  });
  json diagrams = json::array();
  std::optional<std::uint64_t> seed_a, seed_b;
  bool same_hf = true;
  for (const auto& [v, s] : found) {
    const auto seed = o.seed + s;
    same_hf = same_hf && v.dh == spread.hf.delta_h;
    const std::string label = v.betti == a ? "A" : v.betti == b ? "B" : "other";
    if (label == "A" && !seed_a) seed_a = seed;
    if (label == "B" && !seed_b) seed_b = seed;
    diagrams.push_back({{"seed", seed}, {"label", label}, {"delta_h", seq(v.dh)}, {"betti", to_json(v.betti)}});
    add_diagram(r, "lattice seed " + std::to_string(seed) + " (" + label + ")", v.betti);
  }
  r.details["search"] = {{"family", "lattice"}, {"seeds", o.trials}, {"first_seed", o.seed},
                         {"distinct_diagrams", diagrams},
                         {"note", "every diagram seen within the seed budget; completeness is not claimed"}};
  r.check("diagram A found", true, seed_a.has_value());
  r.check("diagram B found", true, seed_b.has_value());
  r.check("all diagrams share the Hilbert function", true, same_hf);
  if (seed_a) r.details["seed_diagram_a"] = *seed_a;
  if (seed_b) r.details["seed_diagram_b"] = *seed_b;
}

void not_unique_1_2_2_3(RunReport& r, const ReproduceOptions& o) {
  const auto& f = builtin_fixture("not-unique-1-2-2-3");
  const PseudoTypeVector t(f.ints("pseudo"));
  const auto first = fixture_betti(f, "first_");
  const auto second = fixture_betti(f, "second_");
  const auto standard = analyze(standard_pseudo_config(t), exact());
  r.oracle_results = OracleSection{standard.hf, standard.betti};
  r.check("standard configuration betti", to_json(first), to_json(standard.betti));
  r.check("all-no-split linkage run", to_json(first), to_json(bdl_betti_run(t)));
  const auto found = search_seeds<BettiTable>(o.trials, o.jobs, [&](std::size_t s) {
    return analyze(generic_pseudo_config(t, o.seed + s), exact()).betti;
  });
  std::optional<std::uint64_t> seed_second;
  json seen = json::array();
  for (const auto& [b, s] : found) {
    if (b == second && !seed_second) seed_second = o.seed + s;
    seen.push_back({{"seed", o.seed + s}, {"betti", to_json(b)}});
  }
  r.details["generic_search"] = {{"seeds", o.trials}, {"distinct", seen}};
  r.check("second diagram found among generic seeds", true, seed_second.has_value());
  if (seed_second) r.details["seed_second"] = *seed_second;
  add_diagram(r, "first", first);
  add_diagram(r, "second", second);
}

void pseudo_1_1_2_2(RunReport& r, const ReproduceOptions& o) {
  const auto& f = builtin_fixture("pseudo-1-1-2-2");
  const PseudoTypeVector t(f.ints("pseudo"));
  const auto standard = hilbert_function(standard_pseudo_config(t), exact());
  r.oracle_results = OracleSection{standard, std::nullopt};
  r.check("standard configuration h", json(f.longs("standard_hf")), json(standard.h));

  const auto generic_h = delta_of(f.longs("generic_hf"));
  const auto standard_h = delta_of(f.longs("standard_hf"));
  auto search = [&](const std::string& family, std::function<Configuration(std::uint64_t)> make) {
    const auto found = search_seeds<OSequence>(o.trials, o.jobs, [&](std::size_t s) {
      return hilbert_function(make(o.seed + s), exact()).delta_h;
    });
    json seen = json::array();
    std::optional<std::uint64_t> g, st;
    for (const auto& [dh, s] : found) {
      seen.push_back({{"seed", o.seed + s}, {"delta_h", seq(dh)}});
      if (dh == generic_h && !g) g = o.seed + s;
      if (dh == standard_h && !st) st = o.seed + s;
    }
    r.details[family + "_search"] = {{"seeds", o.trials}, {"distinct", seen}};
    return std::pair{g, st};
  };
  const auto [g1, s1] = search("generic", [&](std::uint64_t s) { return generic_pseudo_config(t, s); });
  r.check("generic seed with h " + json(f.longs("generic_hf")).dump(), true, g1.has_value());
  const auto [g2, s2] = search("scatter", [&](std::uint64_t s) { return lattice_pseudo_config(t, s, 0, true); });
  r.check("scatter seeds realize both Hilbert functions", true, g2.has_value() && s2.has_value());
  if (g2) r.details["scatter_seed_generic"] = *g2;
  if (s2) r.details["scatter_seed_standard"] = *s2;
}

void supp_diff_hf(RunReport& r, const ReproduceOptions& o) {
  const auto& f = builtin_fixture("supp-diff-hf");
  const auto cubic = points_on_cubic(f.ints("points").at(0), o.seed);
  const auto support = hilbert_function(cubic, exact());
  const auto dbl = hilbert_function(doubled(cubic), exact());
  r.oracle_results = OracleSection{dbl, std::nullopt};
  r.check("cubic support delta_h", seq(f.ints("support_delta_h")), seq(support.delta_h));
  r.check("cubic double delta_h", seq(f.ints("double_delta_h")), seq(dbl.delta_h));
  const TypeVector2 t(f.ints("compare_type"));
  const auto spread = hilbert_function(doubled(spread_out_config(t)), exact());
  r.check("type double delta_h (spread-out)", seq(f.ints("double_delta_h")), seq(spread.delta_h));
  r.check("supports differ", true, support.delta_h != hf_from_type_vector(t));
  r.details["cubic"] = to_json(cubic);
}

void zt_table(RunReport& r, const ReproduceOptions& o) {
  const auto& f = builtin_fixture("zt-table");
  json rows = json::array();
  for (const auto& [key, _] : f.fields) {
    int t = 0, s = 0;
    if (std::sscanf(key.c_str(), "z_%d_%d", &t, &s) != 2) continue;
    const auto expected = seq(f.ints(key));
    const auto c = s == 0 ? ct_config(t, o.seed) : ctr_config(t, s, o.seed);
    const auto hf = hilbert_function(doubled(c), exact());
    const std::string label = s == 0 ? "Z_" + std::to_string(t) : "Z_{" + std::to_string(t) + "," + std::to_string(s) + "}";
    r.check(label + " oracle", expected, seq(hf.delta_h));
    r.check(label + " formula", expected, seq(ztr_delta_h(t, s)));
    rows.push_back({{"t", t}, {"r", s}, {"delta_h", seq(hf.delta_h)}});
  }
  r.details["rows"] = rows;
}

using Runner = void (*)(RunReport&, const ReproduceOptions&);

const std::vector<std::pair<std::string, Runner>>& runners() {
  static const std::vector<std::pair<std::string, Runner>> table = {
      {"pseudo-3-6-6-7-12-14", pseudo_3_6_6_7_12_14},
      {"ex-2-4-5", ex_2_4_5},
      {"special-4-5-8-9-10", special},
      {"betti-2-3-4-5", betti_2_3_4_5},
      {"not-unique-1-2-2-3", not_unique_1_2_2_3},
      {"pseudo-1-1-2-2", pseudo_1_1_2_2},
      {"supp-diff-hf", supp_diff_hf},
      {"zt-table", zt_table},
  };
  return table;
}

}  // namespace

std::vector<std::string> reproduce_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, _] : runners()) ids.push_back(id);
  return ids;
}

RunReport cmd_reproduce(const ReproduceOptions& o) {
  if (o.trials < 1) throw ValidationError("--trials must be positive");
  RunReport r;
  r.command = "reproduce";
  r.arithmetic_mode = ArithmeticMode::Exact;
  r.inputs = json{{"id", o.id}, {"seed", o.seed}, {"trials", o.trials}};
  r.details = json::object();
  if (o.id == "all") {
    for (const auto& [id, run] : runners()) {
      RunReport part;
      part.details = json::object();
      run(part, o);
      for (auto& c : part.checks) {
        c.name = id + ": " + c.name;
        r.checks.push_back(std::move(c));
      }
      r.details[id] = part.details;
    }
  } else {
    bool known = false;
    for (const auto& [id, run] : runners()) {
      if (id == o.id) {
        run(r, o);
        known = true;
      }
    }
    if (!known) throw ValidationError("unknown example id '" + o.id + "'");
    r.details["location"] = builtin_fixture(o.id).location;
  }
  r.settle();
  return r;
}

}  // namespace fplab::cli
