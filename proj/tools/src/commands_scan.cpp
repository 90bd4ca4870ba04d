#include <algorithm>
#include <map>
#include <set>

#include "fplab/cli/commands.hpp"
#include "fplab/cli/pool.hpp"
#include "fplab/errors.hpp"

namespace fplab::cli {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) { return splitmix64(base ^ splitmix64(index)); }

json ints_json(std::span<const int> v) { return json(std::vector<int>(v.begin(), v.end())); }

// Every strictly increasing vector with entries in 1..n, ordered by largest
// entry, then length, then lexicographically.
std::vector<TypeVector2> all_type_vectors(int n) {
  std::vector<std::vector<int>> out;
  for (int top = 1; top <= n; ++top) {
    const int below = top - 1;
    std::vector<std::vector<int>> group;
    for (std::uint32_t mask = 0; mask < (1u << below); ++mask) {
      std::vector<int> v;
      for (int i = 0; i < below; ++i) {
        if (mask & (1u << i)) v.push_back(i + 1);
      }
      v.push_back(top);
      group.push_back(std::move(v));
    }
    std::sort(group.begin(), group.end(), [](const auto& a, const auto& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    for (auto& v : group) out.push_back(std::move(v));
  }
  std::vector<TypeVector2> types;
  types.reserve(out.size());
  for (auto& v : out) types.emplace_back(std::move(v));
  return types;
}

json witness_json(const DiffVector& d, const Segment& s, const char* kind) {
  std::vector<int> values(d.entries.begin() + static_cast<long>(s.first), d.entries.begin() + static_cast<long>(s.second));
  return json{{"kind", kind}, {"segment", json::array({s.first, s.second})}, {"values", values}};
}

struct Observation {
  json value;
  std::string family;
  std::uint64_t seed;
};

RunReport scan_item(const TypeVector2& t, const ScanOptions& o) {
  RunReport r;
  r.command = "scan";
  r.arithmetic_mode = o.mode;
  r.inputs = json{{"type", ints_json(t.entries())}, {"what", o.what}};
  const auto cls = classify_double_scheme(t);
  r.predictions = to_json(cls);
  const auto diff = first_difference(cls.pseudo_type);
  r.details["diff"] = diff.entries;
  if (auto v = find_condition_violation(diff)) {
    r.details["witness"] = witness_json(diff, *v, "condition-violation");
  } else if (auto b = find_bad_segment(diff)) {
    r.details["witness"] = witness_json(diff, *b, "bad-segment");
  }

  if (t.max() > o.confirm_max) return r;
  r.inputs["seed"] = o.seed;
  r.inputs["trials"] = o.trials;
  const bool want_betti = o.what == "betti";
  OracleOptions opts;
  opts.mode = o.mode;

  std::vector<Observation> hf_seen;
  std::vector<Observation> betti_seen;
  auto record = [](std::vector<Observation>& seen, json value, const std::string& family, std::uint64_t seed) {
    for (const auto& s : seen) {
      if (s.value == value) return;
    }
    seen.push_back({std::move(value), family, seed});
  };
  auto run = [&](const Configuration& c, const std::string& family, std::uint64_t seed, bool hard_hf, bool hard_betti) {
    const auto name_suffix = family + (family == "spread-out" ? "" : " seed " + std::to_string(seed));
    if (want_betti) {
      const auto res = analyze(c, opts);
      r.check("delta_h " + name_suffix, to_json(cls.predicted_delta_h), to_json(res.hf.delta_h), !hard_hf);
      r.check("regularity " + name_suffix, cls.regularity, res.hf.regularity);
      if (cls.predicted_betti) {
        r.check("betti " + name_suffix, to_json(*cls.predicted_betti), to_json(res.betti), !hard_betti);
      }
      record(hf_seen, to_json(res.hf.delta_h), family, seed);
      record(betti_seen, to_json(res.betti), family, seed);
      if (family == "spread-out") r.oracle_results = OracleSection{res.hf, res.betti};
    } else {
      const auto hf = hilbert_function(c, opts);
      r.check("delta_h " + name_suffix, to_json(cls.predicted_delta_h), to_json(hf.delta_h), !hard_hf);
      r.check("regularity " + name_suffix, cls.regularity, hf.regularity);
      record(hf_seen, to_json(hf.delta_h), family, seed);
      if (family == "spread-out") r.oracle_results = OracleSection{hf, std::nullopt};
    }
  };

  run(doubled(spread_out_config(t)), "spread-out", 0, true, cls.betti_unique);
  for (int k = 0; k < o.trials; ++k) {
    const auto seed = o.seed + static_cast<std::uint64_t>(k);
    run(doubled(generic_linear_config(t, seed)), "generic", seed, cls.hf_unique, cls.betti_unique);
  }
  for (int k = 0; k < o.trials; ++k) {
    const auto seed = o.seed + static_cast<std::uint64_t>(k);
    run(doubled(lattice_pseudo_config(PseudoTypeVector(t), seed)), "lattice", seed, cls.hf_unique,
        cls.betti_unique);
  }

  auto dump = [](const std::vector<Observation>& seen) {
    json a = json::array();
    for (const auto& s : seen) a.push_back({{"value", s.value}, {"family", s.family}, {"seed", s.seed}});
    return a;
  };
  r.details["observed_delta_h"] = dump(hf_seen);
  if (want_betti) {
    r.details["observed_betti"] = dump(betti_seen);
    r.details["observed_betti_note"] = "distinct diagrams seen across the sampled seeds; a lower bound only";
  }
  r.settle();
  return r;
}

}  // namespace

ScanResult cmd_scan(const ScanOptions& o) {
  if (o.max_sigma < 1 || o.max_sigma > 20) throw ValidationError("--max-sigma must be in 1..20");
  if (o.what != "hf" && o.what != "betti") throw ValidationError("--what must be hf or betti");
  if (o.trials < 0) throw ValidationError("--trials must be nonnegative");

  const auto types = all_type_vectors(o.max_sigma);
  ScanResult out;
  out.items = parallel_map<RunReport>(types.size(), [&](std::size_t i) { return scan_item(types[i], o); }, o.jobs);

  RunReport& s = out.summary;
  s.command = "scan-summary";
  s.arithmetic_mode = o.mode;
  s.inputs = json{{"max_sigma", o.max_sigma}, {"what", o.what},         {"trials", o.trials},
                  {"confirm_max", o.confirm_max}, {"seed", o.seed}, {"mode", to_string(o.mode)}};
  int hf_unique = 0, betti_unique = 0, betti_only_nonunique = 0, confirmed = 0, mismatches = 0, deviations = 0;
  json witnesses = json::array();
  for (std::size_t i = 0; i < types.size(); ++i) {
    const auto& item = out.items[i];
    const auto& p = *item.predictions;
    const bool hu = p.at("hf_unique").get<bool>();
    const bool bu = p.at("betti_unique").get<bool>();
    hf_unique += hu;
    betti_unique += bu;
    betti_only_nonunique += hu && !bu;
    if (!item.checks.empty()) {
      ++confirmed;
      mismatches += item.verdict == Verdict::Mismatch;
      deviations += item.verdict == Verdict::ExpectedNonunique;
    }
    if (!bu) {
      json w{{"type", item.inputs.at("type")}, {"hf_unique", hu}, {"betti_unique", bu},
             {"witness", item.details.at("witness")}};
      if (item.details.contains("observed_delta_h")) w["observed_delta_h"] = item.details["observed_delta_h"].size();
      if (item.details.contains("observed_betti")) w["observed_betti"] = item.details["observed_betti"].size();
      witnesses.push_back(std::move(w));
    }
  }
  const int total = static_cast<int>(types.size());
  s.details = json{{"vectors", total},
                   {"hf_unique", hf_unique},
                   {"hf_nonunique", total - hf_unique},
                   {"betti_unique", betti_unique},
                   {"hf_unique_betti_nonunique", betti_only_nonunique},
                   {"confirmed", confirmed},
                   {"confirmed_mismatch", mismatches},
                   {"confirmed_expected_nonunique", deviations},
                   {"witnesses", witnesses}};
  s.check("confirmed vectors without mismatch", 0, mismatches);
  s.settle();
  return out;
}

// --- extremal ------------------------------------------------------------------

namespace {

enum Strategy { kFree, kLineHeavy, kPerturbed, kConicHeavy, kStrategyCount };

const char* strategy_name(int s) {
  switch (s) {
    case kFree: return "free";
    case kLineHeavy: return "line-heavy";
    case kPerturbed: return "perturbed";
    case kConicHeavy: return "conic-heavy";
  }
  fail_internal("unknown strategy");
}

int strategy_from_string(const std::string& s) {
  for (int k = 0; k < kStrategyCount; ++k) {
    if (s == strategy_name(k)) return k;
  }
  throw ValidationError("unknown sampling strategy '" + s + "'");
}

ProjPoint free_point(SeededRng& rng) { return ProjPoint(rng.uniform(-kCoordBound, kCoordBound), rng.uniform(-kCoordBound, kCoordBound), 1L); }

bool insert_new(std::vector<ProjPoint>& pts, const ProjPoint& p) {
  if (std::find(pts.begin(), pts.end(), p) != pts.end()) return false;
  pts.push_back(p);
  return true;
}

Configuration base_ct(int t, int r, std::uint64_t seed) { return r == 0 ? ct_config(t, seed) : ctr_config(t, r, seed); }

Configuration sample_support(int strategy, int t, int r, int n, std::uint64_t seed) {
  SeededRng rng(seed);
  std::vector<ProjPoint> pts;
  int guard = 0;
  auto fill = [&](auto draw, int target) {
    while (static_cast<int>(pts.size()) < target) {
      if (++guard > kRetryBudget * (n + 1)) throw DegeneracyError("could not draw distinct points");
      insert_new(pts, draw());
    }
  };
  switch (strategy) {
    case kFree:
      return free_config(n, seed);
    case kLineHeavy: {
      const auto count = static_cast<std::size_t>(rng.uniform(2, std::max(2, t)));
      const auto lines = random_lines_general_position(count, rng);
      fill([&] { return random_point_on_line(lines[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(count) - 1))], rng); }, n);
      break;
    }
    case kPerturbed: {
      const auto base = base_ct(t, r, seed);
      for (const auto& p : base.points) pts.push_back(p.point);
      const long k = rng.uniform(1, std::max(1, n / 2));
      for (long i = 0; i < k; ++i) {
        const auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(pts.size()) - 1));
        pts.erase(pts.begin() + static_cast<long>(j));
        fill([&] { return free_point(rng); }, n);
      }
      break;
    }
    case kConicHeavy: {
      // Image of the conic uw = v^2 under a random invertible integer transform.
      std::array<long, 9> a{};
      Integer det;
      do {
        for (auto& x : a) x = rng.uniform(-20, 20);
        det = Integer(a[0]) * (Integer(a[4]) * a[8] - Integer(a[5]) * a[7]) -
              Integer(a[1]) * (Integer(a[3]) * a[8] - Integer(a[5]) * a[6]) +
              Integer(a[2]) * (Integer(a[3]) * a[7] - Integer(a[4]) * a[6]);
      } while (det == 0);
      auto on_conic = [&] {
        long u = 0, v = 0;
        while (u == 0 && v == 0) {
          u = rng.uniform(-30, 30);
          v = rng.uniform(-30, 30);
        }
        const long q[3] = {u * u, u * v, v * v};
        return ProjPoint(a[0] * q[0] + a[1] * q[1] + a[2] * q[2], a[3] * q[0] + a[4] * q[1] + a[5] * q[2],
                         a[6] * q[0] + a[7] * q[1] + a[8] * q[2]);
      };
      fill(on_conic, n - n / 5);
      fill([&] { return free_point(rng); }, n);
      break;
    }
    default:
      fail_internal("unknown strategy");
  }
  return config_from_points(pts);
}

std::vector<std::int64_t> padded(const std::vector<std::int64_t>& h, std::size_t len) {
  auto out = h;
  out.resize(len, h.back());
  return out;
}

struct Attempt {
  bool accepted = false;
  bool degenerate = false;
  std::vector<std::int64_t> double_h;
  OSequence double_delta_h;
};

}  // namespace

RunReport cmd_extremal(const ExtremalOptions& o) {
  if (o.t < 2) throw ValidationError("--ct needs t >= 2");
  if (o.r < 0 || o.r > o.t) throw ValidationError("--ct needs 0 <= r <= t");
  if (o.trials < 1) throw ValidationError("--trials must be positive");
  const int t = o.t, r = o.r;
  const int n = t * (t - 1) / 2 + r;
  std::vector<int> rotation;
  for (const auto& name : o.strategies) rotation.push_back(strategy_from_string(name));
  if (rotation.empty()) rotation = {kFree, kLineHeavy, kPerturbed, kConicHeavy};

  RunReport rep;
  rep.command = "extremal";
  rep.arithmetic_mode = o.mode;
  rep.inputs = json{{"t", t}, {"r", r}, {"trials", o.trials}, {"seed", o.seed}, {"mode", to_string(o.mode)}};
  json used = json::array();
  for (int k : rotation) used.push_back(strategy_name(k));
  rep.inputs["strategies"] = used;

  OracleOptions opts;
  opts.mode = o.mode;
  const auto support = base_ct(t, r, o.seed);
  const auto support_hf = hilbert_function(support, opts);
  const auto target = hilbert_function(doubled(support), opts);
  rep.oracle_results = OracleSection{target, std::nullopt};

  std::vector<std::int64_t> support_dh;
  for (int i = 1; i < t; ++i) support_dh.push_back(i);
  if (r > 0) support_dh.push_back(r);
  const OSequence expected_support(support_dh);
  rep.check("support delta_h", to_json(expected_support), to_json(support_hf.delta_h));
  json predictions{{"support_delta_h", to_json(expected_support)}};
  try {
    const auto closed = ztr_delta_h(t, r);
    predictions["double_delta_h"] = to_json(closed);
    rep.check("double delta_h", to_json(closed), to_json(target.delta_h));
  } catch (const UnsupportedError&) {
    predictions["double_delta_h"] = nullptr;
  }
  rep.predictions = predictions;

  const long budget = static_cast<long>(kRetryBudget) * o.trials;
  const std::size_t batch = std::max<std::size_t>(16, 4 * static_cast<std::size_t>(std::max(1u, o.jobs)));
  std::vector<int> accepted_by(kStrategyCount, 0), tried_by(kStrategyCount, 0);
  std::vector<std::int64_t> hmin = target.h;
  std::size_t len = target.h.size();
  json counterexamples = json::array();
  std::map<std::vector<std::int64_t>, int> double_counts;
  long attempts = 0;
  int accepted = 0;

  while (accepted < o.trials) {
    if (attempts >= budget) {
      throw SamplingError("only " + std::to_string(accepted) + " of " + std::to_string(o.trials) +
                          " supports with delta_h " + expected_support.to_string() + " after " +
                          std::to_string(attempts) + " attempts (seed " + std::to_string(o.seed) + ")");
    }
    const long first = attempts;
    const auto results = parallel_map<Attempt>(
        batch,
        [&](std::size_t k) {
          const auto idx = static_cast<std::uint64_t>(first) + k;
          Attempt a;
          try {
            const auto c = sample_support(rotation[idx % rotation.size()], t, r, n, derive_seed(o.seed, idx));
            if (hilbert_function(c, opts).delta_h != expected_support) return a;
            const auto d = hilbert_function(doubled(c), opts);
            a.accepted = true;
            a.double_h = d.h;
            a.double_delta_h = d.delta_h;
          } catch (const DegeneracyError&) {
            a.degenerate = true;
          }
          return a;
        },
        o.jobs);
    // Consume in attempt order so the outcome does not depend on the batch size.
    for (std::size_t k = 0; k < results.size() && accepted < o.trials && attempts < budget; ++k) {
      const auto idx = static_cast<std::uint64_t>(attempts++);
      const int strategy = rotation[idx % rotation.size()];
      ++tried_by[strategy];
      const auto& a = results[k];
      if (!a.accepted) continue;
      ++accepted;
      ++accepted_by[strategy];
      ++double_counts[std::vector<std::int64_t>(a.double_delta_h.values().begin(), a.double_delta_h.values().end())];
      len = std::max(len, a.double_h.size());
      const auto hs = padded(a.double_h, len);
      const auto ht = padded(target.h, len);
      hmin = padded(hmin, len);
      bool below = false;
      for (std::size_t d = 0; d < len; ++d) {
        below = below || hs[d] < ht[d];
        hmin[d] = std::min(hmin[d], hs[d]);
      }
      if (below) {
        counterexamples.push_back({{"attempt", idx}, {"strategy", strategy_name(strategy)},
                                   {"seed", derive_seed(o.seed, idx)}, {"h", a.double_h}});
      }
    }
  }

  const auto target_padded = padded(target.h, len);
  const bool attains = hmin == target_padded;
  json strategies = json::object();
  for (int s : rotation) {
    strategies[strategy_name(s)] = {{"attempts", tried_by[s]}, {"accepted", accepted_by[s]}};
  }
  json observed = json::array();
  for (const auto& [dh, count] : double_counts) observed.push_back({{"delta_h", dh}, {"count", count}});
  rep.details = json{{"n_points", n},
                     {"attempts", attempts},
                     {"accepted", accepted},
                     {"strategies", strategies},
                     {"target_h", target.h},
                     {"pointwise_min_h", hmin},
                     {"attains_minimum", attains},
                     {"observed_double_delta_h", observed},
                     {"counterexamples", counterexamples},
                     {"claim", r == 0 || r == t ? "theorem" : "conjecture"},
                     {"conjecture_verdict", counterexamples.empty() ? "consistent" : "counterexample-found"}};
  rep.check("no sampled double HF below the target", 0, static_cast<int>(counterexamples.size()));
  rep.settle();
  return rep;
}

}  // namespace fplab::cli
