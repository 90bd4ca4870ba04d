#include "fplab/typevec.hpp"

#include <algorithm>
#include <sstream>

#include "fplab/errors.hpp"

namespace fplab {

namespace {

std::string join(std::span<const int> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

std::string join_set(const std::vector<int>& v) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << '}';
  return os.str();
}

int sum_of(std::span<const int> v) {
  int s = 0;
  for (int x : v) s += x;
  return s;
}

}  // namespace

// --- TypeVector2 ------------------------------------------------------------

TypeVector2::TypeVector2(std::initializer_list<int> entries)
    : TypeVector2(std::vector<int>(entries)) {}

TypeVector2::TypeVector2(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw ValidationError("type vector must be nonempty");
  if (entries_.front() < 1) throw ValidationError("type vector entries must be positive");
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (entries_[i] <= entries_[i - 1]) {
      throw ValidationError("type vector must be strictly increasing: " + join(entries_));
    }
  }
}

int TypeVector2::total() const noexcept { return sum_of(entries_); }

std::string TypeVector2::to_string() const { return join(entries_); }

// --- PseudoTypeVector -------------------------------------------------------

PseudoTypeVector::PseudoTypeVector(std::initializer_list<int> entries)
    : PseudoTypeVector(std::vector<int>(entries)) {}

PseudoTypeVector::PseudoTypeVector(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw ValidationError("pseudo type vector must be nonempty");
  if (entries_.front() < 1) throw ValidationError("pseudo type vector entries must be positive");
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (entries_[i] < entries_[i - 1]) {
      throw ValidationError("pseudo type vector must be weakly increasing: " + join(entries_));
    }
    if (i >= 2 && entries_[i] == entries_[i - 1] && entries_[i - 1] == entries_[i - 2]) {
      throw ValidationError("pseudo type vector repeats a value three times: " + join(entries_));
    }
  }
}

PseudoTypeVector::PseudoTypeVector(const TypeVector2& t)
    : entries_(t.entries().begin(), t.entries().end()) {}

int PseudoTypeVector::total() const noexcept { return sum_of(entries_); }

bool PseudoTypeVector::is_strict() const noexcept {
  return std::adjacent_find(entries_.begin(), entries_.end()) == entries_.end();
}

std::string PseudoTypeVector::to_string() const { return join(entries_); }

// --- DiffVector -------------------------------------------------------------

int DiffVector::zero_count() const noexcept {
  return static_cast<int>(std::count(entries.begin(), entries.end(), 0));
}

std::string DiffVector::to_string() const { return join(entries); }

// --- BettiTable -------------------------------------------------------------

BettiTable::BettiTable(std::vector<int> generators, std::vector<int> syzygies)
    : beta1(std::move(generators)), beta2(std::move(syzygies)) {
  std::sort(beta1.begin(), beta1.end());
  std::sort(beta2.begin(), beta2.end());
}

BettiTable BettiTable::unit_ideal() { return BettiTable({0}, {}); }

std::vector<long long> BettiTable::numerator() const {
  int top = 0;
  for (int d : beta1) top = std::max(top, d);
  for (int d : beta2) top = std::max(top, d);
  std::vector<long long> out(static_cast<std::size_t>(top) + 1, 0);
  out[0] = 1;
  for (int d : beta1) out[static_cast<std::size_t>(d)] -= 1;
  for (int d : beta2) out[static_cast<std::size_t>(d)] += 1;
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

bool BettiTable::consistent_with(const OSequence& delta_h) const {
  return numerator() == hilbert_numerator(delta_h);
}

bool BettiTable::well_formed() const noexcept {
  if (beta1.size() != beta2.size() + 1) return false;
  if (beta2.empty()) return true;
  return beta2.front() > beta1.front();
}

std::string BettiTable::to_string() const {
  return "beta1=" + join_set(beta1) + " beta2=" + join_set(beta2);
}

std::vector<long long> hilbert_numerator(const OSequence& delta_h) {
  std::vector<long long> out(delta_h.size() + 2, 0);
  for (std::size_t d = 0; d < delta_h.size(); ++d) {
    const auto v = delta_h[d];
    out[d] += v;
    out[d + 1] -= 2 * v;
    out[d + 2] += v;
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// --- reduced points ---------------------------------------------------------

OSequence hf_from_type_vector(const TypeVector2& t) {
  const std::size_t r = t.size();
  OSequence out;
  for (std::size_t i = 0; i < r; ++i) {
    // row i (0-based) shifted by r - 1 - i
    out += OSequence::ones(static_cast<std::size_t>(t[i])).shifted(r - 1 - i);
  }
  return out;
}

TypeVector2 type_vector_from_hf(const OSequence& delta_h) {
  if (delta_h.empty() || delta_h[0] != 1) {
    throw NotAnHVectorError("h-vector must start with 1: " + delta_h.to_string());
  }
  const std::size_t r = delta_h.alpha();
  std::vector<OSequence::value_type> cur(delta_h.values().begin(), delta_h.values().end());
  std::vector<int> rows;
  for (std::size_t k = 0; k < r; ++k) {
    if (cur.empty()) throw NotAnHVectorError("too few rows in " + delta_h.to_string());
    const std::size_t d = cur.size();
    for (auto& v : cur) {
      v -= 1;
      if (v < 0) throw NotAnHVectorError("not an h-vector of points: " + delta_h.to_string());
    }
    if (cur.front() != 0) throw NotAnHVectorError("not an h-vector of points: " + delta_h.to_string());
    rows.push_back(static_cast<int>(d));
    cur.erase(cur.begin());
    while (!cur.empty() && cur.back() == 0) cur.pop_back();
  }
  if (!cur.empty()) throw NotAnHVectorError("leftover mass in " + delta_h.to_string());
  std::reverse(rows.begin(), rows.end());
  try {
    TypeVector2 t(rows);
    if (hf_from_type_vector(t) != delta_h) {
      throw NotAnHVectorError("round trip failed for " + delta_h.to_string());
    }
    return t;
  } catch (const ValidationError&) {
    throw NotAnHVectorError("rows not strictly increasing for " + delta_h.to_string());
  }
}

// --- pseudo type vectors ----------------------------------------------------

DiffVector first_difference(const PseudoTypeVector& t) {
  DiffVector d;
  int prev = 0;
  for (int m : t.entries()) {
    d.entries.push_back(m - prev);
    prev = m;
  }
  return d;
}

std::optional<Segment> find_condition_violation(const DiffVector& d) {
  const auto& e = d.entries;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] != 0) continue;
    std::size_t j = i + 1;
    while (j < e.size() && e[j] == 1) ++j;
    if (j < e.size() && e[j] == 0) return Segment{i, j + 1};
  }
  return std::nullopt;
}

bool condition_holds(const DiffVector& d) { return !find_condition_violation(d).has_value(); }

std::optional<Segment> find_bad_segment(const DiffVector& d) {
  const auto& e = d.entries;
  const std::size_t n = e.size();
  for (std::size_t i = 0; i + 2 < n; ++i) {
    if (e[i] != 1 || e[i + 1] != 0) continue;
    std::size_t k = i + 2;
    while (k + 1 < n && e[k] == 2 && e[k + 1] == 0) k += 2;
    if (k < n && e[k] == 1) return Segment{i, k + 1};
  }
  return std::nullopt;
}

bool bad_list_hit(const DiffVector& d) { return find_bad_segment(d).has_value(); }

OSequence standard_osequence(const PseudoTypeVector& t) {
  const auto m = t.entries();
  const std::size_t p = m.size();
  OSequence out;
  for (std::size_t i = 0; i < p; ++i) {
    const int prev = i == 0 ? 0 : m[i - 1];
    const bool last = i + 1 == p;
    if (!last && m[i] == m[i + 1]) continue;  // s_i undefined
    const auto len = static_cast<std::size_t>(m[i]);
    OSequence s;
    if (prev < m[i]) {
      s = OSequence::ones(len);
    } else {
      std::vector<OSequence::value_type> v(len + 1, 2);
      v.front() = 1;
      v.back() = 1;
      s = OSequence(std::move(v));
    }
    out += s.shifted(p - 1 - i);
  }
  return out;
}

OSequence complete_intersection_delta_h(int a, int b) {
  if (a < 1 || b < 1) throw ValidationError("complete intersection degrees must be positive");
  std::vector<OSequence::value_type> v(static_cast<std::size_t>(a + b - 1), 0);
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) v[static_cast<std::size_t>(i + j)] += 1;
  }
  return OSequence(std::move(v));
}

OSequence bdl_hf_step(const OSequence& delta_h_x, int d1, int d2) {
  if (d2 != 1 && d2 != 2) throw UnsupportedError("basic double link needs deg G in {1,2}");
  if (d1 < 1) throw ValidationError("deg F must be positive");
  return complete_intersection_delta_h(d1, d2) + delta_h_x.shifted(static_cast<std::size_t>(d2));
}

BettiTable bdl_betti_step(const BettiTable& b, int d1, int d2, bool f_is_minimal_generator) {
  if (d2 != 1 && d2 != 2) throw UnsupportedError("basic double link needs deg G in {1,2}");
  std::vector<int> g1;
  std::vector<int> g2;
  for (int x : b.beta1) g1.push_back(x + d2);
  for (int x : b.beta2) g2.push_back(x + d2);
  g1.push_back(d1);
  g2.push_back(d1 + d2);
  if (f_is_minimal_generator) {
    const int c = d1 + d2;
    auto it1 = std::find(g1.begin(), g1.end(), c);
    if (it1 == g1.end()) {
      throw InconsistencyError("split requested but degree " + std::to_string(c) +
                               " is not a generator degree");
    }
    g1.erase(it1);
    auto it2 = std::find(g2.begin(), g2.end(), c);
    g2.erase(it2);  // present: just pushed
  }
  return BettiTable(std::move(g1), std::move(g2));
}

std::vector<LinkStep> link_steps(const PseudoTypeVector& t) {
  const auto m = t.entries();
  std::vector<LinkStep> steps;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i + 1 < m.size() && m[i] == m[i + 1]) {
      steps.push_back({m[i], 2});
      ++i;
    } else {
      steps.push_back({m[i], 1});
    }
  }
  return steps;
}

OSequence bdl_hf_run(const PseudoTypeVector& t) {
  OSequence x;
  for (const auto& s : link_steps(t)) x = bdl_hf_step(x, s.f_degree, s.g_degree);
  return x;
}

OSequence bdl_hf_run_linear_only(const PseudoTypeVector& t) {
  OSequence x;
  for (int m : t.entries()) x = bdl_hf_step(x, m, 1);
  return x;
}

BettiTable bdl_betti_run(const PseudoTypeVector& t) {
  return bdl_betti_run(t, std::vector<bool>(link_steps(t).size(), false));
}

BettiTable bdl_betti_run(const PseudoTypeVector& t, const std::vector<bool>& splits) {
  const auto steps = link_steps(t);
  if (splits.size() != steps.size()) {
    throw ValidationError("split flags must match the number of link steps");
  }
  BettiTable b = BettiTable::unit_ideal();
  for (std::size_t i = 0; i < steps.size(); ++i) {
    b = bdl_betti_step(b, steps[i].f_degree, steps[i].g_degree, splits[i]);
  }
  return b;
}

PseudoPrediction predict_pseudo(const PseudoTypeVector& t) {
  PseudoPrediction out;
  const DiffVector d = first_difference(t);
  out.delta_h = standard_osequence(t);
  out.hf_unique = condition_holds(d);
  if (!out.hf_unique) {
    out.betti_unique = false;
    return out;
  }
  // a trailing run of 1's preceded by a 0 (or a bare trailing 0) adds one
  std::size_t k = d.size();
  while (k > 0 && d.entries[k - 1] == 1) --k;
  const bool bumps = k > 0 && d.entries[k - 1] == 0;
  out.regularity = t.max() + (bumps ? 1 : 0);
  out.betti_unique = !bad_list_hit(d);
  if (*out.betti_unique) {
    out.betti = bdl_betti_run(t);
    out.min_gen_count = static_cast<int>(t.size()) + 1 - d.zero_count();
  }
  return out;
}

// --- double points ----------------------------------------------------------

PseudoTypeVector associated_pseudo_type(const TypeVector2& t) {
  std::vector<int> v;
  for (int n : t.entries()) {
    v.push_back(n);
    v.push_back(2 * n);
  }
  std::sort(v.begin(), v.end());
  return PseudoTypeVector(std::move(v));
}

DoubleSchemeClassification classify_double_scheme(const TypeVector2& t) {
  DoubleSchemeClassification c;
  c.pseudo_type = associated_pseudo_type(t);
  const DiffVector d = first_difference(c.pseudo_type);
  c.hf_unique = condition_holds(d);
  c.betti_unique = c.hf_unique && !bad_list_hit(d);
  c.predicted_delta_h = standard_osequence(c.pseudo_type);
  c.regularity = 2 * t.max();
  if (c.betti_unique) c.predicted_betti = bdl_betti_run(c.pseudo_type);
  return c;
}

PseudoTypeVector removed_point_type(const TypeVector2& t, std::size_t line_index) {
  if (line_index < 1 || line_index > t.size()) {
    throw ValidationError("line index out of range");
  }
  std::vector<int> v(t.entries().begin(), t.entries().end());
  v[line_index - 1] -= 1;
  if (v[line_index - 1] == 0) v.erase(v.begin() + static_cast<std::ptrdiff_t>(line_index - 1));
  if (v.empty()) throw ValidationError("removing the only point leaves the empty scheme");
  std::sort(v.begin(), v.end());
  std::optional<PseudoTypeVector> p;
  try {
    p.emplace(v);
  } catch (const ValidationError& e) {
    fail_internal(std::string("removed_point_type produced an invalid vector: ") + e.what());
  }
  if (bad_list_hit(first_difference(*p))) {
    fail_internal("removed_point_type hit the bad list for " + p->to_string());
  }
  return *p;
}

// --- C_t and Z_{t,r} --------------------------------------------------------

OSequence ct_delta_h(int t) {
  if (t < 2) throw ValidationError("C_t needs t >= 2");
  std::vector<OSequence::value_type> v;
  for (int i = 1; i < t; ++i) v.push_back(i);
  return OSequence(std::move(v));
}

namespace {

OSequence zt_closed_form(int t) {
  std::vector<OSequence::value_type> v;
  for (int i = 1; i < t; ++i) v.push_back(i);
  for (int i = 0; i < t - 1; ++i) v.push_back(t);
  return OSequence(std::move(v));
}

}  // namespace

OSequence ztr_delta_h(int t, int r) {
  if (t < 2 || r < 0 || r > t) throw ValidationError("Z_{t,r} needs t >= 2 and 0 <= r <= t");
  if (r == 0) return zt_closed_form(t);
  if (r == t) return zt_closed_form(t + 1);  // C_{t,t} = C_{t+1}
  if (t == 4) {
    switch (r) {
      case 1: return {1, 2, 3, 4, 5, 4, 1, 1};
      case 2: return {1, 2, 3, 4, 5, 5, 2, 2};
      case 3: return {1, 2, 3, 4, 5, 5, 4, 3};
      default: break;
    }
  }
  if (t == 5) {
    switch (r) {
      case 1: return {1, 2, 3, 4, 5, 6, 5, 5, 1, 1};
      case 2: return {1, 2, 3, 4, 5, 6, 6, 5, 2, 2};
      case 3: return {1, 2, 3, 4, 5, 6, 6, 6, 3, 3};
      case 4: return {1, 2, 3, 4, 5, 6, 6, 6, 5, 4};
      default: break;
    }
  }
  throw UnsupportedError("no tabulated value for Z_{" + std::to_string(t) + "," +
                         std::to_string(r) + "}; compute it with the oracle");
}

}  // namespace fplab
