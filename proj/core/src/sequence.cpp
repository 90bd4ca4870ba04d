#include "fplab/sequence.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "fplab/errors.hpp"

namespace fplab {

OSequence::OSequence(std::initializer_list<value_type> values) : values_(values) {
  if (std::any_of(values_.begin(), values_.end(), [](value_type v) { return v < 0; })) {
    throw ValidationError("OSequence entries must be nonnegative");
  }
  trim();
}

OSequence::OSequence(std::vector<value_type> values) : values_(std::move(values)) {
  if (std::any_of(values_.begin(), values_.end(), [](value_type v) { return v < 0; })) {
    throw ValidationError("OSequence entries must be nonnegative");
  }
  trim();
}

OSequence OSequence::ones(std::size_t length) {
  return OSequence(std::vector<value_type>(length, 1));
}

void OSequence::trim() {
  while (!values_.empty() && values_.back() == 0) values_.pop_back();
}

OSequence::value_type OSequence::sum() const noexcept {
  value_type s = 0;
  for (auto v : values_) s += v;
  return s;
}

std::size_t OSequence::sigma() const noexcept {
  for (std::size_t t = 0; t < values_.size(); ++t) {
    if (values_[t] == 0) return t;
  }
  return values_.size();
}

std::size_t OSequence::alpha() const noexcept {
  std::size_t t = 0;
  while ((*this)[t] >= static_cast<value_type>(t + 1)) ++t;
  return t;
}

OSequence OSequence::shifted(std::size_t k) const {
  if (values_.empty()) return {};
  std::vector<value_type> out(k, 0);
  out.insert(out.end(), values_.begin(), values_.end());
  return OSequence(std::move(out));
}

std::vector<OSequence::value_type> OSequence::partial_sums(std::size_t upto) const {
  std::vector<value_type> out(upto + 1, 0);
  value_type running = 0;
  for (std::size_t t = 0; t <= upto; ++t) {
    running += (*this)[t];
    out[t] = running;
  }
  return out;
}

bool OSequence::non_increasing_from_alpha() const noexcept {
  for (std::size_t t = alpha(); t + 1 < values_.size(); ++t) {
    if (values_[t + 1] > values_[t]) return false;
  }
  return true;
}

OSequence& OSequence::operator+=(const OSequence& other) {
  if (other.values_.size() > values_.size()) values_.resize(other.values_.size(), 0);
  for (std::size_t i = 0; i < other.values_.size(); ++i) values_[i] += other.values_[i];
  trim();
  return *this;
}

std::string OSequence::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) os << ',';
    os << values_[i];
  }
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const OSequence& seq) { return os << seq.to_string(); }

OSequence first_difference_of(std::span<const std::int64_t> f) {
  std::vector<std::int64_t> out(f.size());
  std::int64_t prev = 0;
  for (std::size_t t = 0; t < f.size(); ++t) {
    if (f[t] < prev) throw ValidationError("first difference would be negative");
    out[t] = f[t] - prev;
    prev = f[t];
  }
  return OSequence(std::move(out));
}

}  // namespace fplab
