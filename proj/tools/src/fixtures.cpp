#include "fplab/cli/fixtures.hpp"

#include <sstream>

#include "fplab/errors.hpp"

namespace fplab::cli {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

const std::string& Fixture::text(const std::string& key) const {
  auto it = fields.find(key);
  if (it == fields.end()) throw ValidationError("fixture " + id + " has no field " + key);
  return it->second;
}

std::vector<long long> Fixture::longs(const std::string& key) const {
  std::vector<long long> out;
  std::stringstream ss(text(key));
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto t = trim(item);
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(t, &used));
      if (used != t.size()) throw std::invalid_argument(t);
    } catch (const std::logic_error&) {
      throw ValidationError("fixture " + id + "." + key + ": bad integer '" + t + "'");
    }
  }
  return out;
}

std::vector<int> Fixture::ints(const std::string& key) const {
  auto v = longs(key);
  return {v.begin(), v.end()};
}

std::map<std::string, Fixture> parse_fixtures(std::string_view text) {
  std::map<std::string, Fixture> out;
  Fixture* cur = nullptr;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const std::string line = trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ValidationError("fixtures line " + std::to_string(lineno) + ": bad header");
      const std::string id = line.substr(1, line.size() - 2);
      auto [it, fresh] = out.emplace(id, Fixture{id, {}, {}});
      if (!fresh) throw ValidationError("duplicate fixture id " + id);
      cur = &it->second;
      continue;
    }
    const auto eq = line.find('=');
    if (!cur || eq == std::string::npos) {
      throw ValidationError("fixtures line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key == "location") {
      cur->location = value;
    } else {
      cur->fields[key] = value;
    }
  }
  return out;
}

const std::map<std::string, Fixture>& builtin_fixtures() {
  static const auto all = parse_fixtures(builtin_fixture_text());
  return all;
}

const Fixture& builtin_fixture(const std::string& id) {
  const auto& all = builtin_fixtures();
  auto it = all.find(id);
  if (it == all.end()) throw ValidationError("unknown fixture id '" + id + "'");
  return it->second;
}

}  // namespace fplab::cli
