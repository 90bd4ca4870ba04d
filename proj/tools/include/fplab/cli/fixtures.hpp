#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace fplab::cli {

struct Fixture {
  std::string id;
  std::string location;
  std::map<std::string, std::string> fields;

  [[nodiscard]] const std::string& text(const std::string& key) const;
  [[nodiscard]] std::vector<int> ints(const std::string& key) const;
  [[nodiscard]] std::vector<long long> longs(const std::string& key) const;
};

/// Parses the block format of fixtures.txt. Throws ValidationError on syntax errors.
std::map<std::string, Fixture> parse_fixtures(std::string_view text);

/// The fixtures compiled into the binary.
const std::map<std::string, Fixture>& builtin_fixtures();
const Fixture& builtin_fixture(const std::string& id);

/// Raw embedded text.
std::string_view builtin_fixture_text();

}  // namespace fplab::cli
