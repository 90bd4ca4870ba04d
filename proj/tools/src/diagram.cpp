#include "fplab/cli/diagram.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace fplab::cli {

std::string macaulay_diagram(const BettiTable& b) {
  int rows = 1;
  for (int d : b.beta1) rows = std::max(rows, d);      // row d - 1
  for (int d : b.beta2) rows = std::max(rows, d - 1);  // row d - 2
  auto count = [](const std::vector<int>& v, int d) {
    return static_cast<int>(std::count(v.begin(), v.end(), d));
  };
  auto cell = [](int n) { return n == 0 ? std::string("-") : std::to_string(n); };

  std::ostringstream os;
  os << "total:" << std::setw(6) << 1 << std::setw(6) << b.beta1.size() << std::setw(6) << b.beta2.size() << '\n';
  os << std::string(24, '-') << '\n';
  for (int i = 0; i < rows; ++i) {
    const int g = count(b.beta1, i + 1);
    const int s = count(b.beta2, i + 2);
    os << std::setw(5) << i << ':' << std::setw(6) << (i == 0 ? "1" : "-") << std::setw(6) << cell(g)
       << std::setw(6) << cell(s) << '\n';
  }
  return os.str();
}

}  // namespace fplab::cli
