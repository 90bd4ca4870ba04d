#pragma once

#include <string>

#include "fplab/typevec.hpp"

namespace fplab::cli {

/// Betti diagram in the Macaulay layout: row i lists the generators of degree
/// i + 1 and the syzygies of degree i + 2, with "-" for zero.
std::string macaulay_diagram(const BettiTable& b);

}  // namespace fplab::cli
