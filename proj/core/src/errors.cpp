#include "fplab/errors.hpp"

namespace fplab {

void fail_internal(const std::string& what) { throw InternalError("internal: " + what); }

}  // namespace fplab
