#pragma once

#include <iosfwd>

namespace latkit {

/// Entry point of the latkit tool. Returns 0 when everything checked holds,
/// 1 when a counterexample (or an invalid lattice or map) was found, and 2 on
/// usage or parse errors.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace latkit
