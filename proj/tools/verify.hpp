#pragma once

#include <ostream>
#include <string>

#include "hyperlattice/golden.hpp"

namespace hyperlattice::cli {

// Runs the golden suite, streaming one line per check (text) or a single
// JSON document at the end. Returns the exit status.
int run_verify(const SuiteOptions& opts, const std::string& format, std::ostream& out);

}  // namespace hyperlattice::cli
