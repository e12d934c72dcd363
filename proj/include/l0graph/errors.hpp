#pragma once

#include <stdexcept>
#include <string>

namespace l0graph {

// Filesystem-level failure (missing file, unwritable path). Distinct from
// invalid_argument so the CLI can map it to its own exit code.
struct io_error : std::runtime_error {
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Random graph generation could not produce a connected graph within the
// retry budget.
struct generation_error : std::runtime_error {
    explicit generation_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace l0graph
