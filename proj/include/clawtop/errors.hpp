#ifndef CLAWTOP_ERRORS_HPP
#define CLAWTOP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace clawtop {

// Bad arguments: out-of-range vertices, malformed input files, violated
// preconditions.  CLI exit code 2.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A configured cap was exceeded (vertex cap, face cap, retry cap).
// CLI exit code 3.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Rejection sampling ran out of retries.
struct GenerationError : ResourceError {
    explicit GenerationError(const std::string& what) : ResourceError(what) {}
};

}  // namespace clawtop

#endif
