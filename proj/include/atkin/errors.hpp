#pragma once

#include <stdexcept>
#include <string>

namespace atkin {

/// Mathematical refusal: bad/ramified prime, guard violation, vanishing norm,
/// singular Hankel system, non-p-integral value. CLI exit code 1.
struct math_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// I/O or parse failure. CLI exit code 3.
struct data_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace atkin
