#pragma once

#include <stdexcept>

namespace eulerian {

/// Raised when a computation would exceed a configured enumeration bound
/// (e.g. brute-force permutation runs). Distinct from std::invalid_argument
/// so callers can map it to a dedicated exit status.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace eulerian
