#pragma once

#include <stdexcept>
#include <string>

namespace bent3 {

/// A construction step that cannot fail for valid input did fail.
class ConsistencyError : public std::logic_error {
public:
    explicit ConsistencyError(const std::string& what) : std::logic_error("internal error: " + what) {}
};

}  // namespace bent3
