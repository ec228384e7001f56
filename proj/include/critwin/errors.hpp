#pragma once

#include <stdexcept>
#include <string>

namespace critwin {

// Raised when an exact search exceeds its configured size or node budget.
class SearchLimitExceeded : public std::runtime_error {
public:
    explicit SearchLimitExceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace critwin
