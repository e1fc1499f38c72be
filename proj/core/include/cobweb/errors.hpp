#pragma once

#include <stdexcept>
#include <string>

namespace cobweb {

// Thrown when a computation would exceed an explicit size cap
// (oracle interval limits, DOT export vertex cap).
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what)
        : std::runtime_error(what) {}
};

}  // namespace cobweb
