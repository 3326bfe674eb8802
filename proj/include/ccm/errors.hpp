#pragma once

#include <stdexcept>
#include <string>

namespace ccm {

// Evaluation request at a pole (s = 1 of a zeta-type series).
class pole_error : public std::domain_error {
public:
    explicit pole_error(const std::string& what) : std::domain_error(what) {}
};

// Memory budget or enumeration cap exceeded.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ccm
