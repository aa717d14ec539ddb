#pragma once

#include <stdexcept>
#include <string>

namespace rydsim {

// Bad or missing configuration input (config files, defect tables, units).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Physically invalid request (selection rules, invalid quantum numbers).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failure (non-convergent integral, eigensolver breakdown).
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Configured resource limit exceeded (basis cap, atom cap).
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace rydsim
