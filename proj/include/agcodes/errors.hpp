#pragma once

#include <stdexcept>
#include <string>

namespace agcodes {

/// An enumeration, closure, or search exceeded its configured cap.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

/// A run configuration is invalid; raised before any computation starts.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace agcodes
