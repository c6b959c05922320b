#pragma once

#include <stdexcept>
#include <string>

namespace finsler {

/// Evaluation left the domain of a metric or elementary function
/// (division by ~0, sqrt/log of a nonpositive value, degenerate g, ...).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Syntax or semantic error in expression text. `position` is a 1-based
/// character offset into the source; end-of-input errors point one past
/// the last character.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at offset " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Invalid scenario configuration (bad field, failed validation).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace finsler
