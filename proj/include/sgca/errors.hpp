#pragma once

#include <stdexcept>
#include <string>

namespace sgca {

struct IndexParityError : std::runtime_error {
    explicit IndexParityError(const std::string& what) : std::runtime_error(what) {}
};

struct GradingError : std::runtime_error {
    explicit GradingError(const std::string& what) : std::runtime_error(what) {}
};

struct WindowTooSmall : std::runtime_error {
    explicit WindowTooSmall(const std::string& what) : std::runtime_error(what) {}
};

struct FractionalExponentError : std::runtime_error {
    explicit FractionalExponentError(const std::string& what) : std::runtime_error(what) {}
};

struct FitInconsistent : std::runtime_error {
    explicit FitInconsistent(const std::string& what) : std::runtime_error(what) {}
};

struct AnsatzInsufficient : std::runtime_error {
    explicit AnsatzInsufficient(const std::string& what) : std::runtime_error(what) {}
};

// Parse error with a byte offset into the offending literal.
struct ParseError : std::runtime_error {
    size_t position;
    ParseError(size_t pos, const std::string& what)
        : std::runtime_error("at position " + std::to_string(pos) + ": " + what),
          position(pos) {}
};

}  // namespace sgca
