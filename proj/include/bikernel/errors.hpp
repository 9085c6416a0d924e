#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bikernel {

/// Caller supplied something outside an operation's domain (unknown vertex,
/// malformed graph, wrong family shape, invalid decomposition).
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Input is well formed but an operation's precondition is not met, e.g. a
/// monochromatic cycle handed to the acyclic solver or a graph above the
/// brute-force cap.
class RefusalError : public std::runtime_error {
public:
    explicit RefusalError(const std::string& what) : std::runtime_error(what) {}
};

/// A constructed answer failed re-verification. Never expected; surfaces a
/// gap between a characterization and the definition it implements.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

class ParseError : public InputError {
public:
    ParseError(std::size_t line, const std::string& message)
        : InputError("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace bikernel
