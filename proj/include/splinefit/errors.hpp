#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace splinefit {

// Malformed input: bad files, bad flags, violated preconditions on user data.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Input that parses but has no well-defined numeric answer.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
public:
    ParseError(const std::string& what, std::size_t line)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace splinefit
