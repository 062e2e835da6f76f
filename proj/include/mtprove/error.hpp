#pragma once

#include <stdexcept>
#include <string>

namespace mtprove {

// Base class for every failure the library reports.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The sign of a nonzero element of Q[pi] could not be separated from zero
// before the precision cap was reached.
class SignUndecided : public Error {
public:
    SignUndecided(int digits)
        : Error("sign undecided at precision " + std::to_string(digits) + " digits"), digits_(digits) {}
    int digits() const { return digits_; }

private:
    int digits_;
};

// Malformed input text; offset is a 0-based character position.
class ParseError : public Error {
public:
    ParseError(std::string what, std::size_t offset)
        : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

} // namespace mtprove
