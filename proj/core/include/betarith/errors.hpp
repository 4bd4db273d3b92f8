#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace betarith {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Interval precision reached the configured cap without deciding a sign or floor.
class PrecisionExhausted : public Error {
public:
    using Error::Error;
};

class WidthUnreachable : public Error {
public:
    using Error::Error;
};

class AlphabetViolation : public Error {
public:
    using Error::Error;
};

class FamilyUnsupported : public Error {
public:
    using Error::Error;
};

class OutOfRange : public Error {
public:
    using Error::Error;
};

class NonContraction : public Error {
public:
    using Error::Error;
};

class Unsupported : public Error {
public:
    using Error::Error;
};

class Undetermined : public Error {
public:
    using Error::Error;
};

class Inconclusive : public Error {
public:
    Inconclusive(const std::string& what, int lmax) : Error(what), lmax_(lmax) {}
    int lmax() const noexcept { return lmax_; }

private:
    int lmax_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace betarith
