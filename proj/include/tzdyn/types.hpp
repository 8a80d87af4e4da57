#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace tzdyn {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A computation needed more levels of the period structure than are available.
class DepthExhausted : public Error {
public:
    using Error::Error;
};

// Malformed or out-of-range input (digit out of range, bad SPEC string, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// Period-structure or run configuration violates its invariants.
class ConfigError : public Error {
public:
    using Error::Error;
};

// Operands were built over different period structures.
class StructureMismatch : public Error {
public:
    using Error::Error;
};

// An operation needed a tail-rule certificate the element does not carry.
class CertificateMissing : public Error {
public:
    using Error::Error;
};

// Letter of the five-symbol alphabet {0,1,2,3,4}.
class Symbol {
public:
    constexpr Symbol() = default;

    static constexpr Symbol of(int v)
    {
        if (v < 0 || v > 4) {
            throw InvalidArgument("symbol out of range: " + std::to_string(v));
        }
        return Symbol(static_cast<std::uint8_t>(v));
    }

    constexpr int value() const noexcept { return value_; }

    friend constexpr bool operator==(Symbol, Symbol) = default;
    friend constexpr auto operator<=>(Symbol, Symbol) = default;

    static constexpr int alphabet_size = 5;

private:
    constexpr explicit Symbol(std::uint8_t v) : value_(v) {}
    std::uint8_t value_ = 0;
};

inline std::string to_string(const Integer& n) { return n.str(); }

} // namespace tzdyn
