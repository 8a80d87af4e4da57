#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "tzdyn/period_structure.hpp"
#include "tzdyn/types.hpp"

namespace tzdyn {

// Mixed-radix digits of n mod p_k: n = s_0 + s_1 p_1 + ... + s_{k-1} p_{k-1}
// with s_j in [0, q_{j+1}). Negative n wraps to its residue, so -1 yields all
// maximal digits.
std::vector<std::int64_t> digits_of_integer(const PeriodStructure& ps, const Integer& n, std::size_t k);

// Inverse of digits_of_integer; the result lies in [0, p_k).
Integer value_of_digits(const PeriodStructure& ps, std::span<const std::int64_t> digits);

// Tail rules for digits beyond an element's explicit prefix.
struct IntegerEmbed {
    Integer value; // every digit is the matching digit of value
    friend bool operator==(const IntegerEmbed&, const IntegerEmbed&) = default;
};
struct ConstantDigit {
    std::int64_t digit; // every digit beyond the prefix equals this
    friend bool operator==(const ConstantDigit&, const ConstantDigit&) = default;
};
struct UnknownTail {
    friend bool operator==(const UnknownTail&, const UnknownTail&) = default;
};

using Tail = std::variant<IntegerEmbed, ConstantDigit, UnknownTail>;

// An element g = (g_1, g_2, ...) of the inverse limit of Z/p_i, stored as a
// digit stream: an explicit prefix (s_0, ..., s_{k-1}) followed by a tail rule.
// g_i = s_0 + s_1 p_1 + ... + s_{i-1} p_{i-1}.
//
// Embedded integers keep an empty prefix; their digits are derived on demand.
// Elements with an UnknownTail know exactly prefix().size() digits.
class OdometerElement {
public:
    static OdometerElement embed(StructurePtr ps, Integer m);
    // Validates every prefix digit against its level and the constant digit
    // against every level it covers.
    static OdometerElement from_digits(StructurePtr ps, std::vector<std::int64_t> prefix, Tail tail);

    const StructurePtr& structure() const noexcept { return ps_; }
    const std::vector<std::int64_t>& prefix() const noexcept { return prefix_; }
    const Tail& tail() const noexcept { return tail_; }

    bool is_embedded() const noexcept { return std::holds_alternative<IntegerEmbed>(tail_); }
    const Integer* embedded_value() const noexcept;

    // Number of known digits; nullopt means every digit is known.
    std::optional<std::size_t> horizon() const noexcept;

    // Digit j (0-based), nullopt beyond the horizon. May throw DepthExhausted
    // when an embedded integer needs a modulus the structure cannot provide.
    std::optional<std::int64_t> digit(std::size_t j) const;

    // g_i as an integer in [0, p_i), nullopt when digits below i are unknown.
    std::optional<Integer> residue(std::size_t level) const;

    // First k digits with an UnknownTail.
    OdometerElement truncated(std::size_t k) const;

    // Number of leading digits after which the tail rule is in force: the
    // prefix length, or for embedded integers the least S with m in [-p_S, p_S).
    std::size_t settled_length() const;

    std::string describe() const;

    friend bool operator==(const OdometerElement& a, const OdometerElement& b);

private:
    OdometerElement(StructurePtr ps, std::vector<std::int64_t> prefix, Tail tail);

    StructurePtr ps_;
    std::vector<std::int64_t> prefix_;
    Tail tail_;
};

// Group operation with carries. Two embedded integers give the embedded sum;
// constant-digit and embedded tails are resolved exactly; any UnknownTail
// yields an UnknownTail whose horizon is the smaller input horizon.
OdometerElement add(const OdometerElement& g, const OdometerElement& h);

OdometerElement negate(const OdometerElement& g);

// m * g by double-and-add; m = 0 gives embed(0).
OdometerElement scalar_multiple(const Integer& m, const OdometerElement& g);

} // namespace tzdyn
