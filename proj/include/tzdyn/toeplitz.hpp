#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "tzdyn/period_structure.hpp"
#include "tzdyn/types.hpp"

namespace tzdyn {

// The first mixed-radix digit of n that lies in the defined set of its level.
struct DefiningDigit {
    std::size_t index = 0; // digit index j; n is p_{j+1}-periodic and no less
    std::int64_t digit = 0; // -1 for a maximal digit at an unlisted level
    Symbol symbol;

    friend bool operator==(const DefiningDigit&, const DefiningDigit&) = default;
};

// Smallest j with digit n_j defined at level j+1. Digits past the materialised
// depth are 0 for n in [0, p_K) and maximal for n in [-p_K, 0); anything
// further out throws DepthExhausted.
DefiningDigit min_defined_level(const PeriodStructure& ps, const Integer& n);

// The Toeplitz sequence at position n.
Symbol eta(const PeriodStructure& ps, const Integer& n);

// eta on the closed range [a, b].
std::vector<Symbol> window(const PeriodStructure& ps, const Integer& a, const Integer& b);

// Per_{p_i}(eta) restricted to one period: cell r holds the symbol when
// min_defined_level(r) < i and nothing otherwise.
struct SkeletonTable {
    std::size_t level = 0;
    std::vector<std::optional<Symbol>> cells;
    std::size_t defined_count = 0;

    std::size_t period() const noexcept { return cells.size(); }
};

// Largest period for which a skeleton table is materialised.
inline constexpr std::uint64_t kMaxSkeletonPeriod = std::uint64_t{1} << 26;

SkeletonTable skeleton(const PeriodStructure& ps, std::size_t level);

enum class Regularity { Regular, Irregular, UndecidableFromPrefix };

std::string_view to_string(Regularity r) noexcept;

struct DensityReport {
    std::size_t level = 0;
    Integer defined_count;
    Integer period; // p_i
    Rational density; // d_i, by enumeration
    // d_i from d_{i-1} (enumerated) via d_i = d_{i-1} + (1 - d_{i-1}) * 5 / q_i.
    std::optional<Rational> recursion_value;
    // The same recursion run with constant 4 and d_1 = 4 / p_1; differs from
    // the enumeration, which finds five defined residues per block.
    Rational constant_four_value;
    bool enumerated = true; // false when counted by digit product (large p_i)
    Regularity classification = Regularity::UndecidableFromPrefix;
};

DensityReport density(const PeriodStructure& ps, std::size_t level);

// Regular iff the reciprocal sum of the moduli diverges.
Regularity classify(const PeriodStructure& ps) noexcept;

// True iff the table is not invariant under translation by any proper
// divisor of its period.
bool is_essential_period(const SkeletonTable& table);

// is_essential_period(skeleton(level)); requires level <= depth - 1.
bool essential_period_check(const PeriodStructure& ps, std::size_t level);

} // namespace tzdyn
