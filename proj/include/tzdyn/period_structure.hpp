#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tzdyn/types.hpp"

namespace tzdyn {

// Named rule generating the level moduli q_1, q_2, ...
//   geometric:  q_i = base * ratio^(i-1)
//   arithmetic: q_i = start + step * (i-1)
struct GeneratorRule {
    enum class Kind { Geometric, Arithmetic };

    Kind kind = Kind::Geometric;
    std::int64_t first = 6;  // base (geometric) or start (arithmetic)
    std::int64_t factor = 2; // ratio (geometric) or step (arithmetic)

    static GeneratorRule geometric(std::int64_t base, std::int64_t ratio);
    static GeneratorRule arithmetic(std::int64_t start, std::int64_t step);

    // Accepts "geometric base=6 ratio=2", "arithmetic start=6 step=2", or the
    // bare names "geometric" / "arithmetic" for the stock parameters.
    static GeneratorRule parse(std::string_view text);

    // q_level for level >= 1; throws DepthExhausted if the value overflows.
    std::int64_t modulus(std::size_t level) const;

    // Sum of 1/q_i converges exactly for geometric rules (ratio >= 2).
    bool reciprocal_sum_converges() const noexcept { return kind == Kind::Geometric; }

    std::string describe() const;

    friend bool operator==(const GeneratorRule&, const GeneratorRule&) = default;
};

enum class ReciprocalSum { Converges, Diverges, Undecidable };

std::string_view to_string(ReciprocalSum s) noexcept;

// The sequence (q_i) of even, strictly increasing level moduli with q_1 >= 6,
// and the cumulative periods p_0 = 1, p_i = p_{i-1} q_i.
//
// Levels are 1-based: q(1) is the first modulus, p(0) == 1. Digit j of a
// residue lives in [0, q(j+1)).
class PeriodStructure {
public:
    static PeriodStructure from_list(std::vector<std::int64_t> q);
    static PeriodStructure from_rule(const GeneratorRule& rule, std::size_t depth);

    // q_i = 6 * 2^(i-1): convergent reciprocal sum, irregular sequence.
    static PeriodStructure stock_irregular(std::size_t depth = 8);
    // q_i = 2i + 4: divergent reciprocal sum, regular sequence.
    static PeriodStructure stock_regular(std::size_t depth = 8);

    std::size_t depth() const noexcept { return q_.size(); }

    // Modulus at a 1-based level. Levels beyond depth() are served by the
    // generator rule when there is one, otherwise DepthExhausted.
    std::int64_t q(std::size_t level) const;
    std::optional<std::int64_t> try_q(std::size_t level) const noexcept;

    // Cumulative period p_level for 0 <= level <= depth().
    const Integer& p(std::size_t level) const;

    const std::vector<std::int64_t>& moduli() const noexcept { return q_; }

    // p_0 .. p_K as machine integers when p_K < 2^62, for fast paths.
    const std::optional<std::vector<std::int64_t>>& small_periods() const noexcept { return small_p_; }
    const std::optional<GeneratorRule>& rule() const noexcept { return rule_; }

    ReciprocalSum reciprocal_sum() const noexcept;

    // Same rule (if any) with a different number of materialised levels.
    PeriodStructure with_depth(std::size_t depth) const;

    std::string describe() const;

    friend bool operator==(const PeriodStructure& a, const PeriodStructure& b)
    {
        return a.q_ == b.q_ && a.rule_ == b.rule_;
    }

private:
    PeriodStructure(std::vector<std::int64_t> q, std::optional<GeneratorRule> rule);

    std::vector<std::int64_t> q_;
    std::vector<Integer> p_;
    std::optional<std::vector<std::int64_t>> small_p_;
    std::optional<GeneratorRule> rule_;
};

using StructurePtr = std::shared_ptr<const PeriodStructure>;

inline StructurePtr share(PeriodStructure s)
{
    return std::make_shared<const PeriodStructure>(std::move(s));
}

// The residues {0, 1, 2, q/2 + 1, q - 1} that receive a symbol at a level
// with modulus q, listed in symbol order.
std::array<std::int64_t, 5> defined_digits(std::int64_t q) noexcept;

// Symbol assigned to a defined digit, or nullopt for an undefined one.
std::optional<Symbol> symbol_of_digit(std::int64_t digit, std::int64_t q) noexcept;

// True iff s is one of the defined residues at the given 1-based level.
// Throws InvalidArgument when s is not in [0, q_level).
bool is_defined_digit(const PeriodStructure& ps, std::int64_t s, std::size_t level);

} // namespace tzdyn
