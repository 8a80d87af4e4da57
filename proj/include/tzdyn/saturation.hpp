#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tzdyn/odometer.hpp"
#include "tzdyn/period_structure.hpp"

namespace tzdyn {

// Digits (s_0, ..., s_m) of an integer in units of p_r: s_j in [0, q_{r+j+1}).
// first_defined is the least j with s_j in the defined set of level r+j+1.
struct DigitSequence {
    std::size_t start_level = 0;
    std::vector<std::int64_t> digits;
    std::optional<std::size_t> first_defined;
};

DigitSequence make_digit_sequence(const PeriodStructure& ps, std::size_t start_level, std::vector<std::int64_t> digits);

// Value sum_j s_j p_{r+j}.
Integer sequence_value(const PeriodStructure& ps, const DigitSequence& s);

// Plain: l' = 2l. Shifted: l' = 2l - p_r (one unit borrowed at the start level).
enum class OffsetCase { Plain, Shifted };

std::string_view to_string(OffsetCase c) noexcept;

struct DoubledSequence {
    std::vector<std::int64_t> digits;
    std::vector<int> carries_in; // carry entering each position
    int carry_out = 0;
    OffsetCase offset = OffsetCase::Plain;
    // Shifted only: true when the borrow hit a zero leading digit (digit 0
    // becomes q_{r+1} - 1 and the borrow moves up), false when it was absorbed.
    bool borrow_propagated = false;
    bool borrow_out = false;
    std::optional<std::size_t> first_defined;
};

// Exact mixed-radix doubling 2l + carry_in * p_r, then the offset. Digits above
// position m are dropped, so the value is exact modulo p_{r+m+1}.
DoubledSequence double_digits(const PeriodStructure& ps, const DigitSequence& s, OffsetCase offset, int carry_in = 0);

// Digitwise relaxation: s'_j = (2 s_j + c_j) mod q_{r+j+1} for an arbitrary
// carry vector c, followed by the offset. Every exact doubling is one of these.
DoubledSequence double_digits_relaxed(const PeriodStructure& ps, const DigitSequence& s, OffsetCase offset,
                                      const std::vector<int>& carries);

struct ClaimViolation {
    std::size_t start_level;
    std::vector<std::int64_t> digits;
    OffsetCase offset;
    std::vector<int> carries;
    std::vector<std::int64_t> doubled;
};

inline constexpr std::size_t kMaxRecordedViolations = 100;

struct ClaimReport {
    std::size_t depth = 0; // m: sequences have m + 1 digits
    std::vector<std::size_t> start_levels;
    std::vector<OffsetCase> cases;
    std::uint64_t enumerated = 0; // every digit sequence visited
    std::uint64_t scanned = 0;    // sequences satisfying the hypothesis s_t = 0
    std::uint64_t variants = 0;   // (sequence, case, carry vector) triples checked
    std::uint64_t plain_t_prime_exceeds_t = 0;
    std::uint64_t exact_not_in_relaxation = 0;
    std::uint64_t violation_count = 0;
    std::vector<ClaimViolation> violations; // first kMaxRecordedViolations only
};

// Enumerates every (s_0..s_m) at each start level whose first defined digit is
// 0, doubles it under every offset case and every carry vector in {0,1}^(m+1),
// and records a violation whenever the first defined doubled digit is 2.
ClaimReport claim_check_exhaustive(const PeriodStructure& ps, std::size_t depth, const std::vector<OffsetCase>& cases,
                                   const std::vector<std::size_t>& start_levels = {0});

struct DemoLevel {
    std::size_t level = 0; // m
    Integer shift;         // k = a_m
    std::size_t a_forced_checked = 0;
    std::size_t a_forced_mismatches = 0;
    std::size_t a_deeper_skipped = 0; // forced only beyond level m
    std::size_t a_aperiodic_positions = 0;
    std::set<int> a_aperiodic_symbols;
    std::size_t b_aperiodic_positions = 0;
    std::set<int> b_aperiodic_symbols;
    std::size_t b_reads_two = 0;
    std::size_t variants = 0;
    std::set<std::pair<int, int>> realized_fill_pairs;
    std::size_t forbidden_pair_hits = 0; // variants realising (a-side 0, b-side 2)
    std::size_t non_constant_fills = 0;
};

struct DemoReport {
    std::string a;
    std::string b;
    Integer window;
    std::vector<DemoLevel> levels;
    std::set<std::pair<int, int>> realized_fill_pairs;
    std::vector<std::string> violations;

    bool control_realized() const
    {
        return realized_fill_pairs.contains({0, 0}) || realized_fill_pairs.contains({0, 1});
    }
    bool passed() const { return violations.empty() && control_realized(); }
};

// Finite-scale run of the x = eta branch: a must carry a five-point fiber
// certificate, b = 2a likewise. For each m, k = a_m shifts eta onto a's
// p_m-skeleton; k + s p_m for every s in [0, q_{m+1}) varies the fill.
DemoReport nonsat_demo(const OdometerElement& a, const Integer& window, const std::vector<std::size_t>& levels);

} // namespace tzdyn
