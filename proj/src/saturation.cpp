#include "tzdyn/saturation.hpp"

#include "tzdyn/orbit.hpp"
#include "tzdyn/toeplitz.hpp"

namespace tzdyn {

namespace {

std::optional<std::size_t> first_defined_index(const PeriodStructure& ps, std::size_t start_level,
                                               const std::vector<std::int64_t>& digits)
{
    for (std::size_t j = 0; j < digits.size(); ++j) {
        if (symbol_of_digit(digits[j], ps.q(start_level + j + 1))) {
            return j;
        }
    }
    return std::nullopt;
}

void apply_offset(const PeriodStructure& ps, std::size_t start_level, DoubledSequence& out)
{
    if (out.offset == OffsetCase::Plain) {
        return;
    }
    auto& d = out.digits;
    std::size_t j = 0;
    for (; j < d.size(); ++j) {
        if (d[j] > 0) {
            --d[j];
            break;
        }
        d[j] = ps.q(start_level + j + 1) - 1;
    }
    out.borrow_propagated = !d.empty() && j > 0;
    out.borrow_out = j == d.size();
}

} // namespace

DigitSequence make_digit_sequence(const PeriodStructure& ps, std::size_t start_level, std::vector<std::int64_t> digits)
{
    for (std::size_t j = 0; j < digits.size(); ++j) {
        const auto q = ps.q(start_level + j + 1);
        if (digits[j] < 0 || digits[j] >= q) {
            throw InvalidArgument("digit s_" + std::to_string(j) + " = " + std::to_string(digits[j]) +
                                  " out of range [0, " + std::to_string(q) + ")");
        }
    }
    DigitSequence s{start_level, std::move(digits), std::nullopt};
    s.first_defined = first_defined_index(ps, start_level, s.digits);
    return s;
}

Integer sequence_value(const PeriodStructure& ps, const DigitSequence& s)
{
    Integer value = 0;
    for (std::size_t j = 0; j < s.digits.size(); ++j) {
        value += ps.p(s.start_level + j) * s.digits[j];
    }
    return value;
}

std::string_view to_string(OffsetCase c) noexcept
{
    return c == OffsetCase::Plain ? "plain" : "shifted";
}

DoubledSequence double_digits(const PeriodStructure& ps, const DigitSequence& s, OffsetCase offset, int carry_in)
{
    if (carry_in != 0 && carry_in != 1) {
        throw InvalidArgument("carry_in must be 0 or 1");
    }
    DoubledSequence out;
    out.offset = offset;
    out.digits.reserve(s.digits.size());
    out.carries_in.reserve(s.digits.size());
    std::int64_t carry = carry_in;
    for (std::size_t j = 0; j < s.digits.size(); ++j) {
        const auto q = ps.q(s.start_level + j + 1);
        out.carries_in.push_back(static_cast<int>(carry));
        const auto x = 2 * s.digits[j] + carry;
        out.digits.push_back(x % q);
        carry = x / q;
    }
    out.carry_out = static_cast<int>(carry);
    apply_offset(ps, s.start_level, out);
    out.first_defined = first_defined_index(ps, s.start_level, out.digits);
    return out;
}

DoubledSequence double_digits_relaxed(const PeriodStructure& ps, const DigitSequence& s, OffsetCase offset,
                                      const std::vector<int>& carries)
{
    if (carries.size() != s.digits.size()) {
        throw InvalidArgument("carry vector length must match the digit count");
    }
    DoubledSequence out;
    out.offset = offset;
    out.carries_in = carries;
    out.digits.reserve(s.digits.size());
    for (std::size_t j = 0; j < s.digits.size(); ++j) {
        const auto q = ps.q(s.start_level + j + 1);
        out.digits.push_back((2 * s.digits[j] + carries[j]) % q);
    }
    apply_offset(ps, s.start_level, out);
    out.first_defined = first_defined_index(ps, s.start_level, out.digits);
    return out;
}

ClaimReport claim_check_exhaustive(const PeriodStructure& ps, std::size_t depth, const std::vector<OffsetCase>& cases,
                                   const std::vector<std::size_t>& start_levels)
{
    ClaimReport report;
    report.depth = depth;
    report.start_levels = start_levels;
    report.cases = cases;
    const auto width = depth + 1;
    const std::uint32_t masks = 1u << width;

    for (const auto r : start_levels) {
        if (r + width > ps.depth()) {
            throw DepthExhausted("claim check at start level " + std::to_string(r) + " and depth " +
                                 std::to_string(depth) + " needs " + std::to_string(r + width) + " levels, have " +
                                 std::to_string(ps.depth()));
        }
        std::vector<std::int64_t> digits(width, 0);
        std::vector<int> carries(width, 0);
        while (true) {
            ++report.enumerated;
            const auto s = make_digit_sequence(ps, r, digits);
            if (s.first_defined && s.digits[*s.first_defined] == 0) {
                ++report.scanned;
                const auto t = *s.first_defined;
                for (const auto offset : cases) {
                    for (int carry_in = 0; carry_in <= 1; ++carry_in) {
                        const auto exact = double_digits(ps, s, offset, carry_in);
                        if (double_digits_relaxed(ps, s, offset, exact.carries_in).digits != exact.digits) {
                            ++report.exact_not_in_relaxation;
                        }
                    }
                    for (std::uint32_t mask = 0; mask < masks; ++mask) {
                        for (std::size_t j = 0; j < width; ++j) {
                            carries[j] = static_cast<int>((mask >> j) & 1u);
                        }
                        const auto doubled = double_digits_relaxed(ps, s, offset, carries);
                        ++report.variants;
                        const auto tp = doubled.first_defined;
                        if (offset == OffsetCase::Plain && (!tp || *tp > t)) {
                            ++report.plain_t_prime_exceeds_t;
                        }
                        if (tp && doubled.digits[*tp] == 2) {
                            ++report.violation_count;
                            if (report.violations.size() < kMaxRecordedViolations) {
                                report.violations.push_back({r, digits, offset, carries, doubled.digits});
                            }
                        }
                    }
                }
            }
            // Next digit vector, least significant digit first.
            std::size_t j = 0;
            for (; j < width; ++j) {
                if (++digits[j] < ps.q(r + j + 1)) {
                    break;
                }
                digits[j] = 0;
            }
            if (j == width) {
                break;
            }
        }
    }
    return report;
}

DemoReport nonsat_demo(const OdometerElement& a, const Integer& window, const std::vector<std::size_t>& levels)
{
    const auto& ps = *a.structure();
    const auto need_five = [&](const OdometerElement& g, std::string_view name) {
        const auto cert = fiber_certificate(g, ps.depth());
        if (!std::holds_alternative<FiveCertified>(cert)) {
            throw CertificateMissing(std::string(name) + " = " + g.describe() +
                                     " has no five-point fiber certificate");
        }
    };
    need_five(a, "a");
    const auto b = scalar_multiple(2, a);
    need_five(b, "b = 2a");
    if (window < 0) {
        throw InvalidArgument("window must be non-negative");
    }

    DemoReport report;
    report.a = a.describe();
    report.b = b.describe();
    report.window = window;

    const OrbitPoint a_point{a, Symbol::of(0)};
    const OrbitPoint b_point{b, Symbol::of(0)};

    for (const auto m : levels) {
        if (m == 0 || m + 2 > ps.depth()) {
            throw DepthExhausted("demo level " + std::to_string(m) + " needs 1 <= m <= depth - 2 (depth " +
                                 std::to_string(ps.depth()) + ")");
        }
        DemoLevel row;
        row.level = m;
        row.shift = *a.residue(m);

        std::vector<Integer> a_aper;
        std::vector<Integer> b_aper;
        for (Integer n = -window; n <= window; ++n) {
            const auto ra = point_eval(a_point, n, m);
            if (const auto* f = std::get_if<Forced>(&ra)) {
                ++row.a_forced_checked;
                if (eta(ps, n + row.shift) != f->symbol) {
                    ++row.a_forced_mismatches;
                }
            } else if (std::holds_alternative<AperiodicCertified>(ra)) {
                a_aper.push_back(n);
            } else {
                ++row.a_deeper_skipped;
            }
            if (std::holds_alternative<AperiodicCertified>(point_eval(b_point, n, m))) {
                b_aper.push_back(n);
            }
        }
        row.a_aperiodic_positions = a_aper.size();
        row.b_aperiodic_positions = b_aper.size();

        const Integer doubled = 2 * row.shift;
        for (const auto& n : a_aper) {
            row.a_aperiodic_symbols.insert(eta(ps, n + row.shift).value());
        }
        for (const auto& n : b_aper) {
            const auto s = eta(ps, n + doubled).value();
            row.b_aperiodic_symbols.insert(s);
            if (s == 2) {
                ++row.b_reads_two;
            }
        }

        // Fill control: k = a_m + s p_m for every digit s at level m + 1.
        const auto& pm = ps.p(m);
        for (std::int64_t s = 0; s < ps.q(m + 1); ++s) {
            const Integer k = row.shift + pm * s;
            std::set<int> a_side;
            std::set<int> b_side;
            for (const auto& n : a_aper) {
                a_side.insert(eta(ps, n + k).value());
            }
            for (const auto& n : b_aper) {
                b_side.insert(eta(ps, n + 2 * k).value());
            }
            ++row.variants;
            if (a_side.size() != 1 || b_side.size() != 1) {
                ++row.non_constant_fills;
                continue;
            }
            const std::pair<int, int> pair{*a_side.begin(), *b_side.begin()};
            row.realized_fill_pairs.insert(pair);
            report.realized_fill_pairs.insert(pair);
            if (pair == std::pair{0, 2}) {
                ++row.forbidden_pair_hits;
            }
        }

        const auto tag = "m=" + std::to_string(m) + ": ";
        if (a_aper.empty() || b_aper.empty()) {
            report.violations.push_back(tag + "no certified-aperiodic position in the window");
        }
        if (row.a_forced_mismatches) {
            report.violations.push_back(tag + std::to_string(row.a_forced_mismatches) +
                                        " forced positions disagree with the shifted sequence");
        }
        if (!a_aper.empty() && row.a_aperiodic_symbols != std::set<int>{0}) {
            report.violations.push_back(tag + "a-side aperiodic positions do not all read 0");
        }
        if (row.b_reads_two) {
            report.violations.push_back(tag + std::to_string(row.b_reads_two) +
                                        " b-side aperiodic positions read symbol 2");
        }
        if (row.forbidden_pair_hits) {
            report.violations.push_back(tag + "fill pair (0,2) realised");
        }
        if (row.non_constant_fills) {
            report.violations.push_back(tag + std::to_string(row.non_constant_fills) +
                                        " variants read more than one symbol on aperiodic positions");
        }
        report.levels.push_back(std::move(row));
    }
    return report;
}

} // namespace tzdyn
