#include "tzdyn/toeplitz.hpp"

#include <limits>

namespace tzdyn {

namespace {

constexpr std::int64_t kFastPathLimit = std::int64_t{1} << 61;
constexpr std::uint64_t kMaxEnumeratedPeriod = 10'000'000;

DefiningDigit beyond_depth(const PeriodStructure& ps, bool nonnegative_in_range, bool negative_in_range,
                           const std::string& n_text)
{
    const auto k = ps.depth();
    if (nonnegative_in_range) {
        return {k, 0, Symbol::of(0)};
    }
    if (negative_in_range) {
        return {k, ps.try_q(k + 1).value_or(0) - 1, Symbol::of(4)};
    }
    throw DepthExhausted("no defined digit of " + n_text + " within " + std::to_string(k) + " levels");
}

std::vector<std::int64_t> prime_factors(std::uint64_t n)
{
    std::vector<std::int64_t> primes;
    for (std::uint64_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            primes.push_back(static_cast<std::int64_t>(f));
            while (n % f == 0) {
                n /= f;
            }
        }
    }
    if (n > 1) {
        primes.push_back(static_cast<std::int64_t>(n));
    }
    return primes;
}

Rational step_density(const Rational& previous, std::int64_t constant, std::int64_t q)
{
    return previous + (Rational(1) - previous) * Rational(constant, q);
}

} // namespace

DefiningDigit min_defined_level(const PeriodStructure& ps, const Integer& n)
{
    const auto k = ps.depth();
    if (const auto& small = ps.small_periods(); small && n > -kFastPathLimit && n < kFastPathLimit) {
        const auto& p = *small;
        const auto v = static_cast<std::int64_t>(n);
        const auto period = p[k];
        auto r = v % period;
        if (r < 0) {
            r += period;
        }
        for (std::size_t j = 0; j < k; ++j) {
            const auto q = ps.moduli()[j];
            const auto d = (r / p[j]) % q;
            if (auto s = symbol_of_digit(d, q)) {
                return {j, d, *s};
            }
        }
        return beyond_depth(ps, v >= 0 && v < period, v < 0 && v >= -period, std::to_string(v));
    }

    const auto& period = ps.p(k);
    Integer r = n % period;
    if (r < 0) {
        r += period;
    }
    for (std::size_t j = 0; j < k; ++j) {
        const auto q = ps.moduli()[j];
        const auto d = static_cast<std::int64_t>(r % q);
        r /= q;
        if (auto s = symbol_of_digit(d, q)) {
            return {j, d, *s};
        }
    }
    return beyond_depth(ps, n >= 0 && n < period, n < 0 && n >= -period, n.str());
}

Symbol eta(const PeriodStructure& ps, const Integer& n)
{
    return min_defined_level(ps, n).symbol;
}

std::vector<Symbol> window(const PeriodStructure& ps, const Integer& a, const Integer& b)
{
    if (a > b) {
        throw InvalidArgument("window needs from <= to");
    }
    std::vector<Symbol> out;
    out.reserve(static_cast<std::size_t>(b - a + 1));
    for (Integer n = a; n <= b; ++n) {
        out.push_back(eta(ps, n));
    }
    return out;
}

SkeletonTable skeleton(const PeriodStructure& ps, std::size_t level)
{
    const auto& p = ps.p(level);
    if (p > kMaxSkeletonPeriod) {
        throw InvalidArgument("skeleton at level " + std::to_string(level) + " has period " + p.str() +
                              ", larger than the materialisation limit");
    }
    SkeletonTable table;
    table.level = level;
    const auto period = static_cast<std::size_t>(p);
    table.cells.resize(period);
    for (std::size_t r = 0; r < period; ++r) {
        const auto def = min_defined_level(ps, Integer(r));
        if (def.index < level) {
            table.cells[r] = def.symbol;
            ++table.defined_count;
        }
    }
    return table;
}

std::string_view to_string(Regularity r) noexcept
{
    switch (r) {
    case Regularity::Regular:
        return "regular";
    case Regularity::Irregular:
        return "irregular";
    case Regularity::UndecidableFromPrefix:
        break;
    }
    return "undecidable-from-prefix";
}

Regularity classify(const PeriodStructure& ps) noexcept
{
    switch (ps.reciprocal_sum()) {
    case ReciprocalSum::Diverges:
        return Regularity::Regular;
    case ReciprocalSum::Converges:
        return Regularity::Irregular;
    case ReciprocalSum::Undecidable:
        break;
    }
    return Regularity::UndecidableFromPrefix;
}

namespace {

Integer defined_count(const PeriodStructure& ps, std::size_t level, bool& enumerated)
{
    const auto& p = ps.p(level);
    if (p <= kMaxEnumeratedPeriod) {
        enumerated = true;
        const auto period = static_cast<std::uint64_t>(p);
        std::uint64_t count = 0;
        for (std::uint64_t r = 0; r < period; ++r) {
            if (min_defined_level(ps, Integer(r)).index < level) {
                ++count;
            }
        }
        return Integer(count);
    }
    // Residues whose first `level` digits are all undefined.
    enumerated = false;
    Integer undefined = 1;
    for (std::size_t j = 1; j <= level; ++j) {
        undefined *= ps.q(j) - 5;
    }
    return p - undefined;
}

} // namespace

DensityReport density(const PeriodStructure& ps, std::size_t level)
{
    DensityReport report;
    report.level = level;
    report.period = ps.p(level);
    report.defined_count = defined_count(ps, level, report.enumerated);
    report.density = Rational(report.defined_count, report.period);
    report.classification = classify(ps);

    if (level >= 1) {
        bool ignored = false;
        const Rational previous(defined_count(ps, level - 1, ignored), ps.p(level - 1));
        report.recursion_value = step_density(previous, 5, ps.q(level));
        Rational four(4, ps.q(1));
        for (std::size_t j = 2; j <= level; ++j) {
            four = step_density(four, 4, ps.q(j));
        }
        report.constant_four_value = four;
    } else {
        report.constant_four_value = 0;
    }
    return report;
}

bool is_essential_period(const SkeletonTable& table)
{
    const auto period = table.period();
    if (period <= 1) {
        return true;
    }
    // A smaller period of a periodic table can be reduced to a divisor, and
    // every proper divisor divides some period / prime.
    for (auto prime : prime_factors(period)) {
        const auto shift = period / static_cast<std::size_t>(prime);
        bool invariant = true;
        for (std::size_t r = 0; r < period && invariant; ++r) {
            invariant = table.cells[r] == table.cells[(r + shift) % period];
        }
        if (invariant) {
            return false;
        }
    }
    return true;
}

bool essential_period_check(const PeriodStructure& ps, std::size_t level)
{
    if (level + 1 > ps.depth()) {
        throw DepthExhausted("essential period check needs level <= depth - 1 (level " + std::to_string(level) +
                             ", depth " + std::to_string(ps.depth()) + ")");
    }
    return is_essential_period(skeleton(ps, level));
}

} // namespace tzdyn
