#include "tzdyn/orbit.hpp"

#include <cstdlib>

#include "tzdyn/toeplitz.hpp"

namespace tzdyn {

namespace {

// Digit index of the first tail level, at or after `from`, whose defined set
// contains the constant digit c; nullopt when no such level exists. Uses that
// the moduli increase strictly, so c >= 3 can only be q/2 + 1 or q - 1 while
// q <= 2c - 2.
std::optional<std::size_t> first_defined_constant_index(const PeriodStructure& ps, std::int64_t c, std::size_t from)
{
    if (c <= 2) {
        return from;
    }
    for (std::size_t j = from;; ++j) {
        const auto q = ps.q(j + 1);
        if (q / 2 + 1 > c) {
            return std::nullopt;
        }
        if (symbol_of_digit(c, q)) {
            return j;
        }
    }
}

std::optional<std::size_t> last_defined_constant_index(const PeriodStructure& ps, std::int64_t c, std::size_t from)
{
    std::optional<std::size_t> last;
    for (std::size_t j = from;; ++j) {
        const auto q = ps.q(j + 1);
        if (q / 2 + 1 > c) {
            return last;
        }
        if (symbol_of_digit(c, q)) {
            last = j;
        }
    }
}

Forced forced_at(const PeriodStructure& ps, std::size_t index, std::int64_t digit)
{
    return Forced{*symbol_of_digit(digit, ps.q(index + 1)), index + 1};
}

} // namespace

EvalResult point_eval(const OrbitPoint& point, const Integer& n, std::size_t max_level)
{
    const auto& ps = *point.g.structure();
    const auto h = add(point.g, OdometerElement::embed(point.g.structure(), n));

    if (const auto* m = h.embedded_value()) {
        const auto def = min_defined_level(ps, *m);
        if (def.index < max_level) {
            return Forced{def.symbol, def.index + 1};
        }
        return Undetermined{max_level};
    }

    const auto& prefix = h.prefix();
    if (const auto* c = std::get_if<ConstantDigit>(&h.tail())) {
        std::optional<std::size_t> first;
        for (std::size_t j = 0; j < prefix.size() && !first; ++j) {
            if (symbol_of_digit(prefix[j], ps.q(j + 1))) {
                first = j;
            }
        }
        if (!first) {
            first = first_defined_constant_index(ps, c->digit, prefix.size());
        }
        if (!first) {
            return AperiodicCertified{point.fill};
        }
        if (*first < max_level) {
            return forced_at(ps, *first, *h.digit(*first));
        }
        return Undetermined{max_level};
    }

    // Unknown tail: only the prefix carries information.
    const auto scan = std::min(max_level, prefix.size());
    for (std::size_t j = 0; j < scan; ++j) {
        if (symbol_of_digit(prefix[j], ps.q(j + 1))) {
            return forced_at(ps, j, prefix[j]);
        }
    }
    if (scan < prefix.size()) {
        return Undetermined{max_level};
    }
    throw DepthExhausted("no defined digit within the horizon " + std::to_string(prefix.size()) + " of " +
                         h.describe());
}

FiberCertificate fiber_certificate(const OdometerElement& g, std::size_t max_level)
{
    const auto& ps = *g.structure();
    if (g.is_embedded()) {
        SingletonCertified cert;
        const auto limit = std::min(max_level, ps.depth());
        for (std::size_t j = 0; j < limit; ++j) {
            if (symbol_of_digit(*g.digit(j), ps.q(j + 1))) {
                cert.witness_levels.push_back(j + 1);
            }
        }
        return cert;
    }

    const auto& prefix = g.prefix();
    if (const auto* c = std::get_if<ConstantDigit>(&g.tail())) {
        if (c->digit <= 2) {
            SingletonCertified cert;
            for (std::size_t j = 0; j < max_level; ++j) {
                if (auto q = ps.try_q(j + 1); q && symbol_of_digit(*g.digit(j), *q)) {
                    cert.witness_levels.push_back(j + 1);
                }
            }
            return cert;
        }
        try {
            const auto last = last_defined_constant_index(ps, c->digit, prefix.size());
            return FiveCertified{last ? *last + 2 : prefix.size() + 1};
        } catch (const DepthExhausted&) {
            // Moduli run out before they exceed the constant digit.
        }
    }

    const auto known = prefix.size();
    std::size_t seen = 0;
    for (std::size_t j = 0; j < known; ++j) {
        if (symbol_of_digit(prefix[j], ps.q(j + 1))) {
            ++seen;
        }
    }
    return UnknownAt{known, seen};
}

AperPartition aper_positions(const OdometerElement& g, const Integer& a, const Integer& b, std::size_t max_level)
{
    AperPartition out;
    const OrbitPoint point{g, Symbol::of(0)};
    for (Integer n = a; n <= b; ++n) {
        const auto r = point_eval(point, n, max_level);
        if (std::holds_alternative<Forced>(r)) {
            out.forced.push_back(n);
        } else if (std::holds_alternative<AperiodicCertified>(r)) {
            out.certified_aperiodic.push_back(n);
        } else {
            out.undetermined.push_back(n);
        }
    }
    return out;
}

ProximalWitness proximal_witness(const OrbitPoint& p1, const OrbitPoint& p2, const Integer& radius,
                                 const Integer& bound, std::size_t depth)
{
    if (!(p1.g == p2.g)) {
        throw InvalidArgument("proximal witness search needs two points in the same fiber");
    }
    if (radius < 0 || bound < 0) {
        throw InvalidArgument("radius and bound must be non-negative");
    }
    auto settled = [&](const Integer& n) {
        EvalResult r1 = Undetermined{depth};
        EvalResult r2 = Undetermined{depth};
        try {
            r1 = point_eval(p1, n, depth);
            r2 = point_eval(p2, n, depth);
        } catch (const DepthExhausted&) {
            return false;
        }
        if (std::holds_alternative<Forced>(r1)) {
            return std::holds_alternative<Forced>(r2);
        }
        return std::holds_alternative<AperiodicCertified>(r1) && r1 == r2;
    };
    auto all_settled = [&](const Integer& centre) {
        for (Integer n = centre - radius; n <= centre + radius; ++n) {
            if (!settled(n)) {
                return false;
            }
        }
        return true;
    };
    for (Integer k = 0; k <= bound; ++k) {
        if (all_settled(k)) {
            return {k, bound};
        }
        if (k != 0 && all_settled(-k)) {
            return {Integer(-k), bound};
        }
    }
    return {std::nullopt, bound};
}

Rational rho_distance(std::span<const Symbol> w1, std::span<const Symbol> w2)
{
    if (w1.size() != w2.size()) {
        throw InvalidArgument("rho_distance needs windows of equal length");
    }
    if (w1.size() % 2 == 0) {
        throw InvalidArgument("rho_distance needs windows centred at 0 (odd length)");
    }
    const auto centre = static_cast<std::ptrdiff_t>(w1.size() / 2);
    Rational sum = 0;
    for (std::size_t i = 0; i < w1.size(); ++i) {
        const auto diff = std::abs(w1[i].value() - w2[i].value());
        if (diff == 0) {
            continue;
        }
        const auto offset = static_cast<unsigned>(std::abs(static_cast<std::ptrdiff_t>(i) - centre));
        sum += Rational(diff, Integer(1) << offset);
    }
    return sum;
}

} // namespace tzdyn
