#include "tzdyn/ndfinite.hpp"

#include <deque>
#include <numeric>

namespace tzdyn {

namespace {

std::int64_t mod(std::int64_t x, std::int64_t n)
{
    const auto r = x % n;
    return r < 0 ? r + n : r;
}

void check_dimension(std::size_t d)
{
    if (d == 0) {
        throw InvalidArgument("dimension d must be at least 1");
    }
}

} // namespace

FiniteRotation::FiniteRotation(std::int64_t n, std::int64_t r) : modulus(n), step(0)
{
    if (n < 1) {
        throw InvalidArgument("rotation modulus must be at least 1");
    }
    step = mod(r, n);
}

bool FiniteRotation::minimal() const noexcept
{
    return std::gcd(step, modulus) == 1;
}

FiniteRotation FiniteRotation::power(std::int64_t n) const
{
    return FiniteRotation(modulus, mod(n, modulus) * step);
}

Tuple apply_sigma(const FiniteRotation& sys, const Tuple& t, std::int64_t power)
{
    Tuple out(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        out[i] = mod(t[i] + power * sys.step, sys.modulus);
    }
    return out;
}

Tuple apply_tau(const FiniteRotation& sys, const Tuple& t, std::int64_t power)
{
    Tuple out(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        out[i] = mod(t[i] + power * static_cast<std::int64_t>(i + 1) * sys.step, sys.modulus);
    }
    return out;
}

TupleSet nd_set(const FiniteRotation& sys, std::size_t d, std::int64_t base)
{
    check_dimension(d);
    TupleSet out{sys.modulus, d, {}};
    const Tuple start(d, mod(base, sys.modulus));
    std::deque<Tuple> frontier{start};
    out.tuples.insert(start);
    while (!frontier.empty()) {
        const auto t = std::move(frontier.front());
        frontier.pop_front();
        for (const auto power : {1, -1}) {
            for (auto next : {apply_sigma(sys, t, power), apply_tau(sys, t, power)}) {
                if (out.tuples.insert(next).second) {
                    frontier.push_back(std::move(next));
                }
            }
        }
    }
    return out;
}

TupleSet nd_closed_form(const FiniteRotation& sys, std::size_t d, std::int64_t base)
{
    check_dimension(d);
    TupleSet out{sys.modulus, d, {}};
    for (std::int64_t a = 0; a < sys.modulus; ++a) {
        for (std::int64_t b = 0; b < sys.modulus; ++b) {
            Tuple t(d);
            for (std::size_t i = 0; i < d; ++i) {
                t[i] = mod(base + a * sys.step + b * sys.step * static_cast<std::int64_t>(i + 1), sys.modulus);
            }
            out.tuples.insert(std::move(t));
        }
    }
    return out;
}

TupleSet nd_power(const FiniteRotation& sys, std::int64_t n, std::size_t d, std::int64_t base)
{
    return nd_set(sys.power(n), d, base);
}

bool is_closed(const FiniteRotation& sys, const TupleSet& set)
{
    for (const auto& t : set.tuples) {
        for (const auto power : {1, -1}) {
            if (!set.contains(apply_sigma(sys, t, power)) || !set.contains(apply_tau(sys, t, power))) {
                return false;
            }
        }
    }
    return true;
}

DecompositionReport decomposition_check(std::int64_t modulus, std::int64_t step, std::int64_t n, std::size_t d)
{
    if (n < 1) {
        throw InvalidArgument("power n must be at least 1");
    }
    const FiniteRotation sys(modulus, step);
    const auto whole = nd_set(sys, d);
    const auto base = nd_power(sys, n, d);

    DecompositionReport report;
    report.n = n;
    report.cells.assign(static_cast<std::size_t>(n), {});
    std::vector<const TupleSet*> all;
    TupleSet uni{modulus, d, {}};
    for (std::int64_t i = 0; i < n; ++i) {
        for (std::int64_t j = 0; j < n; ++j) {
            TupleSet cell{modulus, d, {}};
            for (const auto& t : base.tuples) {
                // (id x T x ... x T^{d-1}) = tau o sigma^{-1}
                auto moved = apply_sigma(sys, apply_tau(sys, apply_sigma(sys, t, j), i), -i);
                uni.tuples.insert(moved);
                cell.tuples.insert(std::move(moved));
            }
            report.cells[static_cast<std::size_t>(i)].push_back(std::move(cell));
        }
    }
    for (auto& row : report.cells) {
        for (auto& cell : row) {
            all.push_back(&cell);
        }
    }
    report.covers = uni == whole;
    report.identical_or_disjoint = true;
    std::vector<const TupleSet*> distinct;
    for (const auto* cell : all) {
        bool seen = false;
        for (const auto* other : distinct) {
            if (*cell == *other) {
                seen = true;
                break;
            }
            for (const auto& t : cell->tuples) {
                if (other->contains(t)) {
                    report.identical_or_disjoint = false;
                    break;
                }
            }
        }
        if (!seen) {
            distinct.push_back(cell);
        }
    }
    report.distinct_cells = distinct.size();
    return report;
}

TheoremAScan theorem_a_check(std::int64_t n_max, std::size_t d_max)
{
    TheoremAScan scan;
    for (std::int64_t modulus = 1; modulus <= n_max; ++modulus) {
        for (std::int64_t step = 0; step < modulus; ++step) {
            if (std::gcd(step, modulus) != 1) {
                continue;
            }
            const FiniteRotation sys(modulus, step);
            for (std::size_t d = 1; d <= d_max; ++d) {
                const auto whole = nd_set(sys, d);
                for (std::int64_t n = 1; n <= modulus; ++n) {
                    const auto power = nd_power(sys, n, d);
                    TheoremARow row{modulus, step, n, d, whole.size(), power.size(), whole == power,
                                    std::gcd(n, modulus)};
                    if (!row.consistent()) {
                        scan.counterexamples.push_back(row);
                    }
                    scan.rows.push_back(row);
                }
            }
        }
    }
    return scan;
}

bool condition_three_check(std::int64_t modulus, std::int64_t step, std::int64_t n, std::size_t d)
{
    check_dimension(d);
    const FiniteRotation sys(modulus, step);
    for (std::int64_t x = 0; x < modulus; ++x) {
        for (std::int64_t l = 0; l < modulus; ++l) {
            bool found = false;
            for (std::int64_t q = 0; q < modulus && !found; ++q) {
                found = true;
                for (std::int64_t k = 1; k <= static_cast<std::int64_t>(d) && found; ++k) {
                    found = mod(x + k * n * q * sys.step, modulus) == mod(x + k * l * sys.step, modulus);
                }
            }
            if (!found) {
                return false;
            }
        }
    }
    return true;
}

Subset rational_multiple_set(std::int64_t modulus, std::int64_t p, std::int64_t q, const Subset& a)
{
    if (q == 0) {
        throw InvalidArgument("rational multiple needs a non-zero denominator");
    }
    if (modulus < 1) {
        throw InvalidArgument("modulus must be at least 1");
    }
    Subset targets;
    for (auto x : a) {
        targets.insert(mod(p * x, modulus));
    }
    Subset out;
    for (std::int64_t g = 0; g < modulus; ++g) {
        if (targets.contains(mod(q * g, modulus))) {
            out.insert(g);
        }
    }
    return out;
}

Subset difference_set(std::int64_t modulus, const Subset& x, const Subset& y)
{
    Subset out;
    for (auto u : x) {
        for (auto v : y) {
            out.insert(mod(u - v, modulus));
        }
    }
    return out;
}

Subset b_d_set(std::int64_t modulus, const Subset& a, std::size_t d)
{
    if (d < 2) {
        throw InvalidArgument("B_d needs d >= 2");
    }
    Subset out;
    const auto dd = static_cast<std::int64_t>(d);
    for (std::int64_t i = 1; i <= dd; ++i) {
        for (std::int64_t j = i + 1; j <= dd; ++j) {
            const auto left = rational_multiple_set(modulus, j, j - i, a);
            const auto right = rational_multiple_set(modulus, i, j - i, a);
            const auto diff = difference_set(modulus, left, right);
            out.insert(diff.begin(), diff.end());
        }
    }
    return out;
}

} // namespace tzdyn
