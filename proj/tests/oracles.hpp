#pragma once

// Brute-force reference computations used by the tests. Nothing here calls
// into the library's digit or sequence code paths.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

inline std::int64_t floor_mod(std::int64_t n, std::int64_t m)
{
    const auto r = n % m;
    return r < 0 ? r + m : r;
}

inline std::int64_t floor_div(std::int64_t n, std::int64_t m)
{
    return (n - floor_mod(n, m)) / m;
}

inline std::vector<std::int64_t> periods(const std::vector<std::int64_t>& q)
{
    std::vector<std::int64_t> p{1};
    for (auto qi : q) {
        p.push_back(p.back() * qi);
    }
    return p;
}

// Mixed-radix digits of n mod p_k by repeated subtraction of place values.
inline std::vector<std::int64_t> digits(const std::vector<std::int64_t>& q, std::int64_t n, std::size_t k)
{
    const auto p = periods(q);
    auto r = floor_mod(n, p[k]);
    std::vector<std::int64_t> out(k, 0);
    for (std::size_t j = k; j-- > 0;) {
        while (r >= p[j]) {
            r -= p[j];
            ++out[j];
        }
    }
    return out;
}

inline std::optional<int> step_symbol(std::int64_t residue, std::int64_t q)
{
    if (residue == 0) return 0;
    if (residue == 1) return 1;
    if (residue == 2) return 2;
    if (residue == q / 2 + 1) return 3;
    if (residue == q - 1) return 4;
    return std::nullopt;
}

// The sequence on [lo, hi] built step by step: step 1 fills residues mod q_1,
// step i+1 fills every still-empty n of block k = floor(n / p_i) according to
// k mod q_{i+1}. Returns symbol and the step (1-based) that wrote it.
struct Cell {
    int symbol = -1;
    std::size_t step = 0;
};

inline std::map<std::int64_t, Cell> inductive_construction(const std::vector<std::int64_t>& q, std::int64_t lo,
                                                          std::int64_t hi)
{
    const auto p = periods(q);
    std::map<std::int64_t, Cell> cells;
    for (auto n = lo; n <= hi; ++n) {
        cells[n] = Cell{};
        if (auto s = step_symbol(floor_mod(n, q[0]), q[0])) {
            cells[n] = Cell{*s, 1};
        }
    }
    for (std::size_t i = 1; i < q.size(); ++i) {
        for (auto& [n, cell] : cells) {
            if (cell.step != 0) {
                continue;
            }
            const auto k = floor_div(n, p[i]);
            if (auto s = step_symbol(floor_mod(k, q[i]), q[i])) {
                cell = Cell{*s, i + 1};
            }
        }
    }
    return cells;
}

// Every g = x - y with (j - i) x = j a and (j - i) y = i a' for a, a' in A,
// 1 <= i < j <= d; enumerated over all (x, y, a, a') directly.
inline std::set<std::int64_t> b_d_brute(std::int64_t n, const std::set<std::int64_t>& a, std::int64_t d)
{
    std::set<std::int64_t> out;
    for (std::int64_t i = 1; i <= d; ++i) {
        for (std::int64_t j = i + 1; j <= d; ++j) {
            for (std::int64_t x = 0; x < n; ++x) {
                for (std::int64_t y = 0; y < n; ++y) {
                    bool x_ok = false;
                    bool y_ok = false;
                    for (auto u : a) {
                        x_ok = x_ok || floor_mod((j - i) * x - j * u, n) == 0;
                        y_ok = y_ok || floor_mod((j - i) * y - i * u, n) == 0;
                    }
                    if (x_ok && y_ok) {
                        out.insert(floor_mod(x - y, n));
                    }
                }
            }
        }
    }
    return out;
}

} // namespace oracle
