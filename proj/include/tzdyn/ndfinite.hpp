#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "tzdyn/types.hpp"

namespace tzdyn {

// The rotation x -> x + step on Z/modulus.
struct FiniteRotation {
    std::int64_t modulus = 1;
    std::int64_t step = 1;

    FiniteRotation() = default;
    FiniteRotation(std::int64_t n, std::int64_t r);

    bool minimal() const noexcept;
    // (X, T^n) as a rotation with step n * step.
    FiniteRotation power(std::int64_t n) const;
};

using Tuple = std::vector<std::int64_t>;

// A finite set of d-tuples over Z/N in canonical (lexicographic) order.
struct TupleSet {
    std::int64_t modulus = 1;
    std::size_t dimension = 1;
    std::set<Tuple> tuples;

    std::size_t size() const noexcept { return tuples.size(); }
    bool contains(const Tuple& t) const { return tuples.contains(t); }
    friend bool operator==(const TupleSet&, const TupleSet&) = default;
};

// sigma: add step to every coordinate; tau: add i * step to coordinate i
// (1-based). A negative power applies the inverse.
Tuple apply_sigma(const FiniteRotation& sys, const Tuple& t, std::int64_t power = 1);
Tuple apply_tau(const FiniteRotation& sys, const Tuple& t, std::int64_t power = 1);

// Breadth-first closure of the diagonal point (base, ..., base) under the
// group generated by sigma and tau. For a minimal rotation this is the whole
// closure of the diagonal.
TupleSet nd_set(const FiniteRotation& sys, std::size_t d, std::int64_t base = 0);

// {(base + a r + b r i)_{i=1..d} : a, b in Z/N}.
TupleSet nd_closed_form(const FiniteRotation& sys, std::size_t d, std::int64_t base = 0);

// nd_set of (X, T^n).
TupleSet nd_power(const FiniteRotation& sys, std::int64_t n, std::size_t d, std::int64_t base = 0);

// True iff sigma^{+-1} and tau^{+-1} map the set into itself.
bool is_closed(const FiniteRotation& sys, const TupleSet& set);

// Cells (id x T x ... x T^{d-1})^i (T x ... x T)^j N_d(T^n), 0 <= i, j < n.
struct DecompositionReport {
    std::int64_t n = 1;
    std::vector<std::vector<TupleSet>> cells; // cells[i][j]
    std::size_t distinct_cells = 0;
    bool covers = false;                // union equals nd_set
    bool identical_or_disjoint = false; // pairwise
    bool ok() const noexcept { return covers && identical_or_disjoint; }
};

DecompositionReport decomposition_check(std::int64_t modulus, std::int64_t step, std::int64_t n, std::size_t d);

struct TheoremARow {
    std::int64_t modulus;
    std::int64_t step;
    std::int64_t n;
    std::size_t d;
    std::size_t size_t_set;  // |N_d(T)|
    std::size_t size_tn_set; // |N_d(T^n)|
    bool equal;
    std::int64_t gcd;
    bool consistent() const noexcept { return equal == (gcd == 1); }
};

struct TheoremAScan {
    std::vector<TheoremARow> rows;
    std::vector<TheoremARow> counterexamples;
};

// Every N <= n_max, every step coprime to N, 1 <= n <= N, 1 <= d <= d_max.
TheoremAScan theorem_a_check(std::int64_t n_max, std::size_t d_max);

// For all x, l in Z/N there is q with T^{k n q} x = T^{k l} x for k = 1..d.
bool condition_three_check(std::int64_t modulus, std::int64_t step, std::int64_t n, std::size_t d);

using Subset = std::set<std::int64_t>;

// {g : q g = p a for some a in A}, arithmetic mod N.
Subset rational_multiple_set(std::int64_t modulus, std::int64_t p, std::int64_t q, const Subset& a);

// {x - y : x in X, y in Y}.
Subset difference_set(std::int64_t modulus, const Subset& x, const Subset& y);

// Union over 1 <= i < j <= d of (j/(j-i)) A - (i/(j-i)) A. For d = 2 this is 2A - A.
Subset b_d_set(std::int64_t modulus, const Subset& a, std::size_t d);

} // namespace tzdyn
