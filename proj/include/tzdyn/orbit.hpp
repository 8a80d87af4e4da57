#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "tzdyn/odometer.hpp"
#include "tzdyn/types.hpp"

namespace tzdyn {

// A point of the orbit closure of eta: the factor-map image g together with
// the symbol written on every aperiodic position of g.
struct OrbitPoint {
    OdometerElement g;
    Symbol fill;
};

struct Forced {
    Symbol symbol;
    std::size_t level; // 1-based level whose skeleton forces the symbol
    friend bool operator==(const Forced&, const Forced&) = default;
};
struct AperiodicCertified {
    Symbol fill;
    friend bool operator==(const AperiodicCertified&, const AperiodicCertified&) = default;
};
struct Undetermined {
    std::size_t horizon;
    friend bool operator==(const Undetermined&, const Undetermined&) = default;
};

using EvalResult = std::variant<Forced, AperiodicCertified, Undetermined>;

// Value of the point at position n. Forced when a digit of g + n below
// max_level is defined; AperiodicCertified when g's tail rule shows no digit of
// g + n is ever defined; Undetermined otherwise. An unknown tail whose whole
// horizon is scanned without a defined digit throws DepthExhausted.
EvalResult point_eval(const OrbitPoint& point, const Integer& n, std::size_t max_level);

struct SingletonCertified {
    std::vector<std::size_t> witness_levels; // levels with a defined digit, within depth
    friend bool operator==(const SingletonCertified&, const SingletonCertified&) = default;
};
struct FiveCertified {
    std::size_t from_level; // no digit at this 1-based level or beyond is defined
    friend bool operator==(const FiveCertified&, const FiveCertified&) = default;
};
struct UnknownAt {
    std::size_t level;
    std::size_t defined_seen;
    friend bool operator==(const UnknownAt&, const UnknownAt&) = default;
};

using FiberCertificate = std::variant<SingletonCertified, FiveCertified, UnknownAt>;

// Classifies |fiber(g)| from g's tail rule: infinitely many defined digits give
// a singleton, finitely many give five points, a bare prefix gives no verdict.
FiberCertificate fiber_certificate(const OdometerElement& g, std::size_t max_level);

struct AperPartition {
    std::vector<Integer> forced;
    std::vector<Integer> certified_aperiodic;
    std::vector<Integer> undetermined;
};

AperPartition aper_positions(const OdometerElement& g, const Integer& a, const Integer& b, std::size_t max_level);

struct ProximalWitness {
    std::optional<Integer> shift; // nullopt: nothing found within the bound
    Integer bound;
};

// Least |k| <= bound (k before -k) such that on every position of
// [k - radius, k + radius] both points are Forced at depth, or both are
// certified aperiodic with the same fill. Requires equal g.
ProximalWitness proximal_witness(const OrbitPoint& p1, const OrbitPoint& p2, const Integer& radius,
                                 const Integer& bound, std::size_t depth);

// sum |x(n) - y(n)| / 2^|n| over two windows centred at 0 (odd length).
Rational rho_distance(std::span<const Symbol> w1, std::span<const Symbol> w2);

} // namespace tzdyn
