#include <doctest.h>

#include <array>
#include <random>

#include "oracles.hpp"
#include "tzdyn/orbit.hpp"
#include "tzdyn/toeplitz.hpp"

using namespace tzdyn;

namespace {

StructurePtr q3() { return share(PeriodStructure::from_list({6, 12, 24})); }
StructurePtr irregular(std::size_t k = 8) { return share(PeriodStructure::stock_irregular(k)); }

OdometerElement const3(const StructurePtr& ps) { return OdometerElement::from_digits(ps, {}, ConstantDigit{3}); }

bool is_forced(const EvalResult& r) { return std::holds_alternative<Forced>(r); }

} // namespace

TEST_CASE("point_eval examples")
{
    const auto ps = q3();
    CHECK(point_eval({OdometerElement::embed(ps, 7), Symbol::of(3)}, -7, 3) == EvalResult{Forced{Symbol::of(0), 1}});

    for (std::int64_t n = -200; n <= 200; ++n) {
        for (int s = 0; s < 5; ++s) {
            // -195 = 3 + 3*6 + 21*72 - 1728 is only decided past level 3
            const auto r = point_eval({OdometerElement::embed(ps, 0), Symbol::of(s)}, n, 4);
            REQUIRE(is_forced(r));
            REQUIRE(std::get<Forced>(r).symbol == eta(*ps, n));
        }
    }

    const auto irr = irregular();
    const auto g = OdometerElement::from_digits(irr, {3}, ConstantDigit{3});
    CHECK(point_eval({g, Symbol::of(2)}, 0, 8) == EvalResult{AperiodicCertified{Symbol::of(2)}});
}

TEST_CASE("point_eval on a bare prefix")
{
    const auto ps = q3();
    const auto g = OdometerElement::from_digits(ps, {3, 3}, UnknownTail{});
    // g + 0 has digits (3, 3): nothing defined at levels 1 and 2
    CHECK_THROWS_AS(point_eval({g, Symbol::of(0)}, 0, 2), DepthExhausted);
    // g + 6 has digits (3, 4); still nothing, horizon spent
    CHECK_THROWS_AS(point_eval({g, Symbol::of(0)}, 6, 3), DepthExhausted);
    CHECK(point_eval({g, Symbol::of(0)}, 1, 2) == EvalResult{Forced{Symbol::of(3), 1}});
    CHECK(point_eval({g, Symbol::of(0)}, 1, 0) == EvalResult{Undetermined{0}});
}

TEST_CASE("fiber_certificate examples")
{
    const auto irr = irregular();
    CHECK(std::holds_alternative<SingletonCertified>(fiber_certificate(OdometerElement::embed(irr, 17), 8)));
    CHECK(std::holds_alternative<FiveCertified>(fiber_certificate(const3(irr), 8)));
    const auto u = fiber_certificate(OdometerElement::from_digits(irr, {3, 3, 3}, UnknownTail{}), 8);
    CHECK(u == FiberCertificate{UnknownAt{3, 0}});
    CHECK(std::holds_alternative<SingletonCertified>(
        fiber_certificate(OdometerElement::from_digits(irr, {3}, ConstantDigit{1}), 8)));
}

TEST_CASE("constant digit 3 is undefined at every level of the irregular rule")
{
    const auto ps = PeriodStructure::stock_irregular(20);
    for (std::size_t level = 1; level <= 20; ++level) {
        const auto q = ps.q(level);
        CHECK(q / 2 + 1 != 3);
        CHECK(q - 1 != 3);
        CHECK_FALSE(is_defined_digit(ps, 3, level));
    }
    const auto ps20 = share(ps);
    CHECK(std::holds_alternative<FiveCertified>(fiber_certificate(const3(ps20), 20)));
}

TEST_CASE("aper_positions")
{
    const auto irr = irregular();
    const auto all = aper_positions(OdometerElement::embed(irr, 0), 0, 5, 8);
    CHECK(all.forced.size() == 6);
    CHECK(all.certified_aperiodic.empty());
    CHECK(all.undetermined.empty());

    // digit 0 of 3 + n is 3 exactly when n = 0 mod 6; nothing else can be
    // forced at level 1
    const auto part = aper_positions(const3(irr), 0, 35, 1);
    CHECK(part.forced.size() == 30);
    for (const auto& n : part.forced) {
        REQUIRE(n % 6 != 0);
        REQUIRE(std::get<Forced>(point_eval({const3(irr), Symbol::of(0)}, n, 1)).level == 1);
    }
    // For n = 6t, t < 6, digit 1 of g + n is 3 + t and all later digits are 3.
    std::vector<Integer> aperiodic;
    std::vector<Integer> level_two;
    for (std::int64_t t = 0; t < 6; ++t) {
        (oracle::step_symbol(3 + t, 12) ? level_two : aperiodic).push_back(6 * t);
    }
    CHECK(level_two == std::vector<Integer>{24});
    CHECK(part.undetermined == level_two);
    CHECK(part.certified_aperiodic == aperiodic);
    const auto deep = aper_positions(const3(irr), 0, 35, 8);
    CHECK(deep.forced.size() == 31);
    CHECK(deep.certified_aperiodic == aperiodic);
    CHECK(deep.undetermined.empty());

    const auto empty = aper_positions(const3(irr), 5, 4, 8);
    CHECK(empty.forced.empty());
    CHECK(empty.certified_aperiodic.empty());
    CHECK(empty.undetermined.empty());
}

TEST_CASE("proximal_witness")
{
    const auto irr = irregular();
    const OrbitPoint a{const3(irr), Symbol::of(0)};
    CHECK(proximal_witness(a, a, 6, 100, 8).shift == Integer(0));

    const OrbitPoint e1{OdometerElement::embed(irr, 41), Symbol::of(0)};
    const OrbitPoint e2{OdometerElement::embed(irr, 41), Symbol::of(4)};
    CHECK(proximal_witness(e1, e2, 6, 100, 8).shift == Integer(0));

    // Oracle: g has residue 21 mod 72; n is forced at depth 2 iff a digit of
    // (21 + n) mod 72 is defined at its level.
    const std::vector<std::int64_t> q{6, 12};
    auto forced = [&](std::int64_t n) {
        const auto d = oracle::digits(q, 21 + n, 2);
        return oracle::step_symbol(d[0], 6).has_value() || oracle::step_symbol(d[1], 12).has_value();
    };
    auto window_ok = [&](std::int64_t k) {
        for (std::int64_t n = k - 6; n <= k + 6; ++n) {
            if (!forced(n)) return false;
        }
        return true;
    };
    std::optional<std::int64_t> expected;
    for (std::int64_t m = 0; m <= 1728 && !expected; ++m) {
        if (window_ok(m)) expected = m;
        else if (window_ok(-m)) expected = -m;
    }
    REQUIRE(expected);
    CHECK(std::abs(*expected) <= 72);
    const OrbitPoint b{const3(irr), Symbol::of(3)};
    const auto w = proximal_witness(a, b, 6, 1728, 2);
    REQUIRE(w.shift);
    CHECK(*w.shift == *expected);
    CHECK(*w.shift == -7);

    // the two points agree on the whole witness window
    for (std::int64_t n = -13; n <= -1; ++n) {
        CHECK(point_eval(a, n, 2) == point_eval(b, n, 2));
    }

    const auto none = proximal_witness(a, b, 6, 3, 2);
    CHECK_FALSE(none.shift);
    CHECK(none.bound == 3);
    CHECK_THROWS_AS(proximal_witness(a, e1, 6, 3, 2), InvalidArgument);
}

TEST_CASE("rho_distance")
{
    const auto s = [](std::initializer_list<int> v) {
        std::vector<Symbol> out;
        for (int x : v) out.push_back(Symbol::of(x));
        return out;
    };
    CHECK(rho_distance(s({1, 2, 3}), s({1, 2, 3})) == 0);
    CHECK(rho_distance(s({1, 2, 3}), s({1, 3, 3})) == 1);
    CHECK(rho_distance(s({1, 2, 3}), s({0, 2, 4})) == 1);
    CHECK(rho_distance(s({0, 0, 0, 0, 0}), s({4, 0, 0, 0, 0})) == 1);
    CHECK_THROWS_AS(rho_distance(s({1, 2, 3}), s({1, 2})), InvalidArgument);
    CHECK_THROWS_AS(rho_distance(s({1, 2}), s({1, 2})), InvalidArgument);
}

TEST_CASE("forced values do not depend on the fill")
{
    const auto ps = q3();
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<std::int64_t> digits{std::uniform_int_distribution<std::int64_t>(0, 5)(rng),
                                         std::uniform_int_distribution<std::int64_t>(0, 11)(rng),
                                         std::uniform_int_distribution<std::int64_t>(0, 23)(rng)};
        const auto g = OdometerElement::from_digits(ps, digits, UnknownTail{});
        for (std::int64_t n = -72; n <= 72; ++n) {
            std::optional<EvalResult> first;
            for (int s = 0; s < 5; ++s) {
                EvalResult r = Undetermined{0};
                try {
                    r = point_eval({g, Symbol::of(s)}, n, 3);
                } catch (const DepthExhausted&) {
                    continue;
                }
                if (!first) first = r;
                REQUIRE(is_forced(r));
                REQUIRE(r == *first);
            }
        }
    }
}

TEST_CASE("evaluation is equivariant under +1")
{
    const auto irr = irregular();
    for (const auto& g : {const3(irr), OdometerElement::from_digits(irr, {4, 7}, ConstantDigit{3}),
                          OdometerElement::embed(irr, -123)}) {
        const auto shifted = add(g, OdometerElement::embed(irr, 1));
        for (std::int64_t n = -500; n <= 500; ++n) {
            const auto lhs = point_eval({shifted, Symbol::of(1)}, n, 8);
            const auto rhs = point_eval({g, Symbol::of(1)}, n + 1, 8);
            if (is_forced(lhs) && is_forced(rhs)) {
                REQUIRE(lhs == rhs);
            }
        }
    }
}

TEST_CASE("forced results are stable as the depth grows")
{
    const auto irr = irregular();
    const auto g = const3(irr);
    for (std::int64_t n = -300; n <= 300; ++n) {
        for (std::size_t lvl = 1; lvl < 8; ++lvl) {
            const auto r = point_eval({g, Symbol::of(0)}, n, lvl);
            if (is_forced(r)) {
                REQUIRE(point_eval({g, Symbol::of(0)}, n, lvl + 1) == r);
            }
        }
    }
}

TEST_CASE("singleton fibers never certify aperiodic positions")
{
    const auto irr = irregular(6);
    for (std::int64_t m = -1000; m <= 1000; ++m) {
        const auto g = OdometerElement::embed(irr, m);
        REQUIRE(std::holds_alternative<SingletonCertified>(fiber_certificate(g, 6)));
        for (std::int64_t n = -20; n <= 20; ++n) {
            REQUIRE(is_forced(point_eval({g, Symbol::of(2)}, n, 6)));
        }
    }
}

TEST_CASE("five fill points are pairwise separated")
{
    const auto irr = irregular();
    const auto g = const3(irr);
    const auto part = aper_positions(g, -1728, 1728, 8);
    REQUIRE_FALSE(part.certified_aperiodic.empty());
    const auto n = part.certified_aperiodic.front();
    std::set<int> values;
    for (int s = 0; s < 5; ++s) {
        const auto r = point_eval({g, Symbol::of(s)}, n, 8);
        values.insert(std::get<AperiodicCertified>(r).fill.value());
    }
    CHECK(values.size() == 5);
}

TEST_CASE("forced values match a finite shift of eta")
{
    // At level L the point reads eta(n + g_L) where g_L is the residue of g mod p_L.
    const auto irr = irregular();
    const auto g = OdometerElement::from_digits(irr, {1, 5}, ConstantDigit{3});
    for (std::size_t level = 1; level <= 6; ++level) {
        const auto shift = *g.residue(level);
        for (std::int64_t n = -400; n <= 400; ++n) {
            const auto r = point_eval({g, Symbol::of(0)}, n, level);
            if (const auto* f = std::get_if<Forced>(&r)) {
                REQUIRE(f->symbol == eta(*irr, shift + n));
            }
        }
    }
}
