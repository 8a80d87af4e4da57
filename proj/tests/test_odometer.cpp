#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tzdyn/odometer.hpp"

using namespace tzdyn;

namespace {

StructurePtr small_q() { return share(PeriodStructure::from_list({6, 12, 24})); }

OdometerElement unknown(const StructurePtr& ps, std::vector<std::int64_t> digits)
{
    return OdometerElement::from_digits(ps, std::move(digits), UnknownTail{});
}

std::vector<std::int64_t> random_digits(const PeriodStructure& ps, std::size_t k, std::mt19937_64& rng)
{
    std::vector<std::int64_t> d(k);
    for (std::size_t j = 0; j < k; ++j) {
        d[j] = std::uniform_int_distribution<std::int64_t>(0, ps.q(j + 1) - 1)(rng);
    }
    return d;
}

} // namespace

TEST_SUITE("period structure")
{
    TEST_CASE("stock structures")
    {
        const auto irr = PeriodStructure::stock_irregular(4);
        CHECK(irr.moduli() == std::vector<std::int64_t>{6, 12, 24, 48});
        CHECK(irr.p(4) == 82944);
        CHECK(irr.reciprocal_sum() == ReciprocalSum::Converges);
        const auto reg = PeriodStructure::stock_regular(4);
        CHECK(reg.moduli() == std::vector<std::int64_t>{6, 8, 10, 12});
        CHECK(reg.reciprocal_sum() == ReciprocalSum::Diverges);
        CHECK(PeriodStructure::from_list({6, 12}).reciprocal_sum() == ReciprocalSum::Undecidable);
    }

    TEST_CASE("invariants are enforced")
    {
        CHECK_THROWS_AS(PeriodStructure::from_list({5, 8}), ConfigError);
        CHECK_THROWS_AS(PeriodStructure::from_list({4, 8}), ConfigError);
        CHECK_THROWS_AS(PeriodStructure::from_list({6, 6}), ConfigError);
        CHECK_THROWS_AS(PeriodStructure::from_list({8, 6}), ConfigError);
        CHECK_THROWS_AS(PeriodStructure::from_list({}), ConfigError);
        CHECK_THROWS_AS(GeneratorRule::parse("geometric base=7"), ConfigError);
        CHECK_THROWS_AS(GeneratorRule::parse("fibonacci"), ConfigError);
    }

    TEST_CASE("rule parsing")
    {
        CHECK(GeneratorRule::parse("geometric base=6 ratio=2") == GeneratorRule::geometric(6, 2));
        CHECK(GeneratorRule::parse("arithmetic start=6 step=2") == GeneratorRule::arithmetic(6, 2));
        CHECK(GeneratorRule::parse("arithmetic") == GeneratorRule::arithmetic(6, 2));
        CHECK(GeneratorRule::geometric(6, 2).modulus(20) == 6 * (std::int64_t{1} << 19));
    }

    TEST_CASE("levels past the materialised depth")
    {
        const auto ruled = PeriodStructure::stock_irregular(3);
        CHECK(ruled.q(5) == 96);
        CHECK_THROWS_AS(ruled.p(4), DepthExhausted);
        const auto listed = PeriodStructure::from_list({6, 12, 24});
        CHECK_THROWS_AS(listed.q(4), DepthExhausted);
        CHECK(ruled.with_depth(5).p(5) == 6 * 12 * 24 * 48 * 96);
    }
}

TEST_SUITE("digits")
{
    TEST_CASE("digits_of_integer")
    {
        const auto ps = small_q();
        CHECK(digits_of_integer(*ps, 0, 3) == std::vector<std::int64_t>{0, 0, 0});
        CHECK(digits_of_integer(*ps, -1, 3) == std::vector<std::int64_t>{5, 11, 23});
        CHECK(digits_of_integer(*ps, 21, 2) == std::vector<std::int64_t>{3, 3});
        CHECK_THROWS_AS(digits_of_integer(*ps, 5, 4), DepthExhausted);
    }

    TEST_CASE("value_of_digits")
    {
        const auto ps = small_q();
        CHECK(value_of_digits(*ps, std::vector<std::int64_t>{0, 0, 0}) == 0);
        CHECK(value_of_digits(*ps, std::vector<std::int64_t>{5, 11, 23}) == 1727);
        CHECK(value_of_digits(*ps, std::vector<std::int64_t>{3, 3}) == 21);
        CHECK_THROWS_AS(value_of_digits(*ps, std::vector<std::int64_t>{6}), InvalidArgument);
        CHECK_THROWS_AS(value_of_digits(*ps, std::vector<std::int64_t>{0, 12}), InvalidArgument);
    }

    TEST_CASE("round trips agree with the subtraction oracle")
    {
        const auto ps = PeriodStructure::stock_irregular(5);
        const std::vector<std::int64_t> q(ps.moduli().begin(), ps.moduli().end());
        std::mt19937_64 rng(7);
        for (int i = 0; i < 10000; ++i) {
            const auto k = std::uniform_int_distribution<std::size_t>(0, 5)(rng);
            const auto n = std::uniform_int_distribution<std::int64_t>(-50'000'000, 50'000'000)(rng);
            const auto d = digits_of_integer(ps, n, k);
            REQUIRE(d == oracle::digits(q, n, k));
            REQUIRE(value_of_digits(ps, d) == oracle::floor_mod(n, static_cast<std::int64_t>(ps.p(k))));
            const auto v = random_digits(ps, k, rng);
            REQUIRE(digits_of_integer(ps, value_of_digits(ps, v), k) == v);
        }
    }
}

TEST_SUITE("group operations")
{
    TEST_CASE("add examples")
    {
        const auto ps = small_q();
        const auto six = add(OdometerElement::embed(ps, 1), OdometerElement::embed(ps, 5));
        CHECK(six == OdometerElement::embed(ps, 6));
        CHECK(*six.digit(0) == 0);
        CHECK(*six.digit(1) == 1);
        CHECK(*six.digit(2) == 0);

        const auto g = unknown(ps, {3, 3});
        CHECK(add(OdometerElement::embed(ps, 0), g) == g);

        const auto sum = add(g, OdometerElement::embed(ps, 3));
        CHECK(sum.prefix() == digits_of_integer(*ps, 21 + 3, 2));
        CHECK(sum.prefix() == std::vector<std::int64_t>{0, 4});
        CHECK(std::holds_alternative<UnknownTail>(sum.tail()));
        CHECK(sum.horizon() == std::optional<std::size_t>(2));
    }

    TEST_CASE("scalar_multiple examples")
    {
        const auto ps = small_q();
        CHECK(scalar_multiple(2, OdometerElement::embed(ps, 3)) == OdometerElement::embed(ps, 6));
        const auto minus_one = scalar_multiple(-1, OdometerElement::embed(ps, 1));
        CHECK(minus_one == OdometerElement::embed(ps, -1));
        CHECK(*minus_one.digit(0) == 5);
        CHECK(*minus_one.digit(1) == 11);
        CHECK(*minus_one.digit(2) == 23);

        const auto ps2 = share(PeriodStructure::from_list({6, 12}));
        const auto doubled = scalar_multiple(2, unknown(ps2, {3, 3}));
        CHECK(doubled.prefix() == digits_of_integer(*ps2, 2 * 21, 2));
        CHECK(doubled.prefix() == std::vector<std::int64_t>{0, 7});
        CHECK(scalar_multiple(0, unknown(ps2, {3, 3})) == OdometerElement::embed(ps2, 0));
    }

    TEST_CASE("mismatched structures are rejected")
    {
        const auto a = OdometerElement::embed(small_q(), 1);
        const auto b = OdometerElement::from_digits(share(PeriodStructure::from_list({6, 14})), {1},
                                                    UnknownTail{});
        CHECK_THROWS_AS(add(a, b), StructureMismatch);
        // Separately built but equal structures are compatible.
        CHECK_NOTHROW(add(a, OdometerElement::embed(small_q(), 2)));
    }

    TEST_CASE("element validation")
    {
        const auto ps = small_q();
        CHECK_THROWS_AS(OdometerElement::from_digits(ps, {6}, UnknownTail{}), InvalidArgument);
        CHECK_THROWS_AS(OdometerElement::from_digits(ps, {0}, ConstantDigit{12}), InvalidArgument);
        CHECK_THROWS_AS(OdometerElement::from_digits(ps, {0, 0, 0, 0}, UnknownTail{}), DepthExhausted);
        CHECK_THROWS_AS(OdometerElement::from_digits(ps, {1}, IntegerEmbed{2}), InvalidArgument);
        CHECK(OdometerElement::from_digits(ps, {3, 3}, IntegerEmbed{21}) == OdometerElement::embed(ps, 21));
    }

    TEST_CASE("constant tails survive addition of integers")
    {
        const auto ps = share(PeriodStructure::stock_irregular(6));
        const auto a = OdometerElement::from_digits(ps, {0}, ConstantDigit{3});
        const auto a6 = *a.residue(6);
        for (std::int64_t n = -3000; n <= 3000; n += 7) {
            const auto h = add(a, OdometerElement::embed(ps, n));
            REQUIRE(std::holds_alternative<ConstantDigit>(h.tail()));
            CHECK(std::get<ConstantDigit>(h.tail()).digit == 3);
            CHECK(*h.residue(6) == oracle::floor_mod(static_cast<std::int64_t>(a6) + n,
                                                     static_cast<std::int64_t>(ps->p(6))));
        }
        // digits 0 then constant 0 is an embedded integer
        const auto z = add(OdometerElement::from_digits(ps, {4}, ConstantDigit{1}),
                           OdometerElement::from_digits(ps, {2}, ConstantDigit{11}));
        CHECK(std::holds_alternative<ConstantDigit>(z.tail()));
        CHECK(*z.digit(0) == 0);
        CHECK(*z.digit(1) == 1); // 1 + 11 + carry = 13 = 1 + 12
        CHECK(*z.digit(5) == 12);
        const auto minus = add(OdometerElement::from_digits(ps, {5}, ConstantDigit{0}), OdometerElement::embed(ps, -1));
        CHECK(minus == OdometerElement::embed(ps, 4));
    }

    TEST_CASE("constant digit plus all-maximal tail becomes an embedded negative")
    {
        const auto ps = share(PeriodStructure::stock_irregular(4));
        // digits (1, 0, 0, ...) + (-2) = -1
        const auto g = OdometerElement::from_digits(ps, {1}, ConstantDigit{0});
        CHECK(g == OdometerElement::embed(ps, 1));
        const auto h = add(OdometerElement::from_digits(ps, {1, 0}, ConstantDigit{0}), OdometerElement::embed(ps, -2));
        CHECK(h == OdometerElement::embed(ps, -1));
    }

    TEST_CASE("negation of a constant tail keeps only materialised digits")
    {
        const auto ps = share(PeriodStructure::stock_irregular(4));
        const auto a = OdometerElement::from_digits(ps, {0}, ConstantDigit{3});
        const auto neg = negate(a);
        CHECK(neg.horizon() == std::optional<std::size_t>(4));
        const auto zero = add(a, neg);
        CHECK(zero.prefix() == std::vector<std::int64_t>{0, 0, 0, 0});
    }
}

TEST_SUITE("defined digits")
{
    TEST_CASE("is_defined_digit")
    {
        const auto ps = small_q();
        CHECK_FALSE(is_defined_digit(*ps, 3, 1));
        CHECK(is_defined_digit(*ps, 4, 1));
        CHECK(is_defined_digit(*ps, 11, 2));
        CHECK_THROWS_AS(is_defined_digit(*ps, 6, 1), InvalidArgument);
        CHECK_THROWS_AS(is_defined_digit(*ps, -1, 1), InvalidArgument);
    }

    TEST_CASE("five distinct defined digits at every level")
    {
        for (const auto& ps : {PeriodStructure::stock_irregular(20), PeriodStructure::stock_regular(20)}) {
            for (std::size_t level = 1; level <= 20; ++level) {
                std::size_t count = 0;
                for (std::int64_t s = 0; s < ps.q(level); ++s) {
                    count += is_defined_digit(ps, s, level) ? 1 : 0;
                }
                CHECK(count == 5);
            }
        }
    }

    TEST_CASE("symbol_of_digit is the bijection 0,1,2,q/2+1,q-1 -> 0..4")
    {
        CHECK(symbol_of_digit(0, 6) == Symbol::of(0));
        CHECK(symbol_of_digit(1, 6) == Symbol::of(1));
        CHECK(symbol_of_digit(2, 6) == Symbol::of(2));
        CHECK(symbol_of_digit(4, 6) == Symbol::of(3));
        CHECK(symbol_of_digit(5, 6) == Symbol::of(4));
        CHECK_FALSE(symbol_of_digit(3, 6).has_value());
        CHECK(symbol_of_digit(7, 12) == Symbol::of(3));
        CHECK(symbol_of_digit(11, 12) == Symbol::of(4));
    }
}

TEST_SUITE("arithmetic laws")
{
    TEST_CASE("embed is a homomorphism")
    {
        const auto ps = share(PeriodStructure::stock_irregular(8));
        std::mt19937_64 rng(11);
        std::uniform_int_distribution<std::int64_t> dist(-1'000'000, 1'000'000);
        for (int i = 0; i < 10000; ++i) {
            const auto m = dist(rng);
            const auto n = dist(rng);
            const auto sum = add(OdometerElement::embed(ps, m), OdometerElement::embed(ps, n));
            REQUIRE(sum == OdometerElement::embed(ps, m + n));
            REQUIRE(*sum.residue(8) == oracle::floor_mod(m + n, static_cast<std::int64_t>(ps->p(8))));
        }
    }

    TEST_CASE("commutative, associative, doubling and truncation coherence")
    {
        const auto ps = share(PeriodStructure::stock_irregular(6));
        std::mt19937_64 rng(13);
        for (int i = 0; i < 10000; ++i) {
            const auto k = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
            const auto g = unknown(ps, random_digits(*ps, k, rng));
            const auto h = unknown(ps, random_digits(*ps, k, rng));
            const auto f = unknown(ps, random_digits(*ps, k, rng));
            REQUIRE(add(g, h) == add(h, g));
            REQUIRE(add(add(g, h), f) == add(g, add(h, f)));
            REQUIRE(scalar_multiple(2, g) == add(g, g));
            const auto j = std::uniform_int_distribution<std::size_t>(0, k)(rng);
            REQUIRE(add(g, h).truncated(j) == add(g.truncated(j), h.truncated(j)));
            REQUIRE(scalar_multiple(2, g).truncated(j) == scalar_multiple(2, g.truncated(j)));
            // residue arithmetic: (g + h)_k = g_k + h_k mod p_k
            REQUIRE(*add(g, h).residue(k) == (*g.residue(k) + *h.residue(k)) % ps->p(k));
        }
    }

    TEST_CASE("scalar multiples agree with embedded products")
    {
        const auto ps = share(PeriodStructure::stock_irregular(8));
        std::mt19937_64 rng(17);
        std::uniform_int_distribution<std::int64_t> small(-40, 40);
        std::uniform_int_distribution<std::int64_t> big(-1'000'000, 1'000'000);
        for (int i = 0; i < 10000; ++i) {
            const auto m = small(rng);
            const auto n = big(rng);
            REQUIRE(scalar_multiple(m, OdometerElement::embed(ps, n)) == OdometerElement::embed(ps, m * n));
            const auto g = unknown(ps, digits_of_integer(*ps, n, 5));
            REQUIRE(*scalar_multiple(m, g).residue(5) ==
                    oracle::floor_mod(m * n, static_cast<std::int64_t>(ps->p(5))));
        }
    }
}
