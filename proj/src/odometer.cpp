#include "tzdyn/odometer.hpp"

#include <algorithm>

namespace tzdyn {

namespace {

Integer floor_mod(const Integer& n, const Integer& m)
{
    Integer r = n % m;
    if (r < 0) {
        r += m;
    }
    return r;
}

// Least S with -p_S <= m < p_S.
std::size_t integer_length(const PeriodStructure& ps, const Integer& m)
{
    for (std::size_t s = 0; s <= ps.depth(); ++s) {
        const auto& p = ps.p(s);
        if (m >= -p && m < p) {
            return s;
        }
    }
    throw DepthExhausted("integer " + m.str() + " needs more than " + std::to_string(ps.depth()) + " levels");
}

std::int64_t integer_digit(const PeriodStructure& ps, const Integer& m, std::size_t j)
{
    if (j < ps.depth()) {
        const Integer r = floor_mod(m, ps.p(j + 1));
        return static_cast<std::int64_t>(r / ps.p(j));
    }
    if (integer_length(ps, m) > j) {
        throw DepthExhausted("digit " + std::to_string(j) + " of " + m.str() + " is beyond the available depth");
    }
    return m >= 0 ? 0 : ps.q(j + 1) - 1;
}

void check_same_structure(const OdometerElement& g, const OdometerElement& h)
{
    if (g.structure() != h.structure() && !(*g.structure() == *h.structure())) {
        throw StructureMismatch("operands use different period structures: " + g.structure()->describe() +
                                " vs " + h.structure()->describe());
    }
}

// Behaviour of an element's digits once its tail rule is in force.
struct TailDigits {
    enum class Kind { Zero, Max, Constant } kind;
    std::int64_t constant = 0;

    std::int64_t at(std::int64_t q) const
    {
        switch (kind) {
        case Kind::Zero:
            return 0;
        case Kind::Max:
            return q - 1;
        case Kind::Constant:
            break;
        }
        return constant;
    }
};

TailDigits tail_digits(const OdometerElement& g)
{
    if (const auto* m = g.embedded_value()) {
        return {*m >= 0 ? TailDigits::Kind::Zero : TailDigits::Kind::Max, 0};
    }
    return {TailDigits::Kind::Constant, std::get<ConstantDigit>(g.tail()).digit};
}

// A constant-0 tail is an embedded integer; keep that canonical.
OdometerElement normalise(const StructurePtr& ps, std::vector<std::int64_t> prefix, Tail tail)
{
    if (const auto* c = std::get_if<ConstantDigit>(&tail); c && c->digit == 0 && prefix.size() <= ps->depth()) {
        return OdometerElement::embed(ps, value_of_digits(*ps, prefix));
    }
    return OdometerElement::from_digits(ps, std::move(prefix), std::move(tail));
}

} // namespace

std::vector<std::int64_t> digits_of_integer(const PeriodStructure& ps, const Integer& n, std::size_t k)
{
    if (k > ps.depth()) {
        throw DepthExhausted("requested " + std::to_string(k) + " digits but only " + std::to_string(ps.depth()) +
                             " levels are available");
    }
    std::vector<std::int64_t> digits;
    digits.reserve(k);
    Integer r = floor_mod(n, ps.p(k));
    for (std::size_t j = 0; j < k; ++j) {
        const auto q = ps.q(j + 1);
        digits.push_back(static_cast<std::int64_t>(r % q));
        r /= q;
    }
    return digits;
}

Integer value_of_digits(const PeriodStructure& ps, std::span<const std::int64_t> digits)
{
    if (digits.size() > ps.depth()) {
        throw DepthExhausted("digit vector longer than the available depth");
    }
    Integer value = 0;
    for (std::size_t j = 0; j < digits.size(); ++j) {
        const auto q = ps.q(j + 1);
        if (digits[j] < 0 || digits[j] >= q) {
            throw InvalidArgument("digit " + std::to_string(j) + " = " + std::to_string(digits[j]) +
                                  " out of range [0, " + std::to_string(q) + ")");
        }
        value += ps.p(j) * digits[j];
    }
    return value;
}

OdometerElement::OdometerElement(StructurePtr ps, std::vector<std::int64_t> prefix, Tail tail)
    : ps_(std::move(ps)), prefix_(std::move(prefix)), tail_(std::move(tail))
{
}

OdometerElement OdometerElement::embed(StructurePtr ps, Integer m)
{
    if (!ps) {
        throw InvalidArgument("missing period structure");
    }
    return OdometerElement(std::move(ps), {}, IntegerEmbed{std::move(m)});
}

OdometerElement OdometerElement::from_digits(StructurePtr ps, std::vector<std::int64_t> prefix, Tail tail)
{
    if (!ps) {
        throw InvalidArgument("missing period structure");
    }
    for (std::size_t j = 0; j < prefix.size(); ++j) {
        const auto q = ps->q(j + 1);
        if (prefix[j] < 0 || prefix[j] >= q) {
            throw InvalidArgument("digit " + std::to_string(j) + " = " + std::to_string(prefix[j]) +
                                  " out of range [0, " + std::to_string(q) + ")");
        }
    }
    if (const auto* e = std::get_if<IntegerEmbed>(&tail)) {
        // An embedded integer carries no independent prefix.
        if (!prefix.empty() && digits_of_integer(*ps, e->value, prefix.size()) != prefix) {
            throw InvalidArgument("prefix disagrees with the embedded integer " + e->value.str());
        }
        return embed(std::move(ps), e->value);
    }
    if (const auto* c = std::get_if<ConstantDigit>(&tail)) {
        // The moduli increase, so checking the first covered level suffices.
        const auto q = ps->try_q(prefix.size() + 1).value_or(ps->q(ps->depth()));
        if (c->digit < 0 || c->digit >= q) {
            throw InvalidArgument("constant digit " + std::to_string(c->digit) + " out of range [0, " +
                                  std::to_string(q) + ") at level " + std::to_string(prefix.size() + 1));
        }
        if (c->digit == 0 && prefix.size() <= ps->depth()) {
            const auto value = value_of_digits(*ps, prefix);
            return embed(std::move(ps), value);
        }
    }
    return OdometerElement(std::move(ps), std::move(prefix), std::move(tail));
}

const Integer* OdometerElement::embedded_value() const noexcept
{
    if (const auto* e = std::get_if<IntegerEmbed>(&tail_)) {
        return &e->value;
    }
    return nullptr;
}

std::optional<std::size_t> OdometerElement::horizon() const noexcept
{
    if (std::holds_alternative<UnknownTail>(tail_)) {
        return prefix_.size();
    }
    return std::nullopt;
}

std::optional<std::int64_t> OdometerElement::digit(std::size_t j) const
{
    if (const auto* m = embedded_value()) {
        return integer_digit(*ps_, *m, j);
    }
    if (j < prefix_.size()) {
        return prefix_[j];
    }
    if (const auto* c = std::get_if<ConstantDigit>(&tail_)) {
        return c->digit;
    }
    return std::nullopt;
}

std::optional<Integer> OdometerElement::residue(std::size_t level) const
{
    if (const auto* m = embedded_value()) {
        return floor_mod(*m, ps_->p(level));
    }
    Integer value = 0;
    for (std::size_t j = 0; j < level; ++j) {
        const auto d = digit(j);
        if (!d) {
            return std::nullopt;
        }
        value += ps_->p(j) * *d;
    }
    return value;
}

OdometerElement OdometerElement::truncated(std::size_t k) const
{
    if (const auto h = horizon(); h && k > *h) {
        throw DepthExhausted("cannot truncate to " + std::to_string(k) + " digits; only " + std::to_string(*h) +
                             " are known");
    }
    std::vector<std::int64_t> digits;
    digits.reserve(k);
    for (std::size_t j = 0; j < k; ++j) {
        digits.push_back(*digit(j));
    }
    return OdometerElement(ps_, std::move(digits), UnknownTail{});
}

std::size_t OdometerElement::settled_length() const
{
    if (const auto* m = embedded_value()) {
        return integer_length(*ps_, *m);
    }
    return prefix_.size();
}

std::string OdometerElement::describe() const
{
    if (const auto* m = embedded_value()) {
        return "int:" + m->str();
    }
    std::string out = "digits:";
    for (std::size_t j = 0; j < prefix_.size(); ++j) {
        if (j) {
            out += ',';
        }
        out += std::to_string(prefix_[j]);
    }
    if (const auto* c = std::get_if<ConstantDigit>(&tail_)) {
        out += "+const:" + std::to_string(c->digit);
    } else {
        out += "+unknown";
    }
    return out;
}

bool operator==(const OdometerElement& a, const OdometerElement& b)
{
    return (a.ps_ == b.ps_ || *a.ps_ == *b.ps_) && a.prefix_ == b.prefix_ && a.tail_ == b.tail_;
}

OdometerElement add(const OdometerElement& g, const OdometerElement& h)
{
    check_same_structure(g, h);
    const auto& ps = g.structure();
    if (g.is_embedded() && h.is_embedded()) {
        return OdometerElement::embed(ps, *g.embedded_value() + *h.embedded_value());
    }

    std::vector<std::int64_t> digits;
    std::int64_t carry = 0;
    auto push = [&](std::size_t j, std::int64_t a, std::int64_t b) {
        const auto q = ps->q(j + 1);
        const auto s = a + b + carry;
        digits.push_back(s % q);
        carry = s / q;
    };

    const auto hg = g.horizon();
    const auto hh = h.horizon();
    if (hg || hh) {
        const auto known = std::min(hg.value_or(SIZE_MAX), hh.value_or(SIZE_MAX));
        for (std::size_t j = 0; j < known; ++j) {
            push(j, *g.digit(j), *h.digit(j));
        }
        return OdometerElement::from_digits(ps, std::move(digits), UnknownTail{});
    }

    const auto settled = std::max(g.settled_length(), h.settled_length());
    for (std::size_t j = 0; j < settled; ++j) {
        push(j, *g.digit(j), *h.digit(j));
    }

    // Both tails are now fixed patterns and at least one is a constant digit.
    const auto tg = tail_digits(g);
    const auto th = tail_digits(h);
    const bool g_const = tg.kind == TailDigits::Kind::Constant;
    const auto& con = g_const ? tg : th;
    const auto& other = g_const ? th : tg;
    for (std::size_t j = settled;; ++j) {
        const auto q = ps->q(j + 1);
        switch (other.kind) {
        case TailDigits::Kind::Zero:
            if (carry == 0) {
                return normalise(ps, std::move(digits), ConstantDigit{con.constant});
            }
            break;
        case TailDigits::Kind::Max:
            if (carry == 1) {
                return normalise(ps, std::move(digits), ConstantDigit{con.constant});
            }
            if (con.constant == 0) {
                // Every further digit is maximal: the element is an embedded negative integer.
                return OdometerElement::embed(ps, value_of_digits(*ps, digits) - ps->p(j));
            }
            break;
        case TailDigits::Kind::Constant:
            if (carry == 0 && con.constant + other.constant < q) {
                return normalise(ps, std::move(digits), ConstantDigit{con.constant + other.constant});
            }
            break;
        }
        push(j, con.at(q), other.at(q));
    }
}

OdometerElement negate(const OdometerElement& g)
{
    const auto& ps = g.structure();
    if (const auto* m = g.embedded_value()) {
        return OdometerElement::embed(ps, -*m);
    }
    // -g = complement(g) + 1; a constant tail does not stay constant, so the
    // result only knows as many digits as are materialised.
    const auto known = g.horizon().value_or(std::max(g.prefix().size(), ps->depth()));
    std::vector<std::int64_t> digits;
    digits.reserve(known);
    std::int64_t carry = 1;
    for (std::size_t j = 0; j < known; ++j) {
        const auto q = ps->q(j + 1);
        const auto s = (q - 1 - *g.digit(j)) + carry;
        digits.push_back(s % q);
        carry = s / q;
    }
    return OdometerElement::from_digits(ps, std::move(digits), UnknownTail{});
}

OdometerElement scalar_multiple(const Integer& m, const OdometerElement& g)
{
    const auto& ps = g.structure();
    if (const auto* v = g.embedded_value()) {
        return OdometerElement::embed(ps, m * *v);
    }
    if (m == 0) {
        return OdometerElement::embed(ps, 0);
    }
    if (m < 0) {
        return negate(scalar_multiple(-m, g));
    }
    Integer k = m;
    std::optional<OdometerElement> acc;
    OdometerElement base = g;
    while (true) {
        if (bit_test(k, 0)) {
            acc = acc ? add(*acc, base) : base;
        }
        k >>= 1;
        if (k == 0) {
            break;
        }
        base = add(base, base);
    }
    return *acc;
}

} // namespace tzdyn
