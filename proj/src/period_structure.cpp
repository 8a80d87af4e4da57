#include "tzdyn/period_structure.hpp"

#include <charconv>
#include <limits>
#include <sstream>

namespace tzdyn {

namespace {

// Moduli are kept well inside int64 so digit sums (2q + 1) never overflow.
constexpr std::int64_t kMaxModulus = std::int64_t{1} << 48;

std::int64_t parse_int(std::string_view text, std::string_view what)
{
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ConfigError("invalid integer for " + std::string(what) + ": '" + std::string(text) + "'");
    }
    return value;
}

void validate_rule(const GeneratorRule& r)
{
    if (r.first < 6 || r.first % 2 != 0) {
        throw ConfigError("generator rule needs an even first modulus >= 6, got " + std::to_string(r.first));
    }
    if (r.kind == GeneratorRule::Kind::Geometric && r.factor < 2) {
        throw ConfigError("geometric rule needs ratio >= 2, got " + std::to_string(r.factor));
    }
    if (r.kind == GeneratorRule::Kind::Arithmetic && (r.factor < 2 || r.factor % 2 != 0)) {
        throw ConfigError("arithmetic rule needs an even step >= 2, got " + std::to_string(r.factor));
    }
}

void validate_moduli(const std::vector<std::int64_t>& q)
{
    for (std::size_t i = 0; i < q.size(); ++i) {
        const auto level = std::to_string(i + 1);
        if (q[i] % 2 != 0) {
            throw ConfigError("q_" + level + " = " + std::to_string(q[i]) + " is not even");
        }
        if (i == 0 && q[i] < 6) {
            throw ConfigError("q_1 = " + std::to_string(q[i]) + " is smaller than 6");
        }
        if (i > 0 && q[i] <= q[i - 1]) {
            throw ConfigError("q_" + level + " = " + std::to_string(q[i]) + " does not exceed q_" +
                              std::to_string(i));
        }
        if (q[i] > kMaxModulus) {
            throw ConfigError("q_" + level + " is too large");
        }
    }
}

} // namespace

GeneratorRule GeneratorRule::geometric(std::int64_t base, std::int64_t ratio)
{
    GeneratorRule r{Kind::Geometric, base, ratio};
    validate_rule(r);
    return r;
}

GeneratorRule GeneratorRule::arithmetic(std::int64_t start, std::int64_t step)
{
    GeneratorRule r{Kind::Arithmetic, start, step};
    validate_rule(r);
    return r;
}

GeneratorRule GeneratorRule::parse(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string name;
    in >> name;
    GeneratorRule rule;
    std::string first_key;
    std::string second_key;
    if (name == "geometric") {
        rule = GeneratorRule{Kind::Geometric, 6, 2};
        first_key = "base";
        second_key = "ratio";
    } else if (name == "arithmetic") {
        rule = GeneratorRule{Kind::Arithmetic, 6, 2};
        first_key = "start";
        second_key = "step";
    } else {
        throw ConfigError("unknown generator rule '" + name + "'");
    }
    std::string token;
    while (in >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("expected key=value in generator rule, got '" + token + "'");
        }
        const auto key = token.substr(0, eq);
        const auto value = parse_int(std::string_view(token).substr(eq + 1), key);
        if (key == first_key) {
            rule.first = value;
        } else if (key == second_key) {
            rule.factor = value;
        } else {
            throw ConfigError("unknown key '" + key + "' for " + name + " rule");
        }
    }
    validate_rule(rule);
    return rule;
}

std::int64_t GeneratorRule::modulus(std::size_t level) const
{
    if (level == 0) {
        throw InvalidArgument("levels are 1-based");
    }
    std::int64_t q = first;
    for (std::size_t i = 1; i < level; ++i) {
        if (kind == Kind::Geometric) {
            if (q > kMaxModulus / factor) {
                throw DepthExhausted("modulus q_" + std::to_string(level) + " overflows");
            }
            q *= factor;
        } else {
            if (q > kMaxModulus - factor) {
                throw DepthExhausted("modulus q_" + std::to_string(level) + " overflows");
            }
            q += factor;
        }
    }
    return q;
}

std::string GeneratorRule::describe() const
{
    if (kind == Kind::Geometric) {
        return "geometric base=" + std::to_string(first) + " ratio=" + std::to_string(factor);
    }
    return "arithmetic start=" + std::to_string(first) + " step=" + std::to_string(factor);
}

std::string_view to_string(ReciprocalSum s) noexcept
{
    switch (s) {
    case ReciprocalSum::Converges:
        return "converges";
    case ReciprocalSum::Diverges:
        return "diverges";
    case ReciprocalSum::Undecidable:
        break;
    }
    return "undecidable-from-prefix";
}

PeriodStructure::PeriodStructure(std::vector<std::int64_t> q, std::optional<GeneratorRule> rule)
    : q_(std::move(q)), rule_(rule)
{
    validate_moduli(q_);
    p_.reserve(q_.size() + 1);
    p_.emplace_back(1);
    for (auto qi : q_) {
        p_.push_back(p_.back() * qi);
    }
    if (p_.back() < (Integer(1) << 62)) {
        std::vector<std::int64_t> small;
        small.reserve(p_.size());
        for (const auto& p : p_) {
            small.push_back(static_cast<std::int64_t>(p));
        }
        small_p_ = std::move(small);
    }
}

PeriodStructure PeriodStructure::from_list(std::vector<std::int64_t> q)
{
    if (q.empty()) {
        throw ConfigError("period structure needs at least one level");
    }
    return PeriodStructure(std::move(q), std::nullopt);
}

PeriodStructure PeriodStructure::from_rule(const GeneratorRule& rule, std::size_t depth)
{
    validate_rule(rule);
    if (depth == 0) {
        throw ConfigError("depth must be at least 1");
    }
    std::vector<std::int64_t> q;
    q.reserve(depth);
    for (std::size_t level = 1; level <= depth; ++level) {
        try {
            q.push_back(rule.modulus(level));
        } catch (const DepthExhausted& e) {
            throw ConfigError(e.what());
        }
    }
    return PeriodStructure(std::move(q), rule);
}

PeriodStructure PeriodStructure::stock_irregular(std::size_t depth)
{
    return from_rule(GeneratorRule::geometric(6, 2), depth);
}

PeriodStructure PeriodStructure::stock_regular(std::size_t depth)
{
    return from_rule(GeneratorRule::arithmetic(6, 2), depth);
}

std::optional<std::int64_t> PeriodStructure::try_q(std::size_t level) const noexcept
{
    if (level >= 1 && level <= q_.size()) {
        return q_[level - 1];
    }
    if (level > q_.size() && rule_) {
        try {
            return rule_->modulus(level);
        } catch (const Error&) {
            return std::nullopt;
        }
    }
    return std::nullopt;
}

std::int64_t PeriodStructure::q(std::size_t level) const
{
    if (level == 0) {
        throw InvalidArgument("levels are 1-based");
    }
    if (auto v = try_q(level)) {
        return *v;
    }
    throw DepthExhausted("level " + std::to_string(level) + " exceeds the available depth " +
                         std::to_string(q_.size()));
}

const Integer& PeriodStructure::p(std::size_t level) const
{
    if (level >= p_.size()) {
        throw DepthExhausted("p_" + std::to_string(level) + " exceeds the available depth " +
                             std::to_string(q_.size()));
    }
    return p_[level];
}

ReciprocalSum PeriodStructure::reciprocal_sum() const noexcept
{
    if (!rule_) {
        return ReciprocalSum::Undecidable;
    }
    return rule_->reciprocal_sum_converges() ? ReciprocalSum::Converges : ReciprocalSum::Diverges;
}

PeriodStructure PeriodStructure::with_depth(std::size_t depth) const
{
    if (rule_) {
        return from_rule(*rule_, depth);
    }
    if (depth > q_.size()) {
        throw DepthExhausted("explicit period structure has only " + std::to_string(q_.size()) + " levels");
    }
    return from_list(std::vector<std::int64_t>(q_.begin(), q_.begin() + static_cast<std::ptrdiff_t>(depth)));
}

std::string PeriodStructure::describe() const
{
    std::string out = "q=(";
    for (std::size_t i = 0; i < q_.size(); ++i) {
        if (i) {
            out += ',';
        }
        out += std::to_string(q_[i]);
    }
    out += ')';
    if (rule_) {
        out += " [" + rule_->describe() + "]";
    }
    return out;
}

std::array<std::int64_t, 5> defined_digits(std::int64_t q) noexcept
{
    return {0, 1, 2, q / 2 + 1, q - 1};
}

std::optional<Symbol> symbol_of_digit(std::int64_t digit, std::int64_t q) noexcept
{
    const auto defined = defined_digits(q);
    for (int k = 0; k < 5; ++k) {
        if (defined[static_cast<std::size_t>(k)] == digit) {
            return Symbol::of(k);
        }
    }
    return std::nullopt;
}

bool is_defined_digit(const PeriodStructure& ps, std::int64_t s, std::size_t level)
{
    const auto q = ps.q(level);
    if (s < 0 || s >= q) {
        throw InvalidArgument("digit " + std::to_string(s) + " out of range [0, " + std::to_string(q) + ")");
    }
    return symbol_of_digit(s, q).has_value();
}

} // namespace tzdyn
