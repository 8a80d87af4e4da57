#include "tzdyn/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace tzdyn {

namespace {

std::int64_t parse_int64(std::string_view text)
{
    std::int64_t value = 0;
    const auto* begin = text.data();
    const auto* end = text.data() + text.size();
    if (begin != end && *begin == '+') {
        ++begin;
    }
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (text.empty() || ec != std::errc() || ptr != end) {
        throw InvalidArgument("not an integer: '" + std::string(text) + "'");
    }
    return value;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

} // namespace

std::vector<std::int64_t> parse_int_list(std::string_view text)
{
    std::vector<std::int64_t> out;
    text = trim(text);
    if (text.empty()) {
        return out;
    }
    std::size_t pos = 0;
    while (true) {
        const auto comma = text.find(',', pos);
        out.push_back(parse_int64(trim(text.substr(pos, comma - pos))));
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    return out;
}

PeriodStructure structure_from_json_text(std::string_view text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("period structure config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ConfigError("period structure config must be a JSON object");
    }
    const bool has_q = doc.contains("q");
    const bool has_rule = doc.contains("rule");
    if (has_q == has_rule) {
        throw ConfigError("period structure config needs exactly one of \"q\" or \"rule\"");
    }
    try {
        if (has_q) {
            auto q = doc.at("q").get<std::vector<std::int64_t>>();
            if (doc.contains("depth")) {
                const auto depth = doc.at("depth").get<std::size_t>();
                if (depth != q.size()) {
                    throw ConfigError("\"depth\" disagrees with the length of \"q\"");
                }
            }
            return PeriodStructure::from_list(std::move(q));
        }
        const auto rule = GeneratorRule::parse(doc.at("rule").get<std::string>());
        const auto depth = doc.value("depth", kDefaultDepth);
        return PeriodStructure::from_rule(rule, depth);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("bad period structure config: ") + e.what());
    }
}

PeriodStructure load_structure_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return structure_from_json_text(buffer.str());
}

PeriodStructure resolve_structure(const StructureSpec& spec)
{
    const int sources = int(spec.q_list.has_value()) + int(spec.rule.has_value()) + int(spec.config_file.has_value());
    if (sources > 1) {
        throw ConfigError("--q, --q-rule and --config are mutually exclusive");
    }
    if (spec.q_list) {
        if (spec.depth && *spec.depth != spec.q_list->size()) {
            throw ConfigError("--depth disagrees with the length of --q");
        }
        return PeriodStructure::from_list(*spec.q_list);
    }
    if (spec.config_file) {
        auto ps = load_structure_file(*spec.config_file);
        return spec.depth ? ps.with_depth(*spec.depth) : ps;
    }
    const auto rule = spec.rule ? GeneratorRule::parse(*spec.rule) : GeneratorRule::geometric(6, 2);
    return PeriodStructure::from_rule(rule, spec.depth.value_or(kDefaultDepth));
}

OdometerElement parse_element_spec(const StructurePtr& ps, std::string_view text)
{
    text = trim(text);
    if (text.starts_with("int:")) {
        const auto body = text.substr(4);
        Integer m;
        try {
            if (body.empty()) {
                throw std::runtime_error("empty");
            }
            m = Integer(std::string(body));
        } catch (const std::exception&) {
            throw InvalidArgument("bad integer in element spec '" + std::string(text) + "'");
        }
        return OdometerElement::embed(ps, std::move(m));
    }
    if (text.starts_with("digits:")) {
        auto body = text.substr(7);
        Tail tail = UnknownTail{};
        if (const auto plus = body.find('+'); plus != std::string_view::npos) {
            const auto suffix = body.substr(plus + 1);
            body = body.substr(0, plus);
            if (suffix == "unknown") {
                tail = UnknownTail{};
            } else if (suffix.starts_with("const:")) {
                tail = ConstantDigit{parse_int64(suffix.substr(6))};
            } else {
                throw InvalidArgument("bad tail '" + std::string(suffix) + "' in element spec");
            }
        }
        return OdometerElement::from_digits(ps, parse_int_list(body), std::move(tail));
    }
    throw InvalidArgument("element spec must start with 'int:' or 'digits:', got '" + std::string(text) + "'");
}

std::vector<std::size_t> parse_level_range(std::string_view text)
{
    text = trim(text);
    std::vector<std::size_t> out;
    if (const auto dots = text.find(".."); dots != std::string_view::npos) {
        const auto lo = parse_int64(text.substr(0, dots));
        const auto hi = parse_int64(text.substr(dots + 2));
        if (lo < 0 || hi < lo) {
            throw InvalidArgument("bad level range '" + std::string(text) + "'");
        }
        for (auto m = lo; m <= hi; ++m) {
            out.push_back(static_cast<std::size_t>(m));
        }
        return out;
    }
    for (auto v : parse_int_list(text)) {
        if (v < 0) {
            throw InvalidArgument("levels must be non-negative");
        }
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

} // namespace tzdyn
