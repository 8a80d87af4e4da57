#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tzdyn/odometer.hpp"
#include "tzdyn/period_structure.hpp"

namespace tzdyn {

inline constexpr std::size_t kDefaultDepth = 8;

// Where the period structure comes from. Exactly one of the three sources may
// be set; none means the stock irregular rule at kDefaultDepth.
struct StructureSpec {
    std::optional<std::vector<std::int64_t>> q_list;
    std::optional<std::string> rule;
    std::optional<std::size_t> depth;
    std::optional<std::string> config_file;
};

enum class OutputFormat { Text, Json };

struct RunConfig {
    StructureSpec structure;
    OutputFormat format = OutputFormat::Text;
    int verbosity = 0;
    bool timing = false;
};

// "6,12,24" -> {6, 12, 24}.
std::vector<std::int64_t> parse_int_list(std::string_view text);

// Loads {"q": [...]} or {"rule": "geometric base=6 ratio=2", "depth": 8}.
PeriodStructure load_structure_file(const std::string& path);
PeriodStructure structure_from_json_text(std::string_view text);

PeriodStructure resolve_structure(const StructureSpec& spec);

// Element grammar: int:<m> | digits:<s0,s1,...>[+const:<c>|+unknown].
// A digits spec without a suffix has an unknown tail.
OdometerElement parse_element_spec(const StructurePtr& ps, std::string_view text);

// "2..5" -> {2,3,4,5}; "3" -> {3}; "3,5" -> {3,5}.
std::vector<std::size_t> parse_level_range(std::string_view text);

} // namespace tzdyn
