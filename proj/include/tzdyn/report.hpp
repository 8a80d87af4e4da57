#pragma once

#include <json.hpp>

#include "tzdyn/ndfinite.hpp"
#include "tzdyn/orbit.hpp"
#include "tzdyn/saturation.hpp"
#include "tzdyn/toeplitz.hpp"

// JSON renderings of every report the CLI emits. Field order is fixed so the
// same inputs always serialise to the same bytes.
namespace tzdyn::report {

using Json = nlohmann::ordered_json;

// Integers that fit in int64 become JSON numbers, larger ones strings.
Json integer(const Integer& n);

Json structure(const PeriodStructure& ps);
Json symbols(const std::vector<Symbol>& w);
Json skeleton(const SkeletonTable& table, const Integer& period);
Json density(const DensityReport& d);
Json eval_result(const Integer& n, const EvalResult& r);
Json fiber(const FiberCertificate& cert);
Json claim(const ClaimReport& r);
Json demo(const DemoReport& r);
Json theorem_a_row(const TheoremARow& row);
Json decomposition(const DecompositionReport& r);

std::string eval_text(const EvalResult& r);
std::string fiber_text(const FiberCertificate& cert);

} // namespace tzdyn::report
