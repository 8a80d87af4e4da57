#include "tzdyn/report.hpp"

#include <limits>

namespace tzdyn::report {

namespace {

template <class T>
Json pairs(const std::set<std::pair<T, T>>& s)
{
    Json out = Json::array();
    for (const auto& [x, y] : s) {
        out.push_back(Json::array({x, y}));
    }
    return out;
}

Json rational(const Rational& r)
{
    return Json{{"num", integer(numerator(r))}, {"den", integer(denominator(r))}};
}

} // namespace

Json integer(const Integer& n)
{
    if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(n);
    }
    return n.str();
}

Json structure(const PeriodStructure& ps)
{
    Json out;
    out["q"] = ps.moduli();
    out["depth"] = ps.depth();
    out["rule"] = ps.rule() ? Json(ps.rule()->describe()) : Json(nullptr);
    out["reciprocal_sum"] = std::string(to_string(ps.reciprocal_sum()));
    return out;
}

Json symbols(const std::vector<Symbol>& w)
{
    Json out = Json::array();
    for (auto s : w) {
        out.push_back(s.value());
    }
    return out;
}

Json skeleton(const SkeletonTable& table, const Integer& period)
{
    Json out;
    out["level"] = table.level;
    out["p_i"] = integer(period);
    out["defined_count"] = table.defined_count;
    Json cells = Json::array();
    for (const auto& c : table.cells) {
        cells.push_back(c ? Json(c->value()) : Json(nullptr));
    }
    out["cells"] = std::move(cells);
    return out;
}

Json density(const DensityReport& d)
{
    Json out;
    out["level"] = d.level;
    out["defined_count"] = integer(d.defined_count);
    out["p_i"] = integer(d.period);
    out["d_i_num"] = integer(numerator(d.density));
    out["d_i_den"] = integer(denominator(d.density));
    out["classification"] = std::string(to_string(d.classification));
    out["method"] = d.enumerated ? "enumeration" : "digit-product";
    out["recursion_c5"] = d.recursion_value ? rational(*d.recursion_value) : Json(nullptr);
    out["recursion_matches"] = d.recursion_value ? Json(*d.recursion_value == d.density) : Json(nullptr);
    out["constant_four"] = rational(d.constant_four_value);
    out["constant_four_discrepancy"] = d.level >= 1 && d.constant_four_value != d.density;
    return out;
}

Json eval_result(const Integer& n, const EvalResult& r)
{
    Json out;
    out["n"] = integer(n);
    if (const auto* f = std::get_if<Forced>(&r)) {
        out["kind"] = "forced";
        out["symbol"] = f->symbol.value();
        out["level"] = f->level;
    } else if (const auto* a = std::get_if<AperiodicCertified>(&r)) {
        out["kind"] = "aperiodic";
        out["symbol"] = a->fill.value();
    } else {
        out["kind"] = "undetermined";
        out["horizon"] = std::get<Undetermined>(r).horizon;
    }
    return out;
}

Json fiber(const FiberCertificate& cert)
{
    Json out;
    if (const auto* s = std::get_if<SingletonCertified>(&cert)) {
        out["certificate"] = "singleton";
        out["fiber_size"] = 1;
        out["witness_levels"] = s->witness_levels;
    } else if (const auto* f = std::get_if<FiveCertified>(&cert)) {
        out["certificate"] = "five";
        out["fiber_size"] = 5;
        out["from_level"] = f->from_level;
    } else {
        const auto& u = std::get<UnknownAt>(cert);
        out["certificate"] = "unknown";
        out["fiber_size"] = nullptr;
        out["level"] = u.level;
        out["defined_seen"] = u.defined_seen;
    }
    return out;
}

Json claim(const ClaimReport& r)
{
    Json out;
    out["depth"] = r.depth;
    out["start_levels"] = r.start_levels;
    Json cases = Json::array();
    for (auto c : r.cases) {
        cases.push_back(std::string(to_string(c)));
    }
    out["cases"] = std::move(cases);
    out["enumerated"] = r.enumerated;
    out["scanned"] = r.scanned;
    out["variants"] = r.variants;
    out["plain_t_prime_exceeds_t"] = r.plain_t_prime_exceeds_t;
    out["exact_not_in_relaxation"] = r.exact_not_in_relaxation;
    out["violation_count"] = r.violation_count;
    Json violations = Json::array();
    for (const auto& v : r.violations) {
        violations.push_back(Json{{"start_level", v.start_level},
                                  {"digits", v.digits},
                                  {"case", std::string(to_string(v.offset))},
                                  {"carries", v.carries},
                                  {"doubled", v.doubled}});
    }
    out["violations"] = std::move(violations);
    return out;
}

Json demo(const DemoReport& r)
{
    Json out;
    out["a"] = r.a;
    out["b"] = r.b;
    out["window"] = integer(r.window);
    Json levels = Json::array();
    for (const auto& row : r.levels) {
        Json l;
        l["m"] = row.level;
        l["k"] = integer(row.shift);
        l["a_forced_checked"] = row.a_forced_checked;
        l["a_forced_mismatches"] = row.a_forced_mismatches;
        l["a_deeper_skipped"] = row.a_deeper_skipped;
        l["a_aperiodic_positions"] = row.a_aperiodic_positions;
        l["a_aperiodic_symbols"] = row.a_aperiodic_symbols;
        l["b_aperiodic_positions"] = row.b_aperiodic_positions;
        l["b_aperiodic_symbols"] = row.b_aperiodic_symbols;
        l["b_reads_two"] = row.b_reads_two;
        l["variants"] = row.variants;
        l["realized_fill_pairs"] = pairs(row.realized_fill_pairs);
        l["forbidden_pair_hits"] = row.forbidden_pair_hits;
        levels.push_back(std::move(l));
    }
    out["levels"] = std::move(levels);
    out["realized_fill_pairs"] = pairs(r.realized_fill_pairs);
    out["violations"] = r.violations;
    out["passed"] = r.passed();
    return out;
}

Json theorem_a_row(const TheoremARow& row)
{
    return Json{{"N", row.modulus}, {"r", row.step},           {"n", row.n},
                {"d", row.d},       {"size_T", row.size_t_set}, {"size_Tn", row.size_tn_set},
                {"equal", row.equal}, {"gcd", row.gcd}};
}

Json decomposition(const DecompositionReport& r)
{
    Json out;
    out["n"] = r.n;
    out["cells"] = r.n * r.n;
    out["cell_size"] = r.cells.empty() || r.cells.front().empty() ? 0 : r.cells.front().front().size();
    out["distinct_cells"] = r.distinct_cells;
    out["covers"] = r.covers;
    out["identical_or_disjoint"] = r.identical_or_disjoint;
    return out;
}

std::string eval_text(const EvalResult& r)
{
    if (const auto* f = std::get_if<Forced>(&r)) {
        return std::to_string(f->symbol.value()) + " forced@" + std::to_string(f->level);
    }
    if (const auto* a = std::get_if<AperiodicCertified>(&r)) {
        return std::to_string(a->fill.value()) + " aperiodic";
    }
    return "? undetermined@" + std::to_string(std::get<Undetermined>(r).horizon);
}

std::string fiber_text(const FiberCertificate& cert)
{
    if (const auto* s = std::get_if<SingletonCertified>(&cert)) {
        std::string out = "singleton (defined digits at levels";
        for (auto l : s->witness_levels) {
            out += ' ' + std::to_string(l);
        }
        return out + ")";
    }
    if (const auto* f = std::get_if<FiveCertified>(&cert)) {
        return "five (no defined digit from level " + std::to_string(f->from_level) + " on)";
    }
    const auto& u = std::get<UnknownAt>(cert);
    return "unknown at level " + std::to_string(u.level) + " (" + std::to_string(u.defined_seen) +
           " defined digits seen)";
}

} // namespace tzdyn::report
