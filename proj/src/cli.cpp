#include "tzdyn/cli.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tzdyn/config.hpp"
#include "tzdyn/ndfinite.hpp"
#include "tzdyn/orbit.hpp"
#include "tzdyn/report.hpp"
#include "tzdyn/saturation.hpp"
#include "tzdyn/toeplitz.hpp"

namespace tzdyn::cli {

namespace {

using report::Json;

Integer parse_integer(const std::string& text, const std::string& what)
{
    try {
        if (text.empty()) {
            throw std::runtime_error("empty");
        }
        return Integer(text);
    } catch (const std::exception&) {
        throw InvalidArgument("--" + what + " expects an integer, got '" + text + "'");
    }
}

Symbol parse_symbol(const std::string& text)
{
    const auto values = parse_int_list(text);
    if (values.size() != 1) {
        throw InvalidArgument("expected a single symbol, got '" + text + "'");
    }
    return Symbol::of(static_cast<int>(values.front()));
}

std::vector<OffsetCase> parse_cases(const std::string& text)
{
    std::vector<OffsetCase> cases;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item == "plain") {
            cases.push_back(OffsetCase::Plain);
        } else if (item == "shifted") {
            cases.push_back(OffsetCase::Shifted);
        } else {
            throw InvalidArgument("unknown offset case '" + item + "' (expected plain or shifted)");
        }
    }
    if (cases.empty()) {
        throw InvalidArgument("--cases needs at least one of plain, shifted");
    }
    return cases;
}

std::string join_symbols(const std::vector<Symbol>& w)
{
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) {
            out += ' ';
        }
        out += std::to_string(w[i].value());
    }
    return out;
}

std::string rational_text(const Rational& r)
{
    return numerator(r).str() + "/" + denominator(r).str();
}

template <class Set>
std::string set_text(const Set& s)
{
    std::string out = "{";
    bool first = true;
    for (const auto& v : s) {
        if (!first) {
            out += ',';
        }
        first = false;
        out += std::to_string(v);
    }
    return out + "}";
}

std::string pairs_text(const std::set<std::pair<int, int>>& s)
{
    std::string out;
    for (const auto& [x, y] : s) {
        out += " (" + std::to_string(x) + "," + std::to_string(y) + ")";
    }
    return out.empty() ? " none" : out;
}

struct Options {
    RunConfig run;
    std::string q_list;
    std::string format = "text";

    // toeplitz
    std::string from = "0";
    std::string to = "0";
    std::size_t level = 1;

    // orbit
    std::string g = "int:0";
    std::string fill = "0";
    std::string fills = "0,1";
    std::string radius = "0";
    std::string bound = "0";
    std::optional<std::size_t> max_level;

    // saturation
    std::size_t claim_depth = 2;
    std::string cases = "plain,shifted";
    std::string start_levels = "0";
    std::string a = "digits:0+const:3";
    std::optional<std::string> window;
    std::string levels = "3..5";

    // ndfinite
    std::int64_t nmax = 12;
    std::size_t dmax = 3;
    bool json_flag = false;
    std::int64_t modulus = 6;
    std::int64_t step = 1;
    std::size_t d = 2;
    std::int64_t power = 1;
    bool tuples = false;
};

class Runner {
public:
    Runner(Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

    bool json() const { return opt_.run.format == OutputFormat::Json; }

    StructurePtr structure()
    {
        if (!ps_) {
            ps_ = share(resolve_structure(opt_.run.structure));
        }
        return ps_;
    }

    void emit(Json body, double elapsed_ms)
    {
        if (opt_.run.timing) {
            body["timing"] = Json{{"elapsed_ms", elapsed_ms}};
        }
        out_ << body.dump(2) << '\n';
    }

    int toeplitz_window()
    {
        const auto ps = structure();
        const auto a = parse_integer(opt_.from, "from");
        const auto b = parse_integer(opt_.to, "to");
        const auto w = window(*ps, a, b);
        if (json()) {
            emit(Json{{"structure", report::structure(*ps)},
                      {"from", report::integer(a)},
                      {"to", report::integer(b)},
                      {"symbols", report::symbols(w)}},
                 0);
        } else {
            out_ << join_symbols(w) << '\n';
        }
        return kOk;
    }

    int toeplitz_skeleton()
    {
        const auto ps = structure();
        const auto table = skeleton(*ps, opt_.level);
        if (json()) {
            auto body = report::skeleton(table, ps->p(opt_.level));
            body["essential"] = is_essential_period(table);
            emit(std::move(body), 0);
            return kOk;
        }
        out_ << "level " << table.level << " p_i=" << ps->p(opt_.level) << " defined=" << table.defined_count
             << " essential=" << (is_essential_period(table) ? "yes" : "no") << '\n';
        for (std::size_t r = 0; r < table.cells.size(); ++r) {
            out_ << (r ? " " : "") << (table.cells[r] ? std::to_string(table.cells[r]->value()) : ".");
        }
        out_ << '\n';
        return kOk;
    }

    int toeplitz_density()
    {
        const auto ps = structure();
        const auto d = density(*ps, opt_.level);
        if (json()) {
            emit(report::density(d), 0);
            return kOk;
        }
        out_ << "level " << d.level << ": defined " << d.defined_count << " of p_i=" << d.period
             << ", d_i=" << rational_text(d.density) << " (" << (d.enumerated ? "enumeration" : "digit-product")
             << ")\n";
        if (d.recursion_value) {
            out_ << "recursion with c=5: " << rational_text(*d.recursion_value)
                 << (*d.recursion_value == d.density ? " (matches)" : " (MISMATCH)") << '\n';
            out_ << "recursion with c=4, d_1=4/p_1: " << rational_text(d.constant_four_value)
                 << (d.constant_four_value == d.density ? "" : " (differs from enumeration)") << '\n';
        }
        out_ << "classification: " << to_string(d.classification) << '\n';
        return kOk;
    }

    OrbitPoint point(const std::string& fill)
    {
        return OrbitPoint{parse_element_spec(structure(), opt_.g), parse_symbol(fill)};
    }

    std::size_t max_level() { return opt_.max_level.value_or(structure()->depth()); }

    int orbit_eval()
    {
        const auto p = point(opt_.fill);
        const auto a = parse_integer(opt_.from, "from");
        const auto b = parse_integer(opt_.to, "to");
        if (a > b) {
            throw InvalidArgument("--from must not exceed --to");
        }
        const auto depth = max_level();
        Json positions = Json::array();
        for (Integer n = a; n <= b; ++n) {
            const auto r = point_eval(p, n, depth);
            if (json()) {
                positions.push_back(report::eval_result(n, r));
            } else {
                out_ << n << ' ' << report::eval_text(r) << '\n';
            }
        }
        if (json()) {
            emit(Json{{"g", p.g.describe()},
                      {"fill", p.fill.value()},
                      {"max_level", depth},
                      {"positions", std::move(positions)}},
                 0);
        }
        return kOk;
    }

    int orbit_fiber()
    {
        const auto g = parse_element_spec(structure(), opt_.g);
        const auto cert = fiber_certificate(g, max_level());
        if (json()) {
            auto body = report::fiber(cert);
            body["g"] = g.describe();
            emit(std::move(body), 0);
        } else {
            out_ << g.describe() << ": " << report::fiber_text(cert) << '\n';
        }
        return kOk;
    }

    int orbit_proximal()
    {
        const auto fills = parse_int_list(opt_.fills);
        if (fills.size() != 2) {
            throw InvalidArgument("--fills expects two symbols, e.g. 0,3");
        }
        const auto p1 = point(std::to_string(fills[0]));
        const auto p2 = point(std::to_string(fills[1]));
        const auto radius = parse_integer(opt_.radius, "radius");
        const auto bound = parse_integer(opt_.bound, "bound");
        const auto w = proximal_witness(p1, p2, radius, bound, max_level());
        if (json()) {
            emit(Json{{"g", p1.g.describe()},
                      {"fills", fills},
                      {"radius", report::integer(radius)},
                      {"bound", report::integer(bound)},
                      {"found", w.shift.has_value()},
                      {"shift", w.shift ? report::integer(*w.shift) : Json(nullptr)}},
                 0);
        } else if (w.shift) {
            out_ << "shift " << *w.shift << '\n';
        } else {
            out_ << "not found within " << bound << '\n';
        }
        return kOk;
    }

    void require_saturation_depth(const PeriodStructure& ps)
    {
        if (ps.depth() < 4) {
            throw ConfigError("saturation subcommands need a period structure of depth >= 4");
        }
    }

    int saturation_claim()
    {
        const auto ps = structure();
        require_saturation_depth(*ps);
        const auto cases = parse_cases(opt_.cases);
        const auto starts = parse_level_range(opt_.start_levels);
        const auto t0 = std::chrono::steady_clock::now();
        const auto r = claim_check_exhaustive(*ps, opt_.claim_depth, cases, starts);
        const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - t0;
        if (json()) {
            emit(report::claim(r), elapsed.count());
        } else {
            out_ << "depth " << r.depth << ", start levels " << set_text(r.start_levels) << '\n';
            out_ << "enumerated: " << r.enumerated << '\n';
            out_ << "scanned: " << r.scanned << '\n';
            out_ << "variants: " << r.variants << '\n';
            out_ << "violations: " << r.violation_count << '\n';
            if (opt_.run.timing) {
                out_ << "elapsed_ms: " << elapsed.count() << '\n';
            }
        }
        return r.violation_count == 0 ? kOk : kVerificationFailed;
    }

    int saturation_demo()
    {
        const auto ps = structure();
        require_saturation_depth(*ps);
        const auto a = parse_element_spec(ps, opt_.a);
        const Integer w = opt_.window ? parse_integer(*opt_.window, "window") : ps->p(2);
        const auto levels = parse_level_range(opt_.levels);
        const auto t0 = std::chrono::steady_clock::now();
        const auto r = nonsat_demo(a, w, levels);
        const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - t0;
        if (json()) {
            emit(report::demo(r), elapsed.count());
        } else {
            out_ << "a = " << r.a << ", b = 2a = " << r.b << ", window [-" << r.window << ", " << r.window
                 << "]\n";
            for (const auto& row : r.levels) {
                out_ << "m=" << row.level << " k=" << row.shift << ": a-side forced " << row.a_forced_checked
                     << " (mismatches " << row.a_forced_mismatches << "), a-aperiodic " << row.a_aperiodic_positions
                     << " read " << set_text(row.a_aperiodic_symbols) << ", b-aperiodic "
                     << row.b_aperiodic_positions << " read " << set_text(row.b_aperiodic_symbols)
                     << ", fill pairs" << pairs_text(row.realized_fill_pairs) << '\n';
            }
            out_ << "realized fill pairs:" << pairs_text(r.realized_fill_pairs) << '\n';
            out_ << "violations: " << r.violations.size() << '\n';
            for (const auto& v : r.violations) {
                out_ << "  " << v << '\n';
            }
            out_ << (r.passed() ? "PASS" : "FAIL") << '\n';
        }
        return r.passed() ? kOk : kVerificationFailed;
    }

    int ndfinite_scan()
    {
        const auto t0 = std::chrono::steady_clock::now();
        const auto scan = theorem_a_check(opt_.nmax, opt_.dmax);
        std::size_t decomposition_failures = 0;
        std::size_t condition_mismatches = 0;
        for (const auto& row : scan.rows) {
            if (!decomposition_check(row.modulus, row.step, row.n, row.d).ok()) {
                ++decomposition_failures;
            }
            if (row.d + 1 <= opt_.dmax) {
                const auto next = nd_power(FiniteRotation(row.modulus, row.step), row.n, row.d + 1) ==
                                  nd_set(FiniteRotation(row.modulus, row.step), row.d + 1);
                if (condition_three_check(row.modulus, row.step, row.n, row.d) != next) {
                    ++condition_mismatches;
                }
            }
        }
        const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - t0;
        const bool ok = scan.counterexamples.empty() && decomposition_failures == 0 && condition_mismatches == 0;
        if (json() || opt_.json_flag) {
            Json rows = Json::array();
            for (const auto& row : scan.rows) {
                rows.push_back(report::theorem_a_row(row));
            }
            Json counter = Json::array();
            for (const auto& row : scan.counterexamples) {
                counter.push_back(report::theorem_a_row(row));
            }
            emit(Json{{"nmax", opt_.nmax},
                      {"dmax", opt_.dmax},
                      {"rows", std::move(rows)},
                      {"counterexamples", std::move(counter)},
                      {"decomposition_failures", decomposition_failures},
                      {"condition_three_mismatches", condition_mismatches},
                      {"passed", ok}},
                 elapsed.count());
        } else {
            out_ << "N r n d |N_d(T)| |N_d(T^n)| equal gcd\n";
            for (const auto& row : scan.rows) {
                out_ << row.modulus << ' ' << row.step << ' ' << row.n << ' ' << row.d << ' ' << row.size_t_set
                     << ' ' << row.size_tn_set << ' ' << (row.equal ? "yes" : "no") << ' ' << row.gcd << '\n';
            }
            out_ << "rows: " << scan.rows.size() << ", counterexamples: " << scan.counterexamples.size()
                 << ", decomposition failures: " << decomposition_failures
                 << ", condition-three mismatches: " << condition_mismatches << '\n';
        }
        return ok ? kOk : kVerificationFailed;
    }

    int ndfinite_show()
    {
        const FiniteRotation sys(opt_.modulus, opt_.step);
        const auto whole = nd_set(sys, opt_.d);
        const auto power = nd_power(sys, opt_.power, opt_.d);
        const auto decomposition = decomposition_check(opt_.modulus, opt_.step, opt_.power, opt_.d);
        const auto gcd = std::gcd(opt_.power, opt_.modulus);
        auto tuples_json = [](const TupleSet& s) {
            Json out = Json::array();
            for (const auto& t : s.tuples) {
                out.push_back(t);
            }
            return out;
        };
        if (json() || opt_.json_flag) {
            Json body{{"N", opt_.modulus},
                      {"r", sys.step},
                      {"n", opt_.power},
                      {"d", opt_.d},
                      {"size_T", whole.size()},
                      {"size_Tn", power.size()},
                      {"equal", whole == power},
                      {"gcd", gcd},
                      {"decomposition", report::decomposition(decomposition)}};
            if (opt_.d >= 2) {
                body["condition_three_d_minus_1"] = condition_three_check(opt_.modulus, opt_.step, opt_.power, opt_.d - 1);
            }
            if (opt_.tuples) {
                body["N_d_T"] = tuples_json(whole);
                body["N_d_Tn"] = tuples_json(power);
            }
            emit(std::move(body), 0);
        } else {
            out_ << "N=" << opt_.modulus << " r=" << sys.step << " d=" << opt_.d << " n=" << opt_.power << '\n';
            out_ << "|N_d(T)| = " << whole.size() << ", |N_d(T^n)| = " << power.size()
                 << (whole == power ? " (equal)" : " (different)") << ", gcd(n,N) = " << gcd << '\n';
            out_ << "decomposition: " << opt_.power * opt_.power << " cells, " << decomposition.distinct_cells
                 << " distinct, covers=" << (decomposition.covers ? "yes" : "no")
                 << ", identical-or-disjoint=" << (decomposition.identical_or_disjoint ? "yes" : "no") << '\n';
            if (opt_.tuples) {
                for (const auto& t : power.tuples) {
                    out_ << '(';
                    for (std::size_t i = 0; i < t.size(); ++i) {
                        out_ << (i ? "," : "") << t[i];
                    }
                    out_ << ")\n";
                }
            }
        }
        return kOk;
    }

private:
    Options& opt_;
    std::ostream& out_;
    StructurePtr ps_;
};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options opt;
    CLI::App app{"Toeplitz subshift, odometer and N_d verification toolkit", "tzdyn"};
    app.require_subcommand(1);
    app.fallthrough();

    std::optional<std::string> q_rule;
    std::optional<std::size_t> depth;
    std::optional<std::string> config;
    std::optional<std::string> q_list;
    app.add_option("--q", q_list, "explicit level moduli, e.g. 6,12,24");
    app.add_option("--q-rule", q_rule, "generator rule, e.g. \"geometric base=6 ratio=2\"");
    app.add_option("--depth", depth, "number of levels K");
    app.add_option("--config", config, "JSON period-structure file");
    app.add_option("--format", opt.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("-v,--verbose", opt.run.verbosity, "more output");
    app.add_flag("--timing", opt.run.timing, "append elapsed time to reports");

    std::function<int(Runner&)> action;
    auto bind = [&action](CLI::App* sub, int (Runner::*fn)()) {
        sub->callback([&action, fn] { action = [fn](Runner& r) { return (r.*fn)(); }; });
    };

    auto* toeplitz = app.add_subcommand("toeplitz", "the Toeplitz sequence, skeletons and densities");
    toeplitz->require_subcommand(1);
    auto* tw = toeplitz->add_subcommand("window", "symbols on [from, to]");
    tw->add_option("--from", opt.from)->required();
    tw->add_option("--to", opt.to)->required();
    bind(tw, &Runner::toeplitz_window);
    auto* ts = toeplitz->add_subcommand("skeleton", "p_i-skeleton table");
    ts->add_option("--level", opt.level)->required();
    bind(ts, &Runner::toeplitz_skeleton);
    auto* td = toeplitz->add_subcommand("density", "density of the p_i-skeleton");
    td->add_option("--level", opt.level)->required();
    bind(td, &Runner::toeplitz_density);

    auto* orbit = app.add_subcommand("orbit", "points of the orbit closure");
    orbit->require_subcommand(1);
    auto* oe = orbit->add_subcommand("eval", "evaluate (g, fill) on [from, to]");
    oe->add_option("--g", opt.g)->required();
    oe->add_option("--fill", opt.fill);
    oe->add_option("--from", opt.from)->required();
    oe->add_option("--to", opt.to)->required();
    oe->add_option("--max-level", opt.max_level);
    bind(oe, &Runner::orbit_eval);
    auto* of = orbit->add_subcommand("fiber", "fiber-size certificate for g");
    of->add_option("--g", opt.g)->required();
    of->add_option("--max-level", opt.max_level);
    bind(of, &Runner::orbit_fiber);
    auto* op = orbit->add_subcommand("proximal", "shift where two fiber-mates coincide on a window");
    op->add_option("--g", opt.g)->required();
    op->add_option("--fills", opt.fills)->required();
    op->add_option("--radius", opt.radius)->required();
    op->add_option("--bound", opt.bound)->required();
    op->add_option("--max-level", opt.max_level);
    bind(op, &Runner::orbit_proximal);

    auto* saturation = app.add_subcommand("saturation", "digit-doubling claim and non-saturation demo");
    saturation->require_subcommand(1);
    auto* sc = saturation->add_subcommand("claim", "exhaustive digit-doubling check");
    sc->add_option("--depth", opt.claim_depth, "m: sequences have m + 1 digits");
    sc->add_option("--cases", opt.cases, "plain,shifted");
    sc->add_option("--start", opt.start_levels, "start levels r, e.g. 0 or 0..2");
    bind(sc, &Runner::saturation_claim);
    auto* sd = saturation->add_subcommand("demo", "finite-scale non-saturation demo");
    sd->add_option("--a", opt.a);
    sd->add_option("--window", opt.window, "half-width W (default p_2)");
    sd->add_option("--levels", opt.levels, "levels m, e.g. 3..5");
    bind(sd, &Runner::saturation_demo);

    auto* nd = app.add_subcommand("ndfinite", "N_d on finite rotations");
    nd->require_subcommand(1);
    auto* ns = nd->add_subcommand("scan", "N_d(T) vs N_d(T^n) scan over N, r, n, d");
    ns->add_option("--nmax", opt.nmax);
    ns->add_option("--dmax", opt.dmax);
    ns->add_flag("--json", opt.json_flag);
    bind(ns, &Runner::ndfinite_scan);
    auto* nw = nd->add_subcommand("show", "one rotation in detail");
    nw->add_option("--N", opt.modulus)->required();
    nw->add_option("--r", opt.step);
    nw->add_option("--d", opt.d);
    nw->add_option("--power", opt.power);
    nw->add_flag("--tuples", opt.tuples);
    nw->add_flag("--json", opt.json_flag);
    bind(nw, &Runner::ndfinite_show);

    std::vector<std::string> argv_storage{"tzdyn"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_storage) {
        argv.push_back(s.data());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsageError;
    }

    opt.run.format = opt.format == "json" ? OutputFormat::Json : OutputFormat::Text;
    if (q_list) {
        try {
            opt.run.structure.q_list = parse_int_list(*q_list);
        } catch (const Error& e) {
            err << "error: " << e.what() << '\n';
            return kUsageError;
        }
    }
    opt.run.structure.rule = q_rule;
    opt.run.structure.depth = depth;
    opt.run.structure.config_file = config;

    Runner runner(opt, out);
    try {
        // Validate the structure before any computation, even for subcommands that ignore it.
        runner.structure();
        return action ? action(runner) : kUsageError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
}

} // namespace tzdyn::cli
