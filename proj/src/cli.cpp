#include "metallic/cli.hpp"

#include "metallic/error.hpp"
#include "metallic/expansions.hpp"
#include "metallic/numerics.hpp"
#include "metallic/recurrence.hpp"
#include "metallic/roots.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <array>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace metallic::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kFormatVersion = 1;

constexpr int kExitOk = 0;
constexpr int kExitIdentityFails = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitConvergence = 4;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Rational parse_rational(const std::string& flag, const std::string& text) {
    try {
        return Rational::from_string(text);
    } catch (const PreconditionError&) {
        throw UsageError("invalid rational for " + flag + ": '" + text +
                         "' (expected p or p/q)");
    }
}

std::vector<Rational> parse_rational_list(const std::string& flag, const std::string& text) {
    std::vector<Rational> values;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string part = text.substr(start, comma == std::string::npos
                                                  ? std::string::npos
                                                  : comma - start);
        values.push_back(parse_rational(flag, part));
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return values;
}

Json rational_list_json(const std::vector<Rational>& values) {
    Json list = Json::array();
    for (const Rational& v : values) {
        list.push_back(v.to_string());
    }
    return list;
}

// One envelope per invocation; identical inputs yield identical bytes.
struct Output {
    std::string format = "text";
    std::string command;
    Json params = Json::object();

    bool json() const { return format == "json"; }
    bool csv() const { return format == "csv"; }

    void emit_result(std::ostream& out, const std::string& text, const Json& result) const {
        if (json()) {
            Json envelope;
            envelope["format_version"] = kFormatVersion;
            envelope["command"] = command;
            envelope["params"] = params;
            envelope["result"] = result;
            out << envelope.dump(2) << "\n";
        } else {
            out << text;
        }
    }

    int emit_error(std::ostream& err, int code, const std::string& kind,
                   const std::string& message) const {
        if (json()) {
            Json envelope;
            envelope["format_version"] = kFormatVersion;
            envelope["command"] = command;
            envelope["params"] = params;
            envelope["error"] = Json{{"exit", code}, {"kind", kind}, {"message", message}};
            err << envelope.dump(2) << "\n";
        } else {
            err << "error: " << message << "\n";
        }
        return code;
    }
};

std::string yes_no(bool value) {
    return value ? "yes" : "no";
}

// ---------------------------------------------------------------------------
// Table rendering

struct TableStrings {
    std::vector<std::array<std::string, 4>> rows;
};

TableStrings table_strings(const ConvergenceReport& report, const std::string& indexName) {
    TableStrings t;
    t.rows.push_back({indexName, "exact", "decimal", "abs_error"});
    for (const ConvergenceRow& row : report.rows) {
        if (row.defined) {
            t.rows.push_back({std::to_string(row.index), row.value.to_string(),
                              row.decimal, row.error.to_string()});
        } else {
            t.rows.push_back({std::to_string(row.index), "-", "-", "-"});
        }
    }
    return t;
}

std::string render_table_text(const ConvergenceReport& report, const std::string& title,
                              const std::string& indexName) {
    TableStrings t = table_strings(report, indexName);
    std::array<std::size_t, 4> width{0, 0, 0, 0};
    for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < 4; ++c) {
            width[c] = std::max(width[c], row[c].size());
        }
    }
    std::string out = "# " + title + "\n";
    for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < 4; ++c) {
            out += row[c];
            if (c + 1 < 4) {
                out.append(width[c] - row[c].size() + 2, ' ');
            }
        }
        out += "\n";
    }
    out += "# target: " + report.target.to_string() + "\n";
    out += "# convergence guaranteed: " + yes_no(report.dominance_guaranteed) + "\n";
    out += "# error eventually non-increasing: " +
           yes_no(report.error_eventually_decreasing) + "\n";
    return out;
}

std::string render_table_csv(const ConvergenceReport& report) {
    std::string out = "index,value_exact,value_decimal,abs_error\n";
    for (const ConvergenceRow& row : report.rows) {
        out += std::to_string(row.index);
        if (row.defined) {
            out += "," + row.value.to_string() + "," + row.decimal + "," +
                   row.error.to_string();
        } else {
            out += ",,,";
        }
        out += "\n";
    }
    return out;
}

Json table_json(const ConvergenceReport& report) {
    Json result;
    result["target"] = report.target.to_string();
    result["digits"] = report.digits;
    result["convergence_guaranteed"] = report.dominance_guaranteed;
    result["error_eventually_decreasing"] = report.error_eventually_decreasing;
    Json rows = Json::array();
    for (const ConvergenceRow& row : report.rows) {
        Json r;
        r["index"] = row.index;
        r["defined"] = row.defined;
        if (row.defined) {
            r["value_exact"] = row.value.to_string();
            r["value_decimal"] = row.decimal;
            r["abs_error"] = row.error.to_string();
        }
        rows.push_back(std::move(r));
    }
    result["rows"] = std::move(rows);
    return result;
}

// ---------------------------------------------------------------------------
// Command options

struct SeqOptions {
    std::string a;
    std::string b;
    std::string coeffs;
    std::string seeds;
    std::size_t n = 0;
    bool fast = false;
    bool upto = false;
};

struct PhiOptions {
    std::string a;
    std::string b;
    std::string coeffs;
    std::size_t digits = 10;
    bool minus = false;
};

struct CfOptions {
    std::string a;
    std::string b;
    std::size_t depth = 0;
    bool table = false;
    std::size_t digits = 10;
};

struct RadicalOptions {
    std::string a;
    std::string b;
    std::size_t steps = 0;
    bool hasSteps = false;
    std::size_t digits = 10;
};

struct VerifyOptions {
    std::string identity;
    std::size_t N = 0;
    bool hasN = false;
    std::string a = "1";
    std::string b = "1";
    std::size_t depth = 0;
    std::size_t digits = 30;
};

struct TableOptions {
    std::string kind;
    std::string a = "1";
    std::string b = "1";
    std::string seeds;
    std::size_t n_max = 0;
    bool hasNMax = false;
    std::size_t max_depth = 0;
    bool hasMaxDepth = false;
    std::size_t digits = 10;
};

RecurrenceSpec build_spec(const std::string& aText, const std::string& bText,
                          const std::string& coeffsText, const std::string& seedsText) {
    const bool pairGiven = !aText.empty() || !bText.empty();
    if (pairGiven && !coeffsText.empty()) {
        throw UsageError("give either --a/--b or --coeffs, not both");
    }
    std::vector<Rational> coefficients;
    if (!coeffsText.empty()) {
        coefficients = parse_rational_list("--coeffs", coeffsText);
    } else if (pairGiven) {
        if (aText.empty() || bText.empty()) {
            throw UsageError("--a and --b must be given together");
        }
        coefficients = {parse_rational("--a", aText), parse_rational("--b", bText)};
    } else {
        coefficients = {Rational(1), Rational(1)};
    }

    std::vector<Rational> seeds;
    if (!seedsText.empty()) {
        seeds = parse_rational_list("--seeds", seedsText);
    } else if (coefficients.size() == 2) {
        seeds = {Rational(1), coefficients[0]};
    } else {
        throw UsageError("--seeds is required when --coeffs has k != 2 entries");
    }
    if (seeds.size() != coefficients.size()) {
        throw UsageError("--seeds must have exactly one entry per coefficient");
    }
    return RecurrenceSpec(std::move(coefficients), std::move(seeds));
}

// ---------------------------------------------------------------------------
// Command handlers

int run_seq(const SeqOptions& opt, Output& output, std::ostream& out) {
    RecurrenceSpec spec = build_spec(opt.a, opt.b, opt.coeffs, opt.seeds);
    output.params["coeffs"] = rational_list_json(spec.coefficients());
    output.params["seeds"] = rational_list_json(spec.seeds());
    output.params["n"] = opt.n;
    output.params["fast"] = opt.fast;
    output.params["upto"] = opt.upto;

    if (opt.upto) {
        std::vector<Rational> values = terms(spec, opt.n);
        if (opt.fast) {
            for (std::size_t i = 0; i <= opt.n; ++i) {
                values[i] = term_fast(spec, i);
            }
        }
        std::string text;
        Json list = Json::array();
        for (const Rational& v : values) {
            text += v.to_string() + "\n";
            list.push_back(v.to_string());
        }
        output.emit_result(out, text, Json{{"terms", std::move(list)}});
        return kExitOk;
    }

    Rational value = opt.fast ? term_fast(spec, opt.n) : term(spec, opt.n);
    output.emit_result(out, value.to_string() + "\n", Json{{"term", value.to_string()}});
    return kExitOk;
}

int run_phi(const PhiOptions& opt, Output& output, std::ostream& out) {
    if (!opt.coeffs.empty()) {
        if (!opt.a.empty() || !opt.b.empty()) {
            throw UsageError("give either --a/--b or --coeffs, not both");
        }
        if (opt.minus) {
            throw UsageError("--minus applies only to the quadratic --a/--b form");
        }
        std::vector<Rational> coefficients = parse_rational_list("--coeffs", opt.coeffs);
        output.params["coeffs"] = rational_list_json(coefficients);
        output.params["digits"] = opt.digits;
        FixedReal value = dominant_root_k(coefficients, opt.digits);
        output.emit_result(out, value.to_string() + "\n",
                           Json{{"value", value.to_string()}});
        return kExitOk;
    }
    if (opt.a.empty() || opt.b.empty()) {
        throw UsageError("phi needs --a and --b (or --coeffs)");
    }
    Rational a = parse_rational("--a", opt.a);
    Rational b = parse_rational("--b", opt.b);
    output.params["a"] = a.to_string();
    output.params["b"] = b.to_string();
    output.params["digits"] = opt.digits;
    output.params["minus"] = opt.minus;
    QuadraticRoots roots(a, b, opt.digits);
    const FixedReal& value = opt.minus ? roots.minus_root() : roots.plus_root();
    output.emit_result(out, value.to_string() + "\n", Json{{"value", value.to_string()}});
    return kExitOk;
}

int run_cf(const CfOptions& opt, Output& output, std::ostream& out) {
    Rational a = parse_rational("--a", opt.a);
    Rational b = parse_rational("--b", opt.b);
    output.params["a"] = a.to_string();
    output.params["b"] = b.to_string();
    output.params["depth"] = opt.depth;
    output.params["table"] = opt.table;
    if (opt.table) {
        output.params["digits"] = opt.digits;
        ConvergenceReport report = cf_convergence_table(a, b, opt.depth, opt.digits);
        std::string title = "cf table: a=" + a.to_string() + " b=" + b.to_string() +
                            " digits=" + std::to_string(opt.digits);
        if (output.csv()) {
            out << render_table_csv(report);
            return kExitOk;
        }
        output.emit_result(out, render_table_text(report, title, "depth"),
                           table_json(report));
        return kExitOk;
    }
    Rational value = cf_convergent({a, b, opt.depth});
    output.emit_result(out, value.to_string() + "\n", Json{{"value", value.to_string()}});
    return kExitOk;
}

int run_radical(const RadicalOptions& opt, Output& output, std::ostream& out) {
    Rational a = parse_rational("--a", opt.a);
    Rational b = parse_rational("--b", opt.b);
    output.params["a"] = a.to_string();
    output.params["b"] = b.to_string();
    output.params["digits"] = opt.digits;

    if (opt.hasSteps) {
        output.params["steps"] = opt.steps;
        FixedReal value = radical_iterate(a, b, opt.steps, opt.digits);
        output.emit_result(out, value.to_string() + "\n",
                           Json{{"value", value.to_string()}});
        return kExitOk;
    }

    // Converged mode: five guard digits absorb the flooring stall of the
    // truncated iteration, then round to nearest at the requested precision.
    RadicalConvergence fine = radical_converged(a, b, opt.digits + 5);
    Integer scale = Integer::pow10(5);
    Integer half(50000);
    Integer mantissa = (fine.value.mantissa() + (fine.value.is_negative() ? -half : half)) / scale;
    FixedReal value(std::move(mantissa), opt.digits);
    output.emit_result(out, value.to_string() + "\n",
                       Json{{"value", value.to_string()}, {"steps", fine.steps}});
    return kExitOk;
}

int run_verify(const VerifyOptions& opt, Output& output, std::ostream& out) {
    output.params["identity"] = opt.identity;

    bool holds = false;
    std::string text;
    Json result;

    if (opt.identity == "odd-sum" || opt.identity == "even-sum") {
        if (!opt.hasN) {
            throw UsageError("verify " + opt.identity + " needs --N");
        }
        output.params["N"] = opt.N;
        SumIdentityResult check = opt.identity == "odd-sum"
                                      ? check_odd_sum_identity(opt.N)
                                      : check_even_sum_identity(opt.N);
        holds = check.holds;
        std::string sum;
        Json addends = Json::array();
        for (std::size_t i = 0; i < check.addends.size(); ++i) {
            if (i > 0) {
                sum += "+";
            }
            sum += check.addends[i].to_string();
            addends.push_back(check.addends[i].to_string());
        }
        text = std::string(holds ? "holds" : "fails") + ": " + check.lhs.to_string() +
               (holds ? " = " : " != ") + sum + "\n";
        result = Json{{"holds", holds},
                      {"lhs", check.lhs.to_string()},
                      {"rhs", check.rhs.to_string()},
                      {"addends", std::move(addends)}};
    } else if (opt.identity == "reciprocal" || opt.identity == "sqrt") {
        Rational a = parse_rational("--a", opt.a);
        Rational b = parse_rational("--b", opt.b);
        output.params["a"] = a.to_string();
        output.params["b"] = b.to_string();
        output.params["digits"] = opt.digits;
        RootIdentityResult check = opt.identity == "reciprocal"
                                       ? check_reciprocal_identity(a, b, opt.digits)
                                       : check_sqrt_identity(a, b, opt.digits);
        holds = check.holds;
        std::string rhsName = opt.identity == "reciprocal" ? "a + b/phi" : "sqrt(b + a*phi)";
        text = std::string(holds ? "holds" : "fails") + ": phi = " +
               check.lhs.to_string() + ", " + rhsName + " = " + check.rhs.to_string() +
               ", error " + check.error.mantissa().to_string() + " ulp (tolerance " +
               std::to_string(check.tolerance_ulps) + " ulp)\n";
        result = Json{{"holds", holds},
                      {"lhs", check.lhs.to_string()},
                      {"rhs", check.rhs.to_string()},
                      {"error_ulps", check.error.mantissa().to_string()},
                      {"tolerance_ulps", check.tolerance_ulps}};
    } else if (opt.identity == "cf-ratio") {
        Rational a = parse_rational("--a", opt.a);
        Rational b = parse_rational("--b", opt.b);
        output.params["a"] = a.to_string();
        output.params["b"] = b.to_string();
        output.params["depth"] = opt.depth;
        CfRatioCheckResult check = cf_equals_ratio({a, b, opt.depth});
        holds = check.holds;
        text = std::string(holds ? "holds" : "fails") + ": convergent " +
               check.convergent.to_string() + (holds ? " = " : " != ") + "ratio " +
               check.ratio.to_string() + "\n";
        result = Json{{"holds", holds},
                      {"convergent", check.convergent.to_string()},
                      {"ratio", check.ratio.to_string()}};
    } else {
        throw UsageError("unknown identity '" + opt.identity +
                         "' (expected odd-sum, even-sum, reciprocal, sqrt, cf-ratio)");
    }

    output.emit_result(out, text, result);
    return holds ? kExitOk : kExitIdentityFails;
}

int run_table(const TableOptions& opt, Output& output, std::ostream& out) {
    Rational a = parse_rational("--a", opt.a);
    Rational b = parse_rational("--b", opt.b);
    output.params["kind"] = opt.kind;
    output.params["a"] = a.to_string();
    output.params["b"] = b.to_string();

    ConvergenceReport report;
    std::string title;
    std::string indexName;
    if (opt.kind == "ratio") {
        if (!opt.hasNMax) {
            throw UsageError("table ratio needs --n-max");
        }
        RecurrenceSpec spec = opt.seeds.empty()
                                  ? RecurrenceSpec::metallic(a, b)
                                  : RecurrenceSpec({a, b}, parse_rational_list("--seeds",
                                                                               opt.seeds));
        output.params["seeds"] = rational_list_json(spec.seeds());
        output.params["n_max"] = opt.n_max;
        output.params["digits"] = opt.digits;
        report = ratio_convergence_table(spec, opt.n_max, opt.digits);
        title = "ratio table: a=" + a.to_string() + " b=" + b.to_string() +
                " digits=" + std::to_string(opt.digits);
        indexName = "n";
    } else if (opt.kind == "cf") {
        if (!opt.hasMaxDepth) {
            throw UsageError("table cf needs --max-depth");
        }
        if (!opt.seeds.empty()) {
            throw UsageError("--seeds applies only to table ratio");
        }
        output.params["max_depth"] = opt.max_depth;
        output.params["digits"] = opt.digits;
        report = cf_convergence_table(a, b, opt.max_depth, opt.digits);
        title = "cf table: a=" + a.to_string() + " b=" + b.to_string() +
                " digits=" + std::to_string(opt.digits);
        indexName = "depth";
    } else {
        throw UsageError("unknown table kind '" + opt.kind + "' (expected ratio or cf)");
    }

    if (output.csv()) {
        out << render_table_csv(report);
        return kExitOk;
    }
    output.emit_result(out, render_table_text(report, title, indexName),
                       table_json(report));
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact arithmetic for generalized Fibonacci sequences, metallic "
                 "ratios, continued fractions, and nested radicals"};
    app.name("metallic");
    app.require_subcommand(1);

    SeqOptions seqOpt;
    CLI::App* seqCmd = app.add_subcommand("seq", "Evaluate recurrence terms exactly");
    seqCmd->add_option("--a", seqOpt.a, "Coefficient a (rational p or p/q)");
    seqCmd->add_option("--b", seqOpt.b, "Coefficient b");
    seqCmd->add_option("--coeffs", seqOpt.coeffs, "Comma-separated coefficients a1,...,ak");
    seqCmd->add_option("--seeds", seqOpt.seeds, "Comma-separated seeds F_0,...,F_{k-1}");
    seqCmd->add_option("--n", seqOpt.n, "Term index")->required();
    seqCmd->add_flag("--fast", seqOpt.fast, "Companion-matrix fast path");
    seqCmd->add_flag("--upto", seqOpt.upto, "Print all terms F_0..F_n");

    PhiOptions phiOpt;
    CLI::App* phiCmd = app.add_subcommand("phi", "Metallic ratio / dominant root");
    phiCmd->add_option("--a", phiOpt.a, "Coefficient a");
    phiCmd->add_option("--b", phiOpt.b, "Coefficient b");
    phiCmd->add_option("--coeffs", phiOpt.coeffs,
                       "k-term coefficients (positive); uses bisection");
    phiCmd->add_option("--digits", phiOpt.digits, "Decimal places (default 10)");
    phiCmd->add_flag("--minus", phiOpt.minus, "Print the minus root instead");

    CfOptions cfOpt;
    CLI::App* cfCmd = app.add_subcommand("cf", "Finite continued fraction");
    cfCmd->add_option("--a", cfOpt.a, "Coefficient a")->required();
    cfCmd->add_option("--b", cfOpt.b, "Coefficient b")->required();
    cfCmd->add_option("--depth", cfOpt.depth, "Truncation depth (0 = bare a)")->required();
    cfCmd->add_flag("--table", cfOpt.table, "Print convergents 0..depth as a table");
    cfCmd->add_option("--digits", cfOpt.digits, "Decimal places for table mode");

    RadicalOptions radicalOpt;
    CLI::App* radicalCmd = app.add_subcommand("radical", "Nested radical value");
    radicalCmd->add_option("--a", radicalOpt.a, "Coefficient a")->required();
    radicalCmd->add_option("--b", radicalOpt.b, "Coefficient b")->required();
    CLI::Option* stepsOption =
        radicalCmd->add_option("--steps", radicalOpt.steps,
                               "Exact truncated iterate x_steps instead of the "
                               "converged value");
    radicalCmd->add_option("--digits", radicalOpt.digits, "Decimal places (default 10)");

    VerifyOptions verifyOpt;
    CLI::App* verifyCmd = app.add_subcommand("verify", "Check a named identity");
    verifyCmd->add_option("identity", verifyOpt.identity,
                          "odd-sum | even-sum | reciprocal | sqrt | cf-ratio")
        ->required();
    CLI::Option* nOption = verifyCmd->add_option("--N", verifyOpt.N, "Sum identity index");
    verifyCmd->add_option("--a", verifyOpt.a, "Coefficient a (default 1)");
    verifyCmd->add_option("--b", verifyOpt.b, "Coefficient b (default 1)");
    verifyCmd->add_option("--depth", verifyOpt.depth, "cf-ratio depth");
    verifyCmd->add_option("--digits", verifyOpt.digits,
                          "Decimal places for root identities (default 30)");

    TableOptions tableOpt;
    CLI::App* tableCmd = app.add_subcommand("table", "Convergence table");
    tableCmd->add_option("kind", tableOpt.kind, "ratio | cf")->required();
    tableCmd->add_option("--a", tableOpt.a, "Coefficient a (default 1)");
    tableCmd->add_option("--b", tableOpt.b, "Coefficient b (default 1)");
    tableCmd->add_option("--seeds", tableOpt.seeds, "Seeds for table ratio");
    CLI::Option* nMaxOption = tableCmd->add_option("--n-max", tableOpt.n_max, "Last ratio index");
    CLI::Option* maxDepthOption =
        tableCmd->add_option("--max-depth", tableOpt.max_depth, "Last convergent depth");
    tableCmd->add_option("--digits", tableOpt.digits, "Decimal places (default 10)");

    std::string format = "text";
    for (CLI::App* cmd : {seqCmd, phiCmd, cfCmd, radicalCmd, verifyCmd}) {
        cmd->add_option("--format", format, "text | json")
            ->check(CLI::IsMember({"text", "json"}));
    }
    tableCmd->add_option("--format", format, "text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        std::vector<CLI::App*> seen = app.get_subcommands();
        out << (seen.empty() ? app.help() : seen.front()->help());
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    Output output;
    output.format = format;

    try {
        if (app.got_subcommand(seqCmd)) {
            output.command = "seq";
            return run_seq(seqOpt, output, out);
        }
        if (app.got_subcommand(phiCmd)) {
            output.command = "phi";
            return run_phi(phiOpt, output, out);
        }
        if (app.got_subcommand(cfCmd)) {
            output.command = "cf";
            return run_cf(cfOpt, output, out);
        }
        if (app.got_subcommand(radicalCmd)) {
            output.command = "radical";
            radicalOpt.hasSteps = stepsOption->count() > 0;
            return run_radical(radicalOpt, output, out);
        }
        if (app.got_subcommand(verifyCmd)) {
            output.command = "verify";
            verifyOpt.hasN = nOption->count() > 0;
            return run_verify(verifyOpt, output, out);
        }
        output.command = "table";
        tableOpt.hasNMax = nMaxOption->count() > 0;
        tableOpt.hasMaxDepth = maxDepthOption->count() > 0;
        return run_table(tableOpt, output, out);
    } catch (const UsageError& e) {
        return output.emit_error(err, kExitUsage, "usage", e.what());
    } catch (const ConvergenceError& e) {
        return output.emit_error(err, kExitConvergence, "convergence",
                                 std::string(e.what()) + " (last iterates " +
                                     e.previous().to_string() + ", " +
                                     e.last().to_string() + ")");
    } catch (const PreconditionError& e) {
        return output.emit_error(err, kExitDomain, "domain", e.what());
    } catch (const DomainError& e) {
        return output.emit_error(err, kExitDomain, "domain", e.what());
    }
}

} // namespace metallic::cli
