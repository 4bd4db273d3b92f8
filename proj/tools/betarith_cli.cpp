#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "betarith/reproduce.hpp"

using namespace betarith;
using json = nlohmann::json;

namespace {

enum Exit { kOk = 0, kFailure = 1, kRejected = 2, kInconclusive = 3, kPrecision = 4 };

struct Globals {
    long precision_bits = DyadicInterval::kDefaultPrecision;
    std::size_t step_budget = kDefaultStepBudget;
    unsigned threads = 1;
    int lmax = 10;
    int depth = 4;
    std::string method;
    std::string h_mode = "refined";
};

class ValidationError : public Error {
public:
    using Error::Error;
};

PrecisionPolicy policy_from(const Globals& g) {
    PrecisionPolicy p;
    if (g.precision_bits < 32 || g.precision_bits > p.cap) {
        throw ValidationError("--precision-bits must lie in [32, " + std::to_string(p.cap) + "]");
    }
    p.start = static_cast<mpfr_prec_t>(g.precision_bits);
    return p;
}

// "1 -5 -5 -1", "1,-5,-5,-1" or four separate tokens.
CubicPolynomial parse_poly(const std::vector<std::string>& tokens) {
    std::vector<long> c;
    for (const std::string& t : tokens) {
        std::string s = t;
        for (char& ch : s) {
            if (ch == ',') ch = ' ';
        }
        std::istringstream is(s);
        std::string w;
        while (is >> w) {
            std::size_t used = 0;
            long v = 0;
            try {
                v = std::stol(w, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != w.size()) throw ValidationError("coefficient is not an integer: " + w);
            c.push_back(v);
        }
    }
    if (c.size() != 4) throw ValidationError("expected 4 coefficients, got " + std::to_string(c.size()));
    if (c[0] != 1) throw ValidationError("polynomial must be monic (leading coefficient 1)");
    return {c[1], c[2], c[3]};
}

json interval_json(const DyadicInterval& x) {
    return {{"lo", x.lower_decimal(4)}, {"hi", x.upper_decimal(4)}, {"rounding", "outward"}};
}

json unit_json(const CubicPisotUnit& u) {
    json j;
    j["polynomial"] = u.poly().to_string();
    j["family"] = to_string(u.family());
    j["a"] = u.a();
    j["b"] = u.b();
    j["z"] = u.z() ? json(*u.z()) : json(nullptr);
    j["discriminant"] = u.disc().get_str();
    j["discriminant_sign"] = sgn(u.disc()) > 0 ? "+" : (sgn(u.disc()) < 0 ? "-" : "0");
    j["property"] = property_status(u.family());
    return j;
}

json outcome_json(const GreedyOutcome& o) {
    json j;
    j["digits"] = o.digits.to_string();
    j["status"] = to_string(o.status);
    j["fractional_length"] = o.fractional_length ? json(*o.fractional_length) : json(nullptr);
    return j;
}

json witness_json(const Witness& w, const std::optional<WitnessCheck>& c) {
    json j;
    j["op"] = to_string(w.op);
    j["x"] = w.x.to_string();
    j["y"] = w.y.to_string();
    j["expected"] = w.expected.to_string();
    j["pattern"] = w.pattern;
    j["validity"] = w.validity;
    j["fractional_length"] = w.claimed_fraction;
    if (c) {
        j["verified"] = c->pass;
        if (!c->detail.empty()) j["detail"] = c->detail;
    }
    return j;
}

json bounds_json(const BoundsReport& r) {
    json j;
    j["op"] = to_string(r.op);
    j["lower"] = r.lower;
    j["lower_source"] = r.lower_source;
    j["upper"] = r.upper ? json(*r.upper) : json(nullptr);
    j["upper_method"] = r.upper_method ? json(to_string(*r.upper_method)) : json(nullptr);
    j["upper_detail"] = r.upper_detail;
    j["status"] = to_string(r.status());
    j["verified"] = r.verified;
    j["consistent"] = r.consistent();
    if (r.witness) j["witness"] = witness_json(*r.witness, r.witness_check);
    if (r.brute) {
        json b;
        b["best"] = r.brute->best;
        b["operands"] = r.brute->operands;
        b["evaluations"] = r.brute->evaluations;
        b["periodic"] = r.brute->periodic;
        b["budget_exceeded"] = r.brute->budget_exceeded;
        if (r.brute->witness) {
            b["x"] = r.brute->witness->x.to_string();
            b["y"] = r.brute->witness->y.to_string();
            b["result"] = r.brute->witness->outcome.digits.to_string();
        }
        j["brute"] = b;
    }
    if (r.hk) {
        json h;
        h["conjugate"] = interval_json(r.hk->inputs.conj_value);
        h["H"] = interval_json(r.hk->inputs.H);
        h["K"] = r.hk->inputs.K;
        h["mode"] = to_string(r.hk->inputs.mode);
        j["hk"] = h;
    }
    if (r.rauzy) {
        json lv = json::array();
        for (const NormSearchResult& n : r.rauzy->levels) {
            lv.push_back({{"l", n.l},
                          {"min_norm", interval_json(n.min_norm)},
                          {"argmin", format_compact(n.argmin)},
                          {"nodes", n.nodes_explored}});
        }
        j["rauzy"] = {{"three_h", interval_json(r.rauzy->three_h)}, {"levels", lv}};
    }
    return j;
}

Op parse_op(const std::string& s) {
    if (s == "add") return Op::Add;
    if (s == "sub") return Op::Sub;
    if (s == "mul") return Op::Mul;
    throw ValidationError("unknown operation: " + s);
}

BoundsOptions bounds_options(const Globals& g) {
    BoundsOptions o;
    if (!g.method.empty()) {
        try {
            o.method = parse_bound_method(g.method);
        } catch (const std::invalid_argument& e) {
            throw ValidationError(e.what());
        }
    }
    if (g.h_mode == "crude") {
        o.h_mode = HMode::Crude;
    } else if (g.h_mode != "refined") {
        throw ValidationError("--h-mode must be crude or refined");
    }
    o.l_max = g.lmax;
    o.depth = g.depth;
    o.step_budget = g.step_budget;
    o.threads = g.threads;
    return o;
}

// Integers are read as values; anything else as a digit string.
ZBeta parse_operand(const std::string& s, const CubicPisotUnit& unit) {
    std::size_t used = 0;
    try {
        const long v = std::stol(s, &used);
        if (used == s.size()) return ZBeta(v);
    } catch (const std::exception&) {
    }
    return value_of(DigitString::parse(s), unit);
}

struct Report {
    json body;
    int exit = kOk;
};

Report cmd_classify(const CubicPolynomial& poly, const Globals& g) {
    Report r;
    const auto v = classify(poly, policy_from(g));
    if (const auto* rej = std::get_if<Rejection>(&v)) {
        r.body["accepted"] = false;
        r.body["polynomial"] = poly.to_string();
        r.body["reason"] = to_string(rej->reason);
        r.body["detail"] = rej->detail;
        r.exit = kRejected;
        return r;
    }
    const CubicPisotUnit& u = std::get<CubicPisotUnit>(v);
    r.body = unit_json(u);
    r.body["accepted"] = true;
    json roots = json::array();
    for (int i = 0; i < 3; ++i) roots.push_back(interval_json(u.root(i, 64)));
    r.body["roots"] = roots;
    r.body["d_beta_1"] = format_sequence(renyi_d1(u, g.step_budget));
    r.body["d_star"] = format_sequence(dstar(u));
    return r;
}

Report cmd_expand(const CubicPisotUnit& u, const std::string& value, const Globals& g) {
    Report r;
    r.body["unit"] = unit_json(u);
    r.body["input"] = value;
    const GreedyOutcome o = greedy_expansion(u, parse_operand(value, u), g.step_budget);
    r.body["result"] = outcome_json(o);
    if (o.status == GreedyStatus::BudgetExceeded) r.exit = kInconclusive;
    return r;
}

Report cmd_arith(const CubicPisotUnit& u, Op op, const std::string& x, const std::string& y, const Globals& g) {
    Report r;
    r.body["unit"] = unit_json(u);
    r.body["op"] = to_string(op);
    const ArithResult a = op_beta(DigitString::parse(x), DigitString::parse(y), op, u, g.step_budget);
    r.body["x"] = a.x.to_string();
    r.body["y"] = a.y.to_string();
    r.body["result"] = outcome_json(a.outcome);
    if (a.outcome.status == GreedyStatus::BudgetExceeded) r.exit = kInconclusive;
    return r;
}

Report cmd_bounds(const CubicPisotUnit& u, Op op, const Globals& g) {
    Report r;
    const BoundsReport b = compute_bounds(u, op, bounds_options(g));
    r.body["unit"] = unit_json(u);
    r.body["bounds"] = bounds_json(b);
    r.exit = b.consistent() ? kOk : kFailure;
    return r;
}

json table_json(const ReportTable& t) {
    json j;
    j["name"] = t.name;
    j["caption"] = t.caption;
    j["rows"] = t.rows.size();
    j["failures"] = t.failures();
    j["pass"] = t.all_pass();
    j["seconds"] = t.seconds;
    json failed = json::array();
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        if (!t.pass[i]) failed.push_back({{"row", t.rows[i].empty() ? "" : t.rows[i][0]}, {"note", t.notes[i]}});
    }
    j["failed_rows"] = failed;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact greedy beta-expansion arithmetic for cubic Pisot units"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--precision-bits", g.precision_bits, "Starting interval precision")->capture_default_str();
    app.add_option("--step-budget", g.step_budget, "Greedy step budget")->capture_default_str();
    app.add_option("--threads", g.threads, "Search threads")->capture_default_str()->check(CLI::PositiveNumber);
    app.add_option("--lmax", g.lmax, "Largest level tried by the norm search")->capture_default_str();
    app.add_option("--depth", g.depth, "Operand digits for brute force")->capture_default_str();
    app.add_option("--method", g.method, "hk, closed, rauzy, witness or brute");
    app.add_option("--h-mode", g.h_mode, "crude or refined")->capture_default_str();

    std::vector<std::string> poly_tokens;
    auto* classify_cmd = app.add_subcommand("classify", "Classify X^3+p2X^2+p1X+p0 given as 1 p2 p1 p0");
    classify_cmd->add_option("coefficients", poly_tokens, "Four integers, leading 1")->required();

    std::string poly_text, value, op_text, x_text, y_text;
    auto* expand_cmd = app.add_subcommand("expand", "Greedy expansion of an integer or digit string");
    expand_cmd->add_option("-p,--poly", poly_text, "Coefficients \"1 p2 p1 p0\"")->required();
    expand_cmd->add_option("value", value)->required();

    auto* arith_cmd = app.add_subcommand("arith", "x op y on beta-integers");
    arith_cmd->add_option("-p,--poly", poly_text, "Coefficients \"1 p2 p1 p0\"")->required();
    arith_cmd->add_option("op", op_text, "add, sub or mul")->required();
    arith_cmd->add_option("x", x_text)->required();
    arith_cmd->add_option("y", y_text)->required();

    std::string bounds_op = "add";
    auto* bounds_cmd = app.add_subcommand("bounds", "Certified bounds on L for sums or products");
    bounds_cmd->add_option("-p,--poly", poly_text, "Coefficients \"1 p2 p1 p0\"")->required();
    bounds_cmd->add_option("--op", bounds_op, "add or mul")->capture_default_str();

    int table = 0;
    bool main_theorem = false, grid = false, corollary = false, slow = false;
    std::string csv_path;
    auto* repro_cmd = app.add_subcommand("reproduce", "Recompute a table and check it against the printed values");
    auto* t_opt = repro_cmd->add_option("--table", table, "1 to 6")->check(CLI::Range(1, 6));
    auto* m_opt = repro_cmd->add_flag("--main-theorem", main_theorem, "Sweep both families up to a = 30");
    auto* g_opt = repro_cmd->add_flag("--grid", grid, "Coefficient grid with unit, discriminant and property tags");
    auto* c_opt = repro_cmd->add_flag("--corollary", corollary, "X^3-aX^2-(a-1)X+1 family");
    t_opt->excludes(m_opt, g_opt, c_opt);
    m_opt->excludes(g_opt, c_opt);
    g_opt->excludes(c_opt);
    repro_cmd->add_flag("--slow", slow, "Full product range for the corollary");
    repro_cmd->add_option("--csv", csv_path, "Write the table as CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kRejected;
    }

    const auto start = std::chrono::steady_clock::now();
    Report rep;
    json command = json::array();
    for (int i = 1; i < argc; ++i) command.push_back(argv[i]);
    try {
        if (*classify_cmd) {
            rep = cmd_classify(parse_poly(poly_tokens), g);
        } else if (*repro_cmd) {
            if (table == 0 && !main_theorem && !grid && !corollary) {
                throw ValidationError("choose one of --table, --main-theorem, --grid, --corollary");
            }
            ReproduceOptions opts;
            opts.bounds = bounds_options(g);
            opts.slow = slow;
            ReportTable t;
            if (table != 0) {
                t = reproduce_table(table, opts);
            } else if (main_theorem) {
                t = reproduce_main_theorem(opts);
            } else if (grid) {
                t = classification_grid();
            } else {
                t = reproduce_corollary(opts);
            }
            if (!csv_path.empty()) {
                std::ofstream out(csv_path);
                if (!out) throw ValidationError("cannot write " + csv_path);
                out << t.to_csv();
                rep.body["csv"] = csv_path;
            }
            rep.body["table"] = table_json(t);
            rep.exit = t.all_pass() ? kOk : kFailure;
        } else {
            const CubicPisotUnit u = classify_or_throw(parse_poly({poly_text}), policy_from(g));
            if (*expand_cmd) {
                rep = cmd_expand(u, value, g);
            } else if (*arith_cmd) {
                rep = cmd_arith(u, parse_op(op_text), x_text, y_text, g);
            } else {
                const Op op = parse_op(bounds_op);
                if (op == Op::Sub) throw ValidationError("--op must be add or mul");
                rep = cmd_bounds(u, op, g);
            }
        }
    } catch (const Rejected& e) {
        rep.body = {{"error", e.what()}, {"reason", to_string(e.rejection().reason)}};
        rep.exit = kRejected;
    } catch (const Inconclusive& e) {
        rep.body = {{"error", e.what()}, {"lmax", e.lmax()}};
        rep.exit = kInconclusive;
    } catch (const PrecisionExhausted& e) {
        rep.body = {{"error", e.what()}};
        rep.exit = kPrecision;
    } catch (const Undetermined& e) {
        rep.body = {{"error", e.what()}};
        rep.exit = kInconclusive;
    } catch (const ParseError& e) {
        rep.body = {{"error", e.what()}, {"position", e.position()}};
        rep.exit = kRejected;
    } catch (const ValidationError& e) {
        rep.body = {{"error", e.what()}};
        rep.exit = kRejected;
    } catch (const AlphabetViolation& e) {
        rep.body = {{"error", e.what()}};
        rep.exit = kRejected;
    } catch (const std::invalid_argument& e) {
        rep.body = {{"error", e.what()}};
        rep.exit = kRejected;
    } catch (const FamilyUnsupported& e) {
        rep.body = {{"error", e.what()}};
        rep.exit = kRejected;
    } catch (const OutOfRange& e) {
        rep.body = {{"error", e.what()}};
        rep.exit = kRejected;
    } catch (const std::exception& e) {
        rep.body = {{"error", e.what()}};
        rep.exit = kFailure;
    }

    json out;
    out["schema"] = 1;
    out["command"] = command;
    out["report"] = rep.body;
    out["exit_code"] = rep.exit;
    out["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << out.dump(2) << '\n';
    return rep.exit;
}
