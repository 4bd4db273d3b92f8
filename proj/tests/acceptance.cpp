// Acceptance runner: `betarith_acceptance --criterion N` checks one criterion, no argument checks all.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "betarith/reproduce.hpp"

using namespace betarith;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

double elapsed(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void table_outcome(const ReportTable& t, Outcome& out) {
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        if (!t.pass[i]) out.fail(t.name + " row " + t.rows[i][0] + ": " + t.notes[i]);
    }
    if (t.failures() > 1) out.detail += " (" + std::to_string(t.failures()) + " rows fail)";
}

void require_rows(const ReportTable& t, std::size_t n, Outcome& out) {
    if (t.rows.size() != n) out.fail(t.name + " has " + std::to_string(t.rows.size()) + " rows");
}

void time_limit(double seconds, double limit, Outcome& out) {
    if (seconds >= limit) out.fail("took " + std::to_string(seconds) + " s, limit " + std::to_string(limit) + " s");
}

std::vector<CubicPisotUnit> family_units(Family f, long a_max, long a_min = 1) {
    std::vector<CubicPisotUnit> out;
    for (long a = a_min; a <= a_max; ++a) {
        for (long b = 0; b <= a + 1; ++b) {
            const auto v = classify(family_polynomial(f, a, b));
            if (const auto* u = std::get_if<CubicPisotUnit>(&v); u && u->family() == f) out.push_back(*u);
        }
    }
    return out;
}

constexpr Family kFamilies[] = {Family::TwoPositive, Family::SmallPositive, Family::LargePositive, Family::TwoNegative};

Outcome criterion_table(int n, std::size_t rows, double limit) {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    const ReportTable t = reproduce_table(n);
    require_rows(t, rows, out);
    table_outcome(t, out);
    time_limit(elapsed(t0), limit, out);
    return out;
}

Outcome criterion3() {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    for (int n : {3, 4}) {
        const ReportTable t = reproduce_table(n);
        require_rows(t, 28, out);
        table_outcome(t, out);
    }
    const CubicPisotUnit u = classify_or_throw({-2, -1, 1});
    const BoundsReport add = compute_bounds(u, Op::Add);
    const BoundsReport mul = compute_bounds(u, Op::Mul);
    if (!(add.lower >= 2 && add.upper && *add.upper <= 3)) out.fail("X^3-2X^2-X+1 sum bounds out of [2, 3]");
    if (!(mul.lower >= 3 && mul.upper && *mul.upper <= 5)) out.fail("X^3-2X^2-X+1 product bounds out of [3, 5]");
    time_limit(elapsed(t0), 60, out);
    return out;
}

Outcome criterion4() {
    Outcome out;
    const ReportTable t = reproduce_corollary();
    table_outcome(t, out);
    time_limit(t.seconds, 300, out);
    return out;
}

Outcome criterion7() {
    Outcome out;
    std::size_t checked = 0;
    for (Family f : kFamilies) {
        for (const CubicPisotUnit& u : family_units(f, 20)) {
            for (const Witness& w : all_witnesses(u)) {
                ++checked;
                const WitnessCheck c = verify_witness(w);
                if (!c.pass) out.fail(u.poly().to_string() + " " + w.pattern + ": " + c.detail);
            }
        }
    }
    if (checked == 0) out.fail("no witnesses");
    if (out.pass) out.detail = std::to_string(checked) + " witnesses";
    return out;
}

DigitString random_admissible(const ParryAutomaton& pa, std::mt19937& rng, int int_len, int frac_len) {
    DigitString s;
    int state = 0;
    for (int i = 0; i < int_len + frac_len; ++i) {
        std::uniform_int_distribution<int> d(0, pa.threshold(state));
        const int digit = d(rng);
        (i < int_len ? s.int_digits : s.frac_digits).push_back(digit);
        state = pa.step(state, digit);
    }
    s.canonicalize();
    return s;
}

void round_trips(Outcome& out) {
    std::mt19937 rng(2024);
    for (Family f : kFamilies) {
        const std::vector<CubicPisotUnit> units = family_units(f, 12);
        for (int i = 0; i < 10000; ++i) {
            const CubicPisotUnit& u = units[static_cast<std::size_t>(i) % units.size()];
            const ParryAutomaton pa(dstar(u));
            const DigitString s = random_admissible(pa, rng, 1 + i % 6, i % 9);
            const GreedyOutcome o = greedy_expansion(u, value_of(s, u));
            if (o.status != GreedyStatus::Finite || !(o.digits == s)) {
                out.fail("(i) " + u.poly().to_string() + " " + s.to_string() + " -> " + o.digits.to_string());
            }
        }
    }
}

void greedy_admissible(Outcome& out) {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> d(-60, 60);
    for (Family f : kFamilies) {
        for (const CubicPisotUnit& u : family_units(f, 10)) {
            const DigitString ds = dstar(u);
            for (int i = 0; i < 40; ++i) {
                const GreedyOutcome o = greedy_expansion(u, ZBeta(d(rng), d(rng), d(rng)), 20000);
                if (o.status == GreedyStatus::BudgetExceeded) continue;
                DigitString mag = o.digits;
                mag.negative = false;
                if (!is_admissible(mag, ds)) out.fail("(ii) " + u.poly().to_string() + " " + o.digits.to_string());
            }
        }
    }
}

void renyi_formula(Outcome& out) {
    for (Family f : kFamilies) {
        for (const CubicPisotUnit& u : family_units(f, 30)) {
            if (!(renyi_d1(u) == dbeta_formula(u))) out.fail("(iii) " + u.poly().to_string());
        }
    }
}

void brute_against_certified(Outcome& out) {
    for (int n : {1, 3}) {
        for (const PrintedBound& row : printed_bounds(n)) {
            if (!row.exact) continue;
            const CubicPisotUnit u = classify_or_throw(row.poly);
            const BoundsReport r = compute_bounds(u, Op::Add);
            const BruteForceResult b = brute_force_L(u, Op::Add, 4);
            const int best = static_cast<int>(b.best);
            if (!r.upper || best > *r.upper) out.fail("(iv) " + u.poly().to_string() + " brute exceeds upper");
            if (best < r.lower) out.fail("(iv) " + u.poly().to_string() + " brute misses witness lower bound");
        }
    }
}

void branch_and_bound(Outcome& out) {
    for (long a = 1; a <= 6; ++a) {
        for (long b = 0; b <= a; ++b) {
            const auto v = classify({-a, -b, -1});
            const auto* u = std::get_if<CubicPisotUnit>(&v);
            if (!u || u->family() != Family::TwoNegative) continue;
            for (int l = 1; l <= 5; ++l) {
                const NormSearchResult fast = min_norm_at_level(*u, l);
                const NormSearchResult slow = min_norm_exhaustive(*u, l);
                if (!(fast.argmin == slow.argmin)) out.fail("(v) " + u->poly().to_string() + " l=" + std::to_string(l));
            }
        }
    }
}

Outcome criterion8() {
    Outcome out;
    round_trips(out);
    greedy_admissible(out);
    renyi_formula(out);
    brute_against_certified(out);
    branch_and_bound(out);
    return out;
}

Outcome criterion9() {
    Outcome out;
    const ReportTable t = reproduce_main_theorem();
    table_outcome(t, out);
    time_limit(t.seconds, 300, out);
    if (out.pass) out.detail = std::to_string(t.rows.size()) + " units";
    return out;
}

Outcome run(int n) {
    switch (n) {
        case 1: return criterion_table(1, 7, 10);
        case 2: return criterion_table(2, 7, 10);
        case 3: return criterion3();
        case 4: return criterion4();
        case 5: return criterion_table(5, 10, 1);
        case 6: return criterion_table(6, 13, 1800);
        case 7: return criterion7();
        case 8: return criterion8();
        case 9: return criterion9();
        default: throw std::out_of_range("criterion must be 1..9");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance checks"};
    int criterion = 0;
    app.add_option("--criterion", criterion, "Criterion 1..9; all when omitted")->check(CLI::Range(1, 9));
    CLI11_PARSE(app, argc, argv);

    std::vector<int> which;
    if (criterion) which.push_back(criterion);
    else for (int i = 1; i <= 9; ++i) which.push_back(i);

    bool all = true;
    for (int n : which) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run(n);
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::printf("criterion %d: %s (%.2f s)%s%s\n", n, o.pass ? "PASS" : "FAIL", elapsed(t0),
                    o.detail.empty() ? "" : " ", o.detail.c_str());
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
