#include "betarith/reproduce.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <complex>
#include <sstream>
#include <stdexcept>

namespace betarith {

namespace {

PrintedBound exact_row(long p2, long p1, long p0, int v) { return {{p2, p1, p0}, std::to_string(v), v, v, v}; }
PrintedBound range_row(long p2, long p1, long p0, int hi, int lo = 0) {
    return {{p2, p1, p0}, "<=" + std::to_string(hi), std::nullopt, lo, hi};
}

std::vector<PrintedBound> two_positive_add() {
    return {range_row(-6, 5, -1, 2, 1), exact_row(-7, 6, -1, 1), range_row(-8, 6, -1, 2, 1),
            range_row(-9, 6, -1, 2, 1), exact_row(-8, 7, -1, 1), exact_row(-9, 7, -1, 1),
            exact_row(-9, 8, -1, 1)};
}

std::vector<PrintedBound> two_positive_mul() {
    return {range_row(-6, 5, -1, 3), range_row(-7, 6, -1, 2), range_row(-8, 6, -1, 3), range_row(-9, 6, -1, 3),
            range_row(-8, 7, -1, 2), range_row(-9, 7, -1, 2), range_row(-9, 8, -1, 2)};
}

// Row order: b ascending, then a ascending.
std::vector<PrintedBound> small_positive(bool mul) {
    std::vector<PrintedBound> rows;
    for (long b = 1; b <= 7; ++b) {
        for (long a = std::max(2L, b + 1); a <= 8; ++a) {
            if (a == 2) {
                rows.push_back(mul ? range_row(-2, -1, 1, 5, 3) : range_row(-2, -1, 1, 3, 2));
            } else if (!mul) {
                rows.push_back(exact_row(-a, -b, 1, (b == 1 || (b == 2 && a >= 4)) ? 2 : 1));
            } else if (b == 1) {
                rows.push_back(range_row(-a, -b, 1, 4));
            } else if ((b == 2 && a >= 4) || (b == 3 && a == 8)) {
                rows.push_back(range_row(-a, -b, 1, 3));
            } else {
                rows.push_back(exact_row(-a, -b, 1, 2));
            }
        }
    }
    return rows;
}

std::string fixed(const DyadicInterval& x) { return x.to_string(4); }

std::string show(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }

// |x - printed| <= tol for every point of the enclosure.
bool within(const DyadicInterval& x, double printed, double tol) {
    return x.lower() >= printed - tol && x.upper() <= printed + tol;
}

class Timer {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void push(ReportTable& t, std::vector<std::string> row, bool ok, std::string note = {}) {
    t.rows.push_back(std::move(row));
    t.pass.push_back(ok);
    t.notes.push_back(ok ? std::string() : std::move(note));
}

ReportTable bounds_table(int n, const ReproduceOptions& opts) {
    const Op op = n % 2 == 1 ? Op::Add : Op::Mul;
    ReportTable t;
    t.name = "table" + std::to_string(n);
    t.caption = std::string(op == Op::Add ? "L_add" : "L_mul") +
                (n <= 2 ? " for a <= 9 and two positive conjugates" : " for a <= 8 and small positive conjugate");
    t.columns = {"polynomial", "printed", "lower", "upper", "status", "lower_source", "upper_method"};
    for (const PrintedBound& row : printed_bounds(n)) {
        try {
            const BoundsReport r = compute_bounds(classify_or_throw(row.poly), op, opts.bounds);
            const int up = r.upper.value_or(-1);
            bool ok = r.consistent() && r.upper.has_value();
            if (row.exact) {
                ok = ok && r.lower == *row.exact && up == *row.exact;
            } else {
                ok = ok && r.lower >= row.min_lower && up <= row.max_upper;
            }
            std::string source = r.lower_source;
            if (r.witness && r.lower_source == "witness") source += " " + r.witness->pattern;
            push(t,
                 {row.poly.to_string(), row.printed, std::to_string(r.lower), show(r.upper), to_string(r.status()),
                  source, r.upper_method ? to_string(*r.upper_method) : "-"},
                 ok, "computed " + std::to_string(r.lower) + ".." + show(r.upper));
        } catch (const std::exception& e) {
            push(t, {row.poly.to_string(), row.printed, "-", "-", "-", "-", "-"}, false, e.what());
        }
    }
    return t;
}

ReportTable lower_bound_table() {
    ReportTable t;
    t.name = "table5";
    t.caption = "Lower bounds for z = 2";
    t.columns = {"a", "first_lower", "second_lower", "lower", "printed_first", "printed_second", "printed_lower"};
    for (const PrintedLowerBounds& row : printed_lower_bounds()) {
        const long z = 2;
        const int k1 = sum_witness_k(row.a, z);
        const int k2 = diff_witness_k(row.a, z);
        const int first = 2 * k1 + 1;
        const int second = 2 * k2;
        const int best = two_negative_lower_bound(row.a, z);
        const bool ok = first == row.first && second == row.second && best == row.best;
        push(t,
             {std::to_string(row.a), std::to_string(first), std::to_string(second), std::to_string(best),
              std::to_string(row.first), std::to_string(row.second), std::to_string(row.best)},
             ok, "lower bound mismatch");
    }
    return t;
}

std::string range_text(int lo, int hi) { return lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi); }

ReportTable norm_table(const ReproduceOptions& opts) {
    ReportTable t;
    t.name = "table6";
    t.caption = "Upper bounds for bases with negative conjugates, x as considered minimum";
    t.columns = {"polynomial",     "3H",          "min_norm",      "argmin",        "bound",
                 "printed_3H",     "printed_norm", "printed_argmin", "printed_bound", "3H_ok",
                 "norm_ok",        "argmin_ok",   "bound_ok"};
    for (const PrintedNormRow& row : printed_norm_rows()) {
        const CubicPolynomial poly = family_polynomial(Family::TwoNegative, row.a, row.b);
        try {
            const CubicPisotUnit unit = classify_or_throw(poly);
            const RauzyBound rb = rauzy_upper_add(unit, opts.bounds.l_max, opts.bounds.threads);
            const NormSearchResult& last = rb.levels.back();
            const int lower = two_negative_lower_bound(row.a, *unit.z());
            const std::string argmin = format_compact(last.argmin);
            const bool h_ok = within(rb.three_h, row.three_h, kNormTolerance);
            const bool n_ok = within(last.min_norm, row.norm, kNormTolerance);
            const bool a_ok = argmin == row.argmin;
            const bool b_ok = row.lower <= lower && lower <= rb.upper && rb.upper <= row.upper &&
                              (row.lower != row.upper || lower == rb.upper);
            std::string note;
            if (!h_ok) note += "3H off by more than 1e-3; ";
            if (!n_ok) note += "min norm off by more than 1e-3; ";
            if (!a_ok) note += "argmin differs; ";
            if (!b_ok) note += "bound outside printed range; ";
            auto yes = [](bool b) { return std::string(b ? "yes" : "no"); };
            std::ostringstream h, nrm;
            h << row.three_h;
            nrm << row.norm;
            push(t,
                 {poly.to_string(), fixed(rb.three_h), fixed(last.min_norm), argmin, range_text(lower, rb.upper), h.str(),
                  nrm.str(), row.argmin, range_text(row.lower, row.upper), yes(h_ok), yes(n_ok), yes(a_ok), yes(b_ok)},
                 h_ok && n_ok && a_ok && b_ok, note);
        } catch (const std::exception& e) {
            push(t, {poly.to_string(), "-", "-", "-", "-", "-", "-", row.argmin, "-", "-", "-", "-", "-"}, false,
                 e.what());
        }
    }
    return t;
}

// Root moduli from Durand-Kerner iteration; independent of the coefficient inequality used by classify.
bool numeric_pisot_unit(const CubicPolynomial& p) {
    using C = std::complex<long double>;
    auto f = [&](C x) { return ((x + C(p.p2)) * x + C(p.p1)) * x + C(p.p0); };
    std::array<C, 3> z = {C(0.4L, 0.9L), C(0.4L, 0.9L) * C(0.4L, 0.9L), C(0.4L, 0.9L) * C(0.4L, 0.9L) * C(0.4L, 0.9L)};
    for (int it = 0; it < 2000; ++it) {
        for (int i = 0; i < 3; ++i) {
            C d = 1;
            for (int j = 0; j < 3; ++j) {
                if (j != i) d *= z[i] - z[j];
            }
            z[i] -= f(z[i]) / d;
        }
    }
    std::sort(z.begin(), z.end(), [](C x, C y) { return std::abs(x) > std::abs(y); });
    const long double tol = 1e-9L;
    // A root of modulus one forces a factor over Q, which no cubic Pisot unit has.
    return std::abs(z[0].imag()) < tol && z[0].real() > 1 + tol && std::abs(z[1]) < 1 - tol &&
           std::abs(z[2]) < 1 - tol;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

bool ReportTable::all_pass() const { return failures() == 0; }

std::size_t ReportTable::failures() const {
    return static_cast<std::size_t>(std::count(pass.begin(), pass.end(), false));
}

std::string ReportTable::to_csv() const {
    std::ostringstream os;
    for (const auto& c : columns) os << csv_field(c) << ',';
    os << "check\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (const auto& v : rows[i]) os << csv_field(v) << ',';
        os << (pass[i] ? "PASS" : "FAIL") << '\n';
    }
    return os.str();
}

const std::vector<PrintedBound>& printed_bounds(int table) {
    static const std::vector<PrintedBound> t1 = two_positive_add();
    static const std::vector<PrintedBound> t2 = two_positive_mul();
    static const std::vector<PrintedBound> t3 = small_positive(false);
    static const std::vector<PrintedBound> t4 = small_positive(true);
    switch (table) {
        case 1: return t1;
        case 2: return t2;
        case 3: return t3;
        case 4: return t4;
    }
    throw std::out_of_range("no printed bounds for table " + std::to_string(table));
}

const std::vector<PrintedLowerBounds>& printed_lower_bounds() {
    static const std::vector<PrintedLowerBounds> rows = {
        {3, 3, 2, 3},  {4, 3, 2, 3},  {5, 3, 2, 3},  {6, 3, 4, 4},  {7, 5, 4, 5},
        {8, 5, 4, 5},  {9, 5, 4, 5},  {10, 5, 6, 6}, {11, 7, 6, 7}, {12, 7, 6, 7},
    };
    return rows;
}

const std::vector<PrintedNormRow>& printed_norm_rows() {
    static const std::vector<PrintedNormRow> rows = {
        {5, 5, 28.2984, 32.4341, "0•05352241", 7, 7},
        {6, 6, 38.248, 39.9482, "0•612043251", 8, 8},
        {7, 7, 49.6577, 56.4726, "0•0457244261", 9, 9},
        {7, 6, 37.6329, 53.1601, "0•05273361", 6, 7},
        {8, 7, 46.6466, 55.0153, "0•07573361", 7, 7},
        {9, 8, 56.6167, 64.2425, "0•813064371", 7, 8},
        {8, 6, 39.4296, 49.8007, "0•8160451", 5, 6},
        {9, 7, 47.2792, 75.0428, "0•08292461", 5, 7},
        {10, 8, 55.8281, 76.2425, "0•0(10)593471", 6, 7},
        {11, 9, 65.0857, 77.8837, "0•09794481", 7, 7},
        {10, 7, 49.3429, 77.7175, "0•(10)060561", 5, 6},
        {11, 8, 57.0579, 97.6844, "0•0(10)2(11)2571", 5, 7},
        {12, 9, 65.3281, 108.5816, "0•174(11)3581", 5, 7},
    };
    return rows;
}

ReportTable reproduce_table(int table, const ReproduceOptions& opts) {
    const Timer timer;
    ReportTable t;
    if (table >= 1 && table <= 4) {
        t = bounds_table(table, opts);
    } else if (table == 5) {
        t = lower_bound_table();
    } else if (table == 6) {
        t = norm_table(opts);
    } else {
        throw std::out_of_range("tables are numbered 1 to 6");
    }
    t.seconds = timer.seconds();
    return t;
}

ReportTable reproduce_main_theorem(const ReproduceOptions& opts, long a_max) {
    const Timer timer;
    ReportTable t;
    t.name = "main_theorem";
    t.caption = "1 <= L_add <= 2 and L_mul <= 4 for two-positive and small-positive units, a <= " +
                std::to_string(a_max);
    t.columns = {"polynomial", "family", "add_lower", "add_upper", "mul_lower", "mul_upper", "claim"};
    const CubicPolynomial exceptional{-2, -1, 1};
    for (Family f : {Family::TwoPositive, Family::SmallPositive}) {
        for (long a = 2; a <= a_max; ++a) {
            for (long b = f == Family::TwoPositive ? 2 : 1; b < a; ++b) {
                const auto v = classify(family_polynomial(f, a, b));
                if (!std::holds_alternative<CubicPisotUnit>(v)) continue;
                const CubicPisotUnit& unit = std::get<CubicPisotUnit>(v);
                const bool exc = unit.poly() == exceptional;
                try {
                    const BoundsReport add = compute_bounds(unit, Op::Add, opts.bounds);
                    const BoundsReport mul = compute_bounds(unit, Op::Mul, opts.bounds);
                    const int au = add.upper.value_or(1 << 20);
                    const int mu = mul.upper.value_or(1 << 20);
                    bool ok = add.consistent() && mul.consistent();
                    if (exc) {
                        ok = ok && add.lower >= 2 && au <= 3 && mul.lower >= 3 && mu <= 5;
                    } else {
                        ok = ok && add.lower >= 1 && au <= 2 && mu <= 4;
                    }
                    push(t,
                         {unit.poly().to_string(), to_string(f), std::to_string(add.lower), show(add.upper),
                          std::to_string(mul.lower), show(mul.upper),
                          exc ? "2<=L_add<=3, 3<=L_mul<=5" : "1<=L_add<=2, L_mul<=4"},
                         ok, "claim violated");
                } catch (const std::exception& e) {
                    push(t, {unit.poly().to_string(), to_string(f), "-", "-", "-", "-", "-"}, false, e.what());
                }
            }
        }
    }
    t.seconds = timer.seconds();
    return t;
}

ReportTable reproduce_corollary(const ReproduceOptions& opts) {
    const Timer timer;
    ReportTable t;
    t.name = "corollary";
    t.caption = "X^3-aX^2-(a-1)X+1: L_add = 1 (3 <= a <= 35), L_mul = 2 (3 <= a <= " +
                std::to_string(opts.slow ? 108 : 20) + ")";
    t.columns = {"polynomial", "op", "lower", "upper", "claim"};
    auto row = [&](long a, Op op, int want) {
        const CubicPolynomial poly = family_polynomial(Family::SmallPositive, a, a - 1);
        try {
            const BoundsReport r = compute_bounds(classify_or_throw(poly), op, opts.bounds);
            const bool ok = r.consistent() && r.lower == want && r.upper == want;
            push(t, {poly.to_string(), to_string(op), std::to_string(r.lower), show(r.upper), std::to_string(want)}, ok,
                 "expected exactly " + std::to_string(want));
        } catch (const std::exception& e) {
            push(t, {poly.to_string(), to_string(op), "-", "-", std::to_string(want)}, false, e.what());
        }
    };
    for (long a = 3; a <= 35; ++a) row(a, Op::Add, 1);
    for (long a = 3; a <= (opts.slow ? 108 : 20); ++a) row(a, Op::Mul, 2);
    t.seconds = timer.seconds();
    return t;
}

ReportTable classification_grid(long range) {
    const Timer timer;
    ReportTable t;
    t.name = "grid";
    t.caption = "Cubic units X^3-aX^2+bX+c by discriminant sign, family and closure property";
    t.columns = {"c", "a", "b", "polynomial", "pisot_unit", "disc_sign", "classification", "property"};
    for (long c : {-1L, 1L}) {
        for (long a = -range; a <= range; ++a) {
            for (long b = -range; b <= range; ++b) {
                const CubicPolynomial poly{-a, b, c};
                const auto v = classify(poly);
                const int ds = sgn(discriminant(poly));
                std::string cls;
                bool unit = true;
                if (const auto* u = std::get_if<CubicPisotUnit>(&v)) {
                    cls = to_string(u->family());
                } else {
                    const Rejection& r = std::get<Rejection>(v);
                    cls = to_string(r.reason);
                    unit = r.reason == RejectReason::ComplexConjugates;
                }
                const bool expected = numeric_pisot_unit(poly);
                std::string property = "none";
                if (unit) {
                    if (c == -1 && b <= 1) property = "(F)";
                    if (c == 1 && b >= 0) property = "(PF)";
                } else {
                    property = "-";
                }
                push(t,
                     {std::to_string(c), std::to_string(a), std::to_string(b), poly.to_string(), unit ? "yes" : "no",
                      ds > 0 ? "+" : (ds < 0 ? "-" : "0"), cls, property},
                     unit == expected, "unit test disagrees with the coefficient characterisation");
            }
        }
    }
    t.seconds = timer.seconds();
    return t;
}

}  // namespace betarith
