#include "betarith/witness_families.hpp"

#include <algorithm>

namespace betarith {

namespace {

DigitString digits(std::vector<long> int_part, std::vector<long> frac_part = {}) {
    DigitString d;
    for (long v : int_part) d.int_digits.push_back(static_cast<int>(v));
    for (long v : frac_part) d.frac_digits.push_back(static_cast<int>(v));
    d.canonicalize();
    return d;
}

Witness make(const CubicPisotUnit& unit, Op op, DigitString x, DigitString y, DigitString expected, std::string pattern,
             std::string validity) {
    Witness w{unit, op, std::move(x), std::move(y), std::move(expected), 0, std::move(pattern), std::move(validity)};
    w.claimed_fraction = w.expected.fractional_length();
    return w;
}

// Refuses a pattern whose digits leave the alphabet or break the Parry condition.
void require_greedy(const Witness& w) {
    auto bad = [&](const std::vector<int>& v) {
        return std::any_of(v.begin(), v.end(), [&](int d) { return d < 0 || d > w.unit.floor_beta(); });
    };
    if (bad(w.expected.int_digits) || bad(w.expected.frac_digits) || !is_admissible(w.expected, dstar(w.unit))) {
        throw OutOfRange("pattern " + w.pattern + " is not a greedy expansion for " + w.unit.poly().to_string());
    }
}

long require_z(const CubicPisotUnit& unit) {
    if (unit.family() != Family::TwoNegative) throw FamilyUnsupported("two-negative family required");
    if (!unit.z()) throw FamilyUnsupported("b = a + 1 is not covered by the alternating constructions");
    return *unit.z();
}

// a0a0...a with k copies of a; `trailing_zero` appends a final 0.
DigitString alternating(long a, int k, bool trailing_zero) {
    std::vector<long> v;
    for (int i = 0; i < k; ++i) {
        if (i) v.push_back(0);
        v.push_back(a);
    }
    if (trailing_zero) v.push_back(0);
    return digits(v);
}

}  // namespace

int sum_witness_k(long a, long z) { return static_cast<int>((a + 1) / (z + 2)); }
int diff_witness_k(long a, long z) { return static_cast<int>((a + 2) / (z + 2)); }

int two_negative_lower_bound(long a, long z) {
    if (a <= 1 || z < 0 || z >= a) throw OutOfRange("needs a > 1 and 0 <= z < a");
    const int k1 = sum_witness_k(a, z);
    const int k2 = diff_witness_k(a, z);
    return std::max(k1 >= 1 ? 2 * k1 + 1 : 0, k2 >= 1 ? 2 * k2 : 0);
}

Witness two_negative_sum_witness(const CubicPisotUnit& unit, int k) {
    const long z = require_z(unit);
    const long a = unit.a();
    if (k < 1 || a < k * z + 2 * k - 1) throw OutOfRange("sum construction needs k >= 1 and a >= kz+2k-1");
    std::vector<long> ip{1, a - 1};
    for (long j = 1; j < k; ++j) {
        ip.push_back(j * (z + 2));
        ip.push_back(a - j * z - (2 * j + 1));
    }
    std::vector<long> fp{k * z + 2 * (k - 1), a - k * z - (2 * k - 1)};
    for (long j = k - 1; j >= 1; --j) {
        fp.push_back(j * (z + 2));
        fp.push_back(a - j * z - (2 * j - 1));
    }
    fp.push_back(1);
    const DigitString x = alternating(a, k, false);
    Witness w = make(unit, Op::Add, x, x, digits(ip, fp), "1(a-1)...(kz+2k-2)(a-kz-2k+1)...(z+2)(a-z-1)1",
                     "a >= kz+2k-1");
    require_greedy(w);
    return w;
}

Witness two_negative_diff_witness(const CubicPisotUnit& unit, int k) {
    const long z = require_z(unit);
    const long a = unit.a();
    if (k < 1 || a < k * z + 2 * k - 2) throw OutOfRange("difference construction needs k >= 1 and a >= kz+2k-2");
    std::vector<long> ip{a - 1};
    for (long j = 1; j < k; ++j) {
        ip.push_back((j - 1) * z + 2 * j - 1);
        ip.push_back(a - j * (z + 2));
    }
    ip.push_back((k - 1) * (z + 2));
    std::vector<long> fp{a - k * z - 2 * (k - 1)};
    for (long j = k - 1; j >= 1; --j) {
        fp.push_back(j * (z + 2));
        fp.push_back(a - j * z - (2 * j - 1));
    }
    fp.push_back(1);
    Witness w = make(unit, Op::Sub, alternating(a, k, true), alternating(a, k, false), digits(ip, fp),
                     "(a-1)...((k-1)(z+2)).(a-kz-2k+2)...(z+2)(a-z-1)1", "a >= kz+2k-2");
    require_greedy(w);
    return w;
}

namespace {

Witness two_positive_sum(const CubicPisotUnit& unit) {
    const long a = unit.a();
    const long b = unit.b();
    return make(unit, Op::Add, digits({a - 1, 0, 0, b}), digits({2, 0, 0, 0}), digits({1, 1, b - 1, a - 1, 0}, {1}),
                "11(b-1)(a-1)0.1", "2 <= b < a");
}

bool long_small_sum_applies(long a, long b) { return (b == 1 && a >= 2) || (b == 2 && a >= 4); }

Witness small_sum_long(const CubicPisotUnit& unit) {
    const long a = unit.a();
    const long b = unit.b();
    return make(unit, Op::Add, digits({a - 1, b, a - 1, a}), digits({a - 1, 0, a - 1, a}),
                digits({1, a - 2, 2, 0, a - 2 * b}, {2 - b, 1}), "1(a-2)20(a-2b).(2-b)1",
                "b = 1, a >= 2 or b = 2, a >= 4");
}

Witness small_sum_short(const CubicPisotUnit& unit) {
    return make(unit, Op::Add, digits({unit.a(), 0}), digits({1, unit.b()}), digits({1, 1, 0}, {1}), "110.1",
                "0 < b < a");
}

Witness large_sum(const CubicPisotUnit& unit) {
    return make(unit, Op::Add, digits({unit.a() - 1}), digits({1}), digits({1, 0}, {unit.b(), 1}), "10.b1",
                "0 <= b <= a-3");
}

Witness small_square(const CubicPisotUnit& unit) {
    const long a = unit.a();
    const DigitString x = digits({a - 1, 0, a - 1, a});
    if (a == 2) return make(unit, Op::Mul, x, x, digits({1, 1, 2, 0, 1, 0, 1}, {0, 0, 1}), "1120101.001", "a = 2");
    if (a == 3) {
        return make(unit, Op::Mul, x, x, digits({1, 2, 0, 0, 0, 0, 0, 2}, {0, 1, 1}), "12000002.011", "a = 3");
    }
    return make(unit, Op::Mul, x, x, digits({a - 2, 2, 0, a - 4, 3, 1, a - 4, 2}, {0, a - 2, 1}),
                "(a-2)20(a-4)31(a-4)2.0(a-2)1", "b = 1, a >= 4");
}

Witness small_product(const CubicPisotUnit& unit) {
    const long a = unit.a();
    const long b = unit.b();
    return make(unit, Op::Mul, digits({a - 1, b + 1}), digits({a}), digits({a - 1, 1, b}, {a - b - 1, 1}),
                "(a-1)1b.(a-b-1)1", "0 < b < a");
}

Witness large_square(const CubicPisotUnit& unit) {
    const long a = unit.a();
    const long b = unit.b();
    if (b == 0) {
        const DigitString x = digits({a - 2, a - 1, a - 1});
        return make(unit, Op::Mul, x, x, digits({a - 2, 0, a - 1, 1, a - 2, a - 3}, {a - 1, 0, 1, 1}),
                    "(a-2)0(a-1)1(a-2)(a-3).(a-1)011", "b = 0");
    }
    if (b == 1) {
        const DigitString x = digits({a - 1, a - 2, a - 3});
        return make(unit, Op::Mul, x, x, digits({a - 1, a - 2, a - 4, 2, 1, 0}, {a - 4, 1, 3, 1}),
                    "(a-1)(a-2)(a-4)210.(a-4)131", "b = 1, a >= 4");
    }
    const DigitString x = digits({a - 1});
    Witness w = make(unit, Op::Mul, x, x, digits({a - 2, b}, {a - 2 * b + 1, b * b - b - 2, 2 * b - 1, 1}),
                     "(a-2)b.(a-2b+1)(b^2-b-2)(2b-1)1", "b > 1, digits inside the alphabet and admissible");
    require_greedy(w);
    return w;
}

}  // namespace

Witness lower_add_witness(const CubicPisotUnit& unit) {
    switch (unit.family()) {
        case Family::TwoPositive: return two_positive_sum(unit);
        case Family::SmallPositive:
            return long_small_sum_applies(unit.a(), unit.b()) ? small_sum_long(unit) : small_sum_short(unit);
        case Family::LargePositive: return large_sum(unit);
        case Family::TwoNegative: {
            const long a = unit.a();
            const long z = require_z(unit);
            const int k1 = sum_witness_k(a, z);
            const int k2 = diff_witness_k(a, z);
            if (k1 >= 1 && 2 * k1 + 1 >= 2 * k2) return two_negative_sum_witness(unit, k1);
            return two_negative_diff_witness(unit, k2);
        }
    }
    throw FamilyUnsupported("unknown family");
}

Witness lower_mul_witness(const CubicPisotUnit& unit) {
    switch (unit.family()) {
        case Family::SmallPositive: return unit.b() == 1 ? small_square(unit) : small_product(unit);
        case Family::LargePositive: return large_square(unit);
        case Family::TwoPositive:
        case Family::TwoNegative: break;
    }
    throw FamilyUnsupported("no product witness construction for " + to_string(unit.family()));
}

std::vector<Witness> all_witnesses(const CubicPisotUnit& unit) {
    std::vector<Witness> out;
    auto attempt = [&](auto&& build) {
        try {
            out.push_back(build());
        } catch (const OutOfRange&) {
        }
    };
    switch (unit.family()) {
        case Family::TwoPositive: out.push_back(two_positive_sum(unit)); break;
        case Family::SmallPositive:
            out.push_back(small_sum_short(unit));
            if (long_small_sum_applies(unit.a(), unit.b())) out.push_back(small_sum_long(unit));
            out.push_back(small_product(unit));
            if (unit.b() == 1) out.push_back(small_square(unit));
            break;
        case Family::LargePositive:
            out.push_back(large_sum(unit));
            attempt([&] { return large_square(unit); });
            break;
        case Family::TwoNegative:
            if (!unit.z()) break;
            for (int k = 1; k <= sum_witness_k(unit.a(), *unit.z()); ++k) {
                attempt([&] { return two_negative_sum_witness(unit, k); });
            }
            for (int k = 1; k <= diff_witness_k(unit.a(), *unit.z()); ++k) {
                attempt([&] { return two_negative_diff_witness(unit, k); });
            }
            break;
    }
    return out;
}

WitnessCheck verify_witness(const Witness& w) {
    WitnessCheck c;
    try {
        if (!is_admissible(w.expected, dstar(w.unit))) {
            c.detail = "expected expansion is not admissible";
            return c;
        }
        const ArithResult r = op_beta(w.x, w.y, w.op, w.unit);
        c.got = r.outcome.digits;
        c.got_fraction = r.outcome.fractional_length;
        if (r.outcome.status != GreedyStatus::Finite) {
            c.detail = "result is " + to_string(r.outcome.status);
            return c;
        }
        if (r.outcome.digits != w.expected || *r.outcome.fractional_length != w.claimed_fraction) {
            c.detail = "got " + r.outcome.digits.to_string() + ", expected " + w.expected.to_string();
            return c;
        }
        c.pass = true;
    } catch (const std::exception& e) {
        c.detail = e.what();
    }
    return c;
}

}  // namespace betarith
