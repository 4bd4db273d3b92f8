#include "betarith/hk_bounds.hpp"

#include <algorithm>
#include <vector>

#include "betarith/expansion.hpp"

namespace betarith {

namespace {

constexpr mpfr_prec_t kPrec = 192;
constexpr unsigned long kRootBits = 160;
constexpr int kMaxIterations = 10'000;
constexpr double kTargetWidth = 1e-9;

DyadicInterval rational(const mpq_class& q) { return DyadicInterval(q, q, kPrec); }

DyadicInterval abs_conjugate(const CubicPisotUnit& unit, int conj) {
    const DyadicInterval c = unit.root(conj, kRootBits).abs().with_precision(kPrec);
    if ((DyadicInterval(1, kPrec) - c).strict_sign() <= 0) throw NonContraction("|beta'| is not certifiably below 1");
    return c;
}

// Per-state suprema of x' and -x' over strings ending in that state, as a monotone map with
// coefficient |beta'|. Values of actual strings, so any iterate from below is a lower bound.
struct ValueMap {
    const ParryAutomaton& aut;
    DyadicInterval scale;  // |beta'|
    bool positive;

    struct Pair {
        std::vector<std::optional<DyadicInterval>> hi, lo;  // sup x', sup -x'
    };

    Pair apply(const Pair& v) const {
        const int n = aut.states();
        Pair out{std::vector<std::optional<DyadicInterval>>(n), std::vector<std::optional<DyadicInterval>>(n)};
        auto offer = [](std::optional<DyadicInterval>& slot, const DyadicInterval& x) {
            slot = slot ? max(*slot, x) : x;
        };
        offer(out.hi[0], DyadicInterval(0, kPrec));
        offer(out.lo[0], DyadicInterval(0, kPrec));
        for (int q = 0; q < n; ++q) {
            const auto& same = v.hi[q];
            const auto& other = v.lo[q];
            const auto& from_hi = positive ? same : other;
            const auto& from_lo = positive ? other : same;
            const int t = aut.threshold(q);
            const int next = aut.step(q, t);
            if (from_hi) {
                DyadicInterval base = scale * *from_hi;
                if (t >= 1) offer(out.hi[0], base + DyadicInterval(t - 1, kPrec));
                offer(out.hi[next], base + DyadicInterval(t, kPrec));
            }
            if (from_lo) {
                DyadicInterval base = scale * *from_lo;
                if (t >= 1) offer(out.lo[0], base);
                offer(out.lo[next], base - DyadicInterval(t, kPrec));
            }
        }
        return out;
    }
};

double spread(const ValueMap::Pair& x, const ValueMap::Pair& y) {
    double d = 0;
    for (std::size_t i = 0; i < x.hi.size(); ++i) {
        for (auto [a, b] : {std::pair{&x.hi[i], &y.hi[i]}, std::pair{&x.lo[i], &y.lo[i]}}) {
            if (!*a || !*b) return 1e300;
            d = std::max(d, std::abs((*a)->mid() - (*b)->mid()));
        }
    }
    return d;
}

DyadicInterval refined_H(const CubicPisotUnit& unit, int conj) {
    const DyadicInterval scale = abs_conjugate(unit, conj);
    const ParryAutomaton aut(dstar(unit));
    const ValueMap map{aut, scale, unit.root_approx(conj) > 0};
    const int n = aut.states();

    ValueMap::Pair lower{std::vector<std::optional<DyadicInterval>>(n), std::vector<std::optional<DyadicInterval>>(n)};
    lower.hi[0] = DyadicInterval(0, kPrec);
    lower.lo[0] = DyadicInterval(0, kPrec);
    for (int it = 0; it < kMaxIterations; ++it) {
        ValueMap::Pair next = map.apply(lower);
        const double d = spread(next, lower);
        lower = std::move(next);
        if (d < 1e-15) break;
    }

    // Post-fixed point U = lower + delta: T(U) <= U certifies the least fixed point below U.
    for (double delta = 1e-12; delta <= kTargetWidth / 2; delta *= 4) {
        const mpq_class d(delta);
        const DyadicInterval bump(d, d, kPrec);
        ValueMap::Pair up = lower;
        for (int q = 0; q < n; ++q) {
            up.hi[q] = *up.hi[q] + bump;
            up.lo[q] = *up.lo[q] + bump;
        }
        const ValueMap::Pair image = map.apply(up);
        bool ok = true;
        for (int q = 0; q < n && ok; ++q) {
            ok = mpfr_lessequal_p(image.hi[q]->hi(), up.hi[q]->lo()) && mpfr_lessequal_p(image.lo[q]->hi(), up.lo[q]->lo());
        }
        if (!ok) continue;
        DyadicInterval lo_end = *lower.hi[0];
        DyadicInterval hi_end = *up.hi[0];
        for (int q = 0; q < n; ++q) {
            lo_end = max(lo_end, max(*lower.hi[q], *lower.lo[q]));
            hi_end = max(hi_end, max(*up.hi[q], *up.lo[q]));
        }
        return hull(lo_end, hi_end);
    }
    throw WidthUnreachable("value iteration for H did not certify within 1e-9");
}

// Largest L >= base with pred(L) true; pred is monotone decreasing in L.
template <typename Pred>
int largest(int base, Pred pred) {
    int L = base;
    while (pred(L + 1)) ++L;
    return L;
}

mpz_class ipow(long base, int e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), mpz_class(base).get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

}  // namespace

std::string to_string(HMode mode) { return mode == HMode::Crude ? "crude" : "refined"; }

ConjugateEstimate conjugate_estimate(const CubicPisotUnit& unit) {
    const auto idx = unit.positive_conjugate();
    if (unit.family() == Family::TwoNegative || !idx) {
        throw FamilyUnsupported("no positive conjugate for the HK method");
    }
    ConjugateEstimate e;
    e.index = *idx;
    e.isolated = unit.root(*idx, kRootBits).with_precision(kPrec);
    const long a = unit.a();
    switch (unit.family()) {
        case Family::TwoPositive:
            e.bound = DyadicInterval(a - 1, kPrec).sqrt().inverse();
            e.formula = "1/sqrt(a-1)";
            break;
        case Family::SmallPositive:
            e.bound = DyadicInterval(a, kPrec).sqrt().inverse();
            e.formula = "1/sqrt(a)";
            break;
        case Family::LargePositive: {
            const DyadicInterval s = DyadicInterval(a - 1, kPrec).sqrt();
            e.bound = (DyadicInterval(unit.b(), kPrec) + s + DyadicInterval(2, kPrec) / s) / DyadicInterval(a - 1, kPrec);
            e.formula = "(b+sqrt(a-1)+2/sqrt(a-1))/(a-1)";
            break;
        }
        case Family::TwoNegative: break;
    }
    return e;
}

DyadicInterval compute_H(const CubicPisotUnit& unit, int conj, HMode mode) {
    const DyadicInterval c = abs_conjugate(unit, conj);
    if (mode == HMode::Crude) {
        return DyadicInterval(unit.floor_beta(), kPrec) / (DyadicInterval(1, kPrec) - c);
    }
    return refined_H(unit, conj);
}

long compute_K(const CubicPisotUnit& unit, int conj) {
    if (unit.root(conj, 64).strict_sign() <= 0) {
        throw Unsupported("K is only available for a positive conjugate");
    }
    return 1;
}

int hk_upper(const HKInputs& in, Op op) {
    const DyadicInterval inv = in.conj_value.abs().inverse();
    const DyadicInterval rhs =
        (op == Op::Mul ? in.H.sqr() : DyadicInterval(2, kPrec) * in.H) / DyadicInterval(in.K, kPrec);
    // (1/|beta'|)^L < rhs cannot be excluded while lower(lhs) < upper(rhs).
    return largest(0, [&](int L) {
        if (L > 4096) throw NonContraction("HK bound does not terminate");
        return mpfr_less_p(inv.pow(static_cast<unsigned long>(L)).lo(), rhs.hi()) != 0;
    });
}

HKBound hk_upper(const CubicPisotUnit& unit, Op op, HMode mode) {
    const auto idx = unit.positive_conjugate();
    if (unit.family() == Family::TwoNegative || !idx) {
        throw FamilyUnsupported("HK method needs a positive conjugate");
    }
    HKBound r;
    r.inputs.conj = *idx;
    r.inputs.conj_value = unit.root(*idx, kRootBits).with_precision(kPrec);
    r.inputs.H = compute_H(unit, *idx, mode);
    r.inputs.K = compute_K(unit, *idx);
    r.inputs.mode = mode;
    r.upper = hk_upper(r.inputs, op);
    return r;
}

ClosedFormBound closed_form_upper(Family family, long a, long b, Op op, const std::optional<mpq_class>& c_b) {
    const bool mul = op == Op::Mul;
    switch (family) {
        case Family::TwoPositive: {
            if (!(2 <= b && b < a)) throw OutOfRange("two-positive family needs 2 <= b < a");
            if (mul) {
                if (a < 10) throw OutOfRange("closed form for products needs a >= 10");
                // L < 4(1 + ln(3/2)/ln(a-1))  <=>  16 (a-1)^(L-4) < 81
                return {largest(4, [&](int L) { return 16 * ipow(a - 1, L - 4) < 81; }),
                        "4(1+ln(3/2)/ln(a-1))"};
            }
            if (a >= 10) {
                return {largest(2, [&](int L) { return ipow(a - 1, L - 2) < 9; }), "2(1+ln3/ln(a-1))"};
            }
            if (a >= 5) {
                return {largest(2, [&](int L) { return ipow(a - 1, L - 2) < 16; }), "2(1+ln4/ln(a-1))"};
            }
            throw OutOfRange("closed form for sums needs a >= 5");
        }
        case Family::SmallPositive: {
            if (!(0 < b && b < a)) throw OutOfRange("small-positive family needs 0 < b < a");
            std::optional<ClosedFormBound> best;
            auto keep = [&](ClosedFormBound c) {
                if (!best || c.upper < best->upper) best = std::move(c);
            };
            if (a >= 9) {
                if (mul) {
                    keep({largest(4, [&](int L) { return 16 * ipow(a, L - 4) < 81; }), "4(1+ln(3/2)/ln a)"});
                } else {
                    keep({largest(2, [&](int L) { return ipow(a, L - 2) < 9; }), "2(1+ln3/ln a)"});
                }
            }
            const long z = a - b;
            if (a >= 2 * (z + 2)) {
                if (mul) {
                    // (a/(z+2))^L < 4a^2
                    keep({largest(2, [&](int L) { return ipow(a, L - 2) < 4 * ipow(z + 2, L); }),
                          "(a/(z+2))^L < 4a^2"});
                } else {
                    // L < 1 + ln(4(z+2)) / (ln a - ln(z+2))
                    keep({largest(1, [&](int L) { return ipow(a, L - 1) < 4 * ipow(z + 2, L); }),
                          "1+ln(4(z+2))/(ln a-ln(z+2))"});
                }
            }
            if (!best) throw OutOfRange("no closed form applies: needs a >= 9 or a >= 2(z+2)");
            return *best;
        }
        case Family::LargePositive: {
            if (!(0 <= b && b <= a - 3)) throw OutOfRange("large-positive family needs 0 <= b <= a-3");
            const DyadicInterval s = DyadicInterval(a - 1, kPrec).sqrt();
            // beta' <= (b + s + 2/s) / (a-1) = estimate_c / s
            const DyadicInterval estimate_c = (DyadicInterval(b, kPrec) + s + DyadicInterval(2, kPrec) / s) / s;
            DyadicInterval c2 = estimate_c.sqr();
            if (c_b) {
                if (sgn(*c_b) <= 0) throw OutOfRange("c_b must be positive");
                const DyadicInterval given = rational(*c_b);
                if (!mpfr_lessequal_p(estimate_c.hi(), given.lo())) {
                    throw OutOfRange("c_b must dominate the conjugate estimate (b+sqrt(a-1)+2/sqrt(a-1))/sqrt(a-1)");
                }
                c2 = given.sqr();
            }
            const DyadicInterval am1(a - 1, kPrec);
            // beta' <= c_b / sqrt(a-1) <= 1/2
            if (!mpfr_lessequal_p((DyadicInterval(4, kPrec) * c2).hi(), am1.lo())) {
                throw OutOfRange("closed form needs 4 c_b^2 <= a-1");
            }
            const DyadicInterval ratio = am1 / c2;
            const DyadicInterval rhs = DyadicInterval(16, kPrec) * am1.pow(mul ? 4 : 2);
            return {largest(0, [&](int L) { return mpfr_less_p(ratio.pow(L).lo(), rhs.hi()) != 0; }),
                    mul ? "4(1+ln(2c_b^2)/(ln(a-1)-ln c_b^2))" : "2(1+ln(4c_b^2)/(ln(a-1)-ln c_b^2))"};
        }
        case Family::TwoNegative: break;
    }
    throw OutOfRange("no closed form for the two-negative family");
}

}  // namespace betarith
