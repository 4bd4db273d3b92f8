#include <doctest.h>

#include <optional>
#include <random>

#include "betarith/hk_bounds.hpp"
#include "betarith/witness_families.hpp"
#include "oracle.hpp"

using namespace betarith;

namespace {

CubicPisotUnit unit(long p2, long p1, long p0) { return classify_or_throw({p2, p1, p0}); }

int hk(const CubicPisotUnit& u, Op op, HMode m = HMode::AutomatonRefined) { return hk_upper(u, op, m).upper; }

}  // namespace

TEST_SUITE("hk_bounds") {
    TEST_CASE("conjugate estimates") {
        // mpmath: 1/sqrt(5), 1/sqrt(3), (1 + 3 + 2/3)/9
        const ConjugateEstimate t = conjugate_estimate(unit(-6, 5, -1));
        CHECK(t.bound.mid() == doctest::Approx(0.447213595499958));
        CHECK(t.isolated.upper() < t.bound.lower());
        CHECK(t.isolated.mid() == doctest::Approx(0.307978528369904));

        const ConjugateEstimate s = conjugate_estimate(unit(-3, -1, 1));
        CHECK(s.bound.mid() == doctest::Approx(0.577350269189626));
        CHECK(s.isolated.mid() == doctest::Approx(0.460811127189));

        const ConjugateEstimate l = conjugate_estimate(unit(-10, 1, 1));
        CHECK(l.bound.mid() == doctest::Approx(0.518518518518519));
        CHECK(l.isolated.mid() == doctest::Approx(0.378516654008944));

        CHECK_THROWS_AS(conjugate_estimate(unit(-5, -5, -1)), FamilyUnsupported);
    }

    TEST_CASE("crude and refined H") {
        for (long a = 10; a <= 14; ++a) {
            const CubicPisotUnit u = classify_or_throw(family_polynomial(Family::TwoPositive, a, a - 1));
            const int c = *u.positive_conjugate();
            if (u.root_approx(c) <= 0.5) CHECK(compute_H(u, c, HMode::Crude).upper() <= 2.0 * (a - 1));
        }
        const CubicPisotUnit u = unit(-3, -1, 1);
        const int c = *u.positive_conjugate();
        const DyadicInterval crude = compute_H(u, c, HMode::Crude);
        const DyadicInterval refined = compute_H(u, c, HMode::AutomatonRefined);
        CHECK(refined.upper() <= crude.upper());
        CHECK(refined.width() <= 1e-9);
    }

    TEST_CASE("refined H dominates conjugates of admissible integers") {
        std::mt19937 rng(3);
        for (CubicPolynomial p : {CubicPolynomial{-3, -1, 1}, CubicPolynomial{-6, 5, -1}, CubicPolynomial{-7, 1, 1}}) {
            const CubicPisotUnit u = classify_or_throw(p);
            const int c = *u.positive_conjugate();
            const DyadicInterval H = compute_H(u, c, HMode::AutomatonRefined);
            const auto roots = oracle::real_roots(p);
            const ParryAutomaton pa(dstar(u));
            double best = 0;
            for (int i = 0; i < 2000; ++i) {
                DigitString s;
                int state = 0;
                for (int k = 0; k < 12; ++k) {
                    // bias towards large digits, where the extremes live
                    std::uniform_int_distribution<int> d(0, pa.threshold(state));
                    const int digit = std::max(d(rng), d(rng));
                    s.int_digits.push_back(digit);
                    state = pa.step(state, digit);
                }
                const double v = std::abs(oracle::evaluate(value_of(s, u), roots[static_cast<std::size_t>(c)]).d());
                best = std::max(best, v);
                CHECK(v <= H.upper());
            }
            // the sampled extremes come close to H
            CHECK(best >= 0.5 * H.lower());
        }
    }

    TEST_CASE("K for positive conjugates") {
        const CubicPisotUnit s = unit(-3, -1, 1);
        CHECK(compute_K(s, *s.positive_conjugate()) == 1);
        const CubicPisotUnit t = unit(-6, 5, -1);
        CHECK(compute_K(t, *t.positive_conjugate()) == 1);
        const CubicPisotUnit n = unit(-5, -5, -1);
        CHECK_THROWS_AS(compute_K(n, 1), Unsupported);
    }

    TEST_CASE("HK upper bounds on table rows") {
        CHECK(hk(unit(-7, 6, -1), Op::Add) == 1);
        CHECK(hk(unit(-6, 5, -1), Op::Mul) == 3);
        CHECK(hk(unit(-3, -2, 1), Op::Mul) == 2);
        CHECK(hk(unit(-2, -1, 1), Op::Add) == 3);
        CHECK_THROWS_AS(hk_upper(unit(-5, -5, -1), Op::Add), FamilyUnsupported);
    }

    TEST_CASE("closed forms") {
        CHECK(closed_form_upper(Family::TwoPositive, 10, 9, Op::Add).upper == 2);
        CHECK(closed_form_upper(Family::SmallPositive, 36, 35, Op::Add).upper == 1);
        CHECK(closed_form_upper(Family::SmallPositive, 108, 107, Op::Mul).upper == 2);
        CHECK_THROWS_AS(closed_form_upper(Family::TwoPositive, 4, 2, Op::Add), OutOfRange);
        CHECK_THROWS_AS(closed_form_upper(Family::TwoNegative, 5, 5, Op::Add), OutOfRange);
        CHECK_THROWS_AS(closed_form_upper(Family::LargePositive, 40, 1, Op::Add, mpq_class(1)), OutOfRange);
        const ClosedFormBound lp = closed_form_upper(Family::LargePositive, 200, 1, Op::Add);
        CHECK(lp.upper >= hk(classify_or_throw(family_polynomial(Family::LargePositive, 200, 1)), Op::Add));
    }

    TEST_CASE("refined bounds never exceed crude ones and dominate witnesses") {
        for (Family f : {Family::TwoPositive, Family::SmallPositive, Family::LargePositive}) {
            for (long a = 2; a <= 30; ++a) {
                for (long b = 0; b < a; ++b) {
                    const auto v = classify(family_polynomial(f, a, b));
                    const auto* u = std::get_if<CubicPisotUnit>(&v);
                    if (!u || u->family() != f) continue;
                    for (Op op : {Op::Add, Op::Mul}) {
                        const int refined = hk(*u, op);
                        CHECK(refined <= hk(*u, op, HMode::Crude));
                        std::optional<Witness> w;
                        try {
                            w = op == Op::Add ? lower_add_witness(*u) : lower_mul_witness(*u);
                        } catch (const FamilyUnsupported&) {
                        } catch (const OutOfRange&) {
                        }
                        if (w) CHECK(refined >= static_cast<int>(w->claimed_fraction));
                    }
                }
            }
        }
    }

    TEST_CASE("closed forms are no sharper than HK on the table units") {
        for (long a = 5; a <= 9; ++a) {
            for (long b = 2; b < a; ++b) {
                const auto v = classify(family_polynomial(Family::TwoPositive, a, b));
                if (!std::holds_alternative<CubicPisotUnit>(v)) continue;
                CHECK(closed_form_upper(Family::TwoPositive, a, b, Op::Add).upper >= hk(std::get<CubicPisotUnit>(v), Op::Add));
            }
        }
        for (long a = 2; a <= 8; ++a) {
            for (long b = 1; b < a; ++b) {
                const CubicPisotUnit u = classify_or_throw(family_polynomial(Family::SmallPositive, a, b));
                for (Op op : {Op::Add, Op::Mul}) {
                    std::optional<int> closed;
                    try {
                        closed = closed_form_upper(Family::SmallPositive, a, b, op).upper;
                    } catch (const OutOfRange&) {
                    }
                    if (closed) CHECK(*closed >= hk(u, op));
                }
            }
        }
    }

    TEST_CASE("the z = 1 small-positive family has L_add = 1") {
        for (long a = 3; a <= 35; ++a) {
            CHECK(hk(classify_or_throw(family_polynomial(Family::SmallPositive, a, a - 1)), Op::Add) == 1);
        }
    }
}
