#include <doctest.h>

#include <random>

#include "betarith/expansion.hpp"
#include "oracle.hpp"

using namespace betarith;

namespace {

CubicPisotUnit unit(long p2, long p1, long p0) { return classify_or_throw({p2, p1, p0}); }

std::string expand(const CubicPisotUnit& u, const ZBeta& x) { return greedy_expansion(u, x).digits.to_string(); }

// Random admissible string with up to `int_len` integer and `frac_len` fractional digits.
DigitString random_admissible(const CubicPisotUnit& u, std::mt19937& rng, int int_len, int frac_len) {
    const ParryAutomaton pa(dstar(u));
    std::vector<int> seq;
    int state = 0;
    const int n = int_len + frac_len;
    for (int i = 0; i < n; ++i) {
        std::uniform_int_distribution<int> d(0, pa.threshold(state));
        int digit = d(rng);
        seq.push_back(digit);
        state = pa.step(state, digit);
    }
    DigitString s;
    s.int_digits.assign(seq.begin(), seq.begin() + int_len);
    s.frac_digits.assign(seq.begin() + int_len, seq.end());
    s.canonicalize();
    return s;
}

}  // namespace

TEST_SUITE("expansion") {
    TEST_CASE("digit string text round trip") {
        for (const char* t : {"1 1 0 . 1", "0 . 0 10 5 9 3 4 7 1", "3 . (0 2)^w", "0", "- 2 0 . 1 1 (2 0)^w"}) {
            CHECK(DigitString::parse(t).to_string() == t);
        }
        CHECK(DigitString::parse("00 1 . 1 0 0").to_string() == "1 . 1");
        CHECK(format_compact(DigitString::parse("0 . 0 10 5 9 3 4 7 1")) == "0\xe2\x80\xa2" "0(10)593471");
        CHECK(format_sequence(parse_sequence("5 0 (1)^w")) == "5 0 (1)^w");
    }

    TEST_CASE("malformed digit strings report a position") {
        try {
            DigitString::parse("1 2 . x");
            FAIL("no exception");
        } catch (const ParseError& e) {
            CHECK(e.position() == 6);
        }
        CHECK_THROWS_AS(DigitString::parse(""), ParseError);
        CHECK_THROWS_AS(DigitString::parse("1 ."), ParseError);
    }

    TEST_CASE("greedy digits of points in [0, 1)") {
        const CubicPisotUnit u = unit(-3, -1, 1);
        const GreedyOutcome zero = greedy_digits(u, ZBeta());
        CHECK(zero.digits.to_string() == "0");
        CHECK(zero.status == GreedyStatus::Finite);
        CHECK(zero.fractional_length == 0u);

        // (4 beta + 1) beta^-3
        const ZBeta x = u.mul(ZBeta(1, 4), u.beta_pow(-3));
        CHECK(greedy_digits(u, x).digits.to_string() == "0 . 1 1 0 1");
    }

    TEST_CASE("eventually periodic expansion agrees with the floating reference") {
        const CubicPisotUnit u = unit(-3, -1, 1);
        const ZBeta x(-3, 1);  // beta - 3
        const GreedyOutcome o = greedy_expansion(u, x);
        CHECK(o.status == GreedyStatus::EventuallyPeriodic);
        CHECK_FALSE(o.fractional_length);
        CHECK(o.digits.to_string() == "0 . (0 2)^w");

        const auto roots = oracle::real_roots(u.poly());
        const auto ref = oracle::greedy_digits(oracle::evaluate(x, roots[0]), roots[0], 40);
        for (std::size_t i = 0; i < ref.size(); ++i) CHECK(ref[i] == (i % 2 == 0 ? 0 : 2));
    }

    TEST_CASE("greedy expansions of known elements") {
        const CubicPisotUnit t = unit(-7, 6, -1);
        const ZBeta x = 8 * t.beta_pow(3) + ZBeta(6);
        const GreedyOutcome o = greedy_expansion(t, x);
        CHECK(o.digits.to_string() == "1 1 5 6 0 . 1");
        CHECK(o.fractional_length == 1u);
        CHECK(expand(t, ZBeta(1)) == "1");
        CHECK(expand(unit(-5, 1, 1), ZBeta(5)) == "1 0 . 1 1");
        CHECK(expand(unit(-5, -5, -1), ZBeta(-1)) == "- 1");
    }

    TEST_CASE("expansions of 1") {
        CHECK(format_sequence(renyi_d1(unit(-6, 5, -1))) == "5 0 (1)^w");
        CHECK(format_sequence(renyi_d1(unit(-3, -1, 1))) == "3 (0 2)^w");
        CHECK(format_sequence(renyi_d1(unit(-5, -5, -1))) == "5 5 1");
        CHECK(format_sequence(dbeta_formula(unit(-4, 1, 1))) == "3 2 (1)^w");
        CHECK(format_sequence(dbeta_formula(unit(-5, -6, -1))) == "6 0 0 5 1");
        CHECK(format_sequence(renyi_d1(unit(-5, -6, -1))) == "6 0 0 5 1");
        CHECK(format_sequence(dbeta_formula(unit(-7, 6, -1))) == "6 0 (1)^w");
        CHECK(format_sequence(dstar(unit(-5, -5, -1))) == "(5 5 0)^w");
        CHECK(format_sequence(dstar(unit(-3, -1, 1))) == "3 (0 2)^w");
        CHECK(format_sequence(dstar(unit(-6, -6, -1))) == "(6 6 0)^w");
    }

    TEST_CASE("expansion of 1 matches the floating greedy recurrence") {
        for (CubicPolynomial p : {CubicPolynomial{-6, 5, -1}, CubicPolynomial{-3, -1, 1}, CubicPolynomial{-7, 2, 1}}) {
            const CubicPisotUnit u = classify_or_throw(p);
            const DigitString d = renyi_d1(u);
            const auto roots = oracle::real_roots(p);
            oracle::Real one;
            mpfr_set_ui(one.get(), 1, MPFR_RNDN);
            const std::vector<int> ref = oracle::greedy_digits(one, roots[0], 30);
            std::vector<int> got = d.frac_digits;
            while (got.size() < ref.size()) got.insert(got.end(), d.period.begin(), d.period.end());
            got.resize(ref.size());
            CHECK(got == ref);
        }
    }

    TEST_CASE("Parry admissibility") {
        const DigitString ds = dstar(unit(-5, -5, -1));
        CHECK(is_admissible(DigitString::parse("0 . 0 5 3 5 2 2 4 1"), ds));
        CHECK(is_admissible(DigitString::parse("5 5 0 5 5 0"), ds));
        CHECK_FALSE(is_admissible(DigitString::parse("5 5 1"), ds));
        CHECK(is_admissible(DigitString::parse("5 4 5 5 0"), ds));
        CHECK_THROWS_AS(is_admissible(DigitString::parse("6"), ds), AlphabetViolation);
    }

    TEST_CASE("value of digit strings") {
        const CubicPisotUnit u = unit(-3, -1, 1);
        CHECK(value_of(DigitString::parse("1 1 0 . 1"), u) == ZBeta(1, 4));
        CHECK(value_of(DigitString::parse("0"), u) == ZBeta());
        CHECK(value_of(DigitString::parse("1 0 . 1 1"), unit(-5, 1, 1)) == ZBeta(5));
        CHECK_THROWS_AS(value_of(DigitString::parse("4"), u), AlphabetViolation);
        CHECK_THROWS_AS(value_of(DigitString::parse("0 . (1)^w"), u), std::invalid_argument);
    }

    TEST_CASE("random admissible strings survive a round trip") {
        std::mt19937 rng(11);
        for (CubicPolynomial p : {CubicPolynomial{-6, 5, -1}, CubicPolynomial{-3, -1, 1}, CubicPolynomial{-7, 2, 1},
                                  CubicPolynomial{-5, -5, -1}}) {
            const CubicPisotUnit u = classify_or_throw(p);
            const DigitString ds = dstar(u);
            const auto roots = oracle::real_roots(p);
            const double beta = roots[0].d();
            for (int i = 0; i < 300; ++i) {
                const DigitString s = random_admissible(u, rng, 4, 6);
                const ZBeta v = value_of(s, u);
                const GreedyOutcome o = greedy_expansion(u, v);
                REQUIRE(o.status == GreedyStatus::Finite);
                CHECK(o.digits == s);
                CHECK(is_admissible(o.digits, ds));
                CHECK(oracle::digit_value(s.int_digits, s.frac_digits, beta) ==
                      doctest::Approx(oracle::evaluate(v, roots[0]).d()));
            }
        }
    }

    TEST_CASE("greedy output of random elements is admissible and has the right value") {
        std::mt19937 rng(5);
        std::uniform_int_distribution<int> d(-40, 40);
        for (CubicPolynomial p : {CubicPolynomial{-6, 5, -1}, CubicPolynomial{-3, -1, 1}, CubicPolynomial{-5, -5, -1}}) {
            const CubicPisotUnit u = classify_or_throw(p);
            const DigitString ds = dstar(u);
            const auto roots = oracle::real_roots(p);
            for (int i = 0; i < 200; ++i) {
                const ZBeta x(d(rng), d(rng), d(rng));
                const GreedyOutcome o = greedy_expansion(u, x, 20000);
                if (o.status != GreedyStatus::Finite) continue;
                DigitString mag = o.digits;
                mag.negative = false;
                CHECK(is_admissible(mag, ds));
                CHECK(value_of(o.digits, u) == x);
                const double ref = oracle::evaluate(x, roots[0]).d();
                CHECK(oracle::digit_value(o.digits.int_digits, o.digits.frac_digits, roots[0].d()) *
                          (o.digits.negative ? -1 : 1) ==
                      doctest::Approx(ref).epsilon(1e-9));
            }
        }
    }

    TEST_CASE("budget exhaustion is reported") {
        const CubicPisotUnit u = unit(-3, -1, 1);
        const GreedyOutcome o = greedy_expansion(u, ZBeta(-3, 1), 1);
        CHECK(o.status == GreedyStatus::BudgetExceeded);
    }
}
