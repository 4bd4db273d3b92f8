#include <doctest.h>

#include "betarith/beta_arith.hpp"
#include "oracle.hpp"

using namespace betarith;

namespace {

CubicPisotUnit unit(long p2, long p1, long p0) { return classify_or_throw({p2, p1, p0}); }

ArithResult run(const CubicPisotUnit& u, const char* x, const char* y, Op op) {
    return op_beta(DigitString::parse(x), DigitString::parse(y), op, u);
}

}  // namespace

TEST_SUITE("beta_arith") {
    TEST_CASE("sums and products from the digit identities") {
        const ArithResult s = run(unit(-3, -1, 1), "3 0", "1 1", Op::Add);
        CHECK(s.outcome.digits.to_string() == "1 1 0 . 1");
        CHECK(fractional_length(s) == 1);

        const ArithResult m = run(unit(-3, -2, 1), "2 3", "3", Op::Mul);
        CHECK(m.outcome.digits.to_string() == "2 1 2 . 0 1");
        CHECK(fractional_length(m) == 2);

        const ArithResult sq = run(unit(-2, -1, 1), "1 0 1 2", "1 0 1 2", Op::Mul);
        CHECK(sq.outcome.digits.to_string() == "1 1 2 0 1 0 1 . 0 0 1");
        CHECK(fractional_length(sq) == 3);
    }

    TEST_CASE("adding zero is the identity") {
        const CubicPisotUnit u = unit(-6, 5, -1);
        for (const DigitString& x : admissible_integers(u, 3)) {
            const ArithResult r = op_beta(x, DigitString::parse("0"), Op::Add, u);
            CHECK(r.outcome.digits == x);
            CHECK(fractional_length(r) == 0);
        }
        CHECK(fractional_length(run(u, "0", "0", Op::Mul)) == 0);
    }

    TEST_CASE("operands are validated") {
        const CubicPisotUnit u = unit(-3, -1, 1);
        CHECK_THROWS_AS(run(u, "4", "1", Op::Add), AlphabetViolation);
        CHECK_THROWS_AS(run(u, "1 . 1", "1", Op::Add), std::invalid_argument);
        // 3 0 3 is not admissible against 3 (0 2)^w
        CHECK_THROWS_AS(run(u, "3 0 3", "1", Op::Add), std::invalid_argument);
    }

    TEST_CASE("a non-finite sum in the two-positive family") {
        const CubicPisotUnit u = unit(-6, 5, -1);
        const ArithResult r = run(u, "1", "5", Op::Add);
        REQUIRE(r.outcome.status == GreedyStatus::EventuallyPeriodic);
        CHECK(fractional_length(r) == kInfiniteLength);
        // 6 - beta lies in [0, 1); its floating greedy digits must follow the reported tail
        const auto roots = oracle::real_roots(u.poly());
        const ZBeta frac = ZBeta(6) - value_of(DigitString::integer(r.outcome.digits.int_digits), u);
        const auto ref = oracle::greedy_digits(oracle::evaluate(frac, roots[0]), roots[0], 30);
        std::vector<int> got = r.outcome.digits.frac_digits;
        while (got.size() < ref.size()) {
            got.insert(got.end(), r.outcome.digits.period.begin(), r.outcome.digits.period.end());
        }
        got.resize(ref.size());
        CHECK(got == ref);
    }

    TEST_CASE("results are exact and commutative") {
        for (CubicPolynomial p : {CubicPolynomial{-6, 5, -1}, CubicPolynomial{-4, -1, 1}, CubicPolynomial{-5, -5, -1}}) {
            const CubicPisotUnit u = classify_or_throw(p);
            const auto ints = admissible_integers(u, 2);
            for (const DigitString& x : ints) {
                for (const DigitString& y : ints) {
                    for (Op op : {Op::Add, Op::Mul}) {
                        const ArithResult xy = op_beta(x, y, op, u);
                        const ArithResult yx = op_beta(y, x, op, u);
                        CHECK(xy.outcome.digits == yx.outcome.digits);
                        if (xy.outcome.status == GreedyStatus::Finite) {
                            const ZBeta want = op == Op::Add ? value_of(x, u) + value_of(y, u)
                                                             : u.mul(value_of(x, u), value_of(y, u));
                            CHECK(value_of(xy.outcome.digits, u) == want);
                        }
                    }
                }
            }
        }
    }

    TEST_CASE("sums are finite when fin(beta) is closed under addition") {
        const CubicPisotUnit u = unit(-5, -5, -1);
        const auto ints = admissible_integers(u, 3);
        for (std::size_t i = 0; i < ints.size(); i += 7) {
            for (std::size_t j = 0; j < ints.size(); j += 5) {
                CHECK(op_beta(ints[i], ints[j], Op::Add, u).outcome.status == GreedyStatus::Finite);
                CHECK(op_beta(ints[i], ints[j], Op::Sub, u).outcome.status == GreedyStatus::Finite);
            }
        }
    }

    TEST_CASE("admissible integers are counted by the automaton") {
        const CubicPisotUnit u = unit(-3, -1, 1);
        const auto ints = admissible_integers(u, 3);
        // brute count of strings over {0..3} of length 3 passing the Parry check
        const DigitString ds = dstar(u);
        std::size_t count = 0;
        for (int a = 0; a <= 3; ++a) {
            for (int b = 0; b <= 3; ++b) {
                for (int c = 0; c <= 3; ++c) {
                    DigitString s;
                    s.int_digits = {a, b, c};
                    if (is_admissible(s, ds)) ++count;
                }
            }
        }
        CHECK(ints.size() == count);
        for (std::size_t i = 1; i < ints.size(); ++i) CHECK(u.compare(value_of(ints[i - 1], u), value_of(ints[i], u)) < 0);
    }

    TEST_CASE("brute force over short operands") {
        CHECK(brute_force_L(unit(-3, -1, 1), Op::Add, 4).best == 2);
        CHECK(brute_force_L(unit(-4, -3, 1), Op::Add, 4).best == 1);
        CHECK(brute_force_L(unit(-4, -3, 1), Op::Add, 0).best == 0);
        const BruteForceResult r = brute_force_L(unit(-3, -2, 1), Op::Mul, 2);
        REQUIRE(r.witness);
        CHECK(fractional_length(*r.witness) == r.best);
    }
}
