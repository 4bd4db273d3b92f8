#include <doctest.h>

#include "betarith/rauzy_search.hpp"
#include "oracle.hpp"

using namespace betarith;

namespace {

CubicPisotUnit two_negative(long a, long b) { return classify_or_throw({-a, -b, -1}); }

// sqrt(x'^2 + x''^2) from the reference roots
double reference_norm(const CubicPisotUnit& u, const ZBeta& x) {
    const auto roots = oracle::real_roots(u.poly());
    const double s = oracle::evaluate(x, roots[1]).d();
    const double t = oracle::evaluate(x, roots[2]).d();
    return std::sqrt(s * s + t * t);
}

}  // namespace

TEST_SUITE("rauzy_search") {
    TEST_CASE("three H for two-negative units") {
        CHECK(h_ab(two_negative(5, 5)).mid() * 3 == doctest::Approx(28.2984).epsilon(1e-5));
        CHECK(h_ab(two_negative(7, 6)).mid() * 3 == doctest::Approx(37.6329).epsilon(1e-5));
        CHECK(h_ab(two_negative(12, 9)).mid() * 3 == doctest::Approx(65.3281).epsilon(1e-5));
        CHECK_THROWS_AS(h_ab(classify_or_throw({-6, 5, -1})), FamilyUnsupported);
    }

    TEST_CASE("minimum norm at a fixed level") {
        const CubicPisotUnit u = two_negative(5, 5);
        const NormSearchResult one = min_norm_at_level(u, 1);
        CHECK(one.argmin.to_string() == "0 . 1");
        // |1/beta| over the two small conjugates, mpmath
        CHECK(one.min_norm.mid() == doctest::Approx(3.86924677257).epsilon(1e-9));

        const NormSearchResult eight = min_norm_at_level(u, 8);
        CHECK(eight.argmin.to_string() == "0 . 0 5 3 5 2 2 4 1");
        CHECK(eight.min_norm.mid() == doctest::Approx(32.4341).epsilon(1e-5));
        CHECK(eight.min_norm.mid() == doctest::Approx(reference_norm(u, value_of(eight.argmin, u))));
    }

    TEST_CASE("norm search upper bounds") {
        CHECK(rauzy_upper_add(two_negative(5, 5), 10).upper == 7);
        CHECK(rauzy_upper_add(two_negative(7, 6), 10).upper == 7);
        CHECK(rauzy_upper_add(two_negative(12, 9), 10).upper == 7);
        CHECK_THROWS_AS(rauzy_upper_add(two_negative(5, 5), 3), Inconclusive);
    }

    TEST_CASE("branch and bound agrees with enumeration") {
        for (long a = 1; a <= 6; ++a) {
            for (long b = 0; b <= a; ++b) {
                const auto v = classify({-a, -b, -1});
                const auto* u = std::get_if<CubicPisotUnit>(&v);
                if (!u) continue;
                for (int l = 1; l <= 5; ++l) {
                    const NormSearchResult fast = min_norm_at_level(*u, l);
                    const NormSearchResult slow = min_norm_exhaustive(*u, l);
                    CHECK(fast.argmin == slow.argmin);
                    CHECK(fast.nodes_explored <= slow.nodes_explored);
                }
            }
        }
    }

    TEST_CASE("minimisers are admissible and end in a nonzero digit") {
        const CubicPisotUnit u = two_negative(7, 6);
        const DigitString ds = dstar(u);
        const RauzyBound r = rauzy_upper_add(u, 10);
        for (const NormSearchResult& lv : r.levels) {
            CHECK(is_admissible(lv.argmin, ds));
            REQUIRE(lv.argmin.frac_digits.size() == static_cast<std::size_t>(lv.l));
            CHECK(lv.argmin.frac_digits.back() != 0);
        }
        CHECK(r.levels.back().min_norm.lower() > r.three_h.upper());
    }

    TEST_CASE("exact norm comparison") {
        const CubicPisotUnit u = two_negative(5, 5);
        const ZBeta x = value_of(DigitString::parse("0 . 1"), u);
        const ZBeta y = value_of(DigitString::parse("0 . 0 1"), u);
        CHECK(compare_conjugate_norms(u, x, x) == 0);
        CHECK(compare_conjugate_norms(u, x, y) == -compare_conjugate_norms(u, y, x));
        CHECK((compare_conjugate_norms(u, x, y) < 0) == (reference_norm(u, x) < reference_norm(u, y)));
    }

    TEST_CASE("unsupported two-negative shapes") {
        const auto v = classify({-5, -6, -1});
        REQUIRE(std::holds_alternative<CubicPisotUnit>(v));
        CHECK_THROWS_AS(rauzy_upper_add(std::get<CubicPisotUnit>(v), 10), FamilyUnsupported);
    }
}
