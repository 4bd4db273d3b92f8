#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "betarith/algebraic_core.hpp"

namespace betarith {

inline constexpr std::size_t kDefaultStepBudget = 1'000'000;

/// Signed digit string: int_digits . frac_digits (period)^w, most significant digit first.
/// An empty int_digits block stands for the integer part 0.
struct DigitString {
    bool negative = false;
    std::vector<int> int_digits;
    std::vector<int> frac_digits;
    std::vector<int> period;

    bool is_finite() const { return period.empty(); }
    bool is_integer() const { return frac_digits.empty() && period.empty(); }
    bool is_zero() const;
    std::size_t fractional_length() const { return frac_digits.size(); }

    /// Strips leading integer zeros and trailing fractional zeros, shortens the
    /// preperiod and the period to their minimal forms, drops an all-zero period.
    void canonicalize();
    DigitString canonical() const;

    /// Canonical text form, e.g. "1 1 0 . 1", "0 . 0 10 5 9 3 4 7 1", "3 . (0 2)^w".
    std::string to_string() const;
    /// Inverse of to_string; throws ParseError with the offending position.
    static DigitString parse(std::string_view text);

    static DigitString integer(std::vector<int> digits) {
        DigitString d;
        d.int_digits = std::move(digits);
        d.canonicalize();
        return d;
    }

    friend bool operator==(const DigitString&, const DigitString&) = default;
};

/// Sequence form without a point, used for expansions of 1: "5 0 (1)^w", "5 5 1".
/// Reads the fractional digits and the period.
std::string format_sequence(const DigitString& seq);
DigitString parse_sequence(std::string_view text);
/// Compact positional form with a bullet and parenthesised multi-digit symbols, e.g. "0•0(10)593471".
std::string format_compact(const DigitString& s);

enum class GreedyStatus { Finite, EventuallyPeriodic, BudgetExceeded };
std::string to_string(GreedyStatus status);

struct GreedyOutcome {
    DigitString digits;
    GreedyStatus status = GreedyStatus::Finite;
    /// Present iff status is Finite.
    std::optional<std::size_t> fractional_length;
};

/// Greedy digits of x in [0, 1): x_j = floor(beta r_{j-1}), r_j = beta r_{j-1} - x_j.
/// The result has an empty integer part.
GreedyOutcome greedy_digits(const CubicPisotUnit& unit, const ZBeta& x, std::size_t step_budget = kDefaultStepBudget);

/// Greedy expansion of an arbitrary element of Z[beta].
GreedyOutcome greedy_expansion(const CubicPisotUnit& unit, const ZBeta& x,
                               std::size_t step_budget = kDefaultStepBudget);

/// Expansion of 1 by the greedy recurrence started at r_0 = 1 (sequence form).
/// Throws Undetermined when the budget runs out.
DigitString renyi_d1(const CubicPisotUnit& unit, std::size_t step_budget = kDefaultStepBudget);

/// Closed-form expansion of 1 for the unit's family (sequence form).
DigitString dbeta_formula(const CubicPisotUnit& unit);

/// Infinite expansion of 1: (t_1 ... t_{m-1} (t_m - 1))^w for finite d = t_1 ... t_m, else d itself.
DigitString dstar_from(const DigitString& d1);
DigitString dstar(const CubicPisotUnit& unit);

/// Automaton over the follower states of an infinite expansion of 1. State i means the
/// longest suffix read so far agrees with the first i symbols of d*.
class ParryAutomaton {
public:
    explicit ParryAutomaton(const DigitString& dstar);

    int states() const { return static_cast<int>(t_.size()); }
    int max_digit() const { return t_.front(); }
    int threshold(int state) const { return t_[static_cast<std::size_t>(state)]; }
    /// Next state, or -1 when the digit exceeds the threshold.
    int step(int state, int digit) const {
        const int t = t_[static_cast<std::size_t>(state)];
        if (digit < t) return 0;
        if (digit > t) return -1;
        return state + 1 < states() ? state + 1 : preperiod_;
    }

private:
    std::vector<int> t_;
    int preperiod_ = 0;
};

/// Parry condition: every suffix is lexicographically smaller than dstar.
/// Finite strings are read as followed by zeros. Throws AlphabetViolation for digits above t_1.
bool is_admissible(const DigitString& digits, const DigitString& dstar);

/// Exact value of a finite digit string; throws AlphabetViolation for digits above floor(beta)
/// and std::invalid_argument for periodic strings.
ZBeta value_of(const DigitString& digits, const CubicPisotUnit& unit);

}  // namespace betarith
