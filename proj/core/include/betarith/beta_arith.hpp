#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "betarith/expansion.hpp"

namespace betarith {

enum class Op { Add, Sub, Mul };
std::string to_string(Op op);

struct ArithResult {
    GreedyOutcome outcome;
    DigitString x;
    DigitString y;
    Op op = Op::Add;
};

/// Exact x op y on admissible beta-integers, re-expanded greedily.
/// Throws AlphabetViolation for digits outside the alphabet and std::invalid_argument
/// for operands that are not admissible beta-integers.
ArithResult op_beta(const DigitString& x, const DigitString& y, Op op, const CubicPisotUnit& unit,
                    std::size_t step_budget = kDefaultStepBudget);

inline constexpr std::size_t kInfiniteLength = std::numeric_limits<std::size_t>::max();

/// Digits after the point; kInfiniteLength for an eventually periodic result.
/// Throws Undetermined when the expansion ran out of budget.
std::size_t fractional_length(const ArithResult& r);

/// Admissible beta-integers with at most `max_digits` digits, in increasing order.
std::vector<DigitString> admissible_integers(const CubicPisotUnit& unit, int max_digits);

struct BruteForceResult {
    std::size_t best = 0;
    std::optional<ArithResult> witness;
    std::size_t operands = 0;
    std::size_t evaluations = 0;
    std::size_t finite = 0;
    std::size_t periodic = 0;
    std::size_t budget_exceeded = 0;
};

/// Largest finite fractional length over all operand pairs x <= y of at most
/// `max_operand_digits` digits. Add covers both x + y and y - x; Mul covers x * y.
/// The witness is the first maximising pair in enumeration order.
BruteForceResult brute_force_L(const CubicPisotUnit& unit, Op op, int max_operand_digits,
                               std::size_t step_budget = 4096, unsigned threads = 1);

}  // namespace betarith
