#pragma once

#include <optional>
#include <string>
#include <vector>

#include "betarith/algebraic_core.hpp"
#include "betarith/beta_arith.hpp"
#include "betarith/expansion.hpp"

namespace betarith {

/// A pair of beta-integers together with the greedy expansion of x op y predicted by a digit pattern.
struct Witness {
    CubicPisotUnit unit;
    Op op = Op::Add;
    DigitString x;
    DigitString y;
    DigitString expected;
    std::size_t claimed_fraction = 0;
    std::string pattern;   // symbolic form of `expected`, e.g. "11(b-1)(a-1)0.1"
    std::string validity;  // parameter range the pattern is claimed for
};

/// Strongest sum witness for the unit's family. The two-negative family uses the better of the
/// sum and difference constructions. Throws FamilyUnsupported when b = a + 1 in that family.
Witness lower_add_witness(const CubicPisotUnit& unit);

/// Strongest product witness. Small-positive and large-positive families only
/// (FamilyUnsupported otherwise); OutOfRange when the pattern's digits fall outside the alphabet.
Witness lower_mul_witness(const CubicPisotUnit& unit);

/// x_k + x_k with x_k = a0a0...a (k copies of a); needs a >= kz + 2k - 1. Throws OutOfRange otherwise.
Witness two_negative_sum_witness(const CubicPisotUnit& unit, int k);
/// x_k - y_k with x_k = a0...a0 and y_k = a0...a; needs a >= kz + 2k - 2. Throws OutOfRange otherwise.
Witness two_negative_diff_witness(const CubicPisotUnit& unit, int k);

/// Largest k satisfying each validity inequality, for the sum and the difference construction.
int sum_witness_k(long a, long z);
int diff_witness_k(long a, long z);
/// max(2 k1 + 1, 2 k2) over both constructions. Requires a > 1 and 0 <= z < a.
int two_negative_lower_bound(long a, long z);

/// Every construction that applies to the unit, including each valid k for the two-negative family.
std::vector<Witness> all_witnesses(const CubicPisotUnit& unit);

struct WitnessCheck {
    bool pass = false;
    std::optional<DigitString> got;
    std::optional<std::size_t> got_fraction;
    std::string detail;
};

/// Recomputes x op y exactly and compares it with the expected expansion and fraction length.
WitnessCheck verify_witness(const Witness& w);

}  // namespace betarith
