#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "betarith/algebraic_core.hpp"
#include "betarith/expansion.hpp"
#include "betarith/interval.hpp"

namespace betarith {

/// sqrt((a/(1-beta'^2))^2 + (a/(1-beta''^2))^2), a bound on |sigma(x)| over beta-integers.
/// Two-negative family with b <= a only; FamilyUnsupported otherwise.
DyadicInterval h_ab(const CubicPisotUnit& unit);

struct NormSearchResult {
    int l = 0;
    DyadicInterval min_norm;
    DigitString argmin;  // 0 . a_1 ... a_l with a_l != 0
    std::uint64_t nodes_explored = 0;
};

/// Minimum of |sigma(x)| = sqrt(x'^2 + x''^2) over admissible x = 0 . a_1 ... a_l with a_l != 0.
/// Branch and bound, deepest digit first; ties broken towards the lexicographically smallest string.
NormSearchResult min_norm_at_level(const CubicPisotUnit& unit, int l, unsigned threads = 1);
/// Same minimum by plain enumeration with exact comparisons; for small instances only.
NormSearchResult min_norm_exhaustive(const CubicPisotUnit& unit, int l);

/// Exact sign of N(x) - N(y) with N(x) = x'^2 + x''^2.
int compare_conjugate_norms(const CubicPisotUnit& unit, const ZBeta& x, const ZBeta& y);

struct RauzyBound {
    int upper = 0;
    DyadicInterval three_h;
    std::vector<NormSearchResult> levels;  // levels 1 .. upper + 1
};

/// l - 1 for the smallest l <= l_max whose minimum norm certifiably exceeds 3 H(a,b).
/// Throws Inconclusive when no level up to l_max certifies.
RauzyBound rauzy_upper_add(const CubicPisotUnit& unit, int l_max, unsigned threads = 1);

}  // namespace betarith
