#pragma once

#include <optional>
#include <string>

#include "betarith/beta_arith.hpp"
#include "betarith/hk_bounds.hpp"
#include "betarith/rauzy_search.hpp"
#include "betarith/witness_families.hpp"

namespace betarith {

enum class BoundMethod { HK, ClosedForm, Rauzy, Witness, Brute };
std::string to_string(BoundMethod m);
/// "hk", "closed", "rauzy", "witness", "brute"; throws std::invalid_argument otherwise.
BoundMethod parse_bound_method(const std::string& s);

enum class BoundStatus { Exact, Range };
std::string to_string(BoundStatus s);

struct BoundsOptions {
    /// hk, closed, rauzy pick the upper bound; brute adds an exhaustive lower bound.
    /// Unset: HK for units with a positive conjugate, the norm search for two-negative sums.
    std::optional<BoundMethod> method;
    HMode h_mode = HMode::AutomatonRefined;
    int l_max = 10;
    int depth = 4;
    std::size_t step_budget = 4096;
    unsigned threads = 1;
    std::optional<mpq_class> c_b;
};

/// Lower and upper bounds on L(beta) for one operation, with their provenance.
struct BoundsReport {
    BoundsReport(CubicPisotUnit u, Op o) : unit(std::move(u)), op(o) {}

    CubicPisotUnit unit;
    Op op = Op::Add;
    int lower = 0;
    std::string lower_source = "trivial";  // "witness", "brute", "trivial"
    std::optional<Witness> witness;
    std::optional<WitnessCheck> witness_check;
    std::optional<BruteForceResult> brute;
    std::optional<int> upper;
    std::optional<BoundMethod> upper_method;
    std::string upper_detail;
    std::optional<HKBound> hk;
    std::optional<RauzyBound> rauzy;
    bool verified = true;  // every witness used was machine-checked

    BoundStatus status() const { return upper && *upper == lower ? BoundStatus::Exact : BoundStatus::Range; }
    bool consistent() const { return verified && (!upper || lower <= *upper); }
};

/// Throws Inconclusive (norm search) and FamilyUnsupported / OutOfRange when the forced method
/// does not apply.
BoundsReport compute_bounds(const CubicPisotUnit& unit, Op op, const BoundsOptions& opts = {});

}  // namespace betarith
