#pragma once

#include <cstdint>
#include <vector>

#include "betarith/algebraic_core.hpp"
#include "betarith/expansion.hpp"

namespace betarith::detail {

struct GreedyRun {
    std::vector<int> digits;  // x_1, x_2, ...
    std::size_t preperiod = 0;
    std::size_t period = 0;  // 0 unless EventuallyPeriodic
    GreedyStatus status = GreedyStatus::Finite;
};

/// Integer triple with overflow-checked arithmetic; OverflowI3 is thrown on overflow.
struct I3 {
    std::int64_t c0 = 0, c1 = 0, c2 = 0;
    friend bool operator==(const I3&, const I3&) = default;
};

struct OverflowI3 {};

bool to_i3(const ZBeta& x, I3& out);
ZBeta to_zbeta(const I3& x);

/// Greedy digit generator for one unit: machine-integer fast path with a floating
/// floor filter, falling back to exact interval floors and to GMP coefficients.
class GreedyEngine {
public:
    explicit GreedyEngine(const CubicPisotUnit& unit);

    /// Runs the recurrence from r_0 (which may be >= 1, e.g. for the expansion of 1).
    GreedyRun run(const ZBeta& r0, std::size_t budget) const;

    /// Smallest k >= 0 with beta^-k x < 1 for x > 0, and the scaled element.
    long shift_into_unit_interval(const ZBeta& x, ZBeta& scaled) const;

    struct Shaped {
        GreedyRun run;
        long k = 0;  // number of integer digits
        bool negative = false;
        bool zero = false;
    };
    /// Sign, integer-digit count and greedy run of an arbitrary element.
    Shaped expand(const ZBeta& x, std::size_t budget) const;

    struct Summary {
        GreedyStatus status = GreedyStatus::Finite;
        std::size_t fractional_length = 0;
    };
    /// Status and fractional length without materialising digits. Returns false when the
    /// fast path cannot decide (overflow, or a run longer than its fixed remainder buffer).
    bool summarize(const I3& x, std::size_t budget, Summary& out) const;

    I3 sum(const I3& x, const I3& y) const;
    I3 difference(const I3& x, const I3& y) const;
    I3 product(const I3& x, const I3& y) const;

    std::int64_t floor(const I3& x) const;
    int sign(const I3& x) const;
    I3 mul_beta(const I3& x) const;
    I3 mul_beta_inv(const I3& x) const;

    const CubicPisotUnit& unit() const { return unit_; }

private:
    GreedyRun run_fast(const I3& r0, std::size_t budget) const;
    GreedyRun run_exact(const ZBeta& r0, std::size_t budget) const;
    bool expand_fast(const I3& x, std::size_t budget, Shaped& out) const;

    CubicPisotUnit unit_;
    std::int64_t p2_, p1_, p0_;
    double beta_, beta2_, log_beta_;
};

/// Greedy expansion through a prepared engine.
GreedyOutcome expand_with(const GreedyEngine& engine, const ZBeta& x, std::size_t step_budget);

}  // namespace betarith::detail
