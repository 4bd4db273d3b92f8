#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "betarith/algebraic_core.hpp"
#include "betarith/beta_arith.hpp"
#include "betarith/interval.hpp"

namespace betarith {

enum class HMode { Crude, AutomatonRefined };
std::string to_string(HMode mode);

/// Upper estimate of the conjugate used by the HK method, next to its isolated enclosure.
struct ConjugateEstimate {
    int index = 1;
    DyadicInterval isolated;
    DyadicInterval bound;
    std::string formula;  // e.g. "1/sqrt(a-1)"
};

/// Throws FamilyUnsupported for the two-negative family.
ConjugateEstimate conjugate_estimate(const CubicPisotUnit& unit);

/// Enclosure of an upper value for sup |x'| over beta-integers, x' the image under conjugate `conj`.
/// Crude: floor(beta) / (1 - |beta'|). AutomatonRefined: certified value iteration over the
/// follower states of d*(beta), enclosure width <= 1e-9.
/// Throws NonContraction when |beta'| is not certifiably below 1.
DyadicInterval compute_H(const CubicPisotUnit& unit, int conj, HMode mode);

/// 1 for a positive conjugate; Unsupported otherwise.
long compute_K(const CubicPisotUnit& unit, int conj);

struct HKInputs {
    int conj = 1;
    DyadicInterval conj_value;
    DyadicInterval H;
    long K = 1;
    HMode mode = HMode::AutomatonRefined;
};

struct HKBound {
    int upper = 0;
    HKInputs inputs;
};

/// Largest L with (1/|beta'|)^L < 2H/K (Add, Sub) or H^2/K (Mul) that interval slack cannot exclude.
/// Throws FamilyUnsupported when the unit has no positive conjugate.
HKBound hk_upper(const CubicPisotUnit& unit, Op op, HMode mode = HMode::AutomatonRefined);
/// Same, from precomputed inputs.
int hk_upper(const HKInputs& inputs, Op op);

struct ClosedFormBound {
    int upper = 0;
    std::string formula;
};

/// Floor of the family's closed-form logarithmic bound (strict inequality), evaluated exactly.
/// `b` is the family parameter; the small-positive family also tries its z = a - b form and keeps the
/// smaller valid bound. `c_b` is the large-positive conjugate constant (beta' <= c_b / sqrt(a-1));
/// when absent it is taken from the conjugate estimate. Throws OutOfRange outside every validity range.
ClosedFormBound closed_form_upper(Family family, long a, long b, Op op,
                                  const std::optional<mpq_class>& c_b = std::nullopt);

}  // namespace betarith
