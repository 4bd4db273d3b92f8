#include "betarith/bounds.hpp"

#include <stdexcept>

namespace betarith {

std::string to_string(BoundMethod m) {
    switch (m) {
        case BoundMethod::HK: return "hk";
        case BoundMethod::ClosedForm: return "closed";
        case BoundMethod::Rauzy: return "rauzy";
        case BoundMethod::Witness: return "witness";
        case BoundMethod::Brute: return "brute";
    }
    return "?";
}

BoundMethod parse_bound_method(const std::string& s) {
    for (BoundMethod m : {BoundMethod::HK, BoundMethod::ClosedForm, BoundMethod::Rauzy, BoundMethod::Witness,
                          BoundMethod::Brute}) {
        if (to_string(m) == s) return m;
    }
    throw std::invalid_argument("unknown method: " + s);
}

std::string to_string(BoundStatus s) { return s == BoundStatus::Exact ? "Exact" : "Range"; }

namespace {

void add_lower_witness(BoundsReport& r) {
    try {
        Witness w = r.op == Op::Mul ? lower_mul_witness(r.unit) : lower_add_witness(r.unit);
        WitnessCheck c = verify_witness(w);
        if (c.pass) {
            r.lower = static_cast<int>(w.claimed_fraction);
            r.lower_source = "witness";
        } else {
            r.verified = false;
        }
        r.witness = std::move(w);
        r.witness_check = std::move(c);
    } catch (const FamilyUnsupported&) {
    } catch (const OutOfRange&) {
    }
}

void add_brute(BoundsReport& r, const BoundsOptions& opts) {
    const Op op = r.op == Op::Sub ? Op::Add : r.op;
    BruteForceResult b = brute_force_L(r.unit, op, opts.depth, opts.step_budget, opts.threads);
    if (static_cast<int>(b.best) > r.lower) {
        r.lower = static_cast<int>(b.best);
        r.lower_source = "brute";
    }
    r.brute = std::move(b);
}

void use_hk(BoundsReport& r, const BoundsOptions& opts) {
    HKBound hk = hk_upper(r.unit, r.op, opts.h_mode);
    r.upper = hk.upper;
    r.upper_method = BoundMethod::HK;
    r.upper_detail = "conjugate " + hk.inputs.conj_value.to_string(6) + ", H " + hk.inputs.H.to_string(6) + " (" +
                     to_string(opts.h_mode) + "), K " + std::to_string(hk.inputs.K);
    r.hk = std::move(hk);
}

void use_closed(BoundsReport& r, const BoundsOptions& opts) {
    ClosedFormBound c = closed_form_upper(r.unit.family(), r.unit.a(), r.unit.b(), r.op, opts.c_b);
    r.upper = c.upper;
    r.upper_method = BoundMethod::ClosedForm;
    r.upper_detail = c.formula;
}

void use_rauzy(BoundsReport& r, const BoundsOptions& opts) {
    if (r.op == Op::Mul) throw FamilyUnsupported("the norm search bounds sums only");
    RauzyBound b = rauzy_upper_add(r.unit, opts.l_max, opts.threads);
    r.upper = b.upper;
    r.upper_method = BoundMethod::Rauzy;
    const NormSearchResult& last = b.levels.back();
    r.upper_detail = "level " + std::to_string(last.l) + " min norm " + last.min_norm.to_string(4) + " > 3H " +
                     b.three_h.to_string(4);
    r.rauzy = std::move(b);
}

}  // namespace

BoundsReport compute_bounds(const CubicPisotUnit& unit, Op op, const BoundsOptions& opts) {
    BoundsReport r(unit, op);
    add_lower_witness(r);
    const std::optional<BoundMethod> m = opts.method;
    if (m == BoundMethod::Brute) add_brute(r, opts);

    if (m == BoundMethod::HK) {
        use_hk(r, opts);
    } else if (m == BoundMethod::ClosedForm) {
        use_closed(r, opts);
    } else if (m == BoundMethod::Rauzy) {
        use_rauzy(r, opts);
    } else if (unit.family() == Family::TwoNegative) {
        if (op != Op::Mul && unit.z()) use_rauzy(r, opts);
    } else {
        use_hk(r, opts);
    }
    return r;
}

}  // namespace betarith
