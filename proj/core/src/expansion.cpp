#include "betarith/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "greedy_core.hpp"

namespace betarith {

namespace detail {

namespace {

constexpr std::size_t kUnhashedSteps = 128;

struct I3Hash {
    std::size_t operator()(const I3& x) const noexcept {
        std::uint64_t h = static_cast<std::uint64_t>(x.c0) * 0x9E3779B97F4A7C15ULL;
        h ^= static_cast<std::uint64_t>(x.c1) + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
        h ^= static_cast<std::uint64_t>(x.c2) + 0x94D049BB133111EBULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowI3{};
    return r;
}

std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowI3{};
    return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowI3{};
    return r;
}

using ZKey = std::array<mpz_class, 3>;

struct ZKeyLess {
    bool operator()(const ZKey& x, const ZKey& y) const {
        for (std::size_t i = 0; i < 3; ++i) {
            int c = cmp(x[i], y[i]);
            if (c != 0) return c < 0;
        }
        return false;
    }
};

}  // namespace

bool to_i3(const ZBeta& x, I3& out) {
    if (!x.c0.fits_slong_p() || !x.c1.fits_slong_p() || !x.c2.fits_slong_p()) return false;
    out = {x.c0.get_si(), x.c1.get_si(), x.c2.get_si()};
    return true;
}

ZBeta to_zbeta(const I3& x) {
    return ZBeta(mpz_class(static_cast<long>(x.c0)), mpz_class(static_cast<long>(x.c1)),
                 mpz_class(static_cast<long>(x.c2)));
}

GreedyEngine::GreedyEngine(const CubicPisotUnit& unit)
    : unit_(unit), p2_(unit.poly().p2), p1_(unit.poly().p1), p0_(unit.poly().p0) {
    DyadicInterval b = unit.root(CubicPisotUnit::kDominant, 80);
    beta_ = b.mid();
    beta2_ = (b * b).mid();
    log_beta_ = std::log(beta_);
}

I3 GreedyEngine::mul_beta(const I3& x) const {
    return {mul(-p0_, x.c2), sub(x.c0, mul(p1_, x.c2)), sub(x.c1, mul(p2_, x.c2))};
}

I3 GreedyEngine::mul_beta_inv(const I3& x) const {
    const std::int64_t s = -p0_;
    return {add(x.c1, mul(mul(s, p1_), x.c0)), add(x.c2, mul(mul(s, p2_), x.c0)), mul(s, x.c0)};
}

std::int64_t GreedyEngine::floor(const I3& x) const {
    if (x.c1 == 0 && x.c2 == 0) return x.c0;
    const double c0 = static_cast<double>(x.c0), c1 = static_cast<double>(x.c1), c2 = static_cast<double>(x.c2);
    const double v = c0 + c1 * beta_ + c2 * beta2_;
    const double err = (std::fabs(c0) + std::fabs(c1) * beta_ + std::fabs(c2) * beta2_) * 0x1p-45 + 0x1p-1000;
    const double lo = std::floor(v - err), hi = std::floor(v + err);
    if (lo == hi && std::fabs(lo) < 0x1p52) return static_cast<std::int64_t>(lo);
    mpz_class f = unit_.floor_at_dominant(to_zbeta(x));
    if (!f.fits_slong_p()) throw OverflowI3{};
    return f.get_si();
}

int GreedyEngine::sign(const I3& x) const {
    if (x.c0 == 0 && x.c1 == 0 && x.c2 == 0) return 0;
    const double c0 = static_cast<double>(x.c0), c1 = static_cast<double>(x.c1), c2 = static_cast<double>(x.c2);
    const double v = c0 + c1 * beta_ + c2 * beta2_;
    const double err = (std::fabs(c0) + std::fabs(c1) * beta_ + std::fabs(c2) * beta2_) * 0x1p-45;
    if (v - err > 0) return 1;
    if (v + err < 0) return -1;
    return unit_.sign_at(to_zbeta(x));
}

GreedyRun GreedyEngine::run_fast(const I3& r0, std::size_t budget) const {
    GreedyRun out;
    std::vector<I3> log{r0};
    std::unordered_map<I3, std::size_t, I3Hash> seen;
    I3 r = r0;
    if (r.c0 == 0 && r.c1 == 0 && r.c2 == 0) return out;
    while (true) {
        if (out.digits.size() >= budget) {
            out.status = GreedyStatus::BudgetExceeded;
            return out;
        }
        I3 s = mul_beta(r);
        const std::int64_t d = floor(s);
        if (d < 0 || d > (1LL << 30)) throw Error("greedy: digit out of range, remainder left [0,1)");
        out.digits.push_back(static_cast<int>(d));
        r = {sub(s.c0, d), s.c1, s.c2};
        if (r.c0 == 0 && r.c1 == 0 && r.c2 == 0) return out;
        const std::size_t j = log.size();
        log.push_back(r);
        if (j == kUnhashedSteps) {
            // switch to hashed detection, catching any repeat among the first steps
            for (std::size_t i = 0; i <= j; ++i) {
                auto [it, fresh] = seen.emplace(log[i], i);
                if (!fresh) {
                    out.preperiod = it->second;
                    out.period = i - it->second;
                    out.digits.resize(i);
                    out.status = GreedyStatus::EventuallyPeriodic;
                    return out;
                }
            }
        } else if (j > kUnhashedSteps) {
            auto [it, fresh] = seen.emplace(r, j);
            if (!fresh) {
                out.preperiod = it->second;
                out.period = j - it->second;
                out.status = GreedyStatus::EventuallyPeriodic;
                return out;
            }
        }
    }
}

GreedyRun GreedyEngine::run_exact(const ZBeta& r0, std::size_t budget) const {
    GreedyRun out;
    std::map<ZKey, std::size_t, ZKeyLess> seen;
    ZBeta r = r0;
    if (r.is_zero()) return out;
    seen.emplace(ZKey{r.c0, r.c1, r.c2}, 0);
    while (true) {
        if (out.digits.size() >= budget) {
            out.status = GreedyStatus::BudgetExceeded;
            return out;
        }
        ZBeta s = unit_.mul_beta(r);
        mpz_class d = unit_.floor_at_dominant(s);
        if (sgn(d) < 0 || !d.fits_sint_p()) throw Error("greedy: digit out of range, remainder left [0,1)");
        out.digits.push_back(static_cast<int>(d.get_si()));
        s.c0 -= d;
        r = std::move(s);
        if (r.is_zero()) return out;
        const std::size_t j = out.digits.size();
        auto [it, fresh] = seen.emplace(ZKey{r.c0, r.c1, r.c2}, j);
        if (!fresh) {
            out.preperiod = it->second;
            out.period = j - it->second;
            out.status = GreedyStatus::EventuallyPeriodic;
            return out;
        }
    }
}

GreedyRun GreedyEngine::run(const ZBeta& r0, std::size_t budget) const {
    I3 fast;
    if (to_i3(r0, fast)) {
        try {
            return run_fast(fast, budget);
        } catch (const OverflowI3&) {
        }
    }
    return run_exact(r0, budget);
}

long GreedyEngine::shift_into_unit_interval(const ZBeta& x, ZBeta& scaled) const {
    // Estimate k from the magnitude, then settle it with exact floor tests.
    DyadicInterval v = unit_.embed(x, CubicPisotUnit::kDominant, 64);
    long k = 0;
    if (v.lower() > 0) k = std::max(0L, static_cast<long>(std::floor(std::log(v.lower()) / log_beta_)) + 1);
    scaled = unit_.beta_pow(-k);
    scaled = unit_.mul(scaled, x);
    while (sgn(unit_.floor_at_dominant(scaled)) > 0) {
        scaled = unit_.mul_beta_inv(scaled);
        ++k;
    }
    while (k > 0) {
        ZBeta up = unit_.mul_beta(scaled);
        if (sgn(unit_.floor_at_dominant(up)) > 0) break;
        scaled = std::move(up);
        --k;
    }
    return k;
}

bool GreedyEngine::expand_fast(const I3& x, std::size_t budget, Shaped& out) const {
    try {
        const int s = sign(x);
        if (s == 0) {
            out.zero = true;
            return true;
        }
        I3 m = s < 0 ? I3{sub(0, x.c0), sub(0, x.c1), sub(0, x.c2)} : x;
        const double v = static_cast<double>(m.c0) + static_cast<double>(m.c1) * beta_ +
                         static_cast<double>(m.c2) * beta2_;
        long k = v > 1.0 ? std::max(0L, static_cast<long>(std::floor(std::log(v) / log_beta_)) + 1) : 0;
        for (long i = 0; i < k; ++i) m = mul_beta_inv(m);
        while (floor(m) > 0) {
            m = mul_beta_inv(m);
            ++k;
        }
        while (k > 0) {
            I3 up = mul_beta(m);
            if (floor(up) > 0) break;
            m = up;
            --k;
        }
        out.run = run_fast(m, budget);
        out.k = k;
        out.negative = s < 0;
        return true;
    } catch (const OverflowI3&) {
        return false;
    }
}

I3 GreedyEngine::sum(const I3& x, const I3& y) const {
    return {detail::add(x.c0, y.c0), detail::add(x.c1, y.c1), detail::add(x.c2, y.c2)};
}

I3 GreedyEngine::difference(const I3& x, const I3& y) const {
    return {detail::sub(x.c0, y.c0), detail::sub(x.c1, y.c1), detail::sub(x.c2, y.c2)};
}

I3 GreedyEngine::product(const I3& x, const I3& y) const {
    using detail::add;
    using detail::mul;
    using detail::sub;
    const std::int64_t d0 = mul(x.c0, y.c0);
    std::int64_t d1 = add(mul(x.c0, y.c1), mul(x.c1, y.c0));
    std::int64_t d2 = add(add(mul(x.c0, y.c2), mul(x.c1, y.c1)), mul(x.c2, y.c0));
    std::int64_t d3 = add(mul(x.c1, y.c2), mul(x.c2, y.c1));
    const std::int64_t d4 = mul(x.c2, y.c2);
    d3 = sub(d3, mul(p2_, d4));
    d2 = sub(d2, mul(p1_, d4));
    d1 = sub(d1, mul(p0_, d4));
    return {sub(d0, mul(p0_, d3)), sub(d1, mul(p1_, d3)), sub(d2, mul(p2_, d3))};
}

bool GreedyEngine::summarize(const I3& x, std::size_t budget, Summary& out) const {
    constexpr std::size_t kBuffer = 64;
    try {
        const int s = sign(x);
        out = Summary{};
        if (s == 0) return true;
        I3 m = s < 0 ? I3{detail::sub(0, x.c0), detail::sub(0, x.c1), detail::sub(0, x.c2)} : x;
        const double v = static_cast<double>(m.c0) + static_cast<double>(m.c1) * beta_ +
                         static_cast<double>(m.c2) * beta2_;
        long k = v > 1.0 ? std::max(0L, static_cast<long>(std::floor(std::log(v) / log_beta_)) + 1) : 0;
        for (long i = 0; i < k; ++i) m = mul_beta_inv(m);
        while (floor(m) > 0) {
            m = mul_beta_inv(m);
            ++k;
        }
        while (k > 0) {
            I3 up = mul_beta(m);
            if (floor(up) > 0) break;
            m = up;
            --k;
        }
        std::array<I3, kBuffer> log;
        std::size_t n = 0;
        log[n++] = m;
        I3 r = m;
        std::size_t digits = 0;
        while (!(r.c0 == 0 && r.c1 == 0 && r.c2 == 0)) {
            if (digits >= budget) {
                out.status = GreedyStatus::BudgetExceeded;
                return true;
            }
            I3 t = mul_beta(r);
            const std::int64_t d = floor(t);
            r = {detail::sub(t.c0, d), t.c1, t.c2};
            ++digits;
            for (std::size_t i = 0; i < n; ++i) {
                if (log[i] == r) {
                    out.status = GreedyStatus::EventuallyPeriodic;
                    return true;
                }
            }
            if (n == kBuffer) return false;
            log[n++] = r;
        }
        out.fractional_length = digits > static_cast<std::size_t>(k) ? digits - static_cast<std::size_t>(k) : 0;
        return true;
    } catch (const OverflowI3&) {
        return false;
    }
}

GreedyEngine::Shaped GreedyEngine::expand(const ZBeta& x, std::size_t budget) const {
    Shaped out;
    I3 fast;
    if (to_i3(x, fast) && expand_fast(fast, budget, out)) return out;
    out = Shaped{};
    const int s = unit_.sign_at(x);
    if (s == 0) {
        out.zero = true;
        return out;
    }
    ZBeta scaled;
    out.k = shift_into_unit_interval(s < 0 ? -x : x, scaled);
    out.negative = s < 0;
    out.run = run(scaled, budget);
    return out;
}

}  // namespace detail

namespace {

int digit_at(const detail::GreedyRun& run, std::size_t i) {
    if (i < run.digits.size() && (run.period == 0 || i < run.preperiod + run.period)) return run.digits[i];
    if (run.period == 0) return 0;
    return run.digits[run.preperiod + (i - run.preperiod) % run.period];
}

GreedyOutcome assemble(const detail::GreedyRun& run, long k, bool negative) {
    GreedyOutcome out;
    out.status = run.status;
    DigitString& d = out.digits;
    d.negative = negative;
    const std::size_t ku = static_cast<std::size_t>(k);
    if (run.status == GreedyStatus::EventuallyPeriodic && run.preperiod < ku) {
        for (std::size_t i = 0; i < ku; ++i) d.int_digits.push_back(digit_at(run, i));
        for (std::size_t i = 0; i < run.period; ++i) d.period.push_back(digit_at(run, ku + i));
    } else {
        const std::size_t stop = run.status == GreedyStatus::EventuallyPeriodic ? run.preperiod : run.digits.size();
        for (std::size_t i = 0; i < std::max(ku, stop); ++i) {
            const int digit = i < run.digits.size() ? run.digits[i] : 0;
            if (i < ku) {
                d.int_digits.push_back(digit);
            } else {
                d.frac_digits.push_back(digit);
            }
        }
        if (run.status == GreedyStatus::EventuallyPeriodic) {
            d.period.assign(run.digits.begin() + static_cast<std::ptrdiff_t>(run.preperiod),
                            run.digits.begin() + static_cast<std::ptrdiff_t>(run.preperiod + run.period));
        }
    }
    if (run.status != GreedyStatus::BudgetExceeded) d.canonicalize();
    if (run.status == GreedyStatus::Finite) out.fractional_length = d.fractional_length();
    return out;
}

}  // namespace

GreedyOutcome detail::expand_with(const GreedyEngine& engine, const ZBeta& x, std::size_t step_budget) {
    detail::GreedyEngine::Shaped shaped = engine.expand(x, step_budget);
    if (shaped.zero) {
        GreedyOutcome out;
        out.fractional_length = 0;
        return out;
    }
    return assemble(shaped.run, shaped.k, shaped.negative);
}

GreedyOutcome greedy_digits(const CubicPisotUnit& unit, const ZBeta& x, std::size_t step_budget) {
    if (unit.sign_at(x) < 0 || sgn(unit.floor_at_dominant(x)) != 0) {
        throw std::invalid_argument("greedy_digits: input must lie in [0, 1)");
    }
    detail::GreedyEngine engine(unit);
    return assemble(engine.run(x, step_budget), 0, false);
}

GreedyOutcome greedy_expansion(const CubicPisotUnit& unit, const ZBeta& x, std::size_t step_budget) {
    detail::GreedyEngine engine(unit);
    return detail::expand_with(engine, x, step_budget);
}

DigitString renyi_d1(const CubicPisotUnit& unit, std::size_t step_budget) {
    detail::GreedyEngine engine(unit);
    detail::GreedyRun run = engine.run(ZBeta(1), step_budget);
    if (run.status == GreedyStatus::BudgetExceeded) throw Undetermined("renyi_d1: step budget exhausted");
    DigitString d;
    if (run.status == GreedyStatus::Finite) {
        d.frac_digits = run.digits;
    } else {
        d.frac_digits.assign(run.digits.begin(), run.digits.begin() + static_cast<std::ptrdiff_t>(run.preperiod));
        d.period.assign(run.digits.begin() + static_cast<std::ptrdiff_t>(run.preperiod), run.digits.end());
    }
    d.canonicalize();
    return d;
}

DigitString dbeta_formula(const CubicPisotUnit& unit) {
    const int a = static_cast<int>(unit.a()), b = static_cast<int>(unit.b());
    DigitString d;
    switch (unit.family()) {
        case Family::TwoPositive:
            d.frac_digits = {a - 1, a - b - 1};
            d.period = {a - b};
            break;
        case Family::SmallPositive:
            d.frac_digits = {a};
            d.period = {b - 1, a - 1};
            break;
        case Family::LargePositive:
            d.frac_digits = {a - 1, a - b - 1};
            d.period = {a - b - 2};
            break;
        case Family::TwoNegative:
            if (b == a + 1) {
                d.frac_digits = {a + 1, 0, 0, a, 1};
            } else {
                d.frac_digits = {a, b, 1};
            }
            break;
    }
    d.canonicalize();
    return d;
}

DigitString dstar_from(const DigitString& d1) {
    if (!d1.period.empty()) return d1;
    if (d1.frac_digits.empty()) throw std::invalid_argument("dstar_from: empty expansion");
    DigitString d;
    d.period = d1.frac_digits;
    d.period.back() -= 1;
    d.canonicalize();
    return d;
}

DigitString dstar(const CubicPisotUnit& unit) { return dstar_from(renyi_d1(unit)); }

ParryAutomaton::ParryAutomaton(const DigitString& dstar) {
    if (dstar.period.empty()) throw std::invalid_argument("ParryAutomaton: expansion must be infinite");
    t_ = dstar.frac_digits;
    t_.insert(t_.end(), dstar.period.begin(), dstar.period.end());
    preperiod_ = static_cast<int>(dstar.frac_digits.size());
}

bool is_admissible(const DigitString& digits, const DigitString& dstar) {
    const ParryAutomaton automaton(dstar);
    const int top = automaton.max_digit();
    auto check_alphabet = [top](const std::vector<int>& ds) {
        for (int d : ds) {
            if (d < 0 || d > top) throw AlphabetViolation("digit " + std::to_string(d) + " outside {0.." +
                                                          std::to_string(top) + "}");
        }
    };
    check_alphabet(digits.int_digits);
    check_alphabet(digits.frac_digits);
    check_alphabet(digits.period);

    int state = 0;
    for (const auto* block : {&digits.int_digits, &digits.frac_digits}) {
        for (int d : *block) {
            state = automaton.step(state, d);
            if (state < 0) return false;
        }
    }
    const std::vector<int> zero{0};
    const std::vector<int>& tail = digits.period.empty() ? zero : digits.period;
    // Walk whole tail blocks until a block-start state repeats; the cycle must contain a
    // transition on a digit strictly below its threshold, otherwise some suffix equals d*.
    std::vector<int> first_block(static_cast<std::size_t>(automaton.states()), -1);
    std::vector<bool> block_strict;
    for (int block = 0;; ++block) {
        if (first_block[static_cast<std::size_t>(state)] >= 0) {
            const int from = first_block[static_cast<std::size_t>(state)];
            for (int i = from; i < block; ++i) {
                if (block_strict[static_cast<std::size_t>(i)]) return true;
            }
            return false;
        }
        first_block[static_cast<std::size_t>(state)] = block;
        bool strict = false;
        for (int d : tail) {
            if (d < automaton.threshold(state)) strict = true;
            state = automaton.step(state, d);
            if (state < 0) return false;
        }
        block_strict.push_back(strict);
    }
}

ZBeta value_of(const DigitString& digits, const CubicPisotUnit& unit) {
    if (!digits.period.empty()) throw std::invalid_argument("value_of: periodic digit string");
    const long top = unit.floor_beta();
    auto check = [top](int d) {
        if (d < 0 || d > top) throw AlphabetViolation("digit " + std::to_string(d) + " outside {0.." +
                                                      std::to_string(top) + "}");
    };
    ZBeta acc;
    for (int d : digits.int_digits) {
        check(d);
        acc = unit.mul_beta(acc);
        acc.c0 += d;
    }
    ZBeta frac;
    for (auto it = digits.frac_digits.rbegin(); it != digits.frac_digits.rend(); ++it) {
        check(*it);
        frac.c0 += *it;
        frac = unit.mul_beta_inv(frac);
    }
    acc = acc + frac;
    return digits.negative ? -acc : acc;
}

}  // namespace betarith
