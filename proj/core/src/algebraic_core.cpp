#include "betarith/algebraic_core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <vector>

namespace betarith {

namespace {

using Poly = std::vector<mpq_class>;  // ascending coefficients

Poly to_poly(const CubicPolynomial& p) { return {mpq_class(p.p0), mpq_class(p.p1), mpq_class(p.p2), mpq_class(1)}; }

void trim(Poly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Poly derivative(const Poly& p) {
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
    trim(d);
    return d;
}

Poly remainder(Poly num, const Poly& den) {
    while (num.size() >= den.size() && !num.empty()) {
        mpq_class f = num.back() / den.back();
        std::size_t shift = num.size() - den.size();
        for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= f * den[i];
        num.pop_back();
        trim(num);
    }
    return num;
}

mpq_class eval(const Poly& p, const mpq_class& x) {
    mpq_class r = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
    return r;
}

std::vector<Poly> sturm_chain(const CubicPolynomial& cp) {
    std::vector<Poly> chain{to_poly(cp)};
    chain.push_back(derivative(chain[0]));
    while (chain.back().size() > 1) {
        Poly r = remainder(chain[chain.size() - 2], chain.back());
        for (auto& c : r) c = -c;
        if (r.empty()) break;
        chain.push_back(std::move(r));
    }
    return chain;
}

int variations(const std::vector<Poly>& chain, const mpq_class& x) {
    int count = 0;
    int last = 0;
    for (const auto& p : chain) {
        int s = sgn(eval(p, x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

// Sign of P(m / 2^k), computed on the scaled integer 2^(3k) P(m / 2^k).
int sign_at_dyadic(const CubicPolynomial& p, const mpz_class& m, unsigned long k) {
    mpz_class s = 1;
    s <<= k;
    mpz_class acc = m + p.p2 * s;
    acc = acc * m + p.p1 * s * s;
    acc = acc * m + p.p0 * s * s * s;
    return sgn(acc);
}

}  // namespace

namespace detail {

/// Root r lies in (m / 2^k, (m + 1) / 2^k); refined by exact bisection under a lock.
struct RootData {
    CubicPolynomial poly;
    struct Root {
        std::mutex mutex;
        mpz_class m;
        unsigned long k = 0;
        int sign_lo = 0;  // sign of P at the left end
    };
    std::array<Root, 3> roots;

    void refine_to(Root& r, unsigned long bits) {
        while (r.k < bits) {
            mpz_class mid = 2 * r.m + 1;
            int s = sign_at_dyadic(poly, mid, r.k + 1);
            if (s == 0) throw Error("refine: rational root encountered");
            if (s == r.sign_lo) {
                r.m = mid;
            } else {
                r.m = 2 * r.m;
            }
            r.k += 1;
        }
    }

    std::pair<mpz_class, unsigned long> bracket(int index, unsigned long bits) {
        Root& r = roots[static_cast<std::size_t>(index)];
        std::lock_guard<std::mutex> lock(r.mutex);
        refine_to(r, bits);
        return {r.m, r.k};
    }
};

}  // namespace detail

mpq_class CubicPolynomial::evaluate(const mpq_class& x) const {
    return ((x + p2) * x + p1) * x + p0;
}

std::string CubicPolynomial::to_string() const {
    std::ostringstream os;
    os << "X^3";
    auto term = [&](long c, const char* mono) {
        if (c == 0) return;
        os << (c < 0 ? "-" : "+");
        long m = std::labs(c);
        if (*mono == '\0') {
            os << m;
        } else {
            if (m != 1) os << m;
            os << mono;
        }
    };
    term(p2, "X^2");
    term(p1, "X");
    term(p0, "");
    return os.str();
}

std::string to_string(Family family) {
    switch (family) {
        case Family::TwoPositive: return "TwoPositive";
        case Family::SmallPositive: return "SmallPositive";
        case Family::LargePositive: return "LargePositive";
        case Family::TwoNegative: return "TwoNegative";
    }
    return "?";
}

std::string to_string(RejectReason reason) {
    switch (reason) {
        case RejectReason::NotUnit: return "NotUnit";
        case RejectReason::Reducible: return "Reducible";
        case RejectReason::NotPisot: return "NotPisot";
        case RejectReason::ComplexConjugates: return "ComplexConjugates";
    }
    return "?";
}

std::string property_status(Family family) {
    switch (family) {
        case Family::TwoPositive:
        case Family::SmallPositive: return "none";
        case Family::LargePositive: return "(PF)";
        case Family::TwoNegative: return "(F)";
    }
    return "?";
}

mpz_class discriminant(const CubicPolynomial& poly) {
    const mpz_class b = poly.p2, c = poly.p1, d = poly.p0;
    return 18 * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * c * c * c - 27 * d * d;
}

namespace {

// Disjoint dyadic brackets [m / 2^k, (m + 1) / 2^k], k >= 0, one root each, descending.
struct DyadicBracket {
    mpz_class m;
    unsigned long k;
};

std::vector<DyadicBracket> sturm_isolate(const CubicPolynomial& poly) {
    auto chain = sturm_chain(poly);
    long bound = 1 + std::max({std::labs(poly.p2), std::labs(poly.p1), std::labs(poly.p0)});
    unsigned long e = 0;
    while ((1L << e) < bound) ++e;
    // Unit cells [m, m + 1] covering [-2^e, 2^e], then bisected while they hold several roots.
    std::vector<DyadicBracket> work;
    for (long m = -(1L << e); m < (1L << e); ++m) work.push_back({mpz_class(m), 0});
    std::vector<DyadicBracket> out;
    while (!work.empty()) {
        DyadicBracket br = work.back();
        work.pop_back();
        mpq_class lo(br.m, mpz_class(1) << br.k);
        mpq_class hi(mpz_class(br.m + 1), mpz_class(1) << br.k);
        lo.canonicalize();
        hi.canonicalize();
        int n = variations(chain, lo) - variations(chain, hi);
        if (n == 0) continue;
        if (n == 1 && sgn(poly.evaluate(lo)) != 0 && sgn(poly.evaluate(hi)) != 0) {
            out.push_back(br);
            continue;
        }
        if (br.k > 4096) throw WidthUnreachable("root isolation did not separate roots");
        work.push_back({2 * br.m, br.k + 1});
        work.push_back({2 * br.m + 1, br.k + 1});
    }
    std::sort(out.begin(), out.end(), [](const DyadicBracket& x, const DyadicBracket& y) {
        return mpq_class(x.m, mpz_class(1) << x.k) > mpq_class(y.m, mpz_class(1) << y.k);
    });
    return out;
}

void seed_root(const CubicPolynomial& poly, const DyadicBracket& br, detail::RootData::Root& r) {
    r.m = br.m;
    r.k = br.k;
    r.sign_lo = sign_at_dyadic(poly, br.m, br.k);
}

}  // namespace

std::array<DyadicInterval, 3> isolate_roots(const CubicPolynomial& poly, unsigned long width_bits) {
    auto brackets = sturm_isolate(poly);
    if (brackets.size() != 3) throw Error("isolate_roots: polynomial does not have three distinct real roots");
    detail::RootData data;
    data.poly = poly;
    std::array<DyadicInterval, 3> out;
    for (int i = 0; i < 3; ++i) {
        auto& r = data.roots[static_cast<std::size_t>(i)];
        seed_root(poly, brackets[static_cast<std::size_t>(i)], r);
        auto [m, k] = data.bracket(i, width_bits);
        out[static_cast<std::size_t>(i)] =
            DyadicInterval::from_dyadic_bracket(m, k, static_cast<mpfr_prec_t>(k + 16));
    }
    return out;
}

PrecisionPolicy default_precision_policy() {
    PrecisionPolicy policy;
    if (const char* env = std::getenv("BETARITH_PRECISION_BITS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 32 && v <= policy.cap) policy.start = static_cast<mpfr_prec_t>(v);
    }
    return policy;
}

const CubicPolynomial& CubicPisotUnit::poly() const { return roots_->poly; }

CubicPisotUnit CubicPisotUnit::with_precision(PrecisionPolicy policy) const {
    CubicPisotUnit copy = *this;
    copy.policy_ = policy;
    return copy;
}

DyadicInterval CubicPisotUnit::root(int index, unsigned long bits) const {
    if (index < 0 || index > 2) throw std::out_of_range("root index");
    auto [m, k] = roots_->bracket(index, bits);
    return DyadicInterval::from_dyadic_bracket(m, k, static_cast<mpfr_prec_t>(k + 16));
}

std::optional<int> CubicPisotUnit::positive_conjugate() const {
    if (approx_[2] > 0) return 2;
    if (approx_[1] > 0) return 1;
    return std::nullopt;
}

DyadicInterval CubicPisotUnit::embed(const ZBeta& x, int index, mpfr_prec_t prec) const {
    if (x.is_integer()) return DyadicInterval(x.c0, prec);
    // A few guard bits absorb the coefficient magnitudes.
    const unsigned long guard = 16 + mpz_sizeinbase(x.c1.get_mpz_t(), 2) + mpz_sizeinbase(x.c2.get_mpz_t(), 2);
    const mpfr_prec_t work = prec + static_cast<mpfr_prec_t>(guard);
    DyadicInterval rho = root(index, static_cast<unsigned long>(work)).with_precision(work);
    DyadicInterval acc = DyadicInterval(x.c2, work) * rho + DyadicInterval(x.c1, work);
    acc = acc * rho + DyadicInterval(x.c0, work);
    return acc.with_precision(prec);
}

int CubicPisotUnit::sign_at(const ZBeta& x, int index) const {
    if (x.is_zero()) return 0;
    if (x.is_integer()) return sgn(x.c0);
    for (mpfr_prec_t p = policy_.start; p <= policy_.cap; p *= 2) {
        int s = embed(x, index, p).strict_sign();
        if (s != 0) return s;
    }
    throw PrecisionExhausted("sign_at: precision cap reached for " + x.to_string());
}

mpz_class CubicPisotUnit::floor_at_dominant(const ZBeta& x) const {
    if (x.is_integer()) return x.c0;
    for (mpfr_prec_t p = policy_.start; p <= policy_.cap; p *= 2) {
        DyadicInterval e = embed(x, kDominant, p);
        mpz_class lo = e.floor_lo();
        if (lo == e.floor_hi()) return lo;
    }
    throw PrecisionExhausted("floor_at_dominant: precision cap reached for " + x.to_string());
}

ZBeta CubicPisotUnit::beta_pow(long n) const {
    ZBeta r(1);
    for (long i = 0; i < n; ++i) r = mul_beta(r);
    for (long i = 0; i > n; --i) r = mul_beta_inv(r);
    return r;
}

std::string CubicPisotUnit::describe() const {
    std::ostringstream os;
    os << poly().to_string() << " " << to_string(family_) << " a=" << a_ << " b=" << b_;
    if (z_) os << " z=" << *z_;
    return os.str();
}

std::variant<CubicPisotUnit, Rejection> classify(const CubicPolynomial& poly, PrecisionPolicy policy) {
    if (std::labs(poly.p0) != 1) {
        return Rejection{RejectReason::NotUnit, "constant term must be +1 or -1"};
    }
    if (sgn(poly.evaluate(1)) == 0 || sgn(poly.evaluate(-1)) == 0) {
        return Rejection{RejectReason::Reducible, "polynomial has a rational root"};
    }
    const long a = -poly.p2;
    const long shifted = std::labs(poly.p1 + 1);
    const bool pisot = poly.p0 == -1 ? shifted < a + 1 : shifted < a - 1;
    if (!pisot) {
        return Rejection{RejectReason::NotPisot, "unit criterion |p1+1| < a" + std::string(poly.p0 == -1 ? "+1" : "-1") +
                                                     " fails"};
    }
    mpz_class disc = discriminant(poly);
    if (sgn(disc) < 0) {
        return Rejection{RejectReason::ComplexConjugates, "discriminant is negative"};
    }

    CubicPisotUnit u;
    u.roots_ = std::make_shared<detail::RootData>();
    u.roots_->poly = poly;
    u.disc_ = disc;
    u.a_ = a;
    u.policy_ = policy;
    if (poly.p0 == -1) {
        if (poly.p1 >= 2) {
            u.family_ = Family::TwoPositive;
            u.b_ = poly.p1;
        } else {
            u.family_ = Family::TwoNegative;
            u.b_ = -poly.p1;
            if (u.b_ <= a) u.z_ = a - u.b_;
        }
    } else {
        if (poly.p1 < 0) {
            u.family_ = Family::SmallPositive;
            u.b_ = -poly.p1;
        } else {
            u.family_ = Family::LargePositive;
            u.b_ = poly.p1;
        }
    }

    auto brackets = sturm_isolate(poly);
    if (brackets.size() != 3) {
        return Rejection{RejectReason::ComplexConjugates, "fewer than three real roots"};
    }
    for (int i = 0; i < 3; ++i) {
        seed_root(poly, brackets[static_cast<std::size_t>(i)], u.roots_->roots[static_cast<std::size_t>(i)]);
    }
    for (int i = 0; i < 3; ++i) {
        DyadicInterval r = u.root(i, 80);
        u.approx_[static_cast<std::size_t>(i)] = r.mid();
    }
    if (!(u.root(0, 80).lower() > 1.0) || !(std::fabs(u.approx_[1]) < 1.0) || !(std::fabs(u.approx_[2]) < 1.0)) {
        return Rejection{RejectReason::NotPisot, "root moduli violate the Pisot condition"};
    }
    u.floor_beta_ = u.root(0, 80).floor_lo().get_si();
    return u;
}

CubicPisotUnit classify_or_throw(const CubicPolynomial& poly, PrecisionPolicy policy) {
    auto r = classify(poly, policy);
    if (auto* rej = std::get_if<Rejection>(&r)) throw Rejected(*rej);
    return std::get<CubicPisotUnit>(std::move(r));
}

CubicPolynomial family_polynomial(Family family, long a, long b) {
    switch (family) {
        case Family::TwoPositive: return {-a, b, -1};
        case Family::SmallPositive: return {-a, -b, 1};
        case Family::LargePositive: return {-a, b, 1};
        case Family::TwoNegative: return {-a, -b, -1};
    }
    return {};
}

}  // namespace betarith
