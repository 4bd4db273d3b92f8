#pragma once

#include <gmpxx.h>

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "betarith/errors.hpp"
#include "betarith/interval.hpp"

namespace betarith {

/// Monic cubic X^3 + p2 X^2 + p1 X + p0.
struct CubicPolynomial {
    long p2 = 0;
    long p1 = 0;
    long p0 = 0;

    mpq_class evaluate(const mpq_class& x) const;
    /// "X^3-5X^2-5X-1"
    std::string to_string() const;

    friend bool operator==(const CubicPolynomial&, const CubicPolynomial&) = default;
};

enum class Family { TwoPositive, SmallPositive, LargePositive, TwoNegative };
enum class RejectReason { NotUnit, Reducible, NotPisot, ComplexConjugates };

std::string to_string(Family family);
std::string to_string(RejectReason reason);
/// Closure properties of fin(beta) known for the family: "(F)", "(PF)" or "none".
std::string property_status(Family family);

struct Rejection {
    RejectReason reason;
    std::string detail;
};

class Rejected : public Error {
public:
    explicit Rejected(Rejection r) : Error(to_string(r.reason) + ": " + r.detail), rejection_(std::move(r)) {}
    const Rejection& rejection() const noexcept { return rejection_; }

private:
    Rejection rejection_;
};

/// Element c0 + c1*beta + c2*beta^2 of Z[beta].
struct ZBeta {
    mpz_class c0 = 0;
    mpz_class c1 = 0;
    mpz_class c2 = 0;

    ZBeta() = default;
    ZBeta(mpz_class a0, mpz_class a1 = 0, mpz_class a2 = 0)
        : c0(std::move(a0)), c1(std::move(a1)), c2(std::move(a2)) {}
    static ZBeta integer(long n) { return ZBeta(n); }

    bool is_zero() const { return sgn(c0) == 0 && sgn(c1) == 0 && sgn(c2) == 0; }
    bool is_integer() const { return sgn(c1) == 0 && sgn(c2) == 0; }
    std::string to_string() const;

    friend bool operator==(const ZBeta& x, const ZBeta& y) {
        return x.c0 == y.c0 && x.c1 == y.c1 && x.c2 == y.c2;
    }
    friend ZBeta operator+(const ZBeta& x, const ZBeta& y) { return {x.c0 + y.c0, x.c1 + y.c1, x.c2 + y.c2}; }
    friend ZBeta operator-(const ZBeta& x, const ZBeta& y) { return {x.c0 - y.c0, x.c1 - y.c1, x.c2 - y.c2}; }
    ZBeta operator-() const { return {-c0, -c1, -c2}; }
    friend ZBeta operator*(long k, const ZBeta& x) { return {k * x.c0, k * x.c1, k * x.c2}; }
};

ZBeta zb_add(const ZBeta& x, const ZBeta& y);
ZBeta zb_sub(const ZBeta& x, const ZBeta& y);
ZBeta zb_mul(const CubicPolynomial& poly, const ZBeta& x, const ZBeta& y);
ZBeta zb_mul_beta(const CubicPolynomial& poly, const ZBeta& x);
/// Requires |p0| = 1.
ZBeta zb_mul_beta_inv(const CubicPolynomial& poly, const ZBeta& x);
/// Sum of the three conjugates of x.
mpz_class zb_trace(const CubicPolynomial& poly, const ZBeta& x);

mpz_class discriminant(const CubicPolynomial& poly);

/// Enclosures of the three real roots, dominant first then descending, each of
/// width at most 2^-width_bits. Requires three distinct real irrational roots.
std::array<DyadicInterval, 3> isolate_roots(const CubicPolynomial& poly, unsigned long width_bits);

struct PrecisionPolicy {
    mpfr_prec_t start = DyadicInterval::kDefaultPrecision;
    mpfr_prec_t cap = 4096;
};

/// Default starting precision, honouring BETARITH_PRECISION_BITS when set.
PrecisionPolicy default_precision_policy();

namespace detail {
struct RootData;
}

/// A cubic Pisot unit with three real roots, tagged with its family.
/// Cheap to copy; copies share the lazily refined root brackets.
class CubicPisotUnit {
public:
    static constexpr int kDominant = 0;

    const CubicPolynomial& poly() const;
    Family family() const { return family_; }
    long a() const { return a_; }
    long b() const { return b_; }
    /// a - b for the two-negative family with b <= a.
    std::optional<long> z() const { return z_; }
    const mpz_class& disc() const { return disc_; }
    /// floor(beta); also the largest digit.
    long floor_beta() const { return floor_beta_; }
    const PrecisionPolicy& precision() const { return policy_; }
    CubicPisotUnit with_precision(PrecisionPolicy policy) const;

    /// Enclosure of root `index` (0 dominant, then 1, 2 descending) of width <= 2^-bits.
    DyadicInterval root(int index, unsigned long bits) const;
    double root_approx(int index) const { return approx_[index]; }
    /// Index of the positive conjugate used by the HK method (the smaller one if both are positive).
    std::optional<int> positive_conjugate() const;

    DyadicInterval embed(const ZBeta& x, int index, mpfr_prec_t prec) const;
    int sign_at(const ZBeta& x, int index = kDominant) const;
    mpz_class floor_at_dominant(const ZBeta& x) const;
    /// Exact comparison of two elements at the dominant embedding.
    int compare(const ZBeta& x, const ZBeta& y) const { return sign_at(x - y); }

    ZBeta mul(const ZBeta& x, const ZBeta& y) const { return zb_mul(poly(), x, y); }
    ZBeta mul_beta(const ZBeta& x) const { return zb_mul_beta(poly(), x); }
    ZBeta mul_beta_inv(const ZBeta& x) const { return zb_mul_beta_inv(poly(), x); }
    /// beta^n for any integer n.
    ZBeta beta_pow(long n) const;

    std::string describe() const;

private:
    friend std::variant<CubicPisotUnit, Rejection> classify(const CubicPolynomial&, PrecisionPolicy);
    CubicPisotUnit() = default;

    std::shared_ptr<detail::RootData> roots_;
    Family family_ = Family::TwoPositive;
    long a_ = 0;
    long b_ = 0;
    std::optional<long> z_;
    long floor_beta_ = 0;
    mpz_class disc_;
    std::array<double, 3> approx_{};
    PrecisionPolicy policy_;
};

std::variant<CubicPisotUnit, Rejection> classify(const CubicPolynomial& poly,
                                                 PrecisionPolicy policy = default_precision_policy());
/// Throws Rejected.
CubicPisotUnit classify_or_throw(const CubicPolynomial& poly, PrecisionPolicy policy = default_precision_policy());

/// Family polynomial for (a, b), e.g. X^3-aX^2+bX-1 for the two-positive family.
CubicPolynomial family_polynomial(Family family, long a, long b);

}  // namespace betarith
