#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace betarith {

/// Closed interval [lo, hi] with MPFR endpoints rounded outward on every operation.
/// The working precision of a result is the larger of its operands' precisions.
class DyadicInterval {
public:
    static constexpr mpfr_prec_t kDefaultPrecision = 128;

    explicit DyadicInterval(mpfr_prec_t prec = kDefaultPrecision);
    DyadicInterval(long value, mpfr_prec_t prec);
    DyadicInterval(const mpz_class& value, mpfr_prec_t prec);
    /// Encloses [lo, hi]; endpoints are rounded outward to the working precision.
    DyadicInterval(const mpq_class& lo, const mpq_class& hi, mpfr_prec_t prec);
    /// Encloses [m / 2^k, (m + 1) / 2^k].
    static DyadicInterval from_dyadic_bracket(const mpz_class& m, unsigned long k, mpfr_prec_t prec);

    DyadicInterval(const DyadicInterval& other);
    DyadicInterval(DyadicInterval&& other) noexcept;
    DyadicInterval& operator=(const DyadicInterval& other);
    DyadicInterval& operator=(DyadicInterval&& other) noexcept;
    ~DyadicInterval();

    mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }
    mpfr_srcptr lo() const { return lo_; }
    mpfr_srcptr hi() const { return hi_; }

    double lower() const;  // rounded toward -inf
    double upper() const;  // rounded toward +inf
    double width() const;  // upper bound on hi - lo
    double mid() const;

    /// +1 or -1 when the whole interval lies strictly on one side of zero, 0 otherwise.
    int strict_sign() const;
    bool contains_zero() const;
    bool contains(const mpq_class& q) const;
    bool subset_of(const DyadicInterval& other) const;
    bool disjoint_from(const DyadicInterval& other) const;

    mpz_class floor_lo() const;
    mpz_class floor_hi() const;

    DyadicInterval operator-() const;
    friend DyadicInterval operator+(const DyadicInterval& x, const DyadicInterval& y);
    friend DyadicInterval operator-(const DyadicInterval& x, const DyadicInterval& y);
    friend DyadicInterval operator*(const DyadicInterval& x, const DyadicInterval& y);
    /// Throws std::domain_error when y contains zero.
    friend DyadicInterval operator/(const DyadicInterval& x, const DyadicInterval& y);

    DyadicInterval& operator+=(const DyadicInterval& y) { return *this = *this + y; }
    DyadicInterval& operator*=(const DyadicInterval& y) { return *this = *this * y; }

    DyadicInterval abs() const;
    DyadicInterval sqr() const;
    DyadicInterval sqrt() const;  // requires lo >= 0 after clamping
    DyadicInterval pow(unsigned long n) const;
    DyadicInterval inverse() const;
    DyadicInterval with_precision(mpfr_prec_t prec) const;

    /// Lower endpoint rounded down to `decimals` places, e.g. "28.2983".
    std::string lower_decimal(int decimals) const;
    /// Upper endpoint rounded up to `decimals` places.
    std::string upper_decimal(int decimals) const;
    /// "[lo, hi]" with outward decimal rounding.
    std::string to_string(int decimals = 6) const;

private:
    mpfr_t lo_;
    mpfr_t hi_;
};

DyadicInterval hull(const DyadicInterval& x, const DyadicInterval& y);
DyadicInterval max(const DyadicInterval& x, const DyadicInterval& y);
DyadicInterval min(const DyadicInterval& x, const DyadicInterval& y);

}  // namespace betarith
