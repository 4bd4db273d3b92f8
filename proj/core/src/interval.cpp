#include "betarith/interval.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace betarith {

namespace {

mpfr_prec_t join(const DyadicInterval& x, const DyadicInterval& y) {
    return std::max(x.precision(), y.precision());
}

mpq_class exact(mpfr_srcptr v) {
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), v);
    return q;
}

std::string scaled_to_decimal(const mpz_class& n, int decimals) {
    mpz_class mag = abs(n);
    std::string digits = mag.get_str();
    if (decimals > 0) {
        if (digits.size() <= static_cast<std::size_t>(decimals)) {
            digits.insert(0, static_cast<std::size_t>(decimals) + 1 - digits.size(), '0');
        }
        digits.insert(digits.size() - static_cast<std::size_t>(decimals), ".");
    }
    return (sgn(n) < 0 ? "-" : "") + digits;
}

mpz_class pow10(int decimals) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(decimals));
    return p;
}

}  // namespace

DyadicInterval::DyadicInterval(mpfr_prec_t prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

DyadicInterval::DyadicInterval(long value, mpfr_prec_t prec) : DyadicInterval(prec) {
    mpfr_set_si(lo_, value, MPFR_RNDD);
    mpfr_set_si(hi_, value, MPFR_RNDU);
}

DyadicInterval::DyadicInterval(const mpz_class& value, mpfr_prec_t prec) : DyadicInterval(prec) {
    mpfr_set_z(lo_, value.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(hi_, value.get_mpz_t(), MPFR_RNDU);
}

DyadicInterval::DyadicInterval(const mpq_class& lo, const mpq_class& hi, mpfr_prec_t prec)
    : DyadicInterval(prec) {
    if (lo > hi) throw std::invalid_argument("DyadicInterval: lo > hi");
    mpfr_set_q(lo_, lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, hi.get_mpq_t(), MPFR_RNDU);
}

DyadicInterval DyadicInterval::from_dyadic_bracket(const mpz_class& m, unsigned long k, mpfr_prec_t prec) {
    DyadicInterval r(prec);
    mpfr_set_z_2exp(r.lo_, m.get_mpz_t(), -static_cast<mpfr_exp_t>(k), MPFR_RNDD);
    mpz_class m1 = m + 1;
    mpfr_set_z_2exp(r.hi_, m1.get_mpz_t(), -static_cast<mpfr_exp_t>(k), MPFR_RNDU);
    return r;
}

DyadicInterval::DyadicInterval(const DyadicInterval& other) {
    mpfr_init2(lo_, other.precision());
    mpfr_init2(hi_, other.precision());
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

DyadicInterval::DyadicInterval(DyadicInterval&& other) noexcept {
    mpfr_init2(lo_, MPFR_PREC_MIN);
    mpfr_init2(hi_, MPFR_PREC_MIN);
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
}

DyadicInterval& DyadicInterval::operator=(const DyadicInterval& other) {
    if (this != &other) {
        mpfr_set_prec(lo_, other.precision());
        mpfr_set_prec(hi_, other.precision());
        mpfr_set(lo_, other.lo_, MPFR_RNDD);
        mpfr_set(hi_, other.hi_, MPFR_RNDU);
    }
    return *this;
}

DyadicInterval& DyadicInterval::operator=(DyadicInterval&& other) noexcept {
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
    return *this;
}

DyadicInterval::~DyadicInterval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

double DyadicInterval::lower() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double DyadicInterval::upper() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double DyadicInterval::width() const {
    mpfr_t w;
    mpfr_init2(w, precision());
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
}

double DyadicInterval::mid() const { return 0.5 * (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN)); }

int DyadicInterval::strict_sign() const {
    if (mpfr_sgn(lo_) > 0) return 1;
    if (mpfr_sgn(hi_) < 0) return -1;
    return 0;
}

bool DyadicInterval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

bool DyadicInterval::contains(const mpq_class& q) const {
    return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

bool DyadicInterval::subset_of(const DyadicInterval& other) const {
    return mpfr_cmp(other.lo_, lo_) <= 0 && mpfr_cmp(hi_, other.hi_) <= 0;
}

bool DyadicInterval::disjoint_from(const DyadicInterval& other) const {
    return mpfr_cmp(hi_, other.lo_) < 0 || mpfr_cmp(other.hi_, lo_) < 0;
}

mpz_class DyadicInterval::floor_lo() const {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), lo_, MPFR_RNDD);
    return z;
}

mpz_class DyadicInterval::floor_hi() const {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), hi_, MPFR_RNDD);
    return z;
}

DyadicInterval DyadicInterval::operator-() const {
    DyadicInterval r(precision());
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

DyadicInterval operator+(const DyadicInterval& x, const DyadicInterval& y) {
    DyadicInterval r(join(x, y));
    mpfr_add(r.lo_, x.lo_, y.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, x.hi_, y.hi_, MPFR_RNDU);
    return r;
}

DyadicInterval operator-(const DyadicInterval& x, const DyadicInterval& y) {
    DyadicInterval r(join(x, y));
    mpfr_sub(r.lo_, x.lo_, y.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, x.hi_, y.lo_, MPFR_RNDU);
    return r;
}

DyadicInterval operator*(const DyadicInterval& x, const DyadicInterval& y) {
    const mpfr_prec_t prec = join(x, y);
    DyadicInterval r(prec);
    mpfr_t t;
    mpfr_init2(t, prec);
    mpfr_srcptr xs[2] = {x.lo_, x.hi_};
    mpfr_srcptr ys[2] = {y.lo_, y.hi_};
    bool first = true;
    for (auto* a : xs) {
        for (auto* b : ys) {
            mpfr_mul(t, a, b, MPFR_RNDD);
            if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
            mpfr_mul(t, a, b, MPFR_RNDU);
            if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
            first = false;
        }
    }
    mpfr_clear(t);
    return r;
}

DyadicInterval DyadicInterval::inverse() const {
    if (contains_zero()) throw std::domain_error("DyadicInterval: division by an interval containing zero");
    DyadicInterval r(precision());
    mpfr_ui_div(r.lo_, 1, hi_, MPFR_RNDD);
    mpfr_ui_div(r.hi_, 1, lo_, MPFR_RNDU);
    return r;
}

DyadicInterval operator/(const DyadicInterval& x, const DyadicInterval& y) {
    return x * y.inverse().with_precision(join(x, y));
}

DyadicInterval DyadicInterval::abs() const {
    if (mpfr_sgn(lo_) >= 0) return *this;
    if (mpfr_sgn(hi_) <= 0) return -*this;
    DyadicInterval r(precision());
    mpfr_set_zero(r.lo_, 1);
    if (mpfr_cmpabs(lo_, hi_) > 0) {
        mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    } else {
        mpfr_set(r.hi_, hi_, MPFR_RNDU);
    }
    return r;
}

DyadicInterval DyadicInterval::sqr() const {
    DyadicInterval a = abs();
    DyadicInterval r(precision());
    mpfr_sqr(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_sqr(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

DyadicInterval DyadicInterval::sqrt() const {
    if (mpfr_sgn(hi_) < 0) throw std::domain_error("DyadicInterval: sqrt of a negative interval");
    DyadicInterval r(precision());
    if (mpfr_sgn(lo_) <= 0) {
        mpfr_set_zero(r.lo_, 1);
    } else {
        mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    }
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

DyadicInterval DyadicInterval::pow(unsigned long n) const {
    DyadicInterval result(1L, precision());
    DyadicInterval base = *this;
    while (n > 0) {
        if (n & 1UL) result = result * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

DyadicInterval DyadicInterval::with_precision(mpfr_prec_t prec) const {
    DyadicInterval r(prec);
    mpfr_set(r.lo_, lo_, MPFR_RNDD);
    mpfr_set(r.hi_, hi_, MPFR_RNDU);
    return r;
}

std::string DyadicInterval::lower_decimal(int decimals) const {
    mpq_class scaled = exact(lo_) * pow10(decimals);
    mpz_class n;
    mpz_fdiv_q(n.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    return scaled_to_decimal(n, decimals);
}

std::string DyadicInterval::upper_decimal(int decimals) const {
    mpq_class scaled = exact(hi_) * pow10(decimals);
    mpz_class n;
    mpz_cdiv_q(n.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    return scaled_to_decimal(n, decimals);
}

std::string DyadicInterval::to_string(int decimals) const {
    return "[" + lower_decimal(decimals) + ", " + upper_decimal(decimals) + "]";
}

DyadicInterval hull(const DyadicInterval& x, const DyadicInterval& y) {
    mpq_class lo = std::min(exact(x.lo()), exact(y.lo()));
    mpq_class hi = std::max(exact(x.hi()), exact(y.hi()));
    return DyadicInterval(lo, hi, join(x, y));
}

DyadicInterval max(const DyadicInterval& x, const DyadicInterval& y) {
    mpq_class lo = std::max(exact(x.lo()), exact(y.lo()));
    mpq_class hi = std::max(exact(x.hi()), exact(y.hi()));
    return DyadicInterval(lo, hi, join(x, y));
}

DyadicInterval min(const DyadicInterval& x, const DyadicInterval& y) {
    mpq_class lo = std::min(exact(x.lo()), exact(y.lo()));
    mpq_class hi = std::min(exact(x.hi()), exact(y.hi()));
    return DyadicInterval(lo, hi, join(x, y));
}

}  // namespace betarith
