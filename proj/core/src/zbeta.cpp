#include <sstream>

#include "betarith/algebraic_core.hpp"

namespace betarith {

std::string ZBeta::to_string() const {
    std::ostringstream os;
    os << "(" << c0 << ", " << c1 << ", " << c2 << ")";
    return os.str();
}

ZBeta zb_add(const ZBeta& x, const ZBeta& y) { return x + y; }
ZBeta zb_sub(const ZBeta& x, const ZBeta& y) { return x - y; }

ZBeta zb_mul(const CubicPolynomial& poly, const ZBeta& x, const ZBeta& y) {
    mpz_class d0 = x.c0 * y.c0;
    mpz_class d1 = x.c0 * y.c1 + x.c1 * y.c0;
    mpz_class d2 = x.c0 * y.c2 + x.c1 * y.c1 + x.c2 * y.c0;
    mpz_class d3 = x.c1 * y.c2 + x.c2 * y.c1;
    mpz_class d4 = x.c2 * y.c2;
    const long p2 = poly.p2, p1 = poly.p1, p0 = poly.p0;
    // beta^4 = beta * beta^3 = -p2 beta^3 - p1 beta^2 - p0 beta
    d3 -= p2 * d4;
    d2 -= p1 * d4;
    d1 -= p0 * d4;
    // beta^3 = -p2 beta^2 - p1 beta - p0
    return {d0 - p0 * d3, d1 - p1 * d3, d2 - p2 * d3};
}

ZBeta zb_mul_beta(const CubicPolynomial& poly, const ZBeta& x) {
    return {-poly.p0 * x.c2, x.c0 - poly.p1 * x.c2, x.c1 - poly.p2 * x.c2};
}

ZBeta zb_mul_beta_inv(const CubicPolynomial& poly, const ZBeta& x) {
    // beta^-1 = -p0 (beta^2 + p2 beta + p1)
    const long s = -poly.p0;
    return {x.c1 + s * poly.p1 * x.c0, x.c2 + s * poly.p2 * x.c0, s * x.c0};
}

mpz_class zb_trace(const CubicPolynomial& poly, const ZBeta& x) {
    const long tr1 = -poly.p2;
    const long tr2 = poly.p2 * poly.p2 - 2 * poly.p1;
    return 3 * x.c0 + tr1 * x.c1 + tr2 * x.c2;
}

}  // namespace betarith
