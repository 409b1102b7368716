#include "framecert/gauss_int.hpp"

namespace framecert {

namespace {

// round(n/d) to nearest integer, ties away from zero; d > 0.
mpz_class div_round_nearest(const mpz_class& n, const mpz_class& d) {
    mpz_class two_n = 2 * n;
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), two_n.get_mpz_t(), d.get_mpz_t());
    // q = floor(2n/d); nearest integer to n/d is floor((2n + d) / (2d)).
    mpz_class num = two_n + d;
    mpz_class den = 2 * d;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

}  // namespace

GaussInt gauss_div_round(const GaussInt& a, const GaussInt& b) {
    if (b.is_zero()) throw DivisionByZeroError("Gaussian-integer division by zero");
    // a/b = a*conj(b)/|b|^2, rounded componentwise.
    mpz_class n = b.norm();
    mpz_class re_num = a.re * b.re + a.im * b.im;
    mpz_class im_num = a.im * b.re - a.re * b.im;
    return {div_round_nearest(re_num, n), div_round_nearest(im_num, n)};
}

GaussInt gauss_gcd(GaussInt a, GaussInt b) {
    while (!b.is_zero()) {
        GaussInt q = gauss_div_round(a, b);
        GaussInt r = a - q * b;
        a = b;
        b = r;
    }
    return a;
}

}  // namespace framecert
