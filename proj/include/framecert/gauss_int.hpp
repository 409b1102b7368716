#ifndef FRAMECERT_GAUSS_INT_HPP
#define FRAMECERT_GAUSS_INT_HPP

#include <gmpxx.h>

#include "framecert/rational.hpp"

namespace framecert {

/// Gaussian integer; only the handful of operations content extraction needs.
struct GaussInt {
    mpz_class re;
    mpz_class im;

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    mpz_class norm() const { return re * re + im * im; }

    friend GaussInt operator-(const GaussInt& a, const GaussInt& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussInt& a, const GaussInt& b) {
        return a.re == b.re && a.im == b.im;
    }
};

/// Nearest-Gaussian-integer quotient; the Euclidean division step of Z[i].
GaussInt gauss_div_round(const GaussInt& a, const GaussInt& b);

/// gcd in Z[i], unique up to a unit; zero iff both inputs are zero.
GaussInt gauss_gcd(GaussInt a, GaussInt b);

}  // namespace framecert

#endif
