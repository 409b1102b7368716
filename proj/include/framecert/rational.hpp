#ifndef FRAMECERT_RATIONAL_HPP
#define FRAMECERT_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "framecert/error.hpp"

namespace framecert {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator; zero is stored as 0/1.
class BigRational {
public:
    BigRational() : v_(0) {}
    BigRational(long n) : v_(n) {}  // NOLINT: implicit by design
    explicit BigRational(const mpz_class& n) : v_(n) {}
    BigRational(const mpz_class& num, const mpz_class& den);
    explicit BigRational(mpq_class q);

    /// Accepts "p", "p/q", and decimal strings like "-1.25".
    static BigRational parse(std::string_view text);

    const mpz_class& numerator() const { return v_.get_num(); }
    const mpz_class& denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    BigRational operator-() const { return BigRational(mpq_class(-v_)); }
    BigRational abs() const { return sign() < 0 ? -*this : *this; }
    BigRational reciprocal() const;

    BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
    BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
    BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return a.v_ != b.v_; }
    friend bool operator<(const BigRational& a, const BigRational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const BigRational& a, const BigRational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const BigRational& a, const BigRational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const BigRational& a, const BigRational& b) { return a.v_ >= b.v_; }

    /// "p" when integral, "p/q" otherwise.
    std::string to_string() const;
    double to_double() const { return v_.get_d(); }

private:
    mpq_class v_;
};

/// Element of Q(i): re + im*i with exact rational components.
class GaussRational {
public:
    GaussRational() = default;
    GaussRational(BigRational re) : re_(std::move(re)) {}  // NOLINT: implicit by design
    GaussRational(long n) : re_(n) {}                      // NOLINT: implicit by design
    GaussRational(BigRational re, BigRational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRational i() { return GaussRational(BigRational(0L), BigRational(1L)); }
    /// Accepts "a", "b*i", "bi", "a+b*i", "a-bi", "i", "-i", with rational a, b.
    static GaussRational parse(std::string_view text);

    const BigRational& re() const { return re_; }
    const BigRational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussRational conj() const { return GaussRational(re_, -im_); }
    /// |z|^2 = z * conj(z), exact and real.
    BigRational norm() const { return re_ * re_ + im_ * im_; }

    GaussRational operator-() const { return GaussRational(-re_, -im_); }
    GaussRational& operator+=(const GaussRational& o);
    GaussRational& operator-=(const GaussRational& o);
    GaussRational& operator*=(const GaussRational& o);
    GaussRational& operator/=(const GaussRational& o);

    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
    friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }

    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

    std::string to_string() const;

private:
    BigRational re_;
    BigRational im_;
};

inline GaussRational conj(const GaussRational& z) { return z.conj(); }

/// Total order used only for canonical sorting/printing, not algebra.
bool lexicographic_less(const GaussRational& a, const GaussRational& b);

}  // namespace framecert

#endif
