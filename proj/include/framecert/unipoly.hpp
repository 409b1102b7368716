#ifndef FRAMECERT_UNIPOLY_HPP
#define FRAMECERT_UNIPOLY_HPP

#include <utility>
#include <vector>

#include "framecert/polynomial.hpp"
#include "framecert/rational.hpp"

namespace framecert {

/// Univariate polynomial over Q, coefficients low-to-high, trimmed so the
/// leading coefficient is nonzero.
class UnivariatePoly {
public:
    UnivariatePoly() = default;
    explicit UnivariatePoly(std::vector<BigRational> coeffs);

    /// Extracts a univariate polynomial in `var`; fails if any other
    /// variable occurs or any coefficient is non-real.
    static UnivariatePoly from_polynomial(const Polynomial& p, size_t var);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<BigRational>& coeffs() const { return c_; }
    const BigRational& coeff(size_t k) const;
    const BigRational& leading_coeff() const;

    BigRational evaluate(const BigRational& x) const;
    int sign_at(const BigRational& x) const { return evaluate(x).sign(); }
    UnivariatePoly derivative() const;
    /// p / gcd(p, p'): same distinct roots, all simple.
    UnivariatePoly squarefree_part() const;

    friend bool operator==(const UnivariatePoly& a, const UnivariatePoly& b) {
        return a.c_ == b.c_;
    }

    std::string to_string(const std::string& var = "x") const;

private:
    std::vector<BigRational> c_;
};

/// Sturm chain held as primitive integer polynomials with tracked signs, so
/// sign variations match the exact rational chain everywhere.
class SturmSequence {
public:
    explicit SturmSequence(const UnivariatePoly& p);

    size_t length() const { return polys_.size(); }
    int variations_at_neg_inf() const;
    int variations_at_pos_inf() const;
    int variations_at(const BigRational& x) const;

    /// Distinct real roots in the half-open interval (a, b].
    int count_in(const BigRational& a, const BigRational& b) const;
    /// Distinct real roots over all of R.
    int count_all() const { return variations_at_neg_inf() - variations_at_pos_inf(); }

private:
    std::vector<std::vector<mpz_class>> polys_;  // primitive, low-to-high
    std::vector<int> sign_;                      // sign of the rational scale
};

/// Exact count of distinct real roots of p over R; requires p != 0.
int sturm_count_real_roots(const UnivariatePoly& p);

/// Disjoint intervals (lo, hi], each containing exactly one distinct real
/// root, refined until hi - lo <= width (point roots allowed as [r, r]).
std::vector<std::pair<BigRational, BigRational>> isolate_real_roots(
    const UnivariatePoly& p, const BigRational& width);

/// 1 + max |c_k / c_n|: every complex root has modulus below this.
BigRational cauchy_root_bound(const UnivariatePoly& p);

}  // namespace framecert

#endif
