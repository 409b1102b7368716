#ifndef FRAMECERT_MONOMIAL_HPP
#define FRAMECERT_MONOMIAL_HPP

#include <cstdint>
#include <limits>
#include <vector>

#include "framecert/error.hpp"

namespace framecert {

/// Exponent vector over a fixed variable table; caches the total degree.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(size_t nvars) : e_(nvars, 0), deg_(0) {}
    explicit Monomial(std::vector<uint32_t> exponents);

    static Monomial unit(size_t nvars) { return Monomial(nvars); }
    static Monomial variable(size_t nvars, size_t index, uint32_t power = 1);

    size_t nvars() const { return e_.size(); }
    uint32_t exponent(size_t i) const { return e_[i]; }
    const std::vector<uint32_t>& exponents() const { return e_; }
    uint32_t total_degree() const { return deg_; }
    bool is_unit() const { return deg_ == 0; }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    /// Requires divides(o) in the direction used; exact componentwise difference.
    Monomial divide_exact(const Monomial& divisor) const;
    friend Monomial lcm(const Monomial& a, const Monomial& b);
    friend bool coprime(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }

private:
    std::vector<uint32_t> e_;
    uint32_t deg_ = 0;
};

// Degrees in this artifact stay around 20; anything near the cap is a bug.
inline constexpr uint32_t kMaxExponent = (1u << 24);

}  // namespace framecert

#endif
