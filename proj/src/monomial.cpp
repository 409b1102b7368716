#include "framecert/monomial.hpp"

namespace framecert {

Monomial::Monomial(std::vector<uint32_t> exponents) : e_(std::move(exponents)) {
    uint64_t d = 0;
    for (uint32_t x : e_) d += x;
    if (d >= kMaxExponent) throw ResourceLimitError("monomial degree overflow");
    deg_ = static_cast<uint32_t>(d);
}

Monomial Monomial::variable(size_t nvars, size_t index, uint32_t power) {
    Monomial m(nvars);
    m.e_.at(index) = power;
    m.deg_ = power;
    return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r(*this);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    uint64_t d = static_cast<uint64_t>(deg_) + o.deg_;
    if (d >= kMaxExponent) throw ResourceLimitError("monomial degree overflow");
    r.deg_ = static_cast<uint32_t>(d);
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    if (deg_ > o.deg_) return false;
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Monomial Monomial::divide_exact(const Monomial& divisor) const {
    Monomial r(*this);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= divisor.e_[i];
    r.deg_ = deg_ - divisor.deg_;
    return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    uint64_t d = 0;
    for (size_t i = 0; i < r.e_.size(); ++i) {
        r.e_[i] = std::max(a.e_[i], b.e_[i]);
        d += r.e_[i];
    }
    r.deg_ = static_cast<uint32_t>(d);
    return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.e_.size(); ++i)
        if (a.e_[i] != 0 && b.e_[i] != 0) return false;
    return true;
}

}  // namespace framecert
