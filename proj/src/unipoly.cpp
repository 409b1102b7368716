#include "framecert/unipoly.hpp"

#include <algorithm>
#include <sstream>

namespace framecert {

namespace {

using ZPoly = std::vector<mpz_class>;  // low-to-high, trimmed

void trim(ZPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int zdegree(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

// Positive content; 0 for the zero polynomial.
mpz_class content(const ZPoly& p) {
    mpz_class g = 0;
    for (const mpz_class& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void divide_by(ZPoly& p, const mpz_class& d) {
    for (mpz_class& c : p) c /= d;
}

// Pseudo-remainder: rem(lc(b)^s * a, b) over Z, where s is the number of
// reduction steps actually taken (reported via *scale_steps).
ZPoly pseudo_rem(const ZPoly& a, const ZPoly& b, int* scale_steps = nullptr) {
    ZPoly r = a;
    const mpz_class& lb = b.back();
    int db = zdegree(b);
    int steps = 0;
    while (!r.empty() && zdegree(r) >= db) {
        mpz_class lead = r.back();
        int shift = zdegree(r) - db;
        for (mpz_class& c : r) c *= lb;
        for (int k = 0; k <= db; ++k) r[k + shift] -= lead * b[k];
        trim(r);
        ++steps;
    }
    if (scale_steps) *scale_steps = steps;
    return r;
}

// Primitive gcd via the primitive remainder sequence; result primitive
// with positive leading coefficient.
ZPoly zgcd(ZPoly a, ZPoly b) {
    trim(a);
    trim(b);
    if (a.empty()) std::swap(a, b);
    if (b.empty()) {
        if (!a.empty()) {
            divide_by(a, content(a));
            if (sgn(a.back()) < 0)
                for (mpz_class& c : a) c = -c;
        }
        return a;
    }
    divide_by(a, content(a));
    divide_by(b, content(b));
    if (zdegree(a) < zdegree(b)) std::swap(a, b);
    while (!b.empty()) {
        ZPoly r = pseudo_rem(a, b);
        if (!r.empty()) divide_by(r, content(r));
        a = std::move(b);
        b = std::move(r);
    }
    if (sgn(a.back()) < 0)
        for (mpz_class& c : a) c = -c;
    return a;
}

// Exact division of integer polynomials, quotient known to be integral.
ZPoly zdiv_exact(const ZPoly& num, const ZPoly& den) {
    ZPoly r = num;
    ZPoly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 1, mpz_class(0));
    int dd = zdegree(den);
    while (!r.empty() && zdegree(r) >= dd) {
        int shift = zdegree(r) - dd;
        mpz_class coef = r.back() / den.back();
        q[shift] = coef;
        for (int k = 0; k <= dd; ++k) r[k + shift] -= coef * den[k];
        trim(r);
    }
    if (!r.empty()) throw Error("inexact integer polynomial division");
    trim(q);
    return q;
}

// Clears denominators with a positive scale; sign pattern preserved.
ZPoly to_integer_positive_scale(const UnivariatePoly& p) {
    mpz_class den_lcm = 1;
    for (const BigRational& c : p.coeffs())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
    ZPoly out;
    out.reserve(p.coeffs().size());
    for (const BigRational& c : p.coeffs())
        out.push_back(c.numerator() * (den_lcm / c.denominator()));
    trim(out);
    return out;
}

int sign_at_rational(const ZPoly& p, const BigRational& x) {
    // sign of sum c_k num^k den^(n-k); den > 0 so the scale is positive.
    const mpz_class& num = x.numerator();
    const mpz_class& den = x.denominator();
    mpz_class acc = 0, num_pow = 1;
    std::vector<mpz_class> den_pows(p.size(), mpz_class(1));
    for (size_t k = 1; k < p.size(); ++k) den_pows[k] = den_pows[k - 1] * den;
    for (size_t k = 0; k < p.size(); ++k) {
        acc += p[k] * num_pow * den_pows[p.size() - 1 - k];
        num_pow *= num;
    }
    return sgn(acc);
}

int count_variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

}  // namespace

UnivariatePoly::UnivariatePoly(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UnivariatePoly UnivariatePoly::from_polynomial(const Polynomial& p, size_t var) {
    std::vector<BigRational> coeffs;
    for (const Term& t : p.terms()) {
        if (!t.coeff.is_real())
            throw Error("univariate extraction requires real coefficients");
        for (size_t v = 0; v < t.mono.nvars(); ++v)
            if (v != var && t.mono.exponent(v) != 0)
                throw Error("polynomial is not univariate in " + p.table()->name(var) +
                            " (uses " + p.table()->name(v) + ")");
        size_t e = t.mono.exponent(var);
        if (coeffs.size() <= e) coeffs.resize(e + 1);
        coeffs[e] += t.coeff.re();
    }
    return UnivariatePoly(std::move(coeffs));
}

const BigRational& UnivariatePoly::coeff(size_t k) const {
    static const BigRational kZero;
    return k < c_.size() ? c_[k] : kZero;
}

const BigRational& UnivariatePoly::leading_coeff() const {
    if (c_.empty()) throw Error("leading coefficient of the zero polynomial");
    return c_.back();
}

BigRational UnivariatePoly::evaluate(const BigRational& x) const {
    BigRational acc;
    for (size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
}

UnivariatePoly UnivariatePoly::derivative() const {
    std::vector<BigRational> d;
    for (size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * BigRational(long(k)));
    return UnivariatePoly(std::move(d));
}

UnivariatePoly UnivariatePoly::squarefree_part() const {
    if (degree() <= 1) return *this;
    ZPoly zp = to_integer_positive_scale(*this);
    ZPoly dz;
    for (size_t k = 1; k < zp.size(); ++k) dz.push_back(zp[k] * long(k));
    ZPoly g = zgcd(zp, dz);
    if (zdegree(g) == 0) return *this;
    ZPoly q = zdiv_exact(zp, g);
    std::vector<BigRational> out;
    out.reserve(q.size());
    for (const mpz_class& c : q) out.emplace_back(c);
    return UnivariatePoly(std::move(out));
}

std::string UnivariatePoly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = c_.size(); k-- > 0;) {
        if (c_[k].is_zero()) continue;
        const BigRational& a = c_[k];
        if (first) {
            if (a.sign() < 0) os << "-";
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
        }
        first = false;
        BigRational mag = a.abs();
        if (!mag.is_one() || k == 0) os << mag.to_string();
        if (k > 0) {
            if (!mag.is_one()) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

SturmSequence::SturmSequence(const UnivariatePoly& p) {
    if (p.is_zero()) throw Error("Sturm sequence of the zero polynomial");
    ZPoly t0 = to_integer_positive_scale(p);
    divide_by(t0, content(t0));
    polys_.push_back(t0);
    sign_.push_back(1);
    if (zdegree(t0) == 0) return;

    ZPoly t1;
    for (size_t k = 1; k < t0.size(); ++k) t1.push_back(t0[k] * long(k));
    divide_by(t1, content(t1));
    polys_.push_back(t1);
    sign_.push_back(1);

    // Primitive remainder chain with tracked signs: S_k = tau_k * T_k for
    // the exact chain S_{k+1} = -rem(S_{k-1}, S_k); only sign(tau_k) is
    // needed, and pseudo-remainders keep every T_k integral and small.
    while (true) {
        const ZPoly& prev = polys_[polys_.size() - 2];
        const ZPoly& cur = polys_.back();
        if (zdegree(cur) == 0) break;
        int steps = 0;
        ZPoly u = pseudo_rem(prev, cur, &steps);
        if (u.empty()) break;
        int lc_sign = sgn(cur.back());
        divide_by(u, content(u));
        // rem(T_{k-1}, T_k) = U / lc(T_k)^steps, so the rational scale of
        // the stored remainder picks up sign(lc)^steps beyond the -tau_{k-1}.
        int s = -sign_[sign_.size() - 2];
        if (steps % 2 != 0) s *= lc_sign;
        polys_.push_back(std::move(u));
        sign_.push_back(s);
    }
}

int SturmSequence::variations_at_pos_inf() const {
    std::vector<int> signs;
    signs.reserve(polys_.size());
    for (size_t k = 0; k < polys_.size(); ++k) signs.push_back(sign_[k] * sgn(polys_[k].back()));
    return count_variations(signs);
}

int SturmSequence::variations_at_neg_inf() const {
    std::vector<int> signs;
    signs.reserve(polys_.size());
    for (size_t k = 0; k < polys_.size(); ++k) {
        int s = sign_[k] * sgn(polys_[k].back());
        if (zdegree(polys_[k]) % 2 != 0) s = -s;
        signs.push_back(s);
    }
    return count_variations(signs);
}

int SturmSequence::variations_at(const BigRational& x) const {
    std::vector<int> signs;
    signs.reserve(polys_.size());
    for (size_t k = 0; k < polys_.size(); ++k)
        signs.push_back(sign_[k] * sign_at_rational(polys_[k], x));
    return count_variations(signs);
}

int SturmSequence::count_in(const BigRational& a, const BigRational& b) const {
    return variations_at(a) - variations_at(b);
}

int sturm_count_real_roots(const UnivariatePoly& p) {
    if (p.is_zero()) throw Error("real-root count of the zero polynomial");
    if (p.degree() == 0) return 0;
    return SturmSequence(p).count_all();
}

BigRational cauchy_root_bound(const UnivariatePoly& p) {
    BigRational bound(1L);
    const BigRational& lc = p.leading_coeff();
    for (int k = 0; k < p.degree(); ++k) {
        BigRational ratio = (p.coeff(k) / lc).abs();
        if (ratio > bound) bound = ratio;
    }
    return bound + BigRational(1L);
}

std::vector<std::pair<BigRational, BigRational>> isolate_real_roots(const UnivariatePoly& p,
                                                                    const BigRational& width) {
    if (p.is_zero()) throw Error("root isolation of the zero polynomial");
    std::vector<std::pair<BigRational, BigRational>> out;
    if (p.degree() == 0) return out;
    UnivariatePoly sf = p.squarefree_part();
    SturmSequence chain(sf);
    BigRational bound = cauchy_root_bound(sf);
    BigRational half(mpz_class(1), mpz_class(2));

    // Half-open bisection: counts over (lo, m] and (m, hi] add exactly.
    struct Segment {
        BigRational lo, hi;
        int count;
    };
    std::vector<Segment> stack{{-bound, bound, chain.count_in(-bound, bound)}};
    while (!stack.empty()) {
        Segment seg = stack.back();
        stack.pop_back();
        if (seg.count == 0) continue;
        if (seg.count == 1) {
            BigRational lo = seg.lo, hi = seg.hi;
            while (hi - lo > width) {
                BigRational mid = (lo + hi) * half;
                if (chain.count_in(lo, mid) == 1)
                    hi = mid;
                else
                    lo = mid;
            }
            if (sf.sign_at(hi) == 0)
                out.emplace_back(hi, hi);
            else
                out.emplace_back(lo, hi);
            continue;
        }
        BigRational mid = (seg.lo + seg.hi) * half;
        int left = chain.count_in(seg.lo, mid);
        stack.push_back({seg.lo, mid, left});
        stack.push_back({mid, seg.hi, seg.count - left});
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

}  // namespace framecert
