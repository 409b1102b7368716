#include "framecert/roots.hpp"

#include <algorithm>
#include <cmath>

namespace framecert {

namespace {

// Horner evaluation; when err_out is given, also accumulates the standard
// running bound so that |true - computed| <= err_out at precision prec.
BigComplex horner(const std::vector<BigComplex>& coeffs, const BigComplex& z, mpfr_prec_t prec,
                  BigFloat* err_out = nullptr) {
    BigComplex acc(prec);
    BigFloat zabs = z.abs();
    BigFloat tilde(0L, prec);  // sum |a_k| |z|^k, computed alongside
    for (size_t k = coeffs.size(); k-- > 0;) {
        acc = acc * z + coeffs[k];
        if (err_out) tilde = tilde * zabs + coeffs[k].abs();
    }
    if (err_out) {
        long n = static_cast<long>(coeffs.size());
        BigFloat u = BigFloat::pow2(1 - static_cast<long>(prec), prec);
        *err_out = tilde * u * BigFloat(4 * n + 4, prec);
    }
    return acc;
}

}  // namespace

std::vector<ComplexRoot> complex_roots(const UnivariatePoly& p, mpfr_prec_t prec) {
    if (p.degree() < 1) throw Error("complex_roots requires degree >= 1");

    // Deflate exact zero roots (trailing zero coefficients).
    size_t zero_mult = 0;
    while (p.coeff(zero_mult).is_zero()) ++zero_mult;
    std::vector<BigComplex> a;
    for (size_t k = zero_mult; k <= static_cast<size_t>(p.degree()); ++k)
        a.emplace_back(BigFloat(p.coeff(k), prec), BigFloat(0L, prec));
    size_t n = a.size() - 1;

    std::vector<ComplexRoot> out;
    for (size_t k = 0; k < zero_mult; ++k)
        out.push_back({BigFloat(0L, prec), BigFloat(0L, prec), BigFloat(0L, prec)});
    if (n == 0) return out;

    // Scale by a power of two so the largest |a_k| is about 1; roots are
    // unchanged and the huge integer coefficients stop dominating exponents.
    mpfr_exp_t emax = mpfr_get_exp(a[0].re.raw());
    for (const BigComplex& c : a)
        if (!c.re.is_zero()) emax = std::max(emax, mpfr_get_exp(c.re.raw()));
    long scale_exp = static_cast<long>(emax);
    for (BigComplex& c : a) c.re = c.re.ldexp(-scale_exp);

    std::vector<BigComplex> da;
    for (size_t k = 1; k <= n; ++k)
        da.push_back(BigComplex(a[k].re * BigFloat(static_cast<long>(k), prec), BigFloat(0L, prec)));

    // Initial points on a circle comfortably beyond the root radius
    // (log2-domain Fujiwara bound keeps this overflow-safe).
    long lead_e2 = 0;
    double lead_m = mpfr_get_d_2exp(&lead_e2, a[n].re.raw(), MPFR_RNDN);
    double lead_log2 = static_cast<double>(lead_e2) + std::log2(std::abs(lead_m));
    double rlog = 0.0;
    for (size_t k = 0; k < n; ++k) {
        if (a[k].re.is_zero()) continue;
        long e2 = 0;
        double m = mpfr_get_d_2exp(&e2, a[k].re.raw(), MPFR_RNDN);
        double clog = static_cast<double>(e2) + std::log2(std::abs(m));
        rlog = std::max(rlog, (clog - lead_log2) / static_cast<double>(n - k));
    }
    double radius = std::exp2(std::min(rlog + 1.0, 500.0));
    std::vector<BigComplex> z;
    z.reserve(n);
    for (size_t j = 0; j < n; ++j) {
        double theta = 2.0 * M_PI * (static_cast<double>(j) + 0.25) / static_cast<double>(n) + 0.42;
        z.emplace_back(radius * std::cos(theta), radius * std::sin(theta), prec);
    }

    BigFloat tight = BigFloat::pow2(-(7 * static_cast<long>(prec) / 8), prec);
    BigFloat loose = BigFloat::pow2(-(static_cast<long>(prec) / 4), prec);
    std::vector<bool> frozen(n, false);
    BigFloat last_worst(1L, prec);
    int stagnant = 0;
    size_t max_iters = 400 + 40 * n;
    bool converged = false;

    for (size_t iter = 0; iter < max_iters; ++iter) {
        BigFloat worst(0L, prec);
        size_t active = 0;
        for (size_t i = 0; i < n; ++i) {
            if (frozen[i]) continue;
            ++active;
            BigComplex pv = horner(a, z[i], prec);
            if (pv.is_zero()) {
                frozen[i] = true;
                continue;
            }
            BigComplex dv = horner(da, z[i], prec);
            BigComplex newton = dv.is_zero() ? BigComplex(prec) : pv / dv;
            if (dv.is_zero()) {
                // Critical point: nudge off it instead of dividing by zero.
                z[i].re += loose;
                continue;
            }
            BigComplex sum(prec);
            bool collision = false;
            for (size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                BigComplex diff = z[i] - z[j];
                if (diff.is_zero()) {
                    collision = true;
                    break;
                }
                sum += BigComplex(BigFloat(1L, prec), BigFloat(0L, prec)) / diff;
            }
            BigComplex w = newton;
            if (!collision) {
                BigComplex denom =
                    BigComplex(BigFloat(1L, prec), BigFloat(0L, prec)) - newton * sum;
                if (!denom.is_zero()) w = newton / denom;
            } else {
                z[i].re += loose * (BigFloat(1L, prec) + z[i].abs());
                continue;
            }
            z[i] -= w;
            BigFloat rel = w.abs() / (BigFloat(1L, prec) + z[i].abs());
            if (rel <= tight) frozen[i] = true;
            worst = BigFloat::max(worst, rel);
        }
        if (active == 0) {
            converged = true;
            break;
        }
        // Multiple roots converge only linearly into a cluster whose radius
        // the detector below accepts once progress stops.
        if (worst >= last_worst * BigFloat(0.99, prec))
            ++stagnant;
        else
            stagnant = 0;
        last_worst = worst;
        if (stagnant >= 24 && worst <= loose) {
            converged = true;
            break;
        }
    }
    if (!converged && !(last_worst <= loose))
        throw ConvergenceError("aberth iteration stalled at relative correction " +
                               last_worst.to_string(4) + " after " + std::to_string(max_iters) +
                               " iterations at " + std::to_string(prec) + " bits");

    for (size_t i = 0; i < n; ++i) {
        BigFloat err(prec);
        BigComplex pv = horner(a, z[i], prec, &err);
        BigFloat residual = (pv.abs() + err).ldexp(scale_exp);
        out.push_back({z[i].re, z[i].im, residual});
    }
    std::sort(out.begin(), out.end(), [](const ComplexRoot& a_, const ComplexRoot& b_) {
        if (a_.re != b_.re) return a_.re < b_.re;
        return a_.im < b_.im;
    });
    return out;
}

BigFloat default_pairing_tolerance(mpfr_prec_t precision_bits) {
    return BigFloat::pow2(-(static_cast<long>(precision_bits) / 4), precision_bits);
}

ConjugatePairing conjugate_pairing(const std::vector<ComplexRoot>& roots, const BigFloat& tol) {
    ConjugatePairing result;
    std::vector<bool> used(roots.size(), false);
    for (size_t i = 0; i < roots.size(); ++i) {
        if (roots[i].im.abs() < tol) {
            result.reals.push_back(i);
            used[i] = true;
        }
    }
    for (size_t i = 0; i < roots.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        BigComplex want(roots[i].re, -roots[i].im);
        size_t best = roots.size();
        BigFloat best_dist(0L, roots[i].re.precision());
        for (size_t j = 0; j < roots.size(); ++j) {
            if (used[j]) continue;
            BigFloat dist = BigFloat::hypot(roots[j].re - want.re, roots[j].im - want.im);
            if (best == roots.size() || dist < best_dist) {
                best = j;
                best_dist = dist;
            }
        }
        BigFloat scale = BigFloat(1L, tol.precision()) + BigFloat::hypot(roots[i].re, roots[i].im);
        if (best == roots.size() || !(best_dist <= tol * scale))
            throw ConvergenceError("conjugate pairing failed for root index " + std::to_string(i) +
                                   "; root-finder precision too low");
        used[best] = true;
        result.pairs.emplace_back(i, best);
    }
    return result;
}

}  // namespace framecert
