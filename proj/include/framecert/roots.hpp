#ifndef FRAMECERT_ROOTS_HPP
#define FRAMECERT_ROOTS_HPP

#include <utility>
#include <vector>

#include "framecert/bigfloat.hpp"
#include "framecert/unipoly.hpp"

namespace framecert {

/// Approximate complex root with a rigorous evaluation residual:
/// |p(re + i*im)| <= residual at the stated working precision.
struct ComplexRoot {
    BigFloat re;
    BigFloat im;
    BigFloat residual;
};

/// All deg(p) roots (multiplicity respected) by simultaneous Aberth
/// iteration at `precision_bits`, input scaled by a power of two. Throws
/// ConvergenceError when the iteration stalls above the acceptance band.
std::vector<ComplexRoot> complex_roots(const UnivariatePoly& p, mpfr_prec_t precision_bits);

struct ConjugatePairing {
    std::vector<std::pair<size_t, size_t>> pairs;  // (i, j) with z_j ~ conj(z_i)
    std::vector<size_t> reals;                     // |im| < tol
};

/// Matches roots of a real-coefficient polynomial into conjugate pairs
/// within tol; throws when the matching is imperfect (precision too low).
ConjugatePairing conjugate_pairing(const std::vector<ComplexRoot>& roots, const BigFloat& tol);

/// Default pairing tolerance 2^(-precision_bits/4).
BigFloat default_pairing_tolerance(mpfr_prec_t precision_bits);

}  // namespace framecert

#endif
