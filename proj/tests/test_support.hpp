#ifndef FRAMECERT_TEST_SUPPORT_HPP
#define FRAMECERT_TEST_SUPPORT_HPP

#include <cstdint>
#include <vector>

#include "framecert/frame.hpp"
#include "framecert/polynomial.hpp"

namespace framecert::testsupport {

/// Deterministic 64-bit generator (splitmix64); keeps the suites seedable
/// without pulling in <random> distributions.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    int64_t in_range(int64_t lo, int64_t hi) {  // inclusive
        return lo + static_cast<int64_t>(next() % static_cast<uint64_t>(hi - lo + 1));
    }

    BigRational rational(int64_t max_num = 20, int64_t max_den = 6) {
        return BigRational(mpz_class(in_range(-max_num, max_num)),
                           mpz_class(in_range(1, max_den)));
    }
    GaussRational gauss(int64_t max_num = 20, int64_t max_den = 6) {
        return GaussRational(rational(max_num, max_den), rational(max_num, max_den));
    }
    GaussRational nonzero_gauss() {
        for (;;) {
            GaussRational z = gauss();
            if (!z.is_zero()) return z;
        }
    }

    Polynomial polynomial(const VariableTablePtr& table, int max_terms = 6, uint32_t max_deg = 3) {
        std::vector<Term> terms;
        int nterms = static_cast<int>(in_range(1, max_terms));
        for (int t = 0; t < nterms; ++t) {
            std::vector<uint32_t> e(table->size(), 0);
            uint32_t budget = static_cast<uint32_t>(in_range(0, max_deg));
            for (uint32_t k = 0; k < budget; ++k)
                e[static_cast<size_t>(next() % table->size())] += 1;
            terms.push_back({Monomial(std::move(e)), gauss(9, 3)});
        }
        return Polynomial::from_terms(table, std::move(terms));
    }

private:
    uint64_t state_;
};

/// Hermitian coordinate vector (the 16 reals for d=4) of a rank<=2 matrix
/// alpha uu* + beta vv*.
inline std::vector<GaussRational> rank2_coordinates(int d, Rng& rng) {
    std::vector<GaussRational> u, v;
    for (int k = 0; k < d; ++k) u.push_back(rng.gauss(6, 3));
    for (int k = 0; k < d; ++k) v.push_back(rng.gauss(6, 3));
    BigRational alpha = rng.rational(6, 3), beta = rng.rational(6, 3);
    auto entry = [&](int j, int k) {
        return u[j].conj() * u[k] * GaussRational(alpha) + v[j].conj() * v[k] * GaussRational(beta);
    };
    std::vector<GaussRational> coords(static_cast<size_t>(d) * d);
    for (int j = 1; j <= d; ++j) {
        coords[hermitian_x_index(d, j, j)] = GaussRational(entry(j - 1, j - 1).re());
        for (int k = j + 1; k <= d; ++k) {
            GaussRational q = entry(j - 1, k - 1);
            coords[hermitian_x_index(d, j, k)] = GaussRational(q.re());
            coords[hermitian_y_index(d, j, k)] = GaussRational(q.im());
        }
    }
    return coords;
}

/// Arbitrary Hermitian coordinate vector.
inline std::vector<GaussRational> hermitian_coordinates(int d, Rng& rng) {
    std::vector<GaussRational> coords(static_cast<size_t>(d) * d);
    for (int j = 1; j <= d; ++j) {
        coords[hermitian_x_index(d, j, j)] = GaussRational(rng.rational());
        for (int k = j + 1; k <= d; ++k) {
            coords[hermitian_x_index(d, j, k)] = GaussRational(rng.rational());
            coords[hermitian_y_index(d, j, k)] = GaussRational(rng.rational());
        }
    }
    return coords;
}

/// phi* Q phi by direct complex matrix arithmetic from the coordinates.
inline GaussRational quadratic_form_direct(int d, const std::vector<GaussRational>& phi,
                                           const std::vector<GaussRational>& coords) {
    auto q_entry = [&](int j, int k) -> GaussRational {
        if (j == k) return coords[hermitian_x_index(d, j, j)];
        GaussRational x = coords[hermitian_x_index(d, j, k)];
        GaussRational y = coords[hermitian_y_index(d, j, k)];
        GaussRational iy = y * GaussRational::i();
        return j < k ? x + iy : x - iy;
    };
    GaussRational acc;
    for (int j = 1; j <= d; ++j)
        for (int k = 1; k <= d; ++k) acc += phi[j - 1].conj() * q_entry(j, k) * phi[k - 1];
    return acc;
}

}  // namespace framecert::testsupport

#endif
