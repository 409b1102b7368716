#ifndef FRAMECERT_GROEBNER_HPP
#define FRAMECERT_GROEBNER_HPP

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "framecert/polynomial.hpp"
#include "framecert/term_order.hpp"

namespace framecert {

/// Exact identity  target = sum multipliers[i] * generators[i]  against a
/// generator list the representation is aligned with.
struct CofactorRepresentation {
    Polynomial target;
    std::vector<Polynomial> multipliers;
};

/// Expansion re-check using only multipoly arithmetic; the certificate
/// verifier's independent path.
bool cofactors_expand_to_target(const CofactorRepresentation& rep,
                                std::span<const Polynomial> generators);

struct GroebnerOptions {
    bool track = false;
    /// Abort ceilings; hitting one throws ResourceLimitError.
    size_t max_basis_terms = 10'000'000;
    uint32_t max_degree = 256;
};

struct GroebnerBasis {
    std::vector<Polynomial> generators;  // monic, sorted by leading monomial
    TermOrder order;
    bool reduced = true;
    /// Aligned with `generators` when tracking was requested.
    std::vector<CofactorRepresentation> cofactors;
};

/// Multivariate division: remainder has no monomial divisible by any basis
/// leading monomial; with track, p = remainder + sum cofactor_i * basis_i.
std::pair<Polynomial, std::optional<CofactorRepresentation>> normal_form(
    const Polynomial& p, std::span<const Polynomial> basis, const TermOrder& order,
    bool track = false);

/// Buchberger with sugar selection and Gebauer-Moeller pruning; returns the
/// reduced basis (unique for the order). Deterministic.
GroebnerBasis buchberger(std::span<const Polynomial> gens, const TermOrder& order,
                         const GroebnerOptions& opts = {});

struct EliminationResult {
    /// Basis elements free of the eliminated variables.
    std::vector<Polynomial> generators;
    std::vector<CofactorRepresentation> cofactors;  // tracked runs only
    GroebnerBasis basis;                            // the full block-order basis
};

/// Generators of ideal(gens) intersected with the subring of `keep_mask`
/// variables, via a block elimination order.
EliminationResult elimination_ideal(std::span<const Polynomial> gens,
                                    const std::vector<uint8_t>& keep_mask,
                                    const GroebnerOptions& opts = {});

/// True iff the reduced basis is {1}; with track, carries the exact
/// certificate 1 = sum cofactor_i * gens_i.
std::pair<bool, std::optional<CofactorRepresentation>> ideal_contains_one(
    std::span<const Polynomial> gens, const GroebnerOptions& opts = {});

/// Direct re-check that every S-polynomial reduces to zero (not trusted
/// from construction).
bool spolynomials_reduce_to_zero(const GroebnerBasis& basis);

}  // namespace framecert

#endif
