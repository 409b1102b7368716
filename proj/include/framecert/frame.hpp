#ifndef FRAMECERT_FRAME_HPP
#define FRAMECERT_FRAME_HPP

#include <map>
#include <span>
#include <string>
#include <vector>

#include "framecert/polynomial.hpp"
#include "framecert/serialize.hpp"

namespace framecert {

/// A spanning collection of n vectors in C^d (the measurement system).
struct Frame {
    int d = 0;
    int n = 0;
    std::vector<std::vector<GaussRational>> vectors;  // n rows of length d

    /// Throws unless d >= 2, n >= d, entries well-formed, and the vectors
    /// span C^d (exact rank check).
    void validate() const;

    /// Stable serialization for hashing; independent of input formatting.
    std::string canonical_string() const;
    std::string digest() const;

    static Frame from_json(const Json& j);
    Json to_json() const;
    /// Compact text: one vector per line, whitespace-separated Gaussian
    /// rationals ("1", "9i", "-5-7i", "1/2+1/3i"); '#' comments allowed.
    static Frame from_text(const std::string& text);
    std::string to_text() const;
};

/// The polynomial translation of a frame: Hermitian coordinates, the d^2
/// rank <= d-2 minors, and the n real measurement forms.
struct HermitianSystem {
    VariableTablePtr table;
    int d = 0;
    std::vector<Polynomial> minors;  // row-major (j,k), j,k in 1..d
    std::vector<Polynomial> forms;
};

/// Index of x_jk (j <= k) or y_jk (j < k) in the hermitian(d) table.
size_t hermitian_x_index(int d, int j, int k);
size_t hermitian_y_index(int d, int j, int k);

/// Entry (j,k) of the symbolic Hermitian matrix: x_jk + i y_jk above the
/// diagonal, the conjugate below, x_jj on it. 1-based indices.
Polynomial hermitian_symbol_entry(const VariableTablePtr& table, int d, int j, int k);
std::vector<std::vector<Polynomial>> hermitian_symbol_matrix(const VariableTablePtr& table, int d);

/// The d^2 minors of size (d-1) removing row j and column k; their common
/// vanishing is rank <= d-2.
std::vector<Polynomial> hermitian_minors(const VariableTablePtr& table, int d);

/// phi* Q phi as a linear polynomial; throws if any coefficient fails to be
/// exactly real (which would be a construction bug).
Polynomial measurement_form(const VariableTablePtr& table, int d,
                            std::span<const GaussRational> phi);

HermitianSystem build_system(const Frame& frame);

/// One eliminated variable: var = binding on the common zero set of the
/// forms, and exactly var - binding = sum alpha_k * forms[k].
struct PresolveRow {
    size_t var = 0;
    Polynomial binding;               // homogeneous linear in kept variables
    std::vector<BigRational> alpha;   // length n
};

struct Presolve {
    std::vector<PresolveRow> rows;
    std::vector<size_t> kept;  // ascending variable indices
    size_t rank = 0;           // == rows.size()
    bool dependent_forms = false;

    std::map<size_t, Polynomial> bindings() const;
};

/// Exact Gaussian elimination of the forms. Pivots prefer the largest
/// absolute coefficient per form (ties to the lowest variable index) and
/// never touch `protected_vars`. Returns the presolve and the minors with
/// the bindings substituted in.
std::pair<Presolve, std::vector<Polynomial>> linear_presolve(
    const HermitianSystem& system, const std::vector<size_t>& protected_vars);

}  // namespace framecert

#endif
