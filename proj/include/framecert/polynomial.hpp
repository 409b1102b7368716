#ifndef FRAMECERT_POLYNOMIAL_HPP
#define FRAMECERT_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "framecert/monomial.hpp"
#include "framecert/rational.hpp"
#include "framecert/term_order.hpp"
#include "framecert/variables.hpp"

namespace framecert {

struct Term {
    Monomial mono;
    GaussRational coeff;
};

/// Sparse multivariate polynomial over Q(i). Terms are kept sorted
/// descending under a fixed canonical order (grevlex on the table order), so
/// equal values have identical representations.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(VariableTablePtr table) : table_(std::move(table)) {}

    static Polynomial zero(VariableTablePtr table) { return Polynomial(std::move(table)); }
    static Polynomial constant(VariableTablePtr table, GaussRational c);
    static Polynomial variable(VariableTablePtr table, size_t index);
    static Polynomial variable(VariableTablePtr table, const std::string& name);
    /// Normalizes: merges duplicate monomials, drops zeros, sorts canonically.
    static Polynomial from_terms(VariableTablePtr table, std::vector<Term> terms);

    /// Parses "3*x^2 - 2*x*y + (1/2+1/3*i)*z" style expressions over `table`.
    static Polynomial parse(VariableTablePtr table, std::string_view text);
    std::string to_string() const;

    const VariableTablePtr& table() const { return table_; }
    const std::vector<Term>& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_unit());
    }

    /// Max total degree; -1 for the zero polynomial.
    int total_degree() const;
    /// Engaged with the common degree iff all monomials share one total degree.
    std::optional<uint32_t> homogeneous_degree() const;

    const GaussRational& coefficient(const Monomial& m) const;
    /// Order-maximal term; throws on the zero polynomial.
    const Term& leading_term(const TermOrder& order) const;

    bool uses_variable(size_t index) const;
    bool has_real_coefficients() const;
    /// Conjugates every coefficient (variables are real symbols).
    Polynomial conjugate_coefficients() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scaled(const GaussRational& c) const;
    Polynomial times_term(const Term& t) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Simultaneous substitution var -> polynomial; unbound variables stay.
    Polynomial substitute(const std::map<size_t, Polynomial>& bindings) const;
    GaussRational evaluate(std::span<const GaussRational> values) const;
    Polynomial derivative(size_t var) const;

    /// Scales a real-coefficient polynomial by the positive rational making
    /// the coefficients coprime integers with positive lex-leading sign.
    Polynomial integer_primitive_part() const;
    /// p == content * primitive where primitive has coprime Gaussian-integer
    /// coefficients and a canonically chosen unit; zero gives content 1.
    Polynomial gaussian_primitive_part(GaussRational* content_out = nullptr) const;

    /// True canonical-storage comparator (grevlex over the table order).
    static bool canonical_less(const Monomial& a, const Monomial& b);

    /// Single substitution with division witness:
    /// returns (p with var -> binding, q) where p - result = (var - binding) * q.
    std::pair<Polynomial, Polynomial> substitute_single_with_quotient(
        size_t var, const Polynomial& binding) const;

    /// Rebuilds over `target`, sending old variable v to index_map[v];
    /// every variable the polynomial uses must be mapped (others may carry
    /// SIZE_MAX). Coefficients are unchanged.
    Polynomial remap_variables(VariableTablePtr target,
                               const std::vector<size_t>& index_map) const;

private:
    void assert_same_table(const Polynomial& o) const;
    void normalize(std::vector<Term> terms);

    VariableTablePtr table_;
    std::vector<Term> terms_;  // sorted descending, canonical order
};

}  // namespace framecert

#endif
