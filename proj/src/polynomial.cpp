#include "framecert/polynomial.hpp"

#include <algorithm>

#include "framecert/gauss_int.hpp"

namespace framecert {

bool Polynomial::canonical_less(const Monomial& a, const Monomial& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    for (size_t i = a.nvars(); i-- > 0;)
        if (a.exponent(i) != b.exponent(i)) return a.exponent(i) > b.exponent(i);
    return false;
}

void Polynomial::assert_same_table(const Polynomial& o) const {
    if (!same_table(table_, o.table_))
        throw TableMismatchError("polynomial operands use different variable tables");
}

void Polynomial::normalize(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return canonical_less(b.mono, a.mono); });
    terms_.clear();
    terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (!terms_.empty() && terms_.back().mono == t.mono)
            terms_.back().coeff += t.coeff;
        else
            terms_.push_back(std::move(t));
        if (!terms_.empty() && terms_.back().coeff.is_zero()) terms_.pop_back();
    }
}

Polynomial Polynomial::constant(VariableTablePtr table, GaussRational c) {
    Polynomial p(std::move(table));
    if (!c.is_zero()) p.terms_.push_back({Monomial(p.table_->size()), std::move(c)});
    return p;
}

Polynomial Polynomial::variable(VariableTablePtr table, size_t index) {
    Polynomial p(table);
    p.terms_.push_back({Monomial::variable(table->size(), index), GaussRational(1L)});
    return p;
}

Polynomial Polynomial::variable(VariableTablePtr table, const std::string& name) {
    size_t idx = table->index_of(name);
    return variable(std::move(table), idx);
}

Polynomial Polynomial::from_terms(VariableTablePtr table, std::vector<Term> terms) {
    Polynomial p(std::move(table));
    for (const Term& t : terms)
        if (t.mono.nvars() != p.table_->size())
            throw TableMismatchError("term exponent width does not match variable table");
    p.normalize(std::move(terms));
    return p;
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const Term& t : terms_) d = std::max(d, static_cast<int>(t.mono.total_degree()));
    return d;
}

std::optional<uint32_t> Polynomial::homogeneous_degree() const {
    if (terms_.empty()) return 0;
    uint32_t d = terms_[0].mono.total_degree();
    for (const Term& t : terms_)
        if (t.mono.total_degree() != d) return std::nullopt;
    return d;
}

const GaussRational& Polynomial::coefficient(const Monomial& m) const {
    static const GaussRational kZero;
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), m,
        [](const Term& t, const Monomial& key) { return canonical_less(key, t.mono); });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return kZero;
}

const Term& Polynomial::leading_term(const TermOrder& order) const {
    if (terms_.empty()) throw Error("leading term of the zero polynomial");
    const Term* best = &terms_[0];
    for (const Term& t : terms_)
        if (order.greater(t.mono, best->mono)) best = &t;
    return *best;
}

bool Polynomial::uses_variable(size_t index) const {
    for (const Term& t : terms_)
        if (t.mono.exponent(index) != 0) return true;
    return false;
}

bool Polynomial::has_real_coefficients() const {
    for (const Term& t : terms_)
        if (!t.coeff.is_real()) return false;
    return true;
}

Polynomial Polynomial::conjugate_coefficients() const {
    Polynomial r(table_);
    r.terms_ = terms_;
    for (Term& t : r.terms_) t.coeff = t.coeff.conj();
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(table_);
    r.terms_ = terms_;
    for (Term& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    assert_same_table(o);
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i].mono == o.terms_[j].mono) {
            GaussRational c = terms_[i].coeff + o.terms_[j].coeff;
            if (!c.is_zero()) merged.push_back({terms_[i].mono, std::move(c)});
            ++i;
            ++j;
        } else if (canonical_less(o.terms_[j].mono, terms_[i].mono)) {
            merged.push_back(terms_[i++]);
        } else {
            merged.push_back(o.terms_[j++]);
        }
    }
    for (; i < terms_.size(); ++i) merged.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) merged.push_back(o.terms_[j]);
    terms_ = std::move(merged);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.assert_same_table(b);
    Polynomial r(a.table_);
    if (a.is_zero() || b.is_zero()) return r;
    auto cmp = [](const Monomial& x, const Monomial& y) { return Polynomial::canonical_less(y, x); };
    std::map<Monomial, GaussRational, decltype(cmp)> acc(cmp);
    for (const Term& ta : a.terms_)
        for (const Term& tb : b.terms_) {
            Monomial m = ta.mono * tb.mono;
            GaussRational c = ta.coeff * tb.coeff;
            auto [it, fresh] = acc.try_emplace(std::move(m), c);
            if (!fresh) it->second += c;
        }
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) r.terms_.push_back({m, std::move(c)});
    return r;
}

Polynomial Polynomial::scaled(const GaussRational& c) const {
    Polynomial r(table_);
    if (c.is_zero()) return r;
    r.terms_ = terms_;
    for (Term& t : r.terms_) t.coeff *= c;
    return r;
}

Polynomial Polynomial::times_term(const Term& t) const {
    Polynomial r(table_);
    if (t.coeff.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const Term& own : terms_) r.terms_.push_back({own.mono * t.mono, own.coeff * t.coeff});
    // Multiplying by a fixed monomial preserves the canonical sort.
    return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!same_table(a.table_, b.table_)) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff)
            return false;
    return true;
}

Polynomial Polynomial::substitute(const std::map<size_t, Polynomial>& bindings) const {
    for (const auto& [idx, p] : bindings) {
        if (idx >= table_->size()) throw TableMismatchError("binding for unknown variable index");
        if (!same_table(table_, p.table()))
            throw TableMismatchError("binding polynomial uses a different variable table");
    }
    // Cache powers of each bound variable's image.
    std::map<size_t, std::vector<Polynomial>> powers;
    auto power_of = [&](size_t var, uint32_t e) -> const Polynomial& {
        auto& cache = powers[var];
        if (cache.empty()) cache.push_back(constant(table_, GaussRational(1L)));
        while (cache.size() <= e) cache.push_back(cache.back() * bindings.at(var));
        return cache[e];
    };

    Polynomial result = zero(table_);
    for (const Term& t : terms_) {
        std::vector<uint32_t> kept(table_->size(), 0);
        Polynomial factor = constant(table_, t.coeff);
        for (size_t v = 0; v < table_->size(); ++v) {
            uint32_t e = t.mono.exponent(v);
            if (e == 0) continue;
            if (bindings.count(v))
                factor = factor * power_of(v, e);
            else
                kept[v] = e;
        }
        result += factor.times_term({Monomial(std::move(kept)), GaussRational(1L)});
    }
    return result;
}

GaussRational Polynomial::evaluate(std::span<const GaussRational> values) const {
    if (values.size() != table_->size())
        throw TableMismatchError("evaluation point size does not match variable table");
    GaussRational sum;
    for (const Term& t : terms_) {
        GaussRational prod = t.coeff;
        for (size_t v = 0; v < values.size(); ++v) {
            uint32_t e = t.mono.exponent(v);
            for (uint32_t k = 0; k < e; ++k) prod *= values[v];
        }
        sum += prod;
    }
    return sum;
}

Polynomial Polynomial::derivative(size_t var) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) {
        uint32_t e = t.mono.exponent(var);
        if (e == 0) continue;
        std::vector<uint32_t> exps = t.mono.exponents();
        exps[var] -= 1;
        out.push_back({Monomial(std::move(exps)), t.coeff * GaussRational(BigRational(long(e)))});
    }
    return from_terms(table_, std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::substitute_single_with_quotient(
    size_t var, const Polynomial& binding) const {
    if (!same_table(table_, binding.table()))
        throw TableMismatchError("binding polynomial uses a different variable table");
    std::vector<Polynomial> bpow{constant(table_, GaussRational(1L))};
    auto b_to = [&](uint32_t e) -> const Polynomial& {
        while (bpow.size() <= e) bpow.push_back(bpow.back() * binding);
        return bpow[e];
    };
    Polynomial image = zero(table_);
    Polynomial quotient = zero(table_);
    Polynomial v = variable(table_, var);
    for (const Term& t : terms_) {
        uint32_t e = t.mono.exponent(var);
        if (e == 0) {
            image += from_terms(table_, {t});
            continue;
        }
        std::vector<uint32_t> rest_exps = t.mono.exponents();
        rest_exps[var] = 0;
        Polynomial rest = from_terms(table_, {{Monomial(std::move(rest_exps)), t.coeff}});
        image += rest * b_to(e);
        // v^e - b^e = (v - b) * sum_{j<e} v^j b^(e-1-j)
        Polynomial telescoped = zero(table_);
        Polynomial vpow = constant(table_, GaussRational(1L));
        for (uint32_t j = 0; j < e; ++j) {
            telescoped += vpow * b_to(e - 1 - j);
            if (j + 1 < e) vpow = vpow * v;
        }
        quotient += rest * telescoped;
    }
    return {std::move(image), std::move(quotient)};
}

Polynomial Polynomial::remap_variables(VariableTablePtr target,
                                       const std::vector<size_t>& index_map) const {
    if (index_map.size() != table_->size())
        throw TableMismatchError("variable remap table has the wrong width");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) {
        std::vector<uint32_t> e(target->size(), 0);
        for (size_t v = 0; v < index_map.size(); ++v) {
            uint32_t ev = t.mono.exponent(v);
            if (ev == 0) continue;
            if (index_map[v] == static_cast<size_t>(-1))
                throw TableMismatchError("remap drops a variable the polynomial uses: " +
                                         table_->name(v));
            e[index_map[v]] += ev;
        }
        out.push_back({Monomial(std::move(e)), t.coeff});
    }
    return from_terms(std::move(target), std::move(out));
}

Polynomial Polynomial::integer_primitive_part() const {
    if (terms_.empty()) return *this;
    if (!has_real_coefficients())
        throw Error("integer primitive part requires real coefficients");
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const Term& t : terms_) {
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.re().denominator().get_mpz_t());
        den_lcm = l;
    }
    for (const Term& t : terms_) {
        mpz_class scaled_num = t.coeff.re().numerator() * (den_lcm / t.coeff.re().denominator());
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), scaled_num.get_mpz_t());
        num_gcd = g;
    }
    BigRational scale(den_lcm, num_gcd);
    Polynomial r = scaled(GaussRational(scale.abs()));
    // Positive sign at the lex-leading coefficient.
    if (r.leading_term(TermOrder::lex()).coeff.re().sign() < 0) r = -r;
    return r;
}

Polynomial Polynomial::gaussian_primitive_part(GaussRational* content_out) const {
    if (terms_.empty()) {
        if (content_out) *content_out = GaussRational(1L);
        return *this;
    }
    mpz_class den_lcm = 1;
    for (const Term& t : terms_) {
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.re().denominator().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.im().denominator().get_mpz_t());
        den_lcm = l;
    }
    GaussInt g{0, 0};
    for (const Term& t : terms_) {
        GaussInt c{t.coeff.re().numerator() * (den_lcm / t.coeff.re().denominator()),
                   t.coeff.im().numerator() * (den_lcm / t.coeff.im().denominator())};
        g = gauss_gcd(g, c);
        if (g.norm() == 1 && sgn(g.im) == 0) break;
    }
    GaussRational content(BigRational(g.re, den_lcm), BigRational(g.im, den_lcm));
    Polynomial r = scaled(GaussRational(1L) / content);
    // Rotate by the unit putting the canonical-leading coefficient in the
    // half-quadrant re > 0, im >= 0 (unique among the four rotations).
    const GaussRational& lead = r.terms_[0].coeff;
    GaussRational unit(1L);
    if (lead.re().sign() > 0 && lead.im().sign() >= 0)
        unit = GaussRational(1L);
    else if (lead.re().sign() <= 0 && lead.im().sign() > 0)
        unit = GaussRational(BigRational(0L), BigRational(-1L));  // multiply by -i
    else if (lead.re().sign() < 0)
        unit = GaussRational(BigRational(-1L), BigRational(0L));
    else
        unit = GaussRational::i();
    r = r.scaled(unit);
    content /= unit;
    if (content_out) *content_out = std::move(content);
    return r;
}

}  // namespace framecert
