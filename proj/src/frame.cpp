#include "framecert/frame.hpp"

#include <sstream>

#include "framecert/digest.hpp"

namespace framecert {

void Frame::validate() const {
    if (d < 2) throw Error("frame dimension must be at least 2");
    if (n < d) throw Error("frame needs at least d vectors to span C^d");
    if (static_cast<int>(vectors.size()) != n) throw Error("frame vector count mismatch");
    for (const auto& v : vectors)
        if (static_cast<int>(v.size()) != d) throw Error("frame vector length mismatch");

    // Exact rank of the n x d matrix by Gaussian elimination.
    std::vector<std::vector<GaussRational>> rows(vectors);
    int rank = 0;
    size_t top = 0;
    for (int c = 0; c < d && top < rows.size(); ++c) {
        size_t pivot = rows.size();
        for (size_t r = top; r < rows.size(); ++r)
            if (!rows[r][c].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot == rows.size()) continue;
        std::swap(rows[top], rows[pivot]);
        GaussRational inv = GaussRational(1L) / rows[top][c];
        for (int cc = 0; cc < d; ++cc) rows[top][cc] *= inv;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == top || rows[r][c].is_zero()) continue;
            GaussRational factor = rows[r][c];
            for (int cc = 0; cc < d; ++cc) rows[r][cc] -= factor * rows[top][cc];
        }
        ++top;
        ++rank;
    }
    if (rank < d) throw Error("frame vectors do not span C^" + std::to_string(d));
}

std::string Frame::canonical_string() const {
    std::ostringstream os;
    os << "frame/" << d << "/" << n << "\n";
    for (const auto& v : vectors) {
        for (int c = 0; c < d; ++c) os << (c ? " " : "") << v[c].to_string();
        os << "\n";
    }
    return os.str();
}

std::string Frame::digest() const { return sha256_hex(canonical_string()); }

Frame Frame::from_json(const Json& j) {
    Frame f;
    try {
        f.d = j.at("d").get<int>();
        f.n = j.at("n").get<int>();
        for (const Json& row : j.at("vectors")) {
            std::vector<GaussRational> v;
            for (const Json& ent : row) v.push_back(gauss_from_json(ent));
            f.vectors.push_back(std::move(v));
        }
    } catch (const Json::exception& e) {
        throw ParseError(std::string("frame JSON: ") + e.what());
    }
    f.validate();
    return f;
}

Json Frame::to_json() const {
    Json rows = Json::array();
    for (const auto& v : vectors) {
        Json row = Json::array();
        for (const GaussRational& z : v) row.push_back(gauss_to_json(z));
        rows.push_back(std::move(row));
    }
    return Json{{"d", d}, {"n", n}, {"vectors", rows}};
}

Frame Frame::from_text(const std::string& text) {
    Frame f;
    std::istringstream is(text);
    std::string line;
    size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::vector<GaussRational> v;
        std::string tok;
        while (ls >> tok) {
            try {
                v.push_back(GaussRational::parse(tok));
            } catch (const Error& e) {
                throw ParseError("frame text line " + std::to_string(lineno) + ": " + e.what());
            }
        }
        if (v.empty()) continue;
        if (!f.vectors.empty() && v.size() != f.vectors.front().size())
            throw ParseError("frame text line " + std::to_string(lineno) +
                             ": inconsistent vector length");
        f.vectors.push_back(std::move(v));
    }
    if (f.vectors.empty()) throw ParseError("frame text: no vectors found");
    f.d = static_cast<int>(f.vectors.front().size());
    f.n = static_cast<int>(f.vectors.size());
    f.validate();
    return f;
}

std::string Frame::to_text() const {
    std::ostringstream os;
    for (const auto& v : vectors) {
        for (int c = 0; c < d; ++c) os << (c ? " " : "") << v[c].to_string();
        os << "\n";
    }
    return os.str();
}

size_t hermitian_x_index(int d, int j, int k) {
    if (j > k) std::swap(j, k);
    size_t before = static_cast<size_t>(j - 1) * d - static_cast<size_t>((j - 1) * (j - 2) / 2);
    return before + static_cast<size_t>(k - j);
}

size_t hermitian_y_index(int d, int j, int k) {
    if (j > k) std::swap(j, k);
    size_t base = static_cast<size_t>(d) * (d + 1) / 2;
    size_t before =
        static_cast<size_t>(j - 1) * (d - 1) - static_cast<size_t>((j - 1) * (j - 2) / 2);
    return base + before + static_cast<size_t>(k - j - 1);
}

Polynomial hermitian_symbol_entry(const VariableTablePtr& table, int d, int j, int k) {
    if (j == k) return Polynomial::variable(table, hermitian_x_index(d, j, k));
    Polynomial x = Polynomial::variable(table, hermitian_x_index(d, j, k));
    Polynomial y = Polynomial::variable(table, hermitian_y_index(d, j, k));
    GaussRational unit = j < k ? GaussRational::i() : -GaussRational::i();
    return x + y.scaled(unit);
}

std::vector<std::vector<Polynomial>> hermitian_symbol_matrix(const VariableTablePtr& table,
                                                             int d) {
    std::vector<std::vector<Polynomial>> q(d);
    for (int j = 1; j <= d; ++j)
        for (int k = 1; k <= d; ++k) q[j - 1].push_back(hermitian_symbol_entry(table, d, j, k));
    return q;
}

namespace {

Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m, const std::vector<int>& rows,
                    const std::vector<int>& cols) {
    if (rows.size() == 1) return m[rows[0]][cols[0]];
    Polynomial det = Polynomial::zero(m[0][0].table());
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (size_t c = 0; c < cols.size(); ++c) {
        std::vector<int> sub_cols;
        for (size_t cc = 0; cc < cols.size(); ++cc)
            if (cc != c) sub_cols.push_back(cols[cc]);
        Polynomial cof = m[rows[0]][cols[c]] * poly_det(m, sub_rows, sub_cols);
        if (c % 2 == 0)
            det += cof;
        else
            det -= cof;
    }
    return det;
}

}  // namespace

std::vector<Polynomial> hermitian_minors(const VariableTablePtr& table, int d) {
    if (d < 2) throw Error("minors need dimension >= 2");
    auto q = hermitian_symbol_matrix(table, d);
    std::vector<Polynomial> out;
    out.reserve(static_cast<size_t>(d) * d);
    for (int j = 1; j <= d; ++j)
        for (int k = 1; k <= d; ++k) {
            std::vector<int> rows, cols;
            for (int r = 0; r < d; ++r)
                if (r != j - 1) rows.push_back(r);
            for (int c = 0; c < d; ++c)
                if (c != k - 1) cols.push_back(c);
            out.push_back(poly_det(q, rows, cols));
        }
    return out;
}

Polynomial measurement_form(const VariableTablePtr& table, int d,
                            std::span<const GaussRational> phi) {
    if (static_cast<int>(phi.size()) != d) throw Error("measurement vector length mismatch");
    Polynomial form = Polynomial::zero(table);
    for (int j = 1; j <= d; ++j)
        for (int k = 1; k <= d; ++k) {
            GaussRational c = phi[j - 1].conj() * phi[k - 1];
            if (c.is_zero()) continue;
            form += hermitian_symbol_entry(table, d, j, k).scaled(c);
        }
    if (!form.has_real_coefficients())
        throw Error("measurement form has a residual imaginary coefficient");
    return form;
}

HermitianSystem build_system(const Frame& frame) {
    frame.validate();
    HermitianSystem sys;
    sys.d = frame.d;
    sys.table = VariableTable::hermitian(frame.d);
    sys.minors = hermitian_minors(sys.table, frame.d);
    for (const auto& v : frame.vectors)
        sys.forms.push_back(measurement_form(sys.table, frame.d, v));
    return sys;
}

std::map<size_t, Polynomial> Presolve::bindings() const {
    std::map<size_t, Polynomial> b;
    for (const PresolveRow& r : rows) b.emplace(r.var, r.binding);
    return b;
}

std::pair<Presolve, std::vector<Polynomial>> linear_presolve(
    const HermitianSystem& system, const std::vector<size_t>& protected_vars) {
    const VariableTablePtr& table = system.table;
    size_t nv = table->size();
    size_t nf = system.forms.size();
    std::vector<uint8_t> protected_mask(nv, 0);
    for (size_t v : protected_vars) protected_mask.at(v) = 1;

    auto to_vec = [&](const Polynomial& form) {
        std::vector<BigRational> v(nv);
        for (const Term& t : form.terms()) {
            if (t.mono.total_degree() != 1 || !t.coeff.is_real())
                throw Error("presolve expects real homogeneous linear forms");
            for (size_t var = 0; var < nv; ++var)
                if (t.mono.exponent(var) == 1) v[var] = t.coeff.re();
        }
        return v;
    };

    Presolve pre;
    std::vector<uint8_t> eliminated(nv, 0);
    struct DenseRow {
        size_t var;
        std::vector<BigRational> binding;
        std::vector<BigRational> alpha;
    };
    std::vector<DenseRow> dense;

    for (size_t k = 0; k < nf; ++k) {
        std::vector<BigRational> row = to_vec(system.forms[k]);
        std::vector<BigRational> alpha(nf);
        alpha[k] = BigRational(1L);
        for (const DenseRow& dr : dense) {
            BigRational c = row[dr.var];
            if (c.is_zero()) continue;
            row[dr.var] = BigRational();
            for (size_t v = 0; v < nv; ++v)
                if (!dr.binding[v].is_zero()) row[v] += c * dr.binding[v];
            for (size_t i = 0; i < nf; ++i)
                if (!dr.alpha[i].is_zero()) alpha[i] -= c * dr.alpha[i];
        }
        size_t pivot = nv;
        for (size_t v = 0; v < nv; ++v) {
            if (row[v].is_zero() || protected_mask[v]) continue;
            if (pivot == nv || row[v].abs() > row[pivot].abs()) pivot = v;
        }
        if (pivot == nv) {
            bool all_zero = true;
            for (size_t v = 0; v < nv; ++v)
                if (!row[v].is_zero()) all_zero = false;
            if (all_zero) {
                pre.dependent_forms = true;
                continue;
            }
            throw Error("presolve cannot keep the protected variables: form " +
                        std::to_string(k + 1) + " constrains only protected variables");
        }
        BigRational c = row[pivot];
        DenseRow dr;
        dr.var = pivot;
        dr.binding.assign(nv, BigRational());
        for (size_t v = 0; v < nv; ++v)
            if (v != pivot && !row[v].is_zero()) dr.binding[v] = -(row[v] / c);
        dr.alpha.assign(nf, BigRational());
        for (size_t i = 0; i < nf; ++i)
            if (!alpha[i].is_zero()) dr.alpha[i] = alpha[i] / c;
        for (DenseRow& old : dense) {
            BigRational oc = old.binding[pivot];
            if (oc.is_zero()) continue;
            old.binding[pivot] = BigRational();
            for (size_t v = 0; v < nv; ++v)
                if (!dr.binding[v].is_zero()) old.binding[v] += oc * dr.binding[v];
            for (size_t i = 0; i < nf; ++i)
                if (!dr.alpha[i].is_zero()) old.alpha[i] += oc * dr.alpha[i];
        }
        eliminated[pivot] = 1;
        dense.push_back(std::move(dr));
    }

    for (const DenseRow& dr : dense) {
        PresolveRow r;
        r.var = dr.var;
        std::vector<Term> terms;
        for (size_t v = 0; v < nv; ++v)
            if (!dr.binding[v].is_zero())
                terms.push_back({Monomial::variable(nv, v), GaussRational(dr.binding[v])});
        r.binding = Polynomial::from_terms(table, std::move(terms));
        r.alpha = dr.alpha;
        pre.rows.push_back(std::move(r));
    }
    pre.rank = pre.rows.size();
    for (size_t v = 0; v < nv; ++v)
        if (!eliminated[v]) pre.kept.push_back(v);

    auto bind = pre.bindings();
    std::vector<Polynomial> reduced;
    reduced.reserve(system.minors.size());
    for (const Polynomial& m : system.minors) reduced.push_back(m.substitute(bind));
    return {std::move(pre), std::move(reduced)};
}

}  // namespace framecert
