#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "framecert/frame.hpp"
#include "framecert/groebner.hpp"
#include "test_support.hpp"

using namespace framecert;
using testsupport::Rng;

namespace {

Frame load_frame11() {
    std::ifstream in(std::string(FRAMECERT_DATA_DIR) + "/frame11.txt");
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return Frame::from_text(ss.str());
}

}  // namespace

TEST_CASE("hermitian variable table layout") {
    auto t = VariableTable::hermitian(4);
    std::vector<std::string> expect = {"x11", "x12", "x13", "x14", "x22", "x23", "x24", "x33",
                                       "x34", "x44", "y12", "y13", "y14", "y23", "y24", "y34"};
    CHECK(t->names() == expect);
    CHECK(t->name(hermitian_x_index(4, 3, 4)) == "x34");
    CHECK(t->name(hermitian_y_index(4, 3, 4)) == "y34");
    CHECK(t->name(hermitian_x_index(4, 1, 1)) == "x11");
    CHECK(t->name(hermitian_y_index(4, 1, 2)) == "y12");
}

TEST_CASE("hermitian symbol matrix entries") {
    auto t = VariableTable::hermitian(4);
    CHECK(hermitian_symbol_entry(t, 4, 3, 4) == Polynomial::parse(t, "x34 + i*y34"));
    CHECK(hermitian_symbol_entry(t, 4, 4, 3) == Polynomial::parse(t, "x34 - i*y34"));
    CHECK(hermitian_symbol_entry(t, 4, 2, 2) == Polynomial::parse(t, "x22"));

    auto t2 = VariableTable::hermitian(2);
    auto q2 = hermitian_symbol_matrix(t2, 2);
    CHECK(q2[0][0] == Polynomial::parse(t2, "x11"));
    CHECK(q2[0][1] == Polynomial::parse(t2, "x12 + i*y12"));
    CHECK(q2[1][0] == Polynomial::parse(t2, "x12 - i*y12"));
    CHECK(q2[1][1] == Polynomial::parse(t2, "x22"));
}

TEST_CASE("minors are cubic, Hermitian-symmetric, with real diagonal") {
    auto t = VariableTable::hermitian(4);
    auto minors = hermitian_minors(t, 4);
    REQUIRE(minors.size() == 16);
    for (const Polynomial& m : minors) {
        auto deg = m.homogeneous_degree();
        REQUIRE(deg.has_value());
        CHECK(*deg == 3);
    }
    auto at = [&](int j, int k) -> const Polynomial& { return minors[(j - 1) * 4 + (k - 1)]; };
    for (int j = 1; j <= 4; ++j)
        for (int k = 1; k <= 4; ++k) CHECK(at(k, j) == at(j, k).conjugate_coefficients());
    for (int j = 1; j <= 4; ++j) CHECK(at(j, j).has_real_coefficients());
    // m_11 expands the complementary principal minor; its diagonal product
    // term is x22*x33*x44.
    CHECK(at(1, 1).coefficient(Monomial(std::vector<uint32_t>{0, 0, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0,
                                                              0, 0, 0, 0})) == GaussRational(1L));
}

TEST_CASE("measurement forms of coordinate vectors and e1+e2") {
    auto t = VariableTable::hermitian(4);
    std::vector<GaussRational> e1{1, 0, 0, 0};
    CHECK(measurement_form(t, 4, e1) == Polynomial::parse(t, "x11"));
    std::vector<GaussRational> e12{1, 1, 0, 0};
    CHECK(measurement_form(t, 4, e12) == Polynomial::parse(t, "x11 + 2*x12 + x22"));
}

TEST_CASE("perturbed-row form matches the displayed coefficients at (a,b)") {
    // Row (1, -3+8i, 5-5i, a+bi): the form's coefficients are polynomial
    // in (a,b); check the closed form at a few rational points.
    auto t = VariableTable::hermitian(4);
    Rng rng(7);
    for (int trial = 0; trial < 8; ++trial) {
        BigRational a = rng.rational(12, 4), b = rng.rational(12, 4);
        std::vector<GaussRational> phi{GaussRational(1L),
                                       GaussRational(BigRational(-3L), BigRational(8L)),
                                       GaussRational(BigRational(5L), BigRational(-5L)),
                                       GaussRational(a, b)};
        Polynomial form = measurement_form(t, 4, phi);
        auto coeff_of = [&](const std::string& name) {
            size_t idx = t->index_of(name);
            return form.coefficient(Monomial::variable(16, idx)).re();
        };
        CHECK(coeff_of("x44") == a * a + b * b);
        CHECK(coeff_of("x14") == BigRational(2L) * a);
        CHECK(coeff_of("y14") == BigRational(-2L) * b);
        CHECK(coeff_of("x24") == -(BigRational(6L) * a - BigRational(16L) * b));
        CHECK(coeff_of("y24") == BigRational(16L) * a + BigRational(6L) * b);
        CHECK(coeff_of("x34") == BigRational(10L) * (a - b));
        CHECK(coeff_of("y34") == BigRational(-10L) * (a + b));
        CHECK(coeff_of("x11") == BigRational(1L));
        CHECK(coeff_of("x12") == BigRational(-6L));
        CHECK(coeff_of("x13") == BigRational(10L));
        CHECK(coeff_of("x22") == BigRational(73L));
        CHECK(coeff_of("x23") == BigRational(-110L));
        CHECK(coeff_of("x33") == BigRational(50L));
        CHECK(coeff_of("y12") == BigRational(-16L));
        CHECK(coeff_of("y13") == BigRational(10L));
        CHECK(coeff_of("y23") == BigRational(50L));
    }
}

TEST_CASE("measurement form agrees with direct complex evaluation") {
    auto t = VariableTable::hermitian(4);
    Rng rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<GaussRational> phi;
        for (int k = 0; k < 4; ++k) phi.push_back(rng.gauss(8, 3));
        Polynomial form = measurement_form(t, 4, phi);
        auto coords = testsupport::hermitian_coordinates(4, rng);
        CHECK(form.evaluate(coords) == testsupport::quadratic_form_direct(4, phi, coords));
    }
}

TEST_CASE("all minors vanish on random rank-2 Hermitian matrices") {
    auto t = VariableTable::hermitian(4);
    auto minors = hermitian_minors(t, 4);
    Rng rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        auto coords = testsupport::rank2_coordinates(4, rng);
        for (const Polynomial& m : minors) CHECK(m.evaluate(coords).is_zero());
    }
}

TEST_CASE("frame file round-trips and digests are stable") {
    Frame f = load_frame11();
    CHECK(f.d == 4);
    CHECK(f.n == 11);
    CHECK(f.vectors[4][1] == GaussRational(BigRational(0L), BigRational(9L)));
    Frame g = Frame::from_json(f.to_json());
    CHECK(g.canonical_string() == f.canonical_string());
    CHECK(g.digest() == f.digest());
    Frame h = Frame::from_text(f.to_text());
    CHECK(h.digest() == f.digest());
}

TEST_CASE("presolve on the bundled frame") {
    Frame f = load_frame11();
    HermitianSystem sys = build_system(f);
    size_t x34 = sys.table->index_of("x34"), y34 = sys.table->index_of("y34");
    auto [pre, reduced] = linear_presolve(sys, {x34, y34});

    CHECK(pre.rank == 11);
    CHECK(pre.kept.size() == 5);
    CHECK(!pre.dependent_forms);
    CHECK(std::count(pre.kept.begin(), pre.kept.end(), x34) == 1);
    CHECK(std::count(pre.kept.begin(), pre.kept.end(), y34) == 1);

    // Coordinate-vector forms pin the diagonal to zero.
    auto bind = pre.bindings();
    for (const char* name : {"x11", "x22", "x33", "x44"}) {
        size_t idx = sys.table->index_of(name);
        REQUIRE(bind.count(idx) == 1);
        CHECK(bind.at(idx).is_zero());
    }

    // Bindings solve every form exactly.
    for (const Polynomial& form : sys.forms) CHECK(form.substitute(bind).is_zero());

    // Row identities: var - binding == sum alpha_k * forms[k].
    for (const PresolveRow& row : pre.rows) {
        Polynomial lhs = Polynomial::variable(sys.table, row.var) - row.binding;
        Polynomial rhs = Polynomial::zero(sys.table);
        for (size_t k = 0; k < sys.forms.size(); ++k)
            if (!row.alpha[k].is_zero()) rhs += sys.forms[k].scaled(GaussRational(row.alpha[k]));
        CHECK(lhs == rhs);
    }

    // Reduced minors live in the kept variables only.
    std::vector<uint8_t> kept_mask(sys.table->size(), 0);
    for (size_t v : pre.kept) kept_mask[v] = 1;
    for (const Polynomial& m : reduced)
        for (size_t v = 0; v < sys.table->size(); ++v)
            if (!kept_mask[v]) CHECK(!m.uses_variable(v));

    // Exact rank cross-check: the 11x11 pivot-column determinant is nonzero.
    std::vector<size_t> pivots;
    for (const PresolveRow& r : pre.rows) pivots.push_back(r.var);
    std::vector<std::vector<BigRational>> sub(11, std::vector<BigRational>(11));
    for (size_t i = 0; i < sys.forms.size(); ++i)
        for (size_t c = 0; c < pivots.size(); ++c)
            sub[i][c] = sys.forms[i].coefficient(Monomial::variable(16, pivots[c])).re();
    // Fraction-free-ish determinant by elimination.
    BigRational det(1L);
    for (size_t c = 0; c < 11; ++c) {
        size_t p = c;
        while (p < 11 && sub[p][c].is_zero()) ++p;
        REQUIRE(p < 11);
        if (p != c) {
            std::swap(sub[p], sub[c]);
            det = -det;
        }
        det *= sub[c][c];
        for (size_t r = c + 1; r < 11; ++r) {
            if (sub[r][c].is_zero()) continue;
            BigRational factor = sub[r][c] / sub[c][c];
            for (size_t cc = c; cc < 11; ++cc) sub[r][cc] -= factor * sub[c][cc];
        }
    }
    CHECK(!det.is_zero());
}

TEST_CASE("presolve pivoting does not change the ideal on the toy") {
    auto t = VariableTable::make({"x", "y", "z"});
    HermitianSystem sys;
    sys.d = 2;
    sys.table = t;
    sys.minors = {Polynomial::parse(t, "z^2 - x^2 - y^2")};
    sys.forms = {Polynomial::parse(t, "x + y - 2*z")};
    auto [pre, reduced] = linear_presolve(sys, {0, 1});
    REQUIRE(pre.rows.size() == 1);
    CHECK(pre.rows[0].var == t->index_of("z"));

    std::vector<Polynomial> lifted = reduced;
    lifted.push_back(sys.forms[0]);
    std::vector<Polynomial> original = {sys.minors[0], sys.forms[0]};
    GroebnerBasis a = buchberger(lifted, TermOrder::grevlex());
    GroebnerBasis b = buchberger(original, TermOrder::grevlex());
    REQUIRE(a.generators.size() == b.generators.size());
    for (size_t k = 0; k < a.generators.size(); ++k) CHECK(a.generators[k] == b.generators[k]);
}

TEST_CASE("substitution witness identity") {
    auto t = VariableTable::make({"x", "y", "z"});
    Rng rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        Polynomial p = rng.polynomial(t, 6, 4);
        Polynomial b = rng.polynomial(t, 3, 1);
        size_t var = static_cast<size_t>(rng.in_range(0, 2));
        auto [image, q] = p.substitute_single_with_quotient(var, b);
        Polynomial v = Polynomial::variable(t, var);
        CHECK(p - image == (v - b) * q);
        CHECK(image == p.substitute({{var, b}}));
    }
}

TEST_CASE("frames that do not span are rejected") {
    Frame f;
    f.d = 4;
    f.n = 4;
    f.vectors.assign(4, std::vector<GaussRational>(4));
    for (int k = 0; k < 3; ++k) f.vectors[k][k] = GaussRational(1L);
    f.vectors[3][2] = GaussRational(1L);  // repeats e3
    CHECK_THROWS_AS(f.validate(), Error);
}
