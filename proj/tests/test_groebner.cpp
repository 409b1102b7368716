#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "framecert/groebner.hpp"

using namespace framecert;

namespace {

VariableTablePtr xyz() { return VariableTable::make({"x", "y", "z"}); }

Polynomial P(const VariableTablePtr& t, const std::string& s) { return Polynomial::parse(t, s); }

}  // namespace

TEST_CASE("normal form basics") {
    auto t = VariableTable::make({"x", "y"});
    TermOrder lex = TermOrder::lex();

    auto [r1, c1] = normal_form(P(t, "x^2"), std::vector{P(t, "x")}, lex, true);
    CHECK(r1.is_zero());
    CHECK(c1->multipliers[0] == P(t, "x"));
    CHECK(cofactors_expand_to_target(*c1, std::vector{P(t, "x")}));

    auto [r2, c2] = normal_form(P(t, "x^2+y"), std::vector{P(t, "x")}, lex, false);
    CHECK(r2 == P(t, "y"));
    CHECK(!c2.has_value());
}

TEST_CASE("division contract and the toy certificate identity") {
    auto t = xyz();
    Polynomial m = P(t, "z^2 - x^2 - y^2");
    Polynomial l = P(t, "x + y - 2*z");
    Polynomial f = P(t, "3*x^2 - 2*x*y + 3*y^2");
    // The displayed certificate: f = -4m - (x+y+2z) l.
    Polynomial combo = m.scaled(GaussRational(-4L)) - P(t, "(x+y+2*z)") * l;
    CHECK(combo == f);
    CofactorRepresentation identity{f, {P(t, "-4"), -P(t, "x+y+2*z")}};
    CHECK(cofactors_expand_to_target(identity, std::vector{m, l}));

    // {m, l} is not a Groebner basis, so division may leave a remainder;
    // the exact decomposition p = rem + sum q_i g_i must hold regardless.
    auto [rem, cof] = normal_form(f, std::vector{m, l}, TermOrder::grevlex(), true);
    CHECK(cofactors_expand_to_target(*cof, std::vector{m, l}));
    CHECK(cof->target + rem == f);
    for (const Term& term : rem.terms()) {
        CHECK(!m.leading_term(TermOrder::grevlex()).mono.divides(term.mono));
        CHECK(!l.leading_term(TermOrder::grevlex()).mono.divides(term.mono));
    }
}

TEST_CASE("buchberger on trivial systems") {
    auto t = VariableTable::make({"x", "y"});
    GroebnerBasis b1 = buchberger(std::vector{P(t, "x"), P(t, "y")}, TermOrder::grevlex());
    REQUIRE(b1.generators.size() == 2);
    CHECK(b1.generators[0] == P(t, "y"));
    CHECK(b1.generators[1] == P(t, "x"));

    GroebnerBasis b2 = buchberger(std::vector{P(t, "x-1"), P(t, "x")}, TermOrder::grevlex());
    REQUIRE(b2.generators.size() == 1);
    CHECK(b2.generators[0] == P(t, "1"));
}

TEST_CASE("elimination on the toy system finds the minimal polynomial") {
    auto t = xyz();
    Polynomial m = P(t, "z^2 - x^2 - y^2");
    Polynomial l = P(t, "x + y - 2*z");
    std::vector<uint8_t> keep = {1, 1, 0};  // keep x, y

    GroebnerOptions opts;
    opts.track = true;
    EliminationResult res = elimination_ideal(std::vector{m, l}, keep, opts);
    REQUIRE(res.generators.size() == 1);
    Polynomial f = res.generators[0].integer_primitive_part();
    CHECK(f == P(t, "3*x^2 - 2*x*y + 3*y^2"));

    REQUIRE(res.cofactors.size() == 1);
    CHECK(cofactors_expand_to_target(res.cofactors[0], std::vector{m, l}));
}

TEST_CASE("elimination with no consequence is empty") {
    auto t = VariableTable::make({"x", "y"});
    EliminationResult res = elimination_ideal(std::vector{P(t, "x - y")}, {1, 0});
    CHECK(res.generators.empty());
}

TEST_CASE("ideal_contains_one with certificates on the toy slices") {
    auto t = xyz();
    Polynomial m = P(t, "z^2 - x^2 - y^2");
    Polynomial l = P(t, "x + y - 2*z");
    GroebnerOptions opts;
    opts.track = true;

    std::vector<Polynomial> slice_x{P(t, "y"), P(t, "x-1"), l, m};
    auto [one_x, cert_x] = ideal_contains_one(slice_x, opts);
    CHECK(one_x);
    REQUIRE(cert_x.has_value());
    CHECK(cert_x->target == P(t, "1"));
    CHECK(cofactors_expand_to_target(*cert_x, slice_x));

    std::vector<Polynomial> slice_z{P(t, "y"), P(t, "z-1"), l, m};
    auto [one_z, cert_z] = ideal_contains_one(slice_z, opts);
    CHECK(one_z);
    CHECK(cofactors_expand_to_target(*cert_z, slice_z));

    auto [one_proper, cert_proper] = ideal_contains_one(std::vector{P(t, "x")}, opts);
    CHECK(!one_proper);
    CHECK(!cert_proper.has_value());
}

TEST_CASE("paper slice identity re-expands") {
    // 1 = (2x-3y)/3 * y - (x+1)(x-1) - (x+y+2z)/3 * l - 4/3 * m
    auto t = xyz();
    Polynomial m = P(t, "z^2 - x^2 - y^2");
    Polynomial l = P(t, "x + y - 2*z");
    GaussRational third(BigRational(mpz_class(1), mpz_class(3)));
    GaussRational four_thirds(BigRational(mpz_class(4), mpz_class(3)));
    Polynomial expr = (P(t, "2*x-3*y") * P(t, "y")).scaled(third) - P(t, "(x+1)*(x-1)") -
                      (P(t, "x+y+2*z") * l).scaled(third) - m.scaled(four_thirds);
    CHECK(expr == P(t, "1"));
}

TEST_CASE("reduced basis is unique under generator shuffling") {
    auto t = xyz();
    std::vector<Polynomial> gens{P(t, "x*y - z^2"), P(t, "y^2 - x*z"), P(t, "x^2 - y*z"),
                                 P(t, "x + y + z")};
    GroebnerBasis ref = buchberger(gens, TermOrder::grevlex());
    CHECK(spolynomials_reduce_to_zero(ref));

    std::mt19937 rng(12345);
    for (int trial = 0; trial < 6; ++trial) {
        std::vector<Polynomial> shuffled = gens;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        GroebnerBasis got = buchberger(shuffled, TermOrder::grevlex());
        REQUIRE(got.generators.size() == ref.generators.size());
        for (size_t k = 0; k < got.generators.size(); ++k)
            CHECK(got.generators[k] == ref.generators[k]);
    }
}

TEST_CASE("tracked buchberger cofactors re-expand for every generator") {
    auto t = xyz();
    std::vector<Polynomial> gens{P(t, "x^2 + y"), P(t, "x*y + z"), P(t, "y^3 - z^2 + x")};
    GroebnerOptions opts;
    opts.track = true;
    GroebnerBasis basis = buchberger(gens, TermOrder::grevlex(), opts);
    REQUIRE(basis.cofactors.size() == basis.generators.size());
    for (size_t k = 0; k < basis.generators.size(); ++k) {
        CHECK(basis.cofactors[k].target == basis.generators[k]);
        CHECK(cofactors_expand_to_target(basis.cofactors[k], gens));
    }
    CHECK(spolynomials_reduce_to_zero(basis));
}

TEST_CASE("block order elimination property") {
    auto t = VariableTable::make({"x", "y"});
    TermOrder blk = TermOrder::block({1, 0});
    Polynomial p = P(t, "x^2 + x*y + y^2");
    const Term& lt = p.leading_term(blk);
    CHECK(lt.mono.exponent(0) > 0);
}

TEST_CASE("resource ceiling aborts loudly") {
    auto t = xyz();
    GroebnerOptions opts;
    opts.max_basis_terms = 4;
    std::vector<Polynomial> gens{P(t, "x^3*y - z^4 - x"), P(t, "y^4 - x*z - y"),
                                 P(t, "x^2*z^2 - y^2 - z")};
    CHECK_THROWS_AS(buchberger(gens, TermOrder::grevlex(), opts), ResourceLimitError);
}
