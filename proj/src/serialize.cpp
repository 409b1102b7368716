#include "framecert/serialize.hpp"

namespace framecert {

Json gauss_to_json(const GaussRational& z) {
    return Json::array({z.re().to_string(), z.im().to_string()});
}

GaussRational gauss_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2)
        throw ParseError("expected [re, im] pair for a Gaussian rational");
    return GaussRational(BigRational::parse(j[0].get<std::string>()),
                         BigRational::parse(j[1].get<std::string>()));
}

Json polynomial_to_json(const Polynomial& p) {
    Json terms = Json::array();
    for (const Term& t : p.terms()) {
        Json exps = Json::array();
        for (uint32_t e : t.mono.exponents()) exps.push_back(e);
        terms.push_back(Json::array({exps, gauss_to_json(t.coeff)}));
    }
    return Json{{"variables", p.table()->names()}, {"terms", terms}};
}

Polynomial polynomial_from_json(const Json& j, VariableTablePtr expected) {
    if (!j.contains("variables") || !j.contains("terms"))
        throw ParseError("polynomial JSON needs 'variables' and 'terms'");
    auto names = j.at("variables").get<std::vector<std::string>>();
    VariableTablePtr table = expected;
    if (table) {
        if (names != table->names())
            throw ParseError("polynomial JSON variable list does not match the expected table");
    } else {
        table = VariableTable::make(names);
    }
    std::vector<Term> terms;
    for (const Json& jt : j.at("terms")) {
        if (!jt.is_array() || jt.size() != 2)
            throw ParseError("polynomial term must be [[exponents...], [re, im]]");
        auto exps = jt[0].get<std::vector<uint32_t>>();
        if (exps.size() != table->size())
            throw ParseError("polynomial term exponent width mismatch");
        terms.push_back({Monomial(std::move(exps)), gauss_from_json(jt[1])});
    }
    return Polynomial::from_terms(table, std::move(terms));
}

Json root_to_json(const ComplexRoot& r, size_t digits) {
    return Json{{"re", r.re.to_string(digits)},
                {"im", r.im.to_string(digits)},
                {"residual", r.residual.to_string(6)}};
}

}  // namespace framecert
