#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include "framecert/polynomial.hpp"
using namespace framecert;
TEST_CASE("smoke") {
    auto t = VariableTable::make({"x", "y"});
    Polynomial p = Polynomial::parse(t, "(x+i*y)*(x-i*y)");
    CHECK(p == Polynomial::parse(t, "x^2+y^2"));
    CHECK(p.to_string() == "x^2 + y^2");
}
