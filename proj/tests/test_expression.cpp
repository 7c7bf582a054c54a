#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mzv/expression.hpp"
#include "mzv/products.hpp"

using namespace mzv;

TEST_CASE("indices") {
    CHECK(parse_index("(1,2,3)") == MultiIndex{1, 2, 3});
    CHECK(parse_index(" ( 4 , 1 ) ") == MultiIndex{4, 1});
    CHECK(parse_index("phi").is_phi());
}

TEST_CASE("combinations") {
    IndexCombination expected(MultiIndex{2}, Rational(-1));
    expected.add(MultiIndex{1, 1}, Rational(2));
    CHECK(parse_combination("-(2) + 2*(1,1)") == expected);
    CHECK(parse_combination("2*(1,1) - 1*(2)") == expected);
    CHECK(parse_combination("0").is_zero());
    CHECK(parse_combination("(1,1) - (1,1)").is_zero());
    CHECK(parse_combination("3/6*(2)") == IndexCombination(MultiIndex{2}, Rational(1, 2)));
    CHECK(parse_combination("phi") == IndexCombination(MultiIndex::phi()));
}

TEST_CASE("printing round trips") {
    const IndexCombination p = stuffle(MultiIndex{1, 2}, MultiIndex{2, 1}) * Rational(-3, 7);
    CHECK(parse_combination(p.to_string()) == p);
    CHECK(IndexCombination().to_string() == "0");
    CHECK(IndexCombination(MultiIndex::phi()).to_string() == "phi");
}

TEST_CASE("errors carry a position") {
    auto position_of = [](const char* text) -> long {
        try {
            parse_combination(text);
        } catch (const ParseError& e) {
            return static_cast<long>(e.position());
        }
        return -1;
    };
    CHECK(position_of("(1,") == 3);
    CHECK(position_of("(1,0)") == 3);
    CHECK(position_of("(1,2") >= 3);
    CHECK(position_of("(1) +") >= 4);
    CHECK(position_of("1/0*(2)") >= 0);
    CHECK(position_of("x") == 0);
    CHECK(position_of("") == 0);
    CHECK(position_of("(2) (3)") == 4);
}
