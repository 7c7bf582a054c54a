#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <string>

#include "mzv/expression.hpp"
#include "mzv/lyndon.hpp"
#include "mzv/products.hpp"
#include "mzv/qlinalg.hpp"
#include "mzv/relations.hpp"

using namespace mzv;

namespace {

IndexCombination E(const char* text) { return parse_combination(text); }

bool all_last_parts_at_least_two(const IndexCombination& v) {
    for (const auto& [mu, c] : v)
        if (mu.is_phi() || mu.back() < 2) return false;
    return true;
}

}  // namespace

TEST_CASE("linear relations from products") {
    const LinearRelation r = kawashima_linear(MultiIndex{1}, MultiIndex{1});
    CHECK(r.element == E("-(2) + (1,1)"));
    CHECK(r.weight == 2);
    CHECK(r.provenance == "kawashima((1),(1))");
    CHECK(op_plus(r.element) == E("-(3) + (1,2)"));
    CHECK_THROWS_AS(kawashima_linear(MultiIndex::phi(), MultiIndex{1}), std::invalid_argument);
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; a + b <= 6; ++b)
            for (const auto& mu : indices_of_weight(a))
                for (const auto& nu : indices_of_weight(b)) {
                    CHECK(kawashima_linear(mu, nu).element.is_homogeneous(a + b));
                    CHECK(op_d_inverse(op_u(op_sigma(stuffle(op_d(mu), op_d(nu))))) == -op_dual(stuffle_bar(mu, nu)));
                }
}

TEST_CASE("pairs and the relation matrix") {
    CHECK(kawashima_pairs(2).size() == 1);
    CHECK(kawashima_pairs(3).size() == 2);
    CHECK(kawashima_pairs(4).size() == 7);
    const std::size_t rows[] = {1, 2, 7, 16, 42, 96, 228};
    for (int k = 2; k <= 8; ++k) CHECK(kawashima_pairs(k).size() == rows[k - 2]);
    CHECK(rank(kawashima_basis(2)) == 1);
    CHECK(rank(kawashima_basis(4)) == 5);
    CHECK(rank(kawashima_basis(4)) == (1 << 3) - psi2(4));
    CHECK(rank(kawashima_basis(6)) == 23);
    for (int k = 2; k <= 8; ++k) {
        const RelationMatrix m = kawashima_basis(k);
        const auto pairs = kawashima_pairs(k);
        REQUIRE(m.nrows() == static_cast<int>(pairs.size()));
        for (std::size_t i = 0; i < pairs.size(); ++i)
            CHECK(m.to_combination(m.row(static_cast<int>(i))) == kawashima_linear(pairs[i].first, pairs[i].second).element);
    }
    CHECK_THROWS_AS(kawashima_basis(9, 8), std::invalid_argument);
    CHECK_THROWS_AS(kawashima_basis(1), std::invalid_argument);
}

TEST_CASE("duality generators") {
    CHECK(duality_generator(MultiIndex{2}).element == E("(2) - (1,1)"));
    CHECK(duality_generator(MultiIndex{1, 2}).element.is_zero());
    CHECK(duality_generator(MultiIndex{3}).provenance == "duality((3))");
    CHECK_THROWS_AS(duality_generator(MultiIndex::phi()), std::invalid_argument);
    for (int k = 2; k <= 6; ++k) {
        const RelationMatrix m = kawashima_basis(k);
        const RowSpace space(m);
        for (const auto& mu : indices_of_weight(k)) {
            const IndexCombination x = duality_generator(mu).element;
            const auto cert = space.member(x);
            REQUIRE(cert);
            CHECK(check_certificate(m, x, *cert));
        }
    }
}

TEST_CASE("alternating duality sum") {
    CHECK(duality_alternating_sum(MultiIndex{1, 1}).is_zero());
    CHECK(duality_alternating_sum(MultiIndex{2}).is_zero());
    CHECK(duality_alternating_sum(MultiIndex{2, 1}).is_zero());
    for (int w = 1; w <= 7; ++w)
        for (const auto& mu : indices_of_weight(w)) CHECK(verify_duality_sum(mu));
    CHECK(ones(3) == E("(1,1,1)"));
    CHECK(ones(0) == E("phi"));
}

TEST_CASE("ohno relations") {
    const LinearRelation r = ohno_relation(MultiIndex{2}, 1);
    CHECK(r.weight == 3);
    CHECK(r.provenance == "ohno((2),1)");
    CHECK(ohno_relation(MultiIndex{2, 1}, 0).element == duality_generator(MultiIndex{2, 1}).element);
    CHECK_THROWS_AS(ohno_relation(MultiIndex{2}, -1), std::invalid_argument);
}

TEST_CASE("quadratic relations") {
    const auto linear = quadratic_relation(E("(1)"), E("(1)"), 1);
    REQUIRE(std::holds_alternative<LinearRelation>(linear));
    CHECK(op_plus(std::get<LinearRelation>(linear).element) == E("-(3) + (1,2)"));

    const auto q = quadratic_relation(E("(1)"), E("(1)"), 2);
    REQUIRE(std::holds_alternative<QuadraticRelation>(q));
    const QuadraticRelation& rel = std::get<QuadraticRelation>(q);
    CHECK(rel.m == 2);
    REQUIRE(rel.lhs.size() == 1);
    CHECK(rel.lhs[0].first == E("-(2)"));
    CHECK(rel.lhs[0].second == E("-(2)"));
    CHECK(rel.rhs == circ(op_u(op_sigma(stuffle(E("(1)"), E("(1)")))), E("(1,1)")));
    CHECK(all_last_parts_at_least_two(rel.rhs));
    for (const char* v : {"(1)", "(2)", "(1,2) - (3)"})
        for (const char* w : {"(1)", "(2,1)"})
            for (int m = 2; m <= 4; ++m) {
                const auto x = std::get<QuadraticRelation>(quadratic_relation(E(v), E(w), m));
                CHECK(x.lhs.size() == static_cast<std::size_t>(m - 1));
                CHECK(all_last_parts_at_least_two(x.rhs));
                for (const auto& [a, b] : x.lhs) CHECK((all_last_parts_at_least_two(a) && all_last_parts_at_least_two(b)));
            }
    CHECK_THROWS_AS(quadratic_relation(E("(1)"), E("(1)"), 0), std::invalid_argument);
}

TEST_CASE("taylor coefficients") {
    const auto c = taylor_coefficients(E("(1)"), 3);
    REQUIRE(c.size() == 3);
    CHECK(c[0] == E("(2)"));
    CHECK(c[1] == -circ(E("(1)"), E("(1,1)")));
    CHECK_THROWS_AS(taylor_coefficients(E("phi"), 2), std::invalid_argument);
    // d(dual v) and u sigma are linked through d dual d^-1 = -u sigma
    for (const auto& mu : indices_of_weight(4)) {
        const auto t = taylor_coefficients(IndexCombination(mu), 1);
        CHECK(t[0] == -circ(op_u(op_sigma(op_d(IndexCombination(mu)))), E("(1)")));
    }
}

TEST_CASE("json export") {
    const nlohmann::json j = to_json(kawashima_linear(MultiIndex{1}, MultiIndex{1}));
    CHECK(j["weight"] == 2);
    CHECK(j["provenance"] == "kawashima((1),(1))");
    REQUIRE(j["terms"].size() == 2);
    CHECK(j["terms"][0]["index"] == nlohmann::json::array({2}));
    CHECK(j["terms"][0]["num"] == -1);
    CHECK(j["terms"][0]["den"] == 1);
    const nlohmann::json big = to_json(IndexCombination(MultiIndex{1}, Rational(mpz_class("123456789012345678901234567890"), 7)));
    CHECK(big[0]["num"] == "123456789012345678901234567890");
    CHECK(big[0]["den"] == 7);
    const nlohmann::json q = to_json(std::get<QuadraticRelation>(quadratic_relation(E("(1)"), E("(1)"), 2)));
    CHECK(q["m"] == 2);
    CHECK(q["lhs"].size() == 1);
    CHECK(to_json(IndexCombination()).empty());
}
