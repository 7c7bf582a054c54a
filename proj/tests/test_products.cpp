#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <set>
#include <stdexcept>

#include "mzv/expression.hpp"
#include "mzv/products.hpp"

using namespace mzv;

namespace {

IndexCombination E(const char* text) { return parse_combination(text); }

long delannoy(int p, int q) {
    if (p == 0 || q == 0) return 1;
    return delannoy(p - 1, q) + delannoy(p, q - 1) + delannoy(p - 1, q - 1);
}

}  // namespace

TEST_CASE("matrix enumeration") {
    const auto m = enumerate_stuffle(MultiIndex{1}, MultiIndex{2, 3});
    CHECK(m.size() == 5);
    std::set<std::array<std::vector<int>, 2>> distinct;
    for (const auto& x : m) {
        distinct.insert(x.rows);
        for (int j = 0; j < x.columns(); ++j) CHECK(x.rows[0][static_cast<std::size_t>(j)] + x.rows[1][static_cast<std::size_t>(j)] > 0);
    }
    CHECK(distinct.size() == 5);
    CHECK(enumerate_stuffle(MultiIndex{1}, MultiIndex{1}).size() == 3);
    CHECK(enumerate_stuffle(MultiIndex{1, 1}, MultiIndex{2, 2}).size() == 13);
    for (int p = 1; p <= 4; ++p)
        for (int q = 1; q <= 4; ++q)
            CHECK(enumerate_stuffle(MultiIndex::ones(p), MultiIndex::ones(q)).size() == static_cast<std::size_t>(delannoy(p, q)));
}

TEST_CASE("harmonic product") {
    CHECK(stuffle(MultiIndex{1}, MultiIndex{2, 3}) == E("(1,2,3) + (2,1,3) + (2,3,1) + (3,3) + (2,4)"));
    CHECK(stuffle(MultiIndex{1}, MultiIndex{1}) == E("(2) + 2*(1,1)"));
    CHECK(stuffle(MultiIndex::phi(), MultiIndex{2, 1}) == E("(2,1)"));
    CHECK(stuffle_by_matrices(MultiIndex{1}, MultiIndex{2, 3}) == stuffle(MultiIndex{1}, MultiIndex{2, 3}));
    CHECK(stuffle(IndexCombination(), E("(1)")).is_zero());
}

TEST_CASE("signed harmonic product") {
    CHECK(stuffle_bar(MultiIndex{1}, MultiIndex{2, 3}) == E("(1,2,3) + (2,1,3) + (2,3,1) - (3,3) - (2,4)"));
    CHECK(stuffle_bar(MultiIndex{1}, MultiIndex{1}) == E("2*(1,1) - (2)"));
    CHECK(stuffle_bar(MultiIndex::phi(), MultiIndex{3, 1}) == E("(3,1)"));
    CHECK(stuffle_bar_by_matrices(MultiIndex{2, 1}, MultiIndex{1, 2}) == stuffle_bar(MultiIndex{2, 1}, MultiIndex{1, 2}));
}

TEST_CASE("circled products") {
    CHECK(circ(MultiIndex{2}, MultiIndex{2}) == E("(4)"));
    CHECK(circ(MultiIndex{1, 1}, MultiIndex{1, 1}) == E("(2,2) + 2*(1,1,2)"));
    CHECK(circ(MultiIndex{1, 2}, MultiIndex{2}) == E("(1,4)"));
    CHECK(circ(MultiIndex{1}, MultiIndex{1}) == E("(2)"));
    CHECK(circ(MultiIndex{2, 1}, MultiIndex{1}) == E("(2,2)"));
    CHECK_THROWS_AS(circ(MultiIndex::phi(), MultiIndex{1}), std::invalid_argument);
    CHECK_THROWS_AS(circ_bar(MultiIndex{1}, MultiIndex::phi()), std::invalid_argument);
    CHECK(circ_bar(MultiIndex{1, 1}, MultiIndex{1, 1}) == E("-(2,2) + 2*(1,1,2)"));
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            for (const auto& mu : indices_of_weight(a))
                for (const auto& nu : indices_of_weight(b)) {
                    CHECK(circ(mu, nu).is_homogeneous(a + b));
                    CHECK(circ_bar(mu, nu).is_homogeneous(a + b));
                }
}

TEST_CASE("multiplication operator") {
    CHECK(mult_by(E("(1)"))(E("(1)")) == E("(2) + 2*(1,1)"));
    CHECK(mult_by(E("phi"))(E("(2,3) - (1)")) == E("(2,3) - (1)"));
    const IndexCombination x = E("(2,1) + 3*(1)");
    CHECK(mult_by(stuffle(E("(1)"), E("(1)")))(x) == mult_by(E("(1)"))(mult_by(E("(1)"))(x)));
}

TEST_CASE("recursion against enumeration, weight <= 8") {
    for (int a = 1; a < 8; ++a)
        for (int b = 1; a + b <= 8; ++b)
            for (const auto& mu : indices_of_weight(a))
                for (const auto& nu : indices_of_weight(b)) {
                    CHECK(stuffle(mu, nu) == stuffle_by_matrices(mu, nu));
                    CHECK(stuffle_bar(mu, nu) == stuffle_bar_by_matrices(mu, nu));
                    if (a + b <= 7) {
                        CHECK(op_d(stuffle_bar(mu, nu)) == stuffle(op_d(mu), op_d(nu)));
                        CHECK(op_d(circ_bar(mu, nu)) == circ(op_d(mu), op_d(nu)));
                    }
                }
}

TEST_CASE("commutative and associative") {
    for (int total = 3; total <= 7; ++total)
        for (int a = 1; a <= total - 2; ++a)
            for (int b = 1; a + b <= total - 1; ++b)
                for (const auto& x : indices_of_weight(a))
                    for (const auto& y : indices_of_weight(b))
                        for (const auto& z : indices_of_weight(total - a - b)) {
                            const IndexCombination X(x), Y(y), Z(z);
                            CHECK(stuffle(stuffle(X, Y), Z) == stuffle(X, stuffle(Y, Z)));
                            CHECK(stuffle_bar(stuffle_bar(X, Y), Z) == stuffle_bar(X, stuffle_bar(Y, Z)));
                            CHECK(stuffle(X, Y) == stuffle(Y, X));
                        }
}

TEST_CASE("cache does not change results") {
    const IndexCombination before = stuffle(MultiIndex{3, 1, 2}, MultiIndex{1, 1});
    clear_product_cache();
    CHECK(stuffle(MultiIndex{1, 1}, MultiIndex{3, 1, 2}) == before);
}
