#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "mzv/lyndon.hpp"
#include "mzv/qlinalg.hpp"
#include "mzv/relations.hpp"

using namespace mzv;

TEST_CASE("lyndon predicate") {
    CHECK(is_lyndon(MultiIndex{1, 2}));
    CHECK_FALSE(is_lyndon(MultiIndex{2, 1}));
    CHECK(is_lyndon(MultiIndex{1}));
    CHECK_FALSE(is_lyndon(MultiIndex{1, 1}));
    CHECK(is_lyndon(MultiIndex{1, 1, 2}));
    CHECK(is_lyndon(MultiIndex{1, 2, 2}));
    CHECK_FALSE(is_lyndon(MultiIndex{1, 2, 1, 2}));
    CHECK_THROWS_AS(is_lyndon(MultiIndex::phi()), std::invalid_argument);
}

TEST_CASE("enumeration") {
    CHECK(enumerate_lyndon(1) == std::vector<LyndonWord>{LyndonWord{MultiIndex{1}}});
    CHECK(enumerate_lyndon(2) == std::vector<LyndonWord>{LyndonWord{MultiIndex{2}}});
    CHECK(enumerate_lyndon(4).size() == 3);
    CHECK_THROWS_AS(enumerate_lyndon(0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_lyndon(21), std::invalid_argument);
    for (int m = 2; m <= 15; ++m) CHECK(static_cast<std::int64_t>(enumerate_lyndon(m).size()) == psi2(m));
}

TEST_CASE("counting formulas") {
    CHECK(moebius(1) == 1);
    CHECK(moebius(6) == 1);
    CHECK(moebius(12) == 0);
    CHECK(moebius(7) == -1);
    CHECK(psi2(2) == 1);
    CHECK(psi2(6) == 9);
    CHECK(psi2(11) == 186);
    CHECK_THROWS_AS(psi2(1), std::invalid_argument);
    for (int n = 1; n <= 15; ++n) {
        std::int64_t total = 2;  // d = 1 contributes 1 * 2, the two one-letter words
        for (int d = 2; d <= n; ++d)
            if (n % d == 0) total += d * psi2(d);
        CHECK(total == (std::int64_t{1} << n));
    }
}

TEST_CASE("dimension constants") {
    const std::int64_t d[] = {1, 2, 5, 10, 23, 46, 98, 200, 413, 838};
    for (int k = 2; k <= 11; ++k) CHECK(dimension_formula(k) == d[k - 2]);
    const std::int64_t z[] = {1, 3, 6, 14, 29, 60, 123, 249, 503, 1012};
    for (int k = 2; k <= 11; ++k) CHECK(zagier_dim(k) == z[k - 2]);
}

TEST_CASE("direct sum with the product space") {
    for (int k = 2; k <= 8; ++k)
        CHECK(static_cast<std::int64_t>(enumerate_lyndon(k).size()) + rank(kawashima_basis(k)) == (std::int64_t{1} << (k - 1)));
}
