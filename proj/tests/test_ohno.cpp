#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mzv/expression.hpp"
#include "mzv/ohno.hpp"
#include "mzv/products.hpp"

using namespace mzv;

namespace {

IndexCombination E(const char* text) { return parse_combination(text); }

}  // namespace

TEST_CASE("ohno operator values") {
    CHECK(ohno_apply(MultiIndex{1}, MultiIndex{2, 1}) == E("(3,1) + (2,2)"));
    CHECK(ohno_apply(MultiIndex{1, 1}, MultiIndex{2, 1}) == E("(3,2)"));
    CHECK(ohno_apply(MultiIndex{1, 1}, MultiIndex{3}).is_zero());
    CHECK(ohno_apply(MultiIndex::phi(), MultiIndex{2, 1}) == E("(2,1)"));
    CHECK(ohno_apply(MultiIndex{1}, MultiIndex::phi()).is_zero());
    CHECK(ohno_apply(E("(2) + 2*(1,1)"), E("(2,1)")) == E("(4,1) + (2,3) + 2*(3,2)"));
    CHECK(ohno_apply(E("(1)"), ohno_apply(E("(1)"), E("(2,1)"))) == E("(4,1) + (2,3) + 2*(3,2)"));
    CHECK(OhnoOperator(E("(1)"))(E("(2,1)")) == E("(3,1) + (2,2)"));
}

TEST_CASE("barred operator") {
    CHECK(ohno_bar_apply(E("phi"), E("(3,1) - (2)")) == E("(3,1) - (2)"));
    CHECK(ohno_bar_apply(E("(1)"), E("(2)")) == op_dual(ohno_apply(E("(1)"), E("(1,1)"))));
    CHECK(ohno_bar_apply(E("(1)"), E("(2)")) == E("(1,2) + (2,1)"));
    for (const auto& mu : indices_of_weight(3))
        CHECK(op_sigma(ohno_bar_apply(E("(1)"), IndexCombination(mu))) == -ohno_bar_apply(E("(1)"), op_sigma(IndexCombination(mu))));
    CHECK(OhnoOperator(E("(1)")).apply_bar(E("(2)")) == E("(1,2) + (2,1)"));
}

TEST_CASE("operators with u labels") {
    CHECK(ohno_u(1)(E("(2)")) == E("(3)"));
    CHECK(ohno_u(2)(E("(1)")) == E("(3)"));
    CHECK(ohno_u(0)(E("(2,1) + (1)")) == E("(2,1) + (1)"));
    CHECK(ohno_u_by_decomposition(1, MultiIndex{2, 1}) == ohno_u(1)(E("(2,1)")));
    for (int w = 1; w <= 6; ++w)
        for (const auto& mu : indices_of_weight(w))
            for (int r = 0; r <= 3; ++r) {
                CHECK(ohno_u_by_decomposition(r, mu) == ohno_u(r)(IndexCombination(mu)));
                CHECK(ohno_ones_by_decomposition(r, mu) == ohno_apply(IndexCombination(MultiIndex::ones(r)), IndexCombination(mu)));
                CHECK(ohno_bar_u_by_decomposition(r, mu) == ohno_u(r).apply_bar(IndexCombination(mu)));
            }
}

TEST_CASE("partitions") {
    const auto parts = all_partitions(MultiIndex{2, 1}, 2);
    CHECK(parts.size() == 4);
    CHECK(parts[0] == std::vector<MultiIndex>{MultiIndex::phi(), MultiIndex{2, 1}});
    CHECK(parts[3] == std::vector<MultiIndex>{MultiIndex{2, 1}, MultiIndex::phi()});
    CHECK(all_partitions(MultiIndex{3}, 1).size() == 1);
    CHECK(all_partitions(MultiIndex{2, 2}, 3).size() == 15);
}

TEST_CASE("conjugated chain") {
    CHECK(verify_conjugated_chain(MultiIndex{2, 1}, 2));
    CHECK(verify_conjugated_chain(MultiIndex{1}, 0));
    CHECK(conjugated_multiplication(0, E("(1)")) == E("(1)"));
    CHECK(op_sigma(partition_sum(1, MultiIndex{2, 1})) == E("(3,1) - (2,1,1) + (2,2) - (1,2,1)"));
    CHECK(partition_sum(2, MultiIndex{2, 1}) == conjugated_multiplication(2, E("(2,1)")));
    CHECK(ohno_chain(2, E("(2,1)")) == conjugated_multiplication(2, E("(2,1)")));
    for (int w = 1; w <= 6; ++w)
        for (const auto& mu : indices_of_weight(w))
            for (int r = 0; r <= 3; ++r) {
                CHECK(verify_conjugated_chain(mu, r));
                CHECK(verify_alternating_chain(mu, r));
            }
}

TEST_CASE("generators") {
    for (const auto& mu : indices_of_weight(4))
        CHECK(ohno_generator(mu, 0) == op_tau(IndexCombination(mu)) - op_dual(IndexCombination(mu)));
    const auto g3 = ohno_generators(3);
    for (const auto& g : g3) CHECK(g.is_homogeneous(3));
    CHECK(ohno_generators(5, 0).size() == 16);
    CHECK(ohno_generators(5, 1).size() == 16 + 8);
    CHECK(ohno_generators(5).size() == 16 + 8 + 4 + 2 + 1);
}

TEST_CASE("operator identities, weight <= 5") {
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; a + b <= 5; ++b)
            for (const auto& mu : indices_of_weight(a))
                for (const auto& nu : indices_of_weight(b)) {
                    const IndexCombination M(mu), N(nu);
                    CHECK(ohno_apply(M, op_sigma(N)) == op_sigma(ohno_apply(M, N)));
                    CHECK(ohno_apply(M, op_tau(N)) == op_tau(ohno_apply(op_tau(M), N)));
                    const Rational sign = a % 2 == 0 ? Rational(1) : Rational(-1);
                    CHECK(ohno_bar_apply(M, op_sigma(N)) == sign * op_sigma(ohno_bar_apply(M, N)));
                }
}

TEST_CASE("cache does not change results") {
    const IndexCombination before = ohno_u(3)(E("(2,1,2)"));
    clear_ohno_cache();
    CHECK(ohno_u(3)(E("(2,1,2)")) == before);
}
