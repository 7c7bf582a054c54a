#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <tuple>

#include "mzv/expression.hpp"
#include "mzv/harmonic_sums.hpp"
#include "mzv/numeric.hpp"
#include "mzv/products.hpp"
#include "mzv/relations.hpp"

using namespace mzv;

namespace {

IndexCombination E(const char* text) { return parse_combination(text); }

constexpr double kApery = 1.2020569031595942854;
constexpr long kN = kDefaultTruncation;

}  // namespace

TEST_CASE("single zeta values") {
    const double pi = std::numbers::pi;
    const MzvEstimate z2 = zeta_strict(MultiIndex{2}, kN);
    CHECK(std::abs(z2.value - pi * pi / 6) < 1e-8);
    CHECK(std::abs(z2.value - pi * pi / 6) <= z2.err);
    CHECK(z2.truncation == kN);
    const MzvEstimate z4 = zeta_strict(MultiIndex{4}, kN);
    CHECK(std::abs(z4.value - std::pow(pi, 4) / 90) < 1e-8);
    CHECK(std::abs(z4.value - std::pow(pi, 4) / 90) <= z4.err);
    const MzvEstimate z3 = zeta_strict(MultiIndex{3}, kN);
    CHECK(std::abs(z3.value - kApery) < 1e-8);
    CHECK(std::isfinite(z3.err));
    CHECK(z3.err >= 0);
}

TEST_CASE("divergence and arguments") {
    CHECK_THROWS_WITH_AS(zeta_strict(MultiIndex{2, 1}, kN), doctest::Contains("divergent index"), std::invalid_argument);
    CHECK_THROWS_AS(zeta(E("(1)"), kN), std::invalid_argument);
    CHECK_THROWS_AS(zeta_bar(E("(3,1)"), kN), std::invalid_argument);
    CHECK_THROWS_AS(zeta_strict(MultiIndex{2}, 3), std::invalid_argument);
}

TEST_CASE("euler relation") {
    const MzvEstimate diff = zeta(E("(1,2) - (3)"), kN);
    CHECK(std::abs(diff.value) < 1e-6);
    CHECK(std::abs(diff.value) <= diff.err);
    CHECK(std::abs(zeta_strict(MultiIndex{1, 2}, kN).value - kApery) < 1e-6);
}

TEST_CASE("plus and non-strict functionals") {
    CHECK(zeta_plus(E("(2)"), kN).value == zeta_strict(MultiIndex{3}, kN).value);
    CHECK(zeta_bar(E("(2)"), kN).value == zeta_strict(MultiIndex{2}, kN).value);
    const MzvEstimate bar = zeta_bar(E("(1,2)"), kN);
    const MzvEstimate plain = zeta(E("(1,2) + (3)"), kN);
    CHECK(std::abs(bar.value - plain.value) <= bar.err + plain.err + 1e-12);
    const MzvEstimate zero = zeta_plus(IndexCombination(), kN);
    CHECK(zero.value == 0);
    CHECK(zero.err == 0);
}

TEST_CASE("non-strict partial sums equal strict ones of d(v)") {
    for (int w = 2; w <= 5; ++w)
        for (const auto& mu : indices_of_weight(w)) {
            if (mu.back() < 2) continue;
            const auto S = seq_S(mu, 30);
            const auto A = seq_A(op_d(IndexCombination(mu)), 30);
            CHECK(S == A);
            double strict_total = 0;
            for (const auto& [nu, c] : op_d(IndexCombination(mu))) strict_total += c.get_d() * partial_sum(nu, 30);
            CHECK(std::abs(partial_sum(mu, 30, true) - strict_total) < 1e-12);
            CHECK(std::abs(partial_sum(mu, 30, true) - S(30).get_d()) < 1e-12);
        }
}

TEST_CASE("relations vanish") {
    const NumericReport euler = verify_linear(kawashima_linear(MultiIndex{1}, MultiIndex{1}), kN, 1e-6);
    CHECK(euler.pass);
    CHECK(euler.tol == 1e-6);
    CHECK(euler.N == kN);
    const NumericReport duality = verify_linear(duality_generator(MultiIndex{3}), kN);
    CHECK(duality.pass);
    CHECK(verify_linear(LinearRelation{4, IndexCombination(), "zero"}, kN).pass);
    const LinearRelation remark{4, E("(3,1) - (2,1,1) + (2,2) - (1,2,1)"), "ohno-partition"};
    const NumericReport r = verify_linear(remark, kN);
    CHECK(r.pass);
    CHECK(std::abs(r.value) < 1e-4);
    CHECK_FALSE(verify_linear(LinearRelation{2, E("(2)"), "not a relation"}, kN).pass);
}

TEST_CASE("dual form on the non-strict side") {
    for (const auto& [v, w] : {std::pair{"(1)", "(1)"}, std::pair{"(1)", "(2)"}, std::pair{"(2)", "(1,1)"}}) {
        const IndexCombination x = op_plus(op_dual(stuffle_bar(E(v), E(w))));
        const MzvEstimate e = zeta_bar(x, kN);
        CHECK(std::abs(e.value) <= std::max(1e-4, e.err));
    }
}

TEST_CASE("quadratic relations") {
    for (const auto& [v, w, m] : {std::tuple{"(1)", "(1)", 2}, std::tuple{"(1)", "(2)", 2}, std::tuple{"(2)", "(2)", 2},
                                  std::tuple{"(1)", "(1)", 3}}) {
        const auto q = std::get<QuadraticRelation>(quadratic_relation(E(v), E(w), m));
        const NumericReport r = verify_quadratic(q, kN);
        CHECK(r.pass);
        CHECK(std::abs(r.value) < 1e-4);
    }
    const auto q = std::get<QuadraticRelation>(quadratic_relation(E("(1)"), E("(1)"), 2));
    const double z2 = zeta_strict(MultiIndex{2}, kN).value;
    CHECK(std::abs(z2 * z2 - zeta(q.rhs, kN).value) < 1e-6);
}

TEST_CASE("errors shrink with the truncation") {
    for (int k = 2; k <= 4; ++k)
        for (const auto& [mu, nu] : kawashima_pairs(k)) {
            const LinearRelation rel = kawashima_linear(mu, nu);
            const NumericReport coarse = verify_linear(rel, 100000);
            const NumericReport fine = verify_linear(rel, kN);
            CHECK(fine.err < coarse.err);
            CHECK(fine.pass);
        }
}

TEST_CASE("tail decay") {
    // successive doublings of N shrink the raw tail of zeta(1,2) at least like 1/N up to log factors
    const MultiIndex mu{1, 2};
    double previous = 0;
    for (long N = 1000; N <= 64000; N *= 2) {
        const double step = std::abs(partial_sum(mu, 2 * N) - partial_sum(mu, N));
        if (previous > 0) {
            CHECK(step < previous);
            CHECK(step > previous / 4);
        }
        previous = step;
    }
}

TEST_CASE("batch keeps input order") {
    std::vector<LinearRelation> rels;
    for (const auto& [mu, nu] : kawashima_pairs(4)) rels.push_back(kawashima_linear(mu, nu));
    const auto serial = verify_linear_batch(rels, kN, -1, 1);
    const auto parallel = verify_linear_batch(rels, kN, -1, 4);
    REQUIRE(serial.size() == rels.size());
    REQUIRE(parallel.size() == rels.size());
    for (std::size_t i = 0; i < rels.size(); ++i) {
        CHECK(serial[i].relation == rels[i].provenance);
        CHECK(parallel[i].relation == rels[i].provenance);
        CHECK(parallel[i].value == serial[i].value);
    }
}

TEST_CASE("tolerances and reports") {
    CHECK(default_tolerance(E("(3) - (1,2)")) == 1e-6);
    CHECK(default_tolerance(E("(1,1,2)")) == 1e-4);
    const nlohmann::json j = to_json(verify_linear(kawashima_linear(MultiIndex{1}, MultiIndex{1}), kN));
    CHECK(j["relation"] == "kawashima((1),(1))");
    CHECK(j["N"] == kN);
    CHECK(j["pass"] == true);
    CHECK(j.contains("value"));
    CHECK(j.contains("err"));
}
