#ifndef MZV_RELATIONS_HPP
#define MZV_RELATIONS_HPP

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "mzv/multi_index.hpp"
#include "mzv/qlinalg.hpp"

namespace mzv {

/// An element of ker zeta^+, together with where it came from.
struct LinearRelation {
    int weight = 0;
    IndexCombination element;
    std::string provenance;  // "kawashima((1),(2))", "duality((1,2))", "ohno((2),1)", ...
};

/*
 * sum over pairs (a_k, b_l) of zeta(a_k) zeta(b_l) = zeta(rhs), every key of
 * every combination having last part >= 2.
 */
struct QuadraticRelation {
    std::vector<std::pair<IndexCombination, IndexCombination>> lhs;
    IndexCombination rhs;
    int m = 0;
    std::string provenance;
};

inline constexpr int kDefaultWeightCap = 14;

/// u sigma (mu * nu).
LinearRelation kawashima_linear(const MultiIndex& mu, const MultiIndex& nu);

/// Unordered pairs (mu, nu) with |mu| + |nu| = k, |mu| <= |nu|, and mu <= nu when the weights agree.
std::vector<std::pair<MultiIndex, MultiIndex>> kawashima_pairs(int k);

/// The matrix of all kawashima_linear rows of weight k, in kawashima_pairs order.
RelationMatrix kawashima_basis(int k, int cap = kDefaultWeightCap);

/// tau(mu) - mu*.
LinearRelation duality_generator(const MultiIndex& mu);

/// O_{u(r)}(tau(mu) - mu*).
LinearRelation ohno_relation(const MultiIndex& mu, int r);

/// The alternating sum sum_h (-1)^h tau(mu_1..mu_h) * d(mu_{h+1}..mu_p).
IndexCombination duality_alternating_sum(const MultiIndex& mu);
bool verify_duality_sum(const MultiIndex& mu);

/// (1,...,1) with m ones as a combination.
IndexCombination ones(int m);

/// The m-th order quadratic relation; m == 1 degenerates to a LinearRelation.
std::variant<LinearRelation, QuadraticRelation> quadratic_relation(const IndexCombination& v,
                                                                   const IndexCombination& w, int m);

/// Coefficient m (1 <= m <= m_max) of F_v(z): (-1)^{m-1} d(v*) (*) (1^m).
std::vector<IndexCombination> taylor_coefficients(const IndexCombination& v, int m_max);

nlohmann::json to_json(const IndexCombination& v);
nlohmann::json to_json(const LinearRelation& rel);
nlohmann::json to_json(const QuadraticRelation& rel);

}  // namespace mzv

#endif  // MZV_RELATIONS_HPP
