#ifndef MZV_CHECKS_HPP
#define MZV_CHECKS_HPP

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mzv/multi_index.hpp"
#include "mzv/numeric.hpp"

namespace mzv {

/// Outcome of one exhaustive identity check.
struct CheckResult {
    CheckResult() = default;
    explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}

    std::string name;
    long cases = 0;
    long failures = 0;
    std::string first_failure;

    bool passed() const { return cases > 0 && failures == 0; }
    void record(bool ok, const std::string& what);
};

using CheckSuite = std::vector<CheckResult>;

bool all_passed(const CheckSuite& suite);
nlohmann::json to_json(const CheckResult& check);

/// All indices of weight 1..max_weight in canonical order.
std::vector<MultiIndex> indices_up_to(int max_weight);

/// Operator and product identities on the graded space (inputs of total weight <= max_weight).
CheckSuite check_operator_identities(int max_weight);
/// Pointwise product identities of the four finite sums, |v| + |w| <= max_weight, n <= n_max.
CheckSuite check_sequence_products(int max_weight, int n_max);
/// Delta^k s_mu = s_{mu,mu*}(n,k) for |mu| <= max_weight and n, k <= grid; nabla s_mu = s_{mu*}.
CheckSuite check_difference_formula(int max_weight, int grid, int nabla_weight, int nabla_n);
/// Ohno operator identities for weights <= max_weight and r <= r_max.
CheckSuite check_ohno_operators(int max_weight, int r_max);
/// tau(mu) - mu* has a certificate in the relation space, |mu| <= max_weight.
CheckSuite check_duality_containment(int max_weight);
/// O_{u(r)}(tau - *)(mu) has a certificate for |mu| + r <= max_weight, r <= r_max.
CheckSuite check_ohno_containment(int max_weight, int r_max);

/// zeta^+ of every u sigma(mu * nu) with |mu| + |nu| <= pairs_up_to.
std::vector<NumericReport> numeric_kawashima_reports(int pairs_up_to, long N, double tol, int threads);

}  // namespace mzv

#endif  // MZV_CHECKS_HPP
