#ifndef MZV_NUMERIC_HPP
#define MZV_NUMERIC_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "mzv/multi_index.hpp"
#include "mzv/relations.hpp"

namespace mzv {

inline constexpr long kDefaultTruncation = 1000000;

struct MzvEstimate {
    double value = 0;
    double err = 0;
    long truncation = 0;
    double partial_sum = 0;  // the raw truncated sum (equal to value for combinations of exact zeros)
};

/*
 * zeta(mu) from the partial sums over n_p + 1 <= N. The value is a
 * log-polynomial extrapolation of the partial sums at N, N/2, ..., N/2^p
 * (p = depth) against the tail shape log^j(N) / N^{mu_p - 1}, j < p.
 * err = 2 |est(N) - est(N/2)|. Results are cached per thread.
 */
MzvEstimate zeta_strict(const MultiIndex& mu, long N = kDefaultTruncation);
/// zeta extended linearly; errors add up weighted by |coefficient|.
MzvEstimate zeta(const IndexCombination& v, long N = kDefaultTruncation);
/// zeta^+(v) = zeta(v^+).
MzvEstimate zeta_plus(const IndexCombination& v, long N = kDefaultTruncation);
/// Non-strict sums: sum_n s_v(n); equal to zeta(d(v)).
MzvEstimate zeta_bar(const IndexCombination& v, long N = kDefaultTruncation);

/// Raw partial sums sum_{n < N} a_mu(n) (strict) or s_mu(n) in double precision.
double partial_sum(const MultiIndex& mu, long N, bool non_strict = false);

void clear_numeric_cache();

struct NumericReport {
    std::string relation;
    long N = 0;
    double value = 0;
    double err = 0;
    double tol = 0;
    bool pass = false;
};

/// 1e-6 when every index of v^+ has depth <= 2, 1e-4 otherwise.
double default_tolerance(const IndexCombination& evaluated);

/// |zeta^+(element)| <= max(tol, err); tol < 0 selects default_tolerance.
NumericReport verify_linear(const LinearRelation& rel, long N = kDefaultTruncation, double tol = -1);
/// |sum zeta(a) zeta(b) - zeta(rhs)| <= max(tol, propagated err).
NumericReport verify_quadratic(const QuadraticRelation& rel, long N = kDefaultTruncation, double tol = -1);

/// Runs verify_linear over a batch on up to `threads` threads; results keep the input order.
std::vector<NumericReport> verify_linear_batch(const std::vector<LinearRelation>& rels, long N, double tol, int threads);

nlohmann::json to_json(const NumericReport& report);

}  // namespace mzv

#endif  // MZV_NUMERIC_HPP
