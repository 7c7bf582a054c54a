#ifndef MZV_HARMONIC_SUMS_HPP
#define MZV_HARMONIC_SUMS_HPP

#include <vector>

#include "mzv/multi_index.hpp"

namespace mzv {

/// Exact values a(0), ..., a(horizon) of a rational sequence.
class RationalSequence {
public:
    RationalSequence() = default;
    explicit RationalSequence(std::vector<Rational> values);
    static RationalSequence constant(const Rational& c, int horizon);

    int horizon() const noexcept { return static_cast<int>(values_.size()) - 1; }
    const Rational& operator()(int n) const;
    const std::vector<Rational>& values() const noexcept { return values_; }

    RationalSequence& operator+=(const RationalSequence& other);
    RationalSequence& operator*=(const Rational& scalar);
    friend RationalSequence operator+(RationalSequence a, const RationalSequence& b) { return a += b; }
    friend RationalSequence operator*(RationalSequence a, const RationalSequence& b);
    friend RationalSequence operator-(const RationalSequence& a) { return RationalSequence(a) *= Rational(-1); }

    /// Compares on the common prefix of both horizons.
    bool agrees_with(const RationalSequence& other) const;
    bool operator==(const RationalSequence& other) const = default;

private:
    std::vector<Rational> values_;
};

// Finite multiple harmonic sums, n = 0..horizon:
//   s_mu(n) = sum_{0 <= n_1 <= ... <= n_p = n} prod 1/(n_i+1)^{mu_i}
//   a_mu(n) = same with strict inequalities
//   S_mu(n) = sum_{k < n} s_mu(k),   A_mu(n) = sum_{k < n} a_mu(k)
// S_phi = A_phi = 1; s_phi and a_phi are undefined.
RationalSequence seq_s(const MultiIndex& mu, int horizon);
RationalSequence seq_a(const MultiIndex& mu, int horizon);
RationalSequence seq_S(const MultiIndex& mu, int horizon);
RationalSequence seq_A(const MultiIndex& mu, int horizon);

RationalSequence seq_s(const IndexCombination& v, int horizon);
RationalSequence seq_a(const IndexCombination& v, int horizon);
RationalSequence seq_S(const IndexCombination& v, int horizon);
RationalSequence seq_A(const IndexCombination& v, int horizon);

/// (Delta a)(n) = a(n) - a(n+1), applied k times; horizon shrinks by k.
RationalSequence delta(const RationalSequence& a, int k = 1);
/// Delta^k through the binomial formula sum_i (-1)^i C(k,i) a(n+i).
RationalSequence delta_binomial(const RationalSequence& a, int k);
/// (nabla a)(n) = sum_k (-1)^k C(n,k) a(k); an involution, horizon preserved.
RationalSequence nabla(const RationalSequence& a);
/// (T a)(n) = a(n+1); horizon shrinks by one.
RationalSequence shift(const RationalSequence& a);

/// Exact binomial coefficient from a memoized Pascal triangle.
const mpz_class& binomial(int n, int k);

/// s_{mu,nu}(n,k) for |mu| = |nu|, by dynamic programming over the merged chain.
Rational seq_s2(const MultiIndex& mu, const MultiIndex& nu, int n, int k);
/// Same value by enumerating both chains. Exponential; for cross-checks only.
Rational seq_s2_enumerated(const MultiIndex& mu, const MultiIndex& nu, int n, int k);

/// (Delta^k s_mu)(n) == s_{mu, mu*}(n, k) for all n <= n_max, k <= k_max.
bool verify_difference_formula(const MultiIndex& mu, int n_max, int k_max);

/*
 * Pointwise product identities up to n_max:
 *   A_v A_w = A_{v*w},  S_v S_w = S_{v *bar w},
 *   a_v a_w = a_{v (*) w},  s_v s_w = s_{v (*)bar w},
 * plus the transports s_v = a_{d(v)} and S_v = A_{d(v)}.
 * The circled identities are skipped when v or w has a phi component.
 */
bool verify_product_sequences(const IndexCombination& v, const IndexCombination& w, int n_max);

}  // namespace mzv

#endif  // MZV_HARMONIC_SUMS_HPP
