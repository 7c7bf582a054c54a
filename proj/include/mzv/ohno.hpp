#ifndef MZV_OHNO_HPP
#define MZV_OHNO_HPP

#include <vector>

#include "mzv/multi_index.hpp"

namespace mzv {

/*
 * O_mu(nu) adds the parts of mu to increasing positions of nu and sums over
 * all placements:
 *
 *   O_(mu_1..mu_p)(nu_1..nu_q) = sum_{i_1 < ... < i_p} (.., nu_{i_1}+mu_1, .., nu_{i_p}+mu_p, ..)
 *
 * O_phi is the identity, O_mu(phi) = 0 for mu != phi, and O is extended
 * linearly in both the label and the argument. The barred operator is the
 * conjugate by the dual map.
 */
class OhnoOperator {
public:
    explicit OhnoOperator(IndexCombination label) : label_(std::move(label)) {}

    const IndexCombination& label() const noexcept { return label_; }
    IndexCombination operator()(const IndexCombination& w) const;
    IndexCombination apply_bar(const IndexCombination& w) const;

private:
    IndexCombination label_;
};

IndexCombination ohno_apply(const IndexCombination& v, const IndexCombination& w);
IndexCombination ohno_apply(const MultiIndex& mu, const MultiIndex& nu);
IndexCombination ohno_bar_apply(const IndexCombination& v, const IndexCombination& w);

/// O_{u(r)}: label u((r)), identity for r == 0.
OhnoOperator ohno_u(int r);

/// O_{u(r)}(mu) from the #-decomposition formula mu = nu^1 # ... # nu^{r+1}.
IndexCombination ohno_u_by_decomposition(int r, const MultiIndex& mu);
/// O_{(1,...,1)}(mu) (r ones) from the #-decomposition formula.
IndexCombination ohno_ones_by_decomposition(int r, const MultiIndex& mu);
/// Obar_{u(r)}(mu) from the #.-decomposition formula (no dual maps involved).
IndexCombination ohno_bar_u_by_decomposition(int r, const MultiIndex& mu);

/// All (n_1, ..., n_blocks)-partitions of mu, i.e. every nondecreasing cut list.
std::vector<std::vector<MultiIndex>> all_partitions(const MultiIndex& mu, int blocks);

/// u^{-1} m_{(1^r)} u (mu), computed with the operators directly.
IndexCombination conjugated_multiplication(int r, const IndexCombination& v);
/// sum over (r+1)-block partitions of (nu^1)+ # ... # (nu^r)+ # nu^{r+1}.
IndexCombination partition_sum(int r, const MultiIndex& mu);
/// sum_{k=0}^r Obar_{u(r-k)} O_{(1^k)} (v).
IndexCombination ohno_chain(int r, const IndexCombination& v);

/// Checks u^{-1} m_{1^r} u = sum_k Obar_{u(r-k)} O_{1^k} on mu, with the
/// partition formula as a third independent value.
bool verify_conjugated_chain(const MultiIndex& mu, int r);
/// Checks sum_k (-1)^k u^{-1} m_{1^{r-k}} u O_{u(k)} = Obar_{u(r)} on mu.
bool verify_alternating_chain(const MultiIndex& mu, int r);

/// The Ohno relation element O_{u(r)}(tau(mu) - mu*).
IndexCombination ohno_generator(const MultiIndex& mu, int r);
/// All O_{u(r)}(tau - *)(mu) with |mu| = k - r, 0 <= r <= r_max (r_max < 0 means k - 1).
std::vector<IndexCombination> ohno_generators(int k, int r_max = -1);

void clear_ohno_cache();

}  // namespace mzv

#endif  // MZV_OHNO_HPP
