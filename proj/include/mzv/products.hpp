#ifndef MZV_PRODUCTS_HPP
#define MZV_PRODUCTS_HPP

#include <array>
#include <vector>

#include "mzv/multi_index.hpp"

namespace mzv {

/*
 * A 2 x l matrix of non-negative integers with no all-zero column. Deleting
 * the zeros of row 0 gives the left factor, of row 1 the right factor. The
 * harmonic product sums the column sums of these matrices.
 */
struct StuffleMatrix {
    std::array<std::vector<int>, 2> rows;

    int columns() const { return static_cast<int>(rows[0].size()); }
    MultiIndex column_sums() const;
    bool operator==(const StuffleMatrix&) const = default;
};

/// Every matrix of H_{mu,nu}, each once. Both factors must be non-empty.
std::vector<StuffleMatrix> enumerate_stuffle(const MultiIndex& mu, const MultiIndex& nu);

/// Harmonic product from the matrix enumeration. Slow; used to cross-check `stuffle`.
IndexCombination stuffle_by_matrices(const MultiIndex& mu, const MultiIndex& nu);
/// Signed product from the matrix enumeration.
IndexCombination stuffle_bar_by_matrices(const MultiIndex& mu, const MultiIndex& nu);

/// Harmonic product v * w (last-part recursion, memoized per thread).
IndexCombination stuffle(const IndexCombination& v, const IndexCombination& w);
IndexCombination stuffle(const MultiIndex& mu, const MultiIndex& nu);

/// Signed harmonic product: each matrix term carries (-1)^{l(mu)+l(nu)-l}.
IndexCombination stuffle_bar(const IndexCombination& v, const IndexCombination& w);
IndexCombination stuffle_bar(const MultiIndex& mu, const MultiIndex& nu);

/// mu (*) nu = (mu' * nu') # (mu_p + nu_q), where ' drops the last part. Rejects phi.
IndexCombination circ(const IndexCombination& v, const IndexCombination& w);
IndexCombination circ(const MultiIndex& mu, const MultiIndex& nu);

/// Same with the signed product on the truncated factors.
IndexCombination circ_bar(const IndexCombination& v, const IndexCombination& w);
IndexCombination circ_bar(const MultiIndex& mu, const MultiIndex& nu);

/// m_v: left multiplication by a fixed element.
class MultiplicationOperator {
public:
    explicit MultiplicationOperator(IndexCombination factor) : factor_(std::move(factor)) {}
    IndexCombination operator()(const IndexCombination& w) const { return stuffle(factor_, w); }
    const IndexCombination& factor() const noexcept { return factor_; }

private:
    IndexCombination factor_;
};

inline MultiplicationOperator mult_by(IndexCombination v) { return MultiplicationOperator(std::move(v)); }

/// Drops the per-thread product memo.
void clear_product_cache();

}  // namespace mzv

#endif  // MZV_PRODUCTS_HPP
