#ifndef MZV_LYNDON_HPP
#define MZV_LYNDON_HPP

#include <cstdint>
#include <vector>

#include "mzv/multi_index.hpp"

namespace mzv {

/// A multi-index read as a word over the positive integers.
struct LyndonWord {
    MultiIndex word;
    bool operator==(const LyndonWord&) const = default;
};

/// Strictly smaller than every proper right factor; a prefix counts as smaller.
bool is_lyndon(const MultiIndex& mu);

/// All Lyndon words of weight m (not length), canonical order. 1 <= m <= 20.
std::vector<LyndonWord> enumerate_lyndon(int m);

/// Moebius function by trial division.
int moebius(int n);

/// Number of binary Lyndon words of length m (m >= 2).
std::int64_t psi2(int m);

/// 2^{k-1} - psi2(k).
std::int64_t dimension_formula(int k);

/// Reference constants 2^{k-1} - z_k with z_1 = z_2 = z_3 = 1, z_k = z_{k-2} + z_{k-3}.
std::int64_t zagier_dim(int k);

}  // namespace mzv

#endif  // MZV_LYNDON_HPP
