#ifndef MZV_MULTI_INDEX_HPP
#define MZV_MULTI_INDEX_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace mzv {

using Rational = mpq_class;

/*
 * A multi-index (mu_1, ..., mu_p) with every mu_i >= 1. The empty index is
 * phi, the unit of the graded space.
 *
 * Indices are ordered canonically by weight, then length, then
 * lexicographically on the parts. Every container in the library iterates
 * in this order.
 */
class MultiIndex {
public:
    MultiIndex() = default;
    MultiIndex(std::initializer_list<int> parts);
    explicit MultiIndex(std::vector<int> parts);

    static MultiIndex phi() { return {}; }
    /// (1,...,1) with r ones; phi when r == 0.
    static MultiIndex ones(int r);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int weight() const noexcept { return weight_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool is_phi() const noexcept { return parts_.empty(); }

    int operator[](std::size_t i) const { return parts_[i]; }
    int front() const { return parts_.front(); }
    int back() const { return parts_.back(); }

    bool operator==(const MultiIndex& other) const noexcept { return parts_ == other.parts_; }
    std::strong_ordering operator<=>(const MultiIndex& other) const noexcept;

    std::string to_string() const;

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

struct MultiIndexHash {
    std::size_t operator()(const MultiIndex& mu) const noexcept;
};

/*
 * Finite Q-linear combination of multi-indices (an element of Q phi + V).
 * Zero coefficients are never stored, so structural equality is equality
 * of vectors.
 */
class IndexCombination {
public:
    using Terms = std::map<MultiIndex, Rational>;

    IndexCombination() = default;
    IndexCombination(const MultiIndex& mu);  // NOLINT: a basis element is a combination
    IndexCombination(const MultiIndex& mu, const Rational& coefficient);

    static IndexCombination zero() { return {}; }

    void add(const MultiIndex& mu, const Rational& coefficient);

    const Terms& terms() const noexcept { return terms_; }
    Terms::const_iterator begin() const noexcept { return terms_.begin(); }
    Terms::const_iterator end() const noexcept { return terms_.end(); }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    Rational coefficient(const MultiIndex& mu) const;

    /// True when every key has weight w (the zero vector is homogeneous of any weight).
    bool is_homogeneous(int w) const;
    /// Weight of the keys if homogeneous and nonzero; -1 otherwise.
    int homogeneous_weight() const;
    /// Largest length among the keys (0 for the zero vector).
    int max_length() const;

    IndexCombination& operator+=(const IndexCombination& other);
    IndexCombination& operator-=(const IndexCombination& other);
    IndexCombination& operator*=(const Rational& scalar);

    friend IndexCombination operator+(IndexCombination a, const IndexCombination& b) { return a += b; }
    friend IndexCombination operator-(IndexCombination a, const IndexCombination& b) { return a -= b; }
    friend IndexCombination operator*(IndexCombination a, const Rational& s) { return a *= s; }
    friend IndexCombination operator*(const Rational& s, IndexCombination a) { return a *= s; }
    friend IndexCombination operator-(IndexCombination a) { return a *= Rational(-1); }

    bool operator==(const IndexCombination& other) const { return terms_ == other.terms_; }

    std::string to_string() const;

private:
    Terms terms_;
};

/// Apply a map defined on basis elements linearly.
IndexCombination apply_linear(const IndexCombination& v,
                              const std::function<IndexCombination(const MultiIndex&)>& f);

/// Extend a bilinear map defined on pairs of basis elements.
IndexCombination apply_bilinear(const IndexCombination& v, const IndexCombination& w,
                                const std::function<IndexCombination(const MultiIndex&, const MultiIndex&)>& f);

// ---------------------------------------------------------------------------
// Subset code S_m: I_m -> subsets of {1, ..., m-1}.

/// Subsets are bitmasks: bit (i-1) set means i is marked. Weight is limited to 64.
struct SubsetCode {
    int weight = 0;
    std::uint64_t marks = 0;

    bool operator==(const SubsetCode&) const = default;
    bool contains(int i) const { return (marks >> (i - 1)) & 1U; }
    std::vector<int> mark_list() const;
};

inline constexpr int kMaxCodeWeight = 64;

SubsetCode encode_subset(const MultiIndex& mu);
MultiIndex decode_subset(const SubsetCode& code);

/// All 2^{m-1} indices of weight m in canonical order; {phi} for m == 0.
std::vector<MultiIndex> indices_of_weight(int m);

// ---------------------------------------------------------------------------
// Basic maps on basis elements.

MultiIndex dual(const MultiIndex& mu);
MultiIndex reversed(const MultiIndex& mu);
/// mu >= nu: equal weight and marks(nu) is a subset of marks(mu). False across weights.
bool refines(const MultiIndex& mu, const MultiIndex& nu);

MultiIndex concat(const MultiIndex& mu, const MultiIndex& nu);      // mu # nu
MultiIndex concat_dot(const MultiIndex& mu, const MultiIndex& nu);  // mu #. nu (merge last/first)
MultiIndex plus(const MultiIndex& mu);                              // last part + 1, phi+ = (1)
MultiIndex minus(const MultiIndex& mu);                             // last part - 1, (1)- = phi
MultiIndex drop_last(const MultiIndex& mu);                         // (mu_1..mu_{p-1})
MultiIndex prefix(const MultiIndex& mu, int count);
MultiIndex suffix_from(const MultiIndex& mu, int start);

// ---------------------------------------------------------------------------
// Linear operators on the graded space.

IndexCombination op_dual(const IndexCombination& v);
IndexCombination op_tau(const IndexCombination& v);
IndexCombination op_sigma(const IndexCombination& v);
IndexCombination op_u(const IndexCombination& v);
IndexCombination op_d(const IndexCombination& v);
IndexCombination op_u_inverse(const IndexCombination& v);
IndexCombination op_d_inverse(const IndexCombination& v);
IndexCombination op_plus(const IndexCombination& v);

IndexCombination concat(const IndexCombination& v, const IndexCombination& w);
IndexCombination concat_dot(const IndexCombination& v, const IndexCombination& w);

/// u((r)): sum of all refinements of the single-part index (r); phi for r == 0.
IndexCombination u_single(int r);

// ---------------------------------------------------------------------------
// (n_1, ..., n_r)-partitions.

/*
 * Cuts mu at the cumulative sums of `sizes`. A part straddling a cut is split
 * in two; coinciding cuts produce phi blocks. Block i has weight sizes[i].
 */
std::vector<MultiIndex> partition(const MultiIndex& mu, std::span<const int> sizes);

/// Splits mu at the given nondecreasing cut positions (each in [0, |mu|]).
std::vector<MultiIndex> split_at(const MultiIndex& mu, std::span<const int> cuts);

}  // namespace mzv

#endif  // MZV_MULTI_INDEX_HPP
