#ifndef MZV_QLINALG_HPP
#define MZV_QLINALG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mzv/multi_index.hpp"

namespace mzv {

using SparseRow = std::vector<std::pair<int, Rational>>;

/*
 * Rows are homogeneous weight-k combinations, columns are I_k in canonical
 * order (so column j is indices_of_weight(k)[j]).
 */
class RelationMatrix {
public:
    explicit RelationMatrix(int weight);

    int weight() const noexcept { return weight_; }
    int ncols() const noexcept { return static_cast<int>(columns_.size()); }
    int nrows() const noexcept { return static_cast<int>(rows_.size()); }

    const std::vector<MultiIndex>& columns() const noexcept { return columns_; }
    const std::vector<SparseRow>& rows() const noexcept { return rows_; }
    const SparseRow& row(int i) const { return rows_.at(static_cast<std::size_t>(i)); }

    int column_of(const MultiIndex& mu) const;
    SparseRow to_row(const IndexCombination& x) const;
    IndexCombination to_combination(const SparseRow& row) const;

    /// Appends x as a row and returns its index. x must be homogeneous of the matrix weight.
    int add_row(const IndexCombination& x);

    /// One row per line as space-separated `col:num/den` pairs.
    std::string dump() const;

private:
    int weight_;
    std::vector<MultiIndex> columns_;
    std::unordered_map<MultiIndex, int, MultiIndexHash> column_index_;
    std::vector<SparseRow> rows_;
};

/// x = sum of coefficient * row, for the listed (row index, coefficient) pairs.
struct Certificate {
    std::vector<std::pair<int, Rational>> coefficients;
};

/*
 * Fraction-free sparse elimination over the integers with Markowitz pivoting.
 * After construction the pivot rows span the row space; when transforms are
 * tracked, each pivot row also records its expression in the original rows,
 * which is what membership certificates are built from.
 */
class RowSpace {
public:
    explicit RowSpace(const RelationMatrix& m, bool track_transforms = true);

    int rank() const noexcept { return static_cast<int>(pivots_.size()); }
    /// Coefficients expressing x in the original rows, or nullopt if x is not in the span.
    std::optional<Certificate> member(const IndexCombination& x) const;

private:
    struct Pivot {
        int column;
        std::vector<std::pair<int, mpz_class>> row;
        SparseRow transform;
    };

    const RelationMatrix* matrix_;
    bool track_;
    std::vector<Pivot> pivots_;
};

int rank(const RelationMatrix& m);
std::optional<Certificate> member(const RelationMatrix& m, const IndexCombination& x);
/// Exact re-multiplication check of a certificate.
bool check_certificate(const RelationMatrix& m, const IndexCombination& x, const Certificate& cert);

inline constexpr std::uint64_t kDefaultPrimes[3] = {4611686018427387847ULL, 4611686018427387817ULL,
                                                    4611686018427387787ULL};

struct ModularRank {
    int rank = 0;  // maximum over the primes; a lower bound on the rank over Q
    std::vector<std::pair<std::uint64_t, int>> per_prime;
};

/// Rank modulo each prime (all > 2^20 and < 2^62), computed in parallel.
ModularRank modular_rank(const RelationMatrix& m,
                         const std::vector<std::uint64_t>& primes = {std::begin(kDefaultPrimes),
                                                                     std::end(kDefaultPrimes)});

}  // namespace mzv

#endif  // MZV_QLINALG_HPP
