#include "mzv/qlinalg.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace mzv {

RelationMatrix::RelationMatrix(int weight) : weight_(weight) {
    if (weight < 1) throw std::invalid_argument("RelationMatrix: weight must be positive");
    columns_ = indices_of_weight(weight);
    for (std::size_t j = 0; j < columns_.size(); ++j) column_index_.emplace(columns_[j], static_cast<int>(j));
}

int RelationMatrix::column_of(const MultiIndex& mu) const {
    const auto it = column_index_.find(mu);
    if (it == column_index_.end())
        throw std::invalid_argument("RelationMatrix: " + mu.to_string() + " is not of weight " + std::to_string(weight_));
    return it->second;
}

SparseRow RelationMatrix::to_row(const IndexCombination& x) const {
    SparseRow row;
    row.reserve(x.size());
    for (const auto& [mu, c] : x) row.emplace_back(column_of(mu), c);
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return row;
}

IndexCombination RelationMatrix::to_combination(const SparseRow& row) const {
    IndexCombination out;
    for (const auto& [j, c] : row) out.add(columns_.at(static_cast<std::size_t>(j)), c);
    return out;
}

int RelationMatrix::add_row(const IndexCombination& x) {
    rows_.push_back(to_row(x));
    return nrows() - 1;
}

std::string RelationMatrix::dump() const {
    std::ostringstream out;
    for (const auto& row : rows_) {
        bool first = true;
        for (const auto& [j, c] : row) {
            if (!first) out << ' ';
            first = false;
            out << j << ':' << c.get_num().get_str() << '/' << c.get_den().get_str();
        }
        out << '\n';
    }
    return out.str();
}

namespace {

using IntRow = std::vector<std::pair<int, mpz_class>>;

IntRow integer_row(const SparseRow& row, mpz_class& scale) {
    scale = 1;
    for (const auto& [j, c] : row) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den().get_mpz_t());
    IntRow out;
    out.reserve(row.size());
    for (const auto& [j, c] : row) out.emplace_back(j, mpz_class(c.get_num() * (scale / c.get_den())));
    return out;
}

mpz_class content(const IntRow& row) {
    mpz_class g = 0;
    for (const auto& [j, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

const mpz_class* find_entry(const IntRow& row, int col) {
    auto it = std::lower_bound(row.begin(), row.end(), col, [](const auto& e, int c) { return e.first < c; });
    return it != row.end() && it->first == col ? &it->second : nullptr;
}

// a * x - b * y on sorted sparse rows.
template <class Row, class Scalar>
Row combine(const Scalar& a, const Row& x, const Scalar& b, const Row& y) {
    Row out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.emplace_back(x[i].first, a * x[i].second);
            ++i;
        } else if (i == x.size() || y[j].first < x[i].first) {
            out.emplace_back(y[j].first, -(b * y[j].second));
            ++j;
        } else {
            decltype(out.back().second) v = a * x[i].second - b * y[j].second;
            if (v != 0) out.emplace_back(x[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

RowSpace::RowSpace(const RelationMatrix& m, bool track_transforms) : matrix_(&m), track_(track_transforms) {
    struct Active {
        int id;
        IntRow row;
        SparseRow transform;
    };
    std::vector<Active> active;
    for (int i = 0; i < m.nrows(); ++i) {
        if (m.row(i).empty()) continue;
        mpz_class scale;
        Active a{i, integer_row(m.row(i), scale), {}};
        const mpz_class g = content(a.row);
        for (auto& [j, v] : a.row) v /= g;
        if (track_) a.transform.emplace_back(i, Rational(scale, g));
        active.push_back(std::move(a));
    }

    std::vector<long> col_count(static_cast<std::size_t>(m.ncols()));
    while (!active.empty()) {
        std::fill(col_count.begin(), col_count.end(), 0);
        for (const auto& a : active)
            for (const auto& [j, v] : a.row) ++col_count[static_cast<std::size_t>(j)];

        // Markowitz cost, then smallest column, then smallest row.
        long best_cost = std::numeric_limits<long>::max();
        int best_col = std::numeric_limits<int>::max();
        int best_id = std::numeric_limits<int>::max();
        std::size_t best = 0;
        for (std::size_t r = 0; r < active.size(); ++r) {
            const long len = static_cast<long>(active[r].row.size());
            for (const auto& [j, v] : active[r].row) {
                const long cost = (len - 1) * (col_count[static_cast<std::size_t>(j)] - 1);
                if (cost < best_cost || (cost == best_cost && (j < best_col || (j == best_col && active[r].id < best_id)))) {
                    best_cost = cost;
                    best_col = j;
                    best_id = active[r].id;
                    best = r;
                }
            }
        }

        Active pivot = std::move(active[best]);
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(best));
        const mpz_class pivot_value = *find_entry(pivot.row, best_col);

        std::vector<Active> next;
        next.reserve(active.size());
        for (auto& a : active) {
            const mpz_class* entry = find_entry(a.row, best_col);
            if (entry == nullptr) {
                next.push_back(std::move(a));
                continue;
            }
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), pivot_value.get_mpz_t(), entry->get_mpz_t());
            const mpz_class x = pivot_value / g;
            const mpz_class y = *entry / g;
            IntRow reduced = combine(x, a.row, y, pivot.row);
            if (reduced.empty()) continue;
            const mpz_class c = content(reduced);
            for (auto& [j, v] : reduced) v /= c;
            SparseRow transform;
            if (track_) {
                transform = combine(Rational(x), a.transform, Rational(y), pivot.transform);
                for (auto& [j, v] : transform) v /= c;
            }
            next.push_back(Active{a.id, std::move(reduced), std::move(transform)});
        }
        active = std::move(next);
        pivots_.push_back(Pivot{best_col, std::move(pivot.row), std::move(pivot.transform)});
    }
}

std::optional<Certificate> RowSpace::member(const IndexCombination& x) const {
    if (!track_) throw std::logic_error("RowSpace::member: transforms were not tracked");
    if (!x.is_homogeneous(matrix_->weight()))
        throw std::invalid_argument("member: element is not homogeneous of weight " + std::to_string(matrix_->weight()));
    SparseRow residual = matrix_->to_row(x);
    std::vector<std::pair<std::size_t, Rational>> factors;
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        const Pivot& p = pivots_[i];
        auto it = std::lower_bound(residual.begin(), residual.end(), p.column,
                                   [](const auto& e, int c) { return e.first < c; });
        if (it == residual.end() || it->first != p.column) continue;
        const Rational f = it->second / Rational(*find_entry(p.row, p.column));
        SparseRow prow;
        prow.reserve(p.row.size());
        for (const auto& [j, v] : p.row) prow.emplace_back(j, Rational(v));
        residual = combine(Rational(1), residual, f, prow);
        factors.emplace_back(i, f);
    }
    if (!residual.empty()) return std::nullopt;

    std::map<int, Rational> coeffs;
    for (const auto& [i, f] : factors)
        for (const auto& [row, t] : pivots_[i].transform) coeffs[row] += f * t;
    Certificate cert;
    for (const auto& [row, c] : coeffs)
        if (c != 0) cert.coefficients.emplace_back(row, c);
    return cert;
}

int rank(const RelationMatrix& m) { return RowSpace(m, false).rank(); }

std::optional<Certificate> member(const RelationMatrix& m, const IndexCombination& x) { return RowSpace(m).member(x); }

bool check_certificate(const RelationMatrix& m, const IndexCombination& x, const Certificate& cert) {
    IndexCombination sum;
    for (const auto& [i, c] : cert.coefficients) {
        if (i < 0 || i >= m.nrows()) return false;
        sum += m.to_combination(m.row(i)) * c;
    }
    return sum == x;
}

namespace {

// Montgomery arithmetic modulo an odd p < 2^62.
class Montgomery {
public:
    explicit Montgomery(std::uint64_t p) : p_(p) {
        std::uint64_t inv = p;
        for (int i = 0; i < 6; ++i) inv *= 2 - p * inv;
        neg_inv_ = ~inv + 1;
        const unsigned __int128 r = (static_cast<unsigned __int128>(1) << 64) % p;
        r2_ = static_cast<std::uint64_t>((r * r) % p);
    }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        const unsigned __int128 t = static_cast<unsigned __int128>(a) * b;
        const std::uint64_t m = static_cast<std::uint64_t>(t) * neg_inv_;
        std::uint64_t u = static_cast<std::uint64_t>((t + static_cast<unsigned __int128>(m) * p_) >> 64);
        return u >= p_ ? u - p_ : u;
    }
    std::uint64_t to(std::uint64_t a) const { return mul(a % p_, r2_); }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
    std::uint64_t inverse(std::uint64_t a) const {
        std::uint64_t result = to(1);
        std::uint64_t base = a;
        for (std::uint64_t e = p_ - 2; e; e >>= 1) {
            if (e & 1) result = mul(result, base);
            base = mul(base, base);
        }
        return result;
    }

private:
    std::uint64_t p_;
    std::uint64_t neg_inv_;
    std::uint64_t r2_;
};

int rank_mod(const std::vector<IntRow>& rows, int ncols, std::uint64_t p) {
    const Montgomery mont(p);
    const std::size_t n = static_cast<std::size_t>(ncols);
    // basis[c] is a row with leading column c, normalized to leading entry one.
    std::vector<std::vector<std::uint64_t>> basis(n);
    int rank = 0;
    std::vector<std::uint64_t> x(n);
    for (const auto& row : rows) {
        std::fill(x.begin(), x.end(), 0);
        for (const auto& [j, v] : row) {
            mpz_class r;
            mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(p));
            x[static_cast<std::size_t>(j)] = mont.to(r.get_ui());
        }
        for (std::size_t c = 0; c < n; ++c) {
            if (x[c] == 0) continue;
            if (basis[c].empty()) {
                const std::uint64_t inv = mont.inverse(x[c]);
                for (std::size_t j = c; j < n; ++j) x[j] = mont.mul(x[j], inv);
                basis[c] = x;
                ++rank;
                break;
            }
            const std::uint64_t f = x[c];
            const auto& b = basis[c];
            for (std::size_t j = c; j < n; ++j)
                if (b[j]) x[j] = mont.sub(x[j], mont.mul(f, b[j]));
        }
    }
    return rank;
}

}  // namespace

ModularRank modular_rank(const RelationMatrix& m, const std::vector<std::uint64_t>& primes) {
    for (auto p : primes)
        if (p <= (1ULL << 20) || p >= (1ULL << 62) || p % 2 == 0)
            throw std::invalid_argument("modular_rank: primes must be odd and lie in (2^20, 2^62)");
    std::vector<IntRow> rows;
    rows.reserve(static_cast<std::size_t>(m.nrows()));
    for (const auto& row : m.rows()) {
        mpz_class scale;
        rows.push_back(integer_row(row, scale));
    }
    std::vector<std::future<int>> jobs;
    for (auto p : primes) jobs.push_back(std::async(std::launch::async, [&rows, &m, p] { return rank_mod(rows, m.ncols(), p); }));
    ModularRank out;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        const int r = jobs[i].get();
        out.per_prime.emplace_back(primes[i], r);
        out.rank = std::max(out.rank, r);
    }
    return out;
}

}  // namespace mzv
