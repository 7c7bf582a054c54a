#include "mzv/products.hpp"

#include <stdexcept>
#include <unordered_map>

namespace mzv {

MultiIndex StuffleMatrix::column_sums() const {
    std::vector<int> parts(rows[0].size());
    for (std::size_t j = 0; j < parts.size(); ++j) parts[j] = rows[0][j] + rows[1][j];
    return MultiIndex(std::move(parts));
}

namespace {

void enumerate_from(const MultiIndex& mu, const MultiIndex& nu, std::size_t i, std::size_t j, StuffleMatrix& current,
                    std::vector<StuffleMatrix>& out) {
    const std::size_t p = static_cast<std::size_t>(mu.length());
    const std::size_t q = static_cast<std::size_t>(nu.length());
    if (i == p && j == q) {
        out.push_back(current);
        return;
    }
    auto push = [&](int top, int bottom, std::size_t di, std::size_t dj) {
        current.rows[0].push_back(top);
        current.rows[1].push_back(bottom);
        enumerate_from(mu, nu, i + di, j + dj, current, out);
        current.rows[0].pop_back();
        current.rows[1].pop_back();
    };
    if (i < p) push(mu[i], 0, 1, 0);
    if (j < q) push(0, nu[j], 0, 1);
    if (i < p && j < q) push(mu[i], nu[j], 1, 1);
}

struct PairKey {
    MultiIndex a;
    MultiIndex b;
    bool bar;
    bool operator==(const PairKey&) const = default;
};

struct PairKeyHash {
    std::size_t operator()(const PairKey& k) const noexcept {
        MultiIndexHash h;
        return h(k.a) * 31 + h(k.b) * 7 + (k.bar ? 1 : 0);
    }
};

// Commutativity: only the ordered representative (a <= b) is stored.
thread_local std::unordered_map<PairKey, IndexCombination, PairKeyHash> product_memo;

IndexCombination product_basis(const MultiIndex& mu, const MultiIndex& nu, bool bar) {
    if (mu.is_phi()) return IndexCombination(nu);
    if (nu.is_phi()) return IndexCombination(mu);
    PairKey key = mu <= nu ? PairKey{mu, nu, bar} : PairKey{nu, mu, bar};
    if (auto it = product_memo.find(key); it != product_memo.end()) return it->second;

    const MultiIndex mu_head = drop_last(mu);
    const MultiIndex nu_head = drop_last(nu);
    const MultiIndex last_mu{mu.back()};
    const MultiIndex last_nu{nu.back()};
    const MultiIndex merged{mu.back() + nu.back()};

    IndexCombination out;
    for (const auto& [lambda, c] : product_basis(mu_head, nu, bar)) out.add(concat(lambda, last_mu), c);
    for (const auto& [lambda, c] : product_basis(mu, nu_head, bar)) out.add(concat(lambda, last_nu), c);
    for (const auto& [lambda, c] : product_basis(mu_head, nu_head, bar)) out.add(concat(lambda, merged), bar ? Rational(-c) : c);

    product_memo.emplace(std::move(key), out);
    return out;
}

void require_non_phi(const MultiIndex& mu, const char* what) {
    if (mu.is_phi()) throw std::invalid_argument(std::string(what) + ": phi operand is not allowed");
}

}  // namespace

std::vector<StuffleMatrix> enumerate_stuffle(const MultiIndex& mu, const MultiIndex& nu) {
    require_non_phi(mu, "enumerate_stuffle");
    require_non_phi(nu, "enumerate_stuffle");
    std::vector<StuffleMatrix> out;
    StuffleMatrix current;
    enumerate_from(mu, nu, 0, 0, current, out);
    return out;
}

IndexCombination stuffle_by_matrices(const MultiIndex& mu, const MultiIndex& nu) {
    if (mu.is_phi()) return IndexCombination(nu);
    if (nu.is_phi()) return IndexCombination(mu);
    IndexCombination out;
    for (const auto& m : enumerate_stuffle(mu, nu)) out.add(m.column_sums(), Rational(1));
    return out;
}

IndexCombination stuffle_bar_by_matrices(const MultiIndex& mu, const MultiIndex& nu) {
    if (mu.is_phi()) return IndexCombination(nu);
    if (nu.is_phi()) return IndexCombination(mu);
    IndexCombination out;
    for (const auto& m : enumerate_stuffle(mu, nu)) {
        const bool negative = (mu.length() + nu.length() - m.columns()) % 2 != 0;
        out.add(m.column_sums(), Rational(negative ? -1 : 1));
    }
    return out;
}

IndexCombination stuffle(const MultiIndex& mu, const MultiIndex& nu) { return product_basis(mu, nu, false); }

IndexCombination stuffle(const IndexCombination& v, const IndexCombination& w) {
    return apply_bilinear(v, w, [](const MultiIndex& a, const MultiIndex& b) { return product_basis(a, b, false); });
}

IndexCombination stuffle_bar(const MultiIndex& mu, const MultiIndex& nu) { return product_basis(mu, nu, true); }

IndexCombination stuffle_bar(const IndexCombination& v, const IndexCombination& w) {
    return apply_bilinear(v, w, [](const MultiIndex& a, const MultiIndex& b) { return product_basis(a, b, true); });
}

namespace {

IndexCombination circ_basis(const MultiIndex& mu, const MultiIndex& nu, bool bar) {
    require_non_phi(mu, bar ? "circ_bar" : "circ");
    require_non_phi(nu, bar ? "circ_bar" : "circ");
    const MultiIndex tail{mu.back() + nu.back()};
    IndexCombination out;
    for (const auto& [lambda, c] : product_basis(drop_last(mu), drop_last(nu), bar)) out.add(concat(lambda, tail), c);
    return out;
}

}  // namespace

IndexCombination circ(const MultiIndex& mu, const MultiIndex& nu) { return circ_basis(mu, nu, false); }

IndexCombination circ(const IndexCombination& v, const IndexCombination& w) {
    return apply_bilinear(v, w, [](const MultiIndex& a, const MultiIndex& b) { return circ_basis(a, b, false); });
}

IndexCombination circ_bar(const MultiIndex& mu, const MultiIndex& nu) { return circ_basis(mu, nu, true); }

IndexCombination circ_bar(const IndexCombination& v, const IndexCombination& w) {
    return apply_bilinear(v, w, [](const MultiIndex& a, const MultiIndex& b) { return circ_basis(a, b, true); });
}

void clear_product_cache() { product_memo.clear(); }

}  // namespace mzv
