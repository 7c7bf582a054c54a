#include "mzv/ohno.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_map>

#include "mzv/products.hpp"

namespace mzv {

namespace {

struct OhnoKey {
    MultiIndex label;
    MultiIndex arg;
    bool operator==(const OhnoKey&) const = default;
};

struct OhnoKeyHash {
    std::size_t operator()(const OhnoKey& k) const noexcept {
        MultiIndexHash h;
        return h(k.label) * 1000003U ^ h(k.arg);
    }
};

thread_local std::unordered_map<OhnoKey, IndexCombination, OhnoKeyHash> ohno_memo;

void place(const MultiIndex& mu, std::vector<int>& slots, std::size_t part, std::size_t from, IndexCombination& out) {
    if (part == static_cast<std::size_t>(mu.length())) {
        out.add(MultiIndex(slots), Rational(1));
        return;
    }
    const std::size_t remaining = static_cast<std::size_t>(mu.length()) - part;
    for (std::size_t i = from; i + remaining <= slots.size(); ++i) {
        slots[i] += mu[part];
        place(mu, slots, part + 1, i + 1, out);
        slots[i] -= mu[part];
    }
}

// Every nondecreasing list of `count` values drawn from the sorted `allowed`.
void for_each_multiset(const std::vector<int>& allowed, int count, const std::function<void(const std::vector<int>&)>& f,
                       bool strict = false) {
    std::vector<int> current;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (static_cast<int>(current.size()) == count) {
            f(current);
            return;
        }
        for (std::size_t i = from; i < allowed.size(); ++i) {
            current.push_back(allowed[i]);
            rec(strict ? i + 1 : i);
            current.pop_back();
        }
    };
    rec(0);
}

std::vector<int> marks_of(const MultiIndex& mu) {
    if (mu.is_phi()) return {};
    return encode_subset(mu).mark_list();
}

}  // namespace

IndexCombination ohno_apply(const MultiIndex& mu, const MultiIndex& nu) {
    if (mu.is_phi()) return IndexCombination(nu);
    if (nu.is_phi() || mu.length() > nu.length()) return {};
    OhnoKey key{mu, nu};
    if (auto it = ohno_memo.find(key); it != ohno_memo.end()) return it->second;
    IndexCombination out;
    std::vector<int> slots = nu.parts();
    place(mu, slots, 0, 0, out);
    ohno_memo.emplace(std::move(key), out);
    return out;
}

IndexCombination ohno_apply(const IndexCombination& v, const IndexCombination& w) {
    return apply_bilinear(v, w, [](const MultiIndex& a, const MultiIndex& b) { return ohno_apply(a, b); });
}

IndexCombination ohno_bar_apply(const IndexCombination& v, const IndexCombination& w) {
    return op_dual(ohno_apply(v, op_dual(w)));
}

IndexCombination OhnoOperator::operator()(const IndexCombination& w) const { return ohno_apply(label_, w); }

IndexCombination OhnoOperator::apply_bar(const IndexCombination& w) const { return ohno_bar_apply(label_, w); }

OhnoOperator ohno_u(int r) { return OhnoOperator(u_single(r)); }

IndexCombination ohno_u_by_decomposition(int r, const MultiIndex& mu) {
    if (r < 0) throw std::invalid_argument("ohno_u_by_decomposition: r must be non-negative");
    if (r == 0) return IndexCombination(mu);
    if (mu.is_phi()) return {};
    std::vector<int> allowed{0};
    for (int m : marks_of(mu)) allowed.push_back(m);
    const MultiIndex one{1};
    IndexCombination out;
    for_each_multiset(allowed, r, [&](const std::vector<int>& cuts) {
        const auto blocks = split_at(mu, cuts);
        MultiIndex term = concat(blocks[0], one);
        for (std::size_t i = 1; i + 1 < blocks.size(); ++i) term = concat_dot(term, concat(blocks[i], one));
        out.add(concat_dot(term, blocks.back()), Rational(1));
    });
    return out;
}

IndexCombination ohno_ones_by_decomposition(int r, const MultiIndex& mu) {
    if (r < 0) throw std::invalid_argument("ohno_ones_by_decomposition: r must be non-negative");
    if (r == 0) return IndexCombination(mu);
    if (mu.is_phi()) return {};
    std::vector<int> allowed = marks_of(mu);
    allowed.push_back(mu.weight());
    const MultiIndex one{1};
    IndexCombination out;
    for_each_multiset(
        allowed, r,
        [&](const std::vector<int>& cuts) {
            const auto blocks = split_at(mu, cuts);
            MultiIndex term = blocks[0];
            for (std::size_t i = 1; i < blocks.size(); ++i) term = concat_dot(term, concat(one, blocks[i]));
            out.add(term, Rational(1));
        },
        true);
    return out;
}

IndexCombination ohno_bar_u_by_decomposition(int r, const MultiIndex& mu) {
    if (r < 0) throw std::invalid_argument("ohno_bar_u_by_decomposition: r must be non-negative");
    if (r == 0) return IndexCombination(mu);
    if (mu.is_phi()) return {};
    const auto marks = marks_of(mu);
    std::vector<int> allowed{0};
    for (int c = 1; c < mu.weight(); ++c)
        if (std::find(marks.begin(), marks.end(), c) == marks.end()) allowed.push_back(c);
    IndexCombination out;
    for_each_multiset(allowed, r, [&](const std::vector<int>& cuts) {
        const auto blocks = split_at(mu, cuts);
        MultiIndex term;
        for (std::size_t i = 0; i + 1 < blocks.size(); ++i) term = concat(term, plus(blocks[i]));
        out.add(concat(term, blocks.back()), Rational(1));
    });
    return out;
}

std::vector<std::vector<MultiIndex>> all_partitions(const MultiIndex& mu, int blocks) {
    if (blocks < 1) throw std::invalid_argument("all_partitions: need at least one block");
    std::vector<int> allowed;
    for (int c = 0; c <= mu.weight(); ++c) allowed.push_back(c);
    std::vector<std::vector<MultiIndex>> out;
    for_each_multiset(allowed, blocks - 1, [&](const std::vector<int>& cuts) { out.push_back(split_at(mu, cuts)); });
    return out;
}

IndexCombination conjugated_multiplication(int r, const IndexCombination& v) {
    return op_u_inverse(stuffle(IndexCombination(MultiIndex::ones(r)), op_u(v)));
}

IndexCombination partition_sum(int r, const MultiIndex& mu) {
    if (r < 0) throw std::invalid_argument("partition_sum: r must be non-negative");
    IndexCombination out;
    for (const auto& blocks : all_partitions(mu, r + 1)) {
        MultiIndex term;
        for (std::size_t i = 0; i + 1 < blocks.size(); ++i) term = concat(term, plus(blocks[i]));
        out.add(concat(term, blocks.back()), Rational(1));
    }
    return out;
}

IndexCombination ohno_chain(int r, const IndexCombination& v) {
    IndexCombination out;
    for (int k = 0; k <= r; ++k) {
        const IndexCombination inner = ohno_apply(IndexCombination(MultiIndex::ones(k)), v);
        out += ohno_u(r - k).apply_bar(inner);
    }
    return out;
}

bool verify_conjugated_chain(const MultiIndex& mu, int r) {
    if (r < 0) throw std::invalid_argument("verify_conjugated_chain: r must be non-negative");
    const IndexCombination lhs = conjugated_multiplication(r, IndexCombination(mu));
    const IndexCombination rhs = ohno_chain(r, IndexCombination(mu));
    const IndexCombination by_partitions = partition_sum(r, mu);
    return lhs == rhs && rhs == by_partitions;
}

bool verify_alternating_chain(const MultiIndex& mu, int r) {
    if (r < 0) throw std::invalid_argument("verify_alternating_chain: r must be non-negative");
    IndexCombination lhs;
    for (int k = 0; k <= r; ++k) {
        IndexCombination term = conjugated_multiplication(r - k, ohno_u(k)(IndexCombination(mu)));
        if (k % 2) term *= Rational(-1);
        lhs += term;
    }
    return lhs == ohno_u(r).apply_bar(IndexCombination(mu));
}

IndexCombination ohno_generator(const MultiIndex& mu, int r) {
    IndexCombination seed(reversed(mu));
    seed.add(dual(mu), Rational(-1));
    return ohno_u(r)(seed);
}

std::vector<IndexCombination> ohno_generators(int k, int r_max) {
    if (k < 2) throw std::invalid_argument("ohno_generators: weight must be at least 2");
    if (r_max < 0 || r_max > k - 1) r_max = k - 1;
    std::vector<IndexCombination> out;
    for (int r = 0; r <= r_max; ++r)
        for (const auto& mu : indices_of_weight(k - r)) out.push_back(ohno_generator(mu, r));
    return out;
}

void clear_ohno_cache() { ohno_memo.clear(); }

}  // namespace mzv
