#include "mzv/multi_index.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mzv {

namespace {

int checked_weight(const std::vector<int>& parts) {
    long total = 0;
    for (int p : parts) {
        if (p < 1) throw std::invalid_argument("multi-index parts must be positive integers");
        total += p;
    }
    return static_cast<int>(total);
}

}  // namespace

MultiIndex::MultiIndex(std::initializer_list<int> parts) : MultiIndex(std::vector<int>(parts)) {}

MultiIndex::MultiIndex(std::vector<int> parts) : parts_(std::move(parts)), weight_(checked_weight(parts_)) {}

MultiIndex MultiIndex::ones(int r) {
    if (r < 0) throw std::invalid_argument("ones: negative length");
    return MultiIndex(std::vector<int>(static_cast<std::size_t>(r), 1));
}

std::strong_ordering MultiIndex::operator<=>(const MultiIndex& other) const noexcept {
    if (auto c = weight_ <=> other.weight_; c != 0) return c;
    if (auto c = parts_.size() <=> other.parts_.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(parts_.begin(), parts_.end(), other.parts_.begin(),
                                                  other.parts_.end());
}

std::string MultiIndex::to_string() const {
    if (parts_.empty()) return "phi";
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    out += ')';
    return out;
}

std::size_t MultiIndexHash::operator()(const MultiIndex& mu) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (int p : mu.parts()) h = (h ^ static_cast<std::size_t>(p)) * 0x100000001b3ULL;
    return h;
}

// ---------------------------------------------------------------------------

IndexCombination::IndexCombination(const MultiIndex& mu) { terms_.emplace(mu, Rational(1)); }

IndexCombination::IndexCombination(const MultiIndex& mu, const Rational& coefficient) { add(mu, coefficient); }

void IndexCombination::add(const MultiIndex& mu, const Rational& coefficient) {
    if (sgn(coefficient) == 0) return;
    auto [it, inserted] = terms_.try_emplace(mu, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

Rational IndexCombination::coefficient(const MultiIndex& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool IndexCombination::is_homogeneous(int w) const {
    return std::all_of(terms_.begin(), terms_.end(), [w](const auto& t) { return t.first.weight() == w; });
}

int IndexCombination::homogeneous_weight() const {
    if (terms_.empty()) return -1;
    const int w = terms_.begin()->first.weight();
    return is_homogeneous(w) ? w : -1;
}

int IndexCombination::max_length() const {
    int best = 0;
    for (const auto& [mu, c] : terms_) best = std::max(best, mu.length());
    return best;
}

IndexCombination& IndexCombination::operator+=(const IndexCombination& other) {
    for (const auto& [mu, c] : other.terms_) add(mu, c);
    return *this;
}

IndexCombination& IndexCombination::operator-=(const IndexCombination& other) {
    for (const auto& [mu, c] : other.terms_) add(mu, -c);
    return *this;
}

IndexCombination& IndexCombination::operator*=(const Rational& scalar) {
    if (sgn(scalar) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [mu, c] : terms_) c *= scalar;
    return *this;
}

std::string IndexCombination::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [mu, c] : terms_) {
        Rational magnitude = abs(c);
        if (first) {
            if (sgn(c) < 0) out << '-';
        } else {
            out << (sgn(c) < 0 ? " - " : " + ");
        }
        if (magnitude != 1) out << magnitude.get_str() << '*';
        out << mu.to_string();
        first = false;
    }
    return out.str();
}

IndexCombination apply_linear(const IndexCombination& v,
                              const std::function<IndexCombination(const MultiIndex&)>& f) {
    IndexCombination out;
    for (const auto& [mu, c] : v) {
        for (const auto& [nu, d] : f(mu)) out.add(nu, c * d);
    }
    return out;
}

IndexCombination apply_bilinear(const IndexCombination& v, const IndexCombination& w,
                                const std::function<IndexCombination(const MultiIndex&, const MultiIndex&)>& f) {
    IndexCombination out;
    for (const auto& [mu, c] : v) {
        for (const auto& [nu, d] : w) {
            const Rational cd = c * d;
            for (const auto& [lambda, e] : f(mu, nu)) out.add(lambda, cd * e);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

std::vector<int> SubsetCode::mark_list() const {
    std::vector<int> out;
    for (int i = 1; i < weight; ++i)
        if (contains(i)) out.push_back(i);
    return out;
}

SubsetCode encode_subset(const MultiIndex& mu) {
    if (mu.is_phi()) throw std::invalid_argument("phi has no subset code");
    if (mu.weight() > kMaxCodeWeight) throw std::out_of_range("subset code: weight exceeds 64");
    SubsetCode code{mu.weight(), 0};
    int partial = 0;
    for (int k = 0; k + 1 < mu.length(); ++k) {
        partial += mu[static_cast<std::size_t>(k)];
        code.marks |= std::uint64_t{1} << (partial - 1);
    }
    return code;
}

MultiIndex decode_subset(const SubsetCode& code) {
    if (code.weight < 1) throw std::invalid_argument("subset code: weight must be positive");
    if (code.weight > kMaxCodeWeight) throw std::out_of_range("subset code: weight exceeds 64");
    if (code.weight < kMaxCodeWeight && (code.marks >> (code.weight - 1)) != 0)
        throw std::invalid_argument("subset code: mark outside {1, ..., m-1}");
    std::vector<int> parts;
    int last = 0;
    for (int i = 1; i < code.weight; ++i) {
        if (code.contains(i)) {
            parts.push_back(i - last);
            last = i;
        }
    }
    parts.push_back(code.weight - last);
    return MultiIndex(std::move(parts));
}

std::vector<MultiIndex> indices_of_weight(int m) {
    if (m < 0) throw std::invalid_argument("indices_of_weight: negative weight");
    if (m == 0) return {MultiIndex::phi()};
    if (m > 30) throw std::out_of_range("indices_of_weight: weight too large to enumerate");
    std::vector<MultiIndex> out;
    out.reserve(std::size_t{1} << (m - 1));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m - 1)); ++mask) out.push_back(decode_subset({m, mask}));
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------

namespace {

std::uint64_t full_mask(int m) { return m <= 1 ? 0 : ((std::uint64_t{1} << (m - 1)) - 1); }

}  // namespace

MultiIndex dual(const MultiIndex& mu) {
    if (mu.is_phi()) return mu;
    const SubsetCode code = encode_subset(mu);
    return decode_subset({code.weight, ~code.marks & full_mask(code.weight)});
}

MultiIndex reversed(const MultiIndex& mu) {
    std::vector<int> parts(mu.parts().rbegin(), mu.parts().rend());
    return MultiIndex(std::move(parts));
}

bool refines(const MultiIndex& mu, const MultiIndex& nu) {
    if (mu.weight() != nu.weight()) return false;
    if (mu.is_phi()) return true;
    const auto a = encode_subset(mu);
    const auto b = encode_subset(nu);
    return (b.marks & ~a.marks) == 0;
}

MultiIndex concat(const MultiIndex& mu, const MultiIndex& nu) {
    std::vector<int> parts = mu.parts();
    parts.insert(parts.end(), nu.parts().begin(), nu.parts().end());
    return MultiIndex(std::move(parts));
}

MultiIndex concat_dot(const MultiIndex& mu, const MultiIndex& nu) {
    if (mu.is_phi()) return nu;
    if (nu.is_phi()) return mu;
    std::vector<int> parts = mu.parts();
    parts.back() += nu.front();
    parts.insert(parts.end(), nu.parts().begin() + 1, nu.parts().end());
    return MultiIndex(std::move(parts));
}

MultiIndex plus(const MultiIndex& mu) {
    if (mu.is_phi()) return MultiIndex{1};
    std::vector<int> parts = mu.parts();
    parts.back() += 1;
    return MultiIndex(std::move(parts));
}

MultiIndex minus(const MultiIndex& mu) {
    if (mu.is_phi()) throw std::invalid_argument("minus: phi has no predecessor");
    std::vector<int> parts = mu.parts();
    if (parts.back() > 1)
        parts.back() -= 1;
    else
        parts.pop_back();
    return MultiIndex(std::move(parts));
}

MultiIndex drop_last(const MultiIndex& mu) {
    if (mu.is_phi()) throw std::invalid_argument("drop_last: phi has no last part");
    return prefix(mu, mu.length() - 1);
}

MultiIndex prefix(const MultiIndex& mu, int count) {
    return MultiIndex(std::vector<int>(mu.parts().begin(), mu.parts().begin() + count));
}

MultiIndex suffix_from(const MultiIndex& mu, int start) {
    return MultiIndex(std::vector<int>(mu.parts().begin() + start, mu.parts().end()));
}

// ---------------------------------------------------------------------------

namespace {

IndexCombination u_basis(const MultiIndex& mu, bool signed_inverse) {
    if (mu.is_phi()) return IndexCombination(mu);
    const SubsetCode code = encode_subset(mu);
    const std::uint64_t free = ~code.marks & full_mask(code.weight);
    IndexCombination out;
    for (std::uint64_t sub = free;; sub = (sub - 1) & free) {
        const MultiIndex nu = decode_subset({code.weight, code.marks | sub});
        const bool negative = signed_inverse && ((mu.length() + nu.length()) % 2 != 0);
        out.add(nu, Rational(negative ? -1 : 1));
        if (sub == 0) break;
    }
    return out;
}

IndexCombination d_basis(const MultiIndex& mu, bool signed_inverse) {
    if (mu.is_phi()) return IndexCombination(mu);
    const SubsetCode code = encode_subset(mu);
    IndexCombination out;
    for (std::uint64_t sub = code.marks;; sub = (sub - 1) & code.marks) {
        const MultiIndex nu = decode_subset({code.weight, sub});
        const bool negative = signed_inverse && ((mu.length() + nu.length()) % 2 != 0);
        out.add(nu, Rational(negative ? -1 : 1));
        if (sub == 0) break;
    }
    return out;
}

}  // namespace

IndexCombination op_dual(const IndexCombination& v) {
    return apply_linear(v, [](const MultiIndex& mu) { return IndexCombination(dual(mu)); });
}

IndexCombination op_tau(const IndexCombination& v) {
    return apply_linear(v, [](const MultiIndex& mu) { return IndexCombination(reversed(mu)); });
}

IndexCombination op_sigma(const IndexCombination& v) {
    IndexCombination out;
    for (const auto& [mu, c] : v) out.add(mu, mu.length() % 2 ? Rational(-c) : c);
    return out;
}

IndexCombination op_u(const IndexCombination& v) {
    return apply_linear(v, [](const MultiIndex& mu) { return u_basis(mu, false); });
}

IndexCombination op_d(const IndexCombination& v) {
    return apply_linear(v, [](const MultiIndex& mu) { return d_basis(mu, false); });
}

// u^{-1} = sigma u sigma, d^{-1} = sigma d sigma; the sign of nu in
// sigma u sigma (mu) is (-1)^{l(mu) + l(nu)}.
IndexCombination op_u_inverse(const IndexCombination& v) {
    return apply_linear(v, [](const MultiIndex& mu) { return u_basis(mu, true); });
}

IndexCombination op_d_inverse(const IndexCombination& v) {
    return apply_linear(v, [](const MultiIndex& mu) { return d_basis(mu, true); });
}

IndexCombination op_plus(const IndexCombination& v) {
    return apply_linear(v, [](const MultiIndex& mu) { return IndexCombination(plus(mu)); });
}

IndexCombination concat(const IndexCombination& v, const IndexCombination& w) {
    return apply_bilinear(v, w, [](const MultiIndex& a, const MultiIndex& b) { return IndexCombination(concat(a, b)); });
}

IndexCombination concat_dot(const IndexCombination& v, const IndexCombination& w) {
    return apply_bilinear(v, w,
                          [](const MultiIndex& a, const MultiIndex& b) { return IndexCombination(concat_dot(a, b)); });
}

IndexCombination u_single(int r) {
    if (r < 0) throw std::invalid_argument("u_single: negative weight");
    if (r == 0) return IndexCombination(MultiIndex::phi());
    return op_u(IndexCombination(MultiIndex{r}));
}

// ---------------------------------------------------------------------------

std::vector<MultiIndex> split_at(const MultiIndex& mu, std::span<const int> cuts) {
    std::vector<MultiIndex> blocks;
    blocks.reserve(cuts.size() + 1);
    int lo = 0;
    auto block_between = [&mu](int a, int b) {
        std::vector<int> parts;
        int start = 0;
        for (int p : mu.parts()) {
            const int end = start + p;
            const int overlap = std::min(b, end) - std::max(a, start);
            if (overlap > 0) parts.push_back(overlap);
            start = end;
        }
        return MultiIndex(std::move(parts));
    };
    for (int c : cuts) {
        if (c < lo || c > mu.weight()) throw std::invalid_argument("split_at: cuts must be nondecreasing within [0, |mu|]");
        blocks.push_back(block_between(lo, c));
        lo = c;
    }
    blocks.push_back(block_between(lo, mu.weight()));
    return blocks;
}

std::vector<MultiIndex> partition(const MultiIndex& mu, std::span<const int> sizes) {
    if (sizes.empty()) throw std::invalid_argument("partition: at least one block size is required");
    long total = 0;
    for (int n : sizes) {
        if (n < 0) throw std::invalid_argument("partition: block sizes must be non-negative");
        total += n;
    }
    if (total != mu.weight()) throw std::invalid_argument("partition: sizes must sum to the weight of the index");
    std::vector<int> cuts;
    int running = 0;
    for (std::size_t i = 0; i + 1 < sizes.size(); ++i) {
        running += sizes[i];
        cuts.push_back(running);
    }
    return split_at(mu, cuts);
}

}  // namespace mzv
