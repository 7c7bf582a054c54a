#include "mzv/harmonic_sums.hpp"

#include <functional>
#include <stdexcept>

#include "mzv/products.hpp"

namespace mzv {

RationalSequence::RationalSequence(std::vector<Rational> values) : values_(std::move(values)) {}

RationalSequence RationalSequence::constant(const Rational& c, int horizon) {
    if (horizon < 0) throw std::invalid_argument("RationalSequence: negative horizon");
    return RationalSequence(std::vector<Rational>(static_cast<std::size_t>(horizon) + 1, c));
}

const Rational& RationalSequence::operator()(int n) const {
    if (n < 0 || n > horizon()) throw std::out_of_range("RationalSequence: index beyond horizon");
    return values_[static_cast<std::size_t>(n)];
}

RationalSequence& RationalSequence::operator+=(const RationalSequence& other) {
    if (values_.empty()) {
        values_ = other.values_;
        return *this;
    }
    if (other.horizon() != horizon()) throw std::invalid_argument("RationalSequence: horizon mismatch");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
    return *this;
}

RationalSequence& RationalSequence::operator*=(const Rational& scalar) {
    for (auto& x : values_) x *= scalar;
    return *this;
}

RationalSequence operator*(RationalSequence a, const RationalSequence& b) {
    if (a.horizon() != b.horizon()) throw std::invalid_argument("RationalSequence: horizon mismatch");
    for (std::size_t i = 0; i < a.values_.size(); ++i) a.values_[i] *= b.values_[i];
    return a;
}

bool RationalSequence::agrees_with(const RationalSequence& other) const {
    const std::size_t n = std::min(values_.size(), other.values_.size());
    for (std::size_t i = 0; i < n; ++i)
        if (values_[i] != other.values_[i]) return false;
    return true;
}

namespace {

Rational inverse_power(int base, int exponent) {
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exponent));
    return Rational(mpz_class(1), den);
}

void require_horizon(int horizon) {
    if (horizon < 0) throw std::invalid_argument("harmonic sums: negative horizon");
}

// Partial sums P(0..len-1) with P(n) = sum_{j < n} x(j).
std::vector<Rational> exclusive_prefix(const std::vector<Rational>& x, std::size_t len) {
    std::vector<Rational> out(len);
    Rational acc = 0;
    for (std::size_t n = 0; n < len; ++n) {
        out[n] = acc;
        if (n < x.size()) acc += x[n];
    }
    return out;
}

// Values 0..horizon of the "outer" sums: S_mu when non_strict, A_mu otherwise.
std::vector<Rational> outer_sums(const MultiIndex& mu, int horizon, bool non_strict) {
    const std::size_t len = static_cast<std::size_t>(horizon) + 1;
    // Each inner sequence is needed one step further than its parent.
    std::vector<Rational> outer(len + static_cast<std::size_t>(mu.length()), Rational(1));
    for (int i = 0; i < mu.length(); ++i) {
        const std::size_t inner_len = outer.size() - 1;
        std::vector<Rational> inner(inner_len);
        for (std::size_t n = 0; n < inner_len; ++n)
            inner[n] = (non_strict ? outer[n + 1] : outer[n]) * inverse_power(static_cast<int>(n) + 1, mu[i]);
        outer = exclusive_prefix(inner, inner_len);
    }
    outer.resize(len);
    return outer;
}

std::vector<Rational> inner_sums(const MultiIndex& mu, int horizon, bool non_strict) {
    if (mu.is_phi()) throw std::invalid_argument("harmonic sums: s and a are undefined for phi");
    const MultiIndex head = drop_last(mu);
    const std::vector<Rational> outer = outer_sums(head, horizon + 1, non_strict);
    std::vector<Rational> out(static_cast<std::size_t>(horizon) + 1);
    for (int n = 0; n <= horizon; ++n)
        out[static_cast<std::size_t>(n)] =
            (non_strict ? outer[static_cast<std::size_t>(n) + 1] : outer[static_cast<std::size_t>(n)]) *
            inverse_power(n + 1, mu.back());
    return out;
}

RationalSequence linear_sum(const IndexCombination& v, int horizon,
                            const std::function<RationalSequence(const MultiIndex&, int)>& f) {
    RationalSequence out = RationalSequence::constant(0, horizon);
    for (const auto& [mu, c] : v) {
        RationalSequence term = f(mu, horizon);
        term *= c;
        out += term;
    }
    return out;
}

}  // namespace

RationalSequence seq_s(const MultiIndex& mu, int horizon) {
    require_horizon(horizon);
    return RationalSequence(inner_sums(mu, horizon, true));
}

RationalSequence seq_a(const MultiIndex& mu, int horizon) {
    require_horizon(horizon);
    return RationalSequence(inner_sums(mu, horizon, false));
}

RationalSequence seq_S(const MultiIndex& mu, int horizon) {
    require_horizon(horizon);
    return RationalSequence(outer_sums(mu, horizon, true));
}

RationalSequence seq_A(const MultiIndex& mu, int horizon) {
    require_horizon(horizon);
    return RationalSequence(outer_sums(mu, horizon, false));
}

RationalSequence seq_s(const IndexCombination& v, int horizon) {
    return linear_sum(v, horizon, [](const MultiIndex& mu, int h) { return seq_s(mu, h); });
}

RationalSequence seq_a(const IndexCombination& v, int horizon) {
    return linear_sum(v, horizon, [](const MultiIndex& mu, int h) { return seq_a(mu, h); });
}

RationalSequence seq_S(const IndexCombination& v, int horizon) {
    return linear_sum(v, horizon, [](const MultiIndex& mu, int h) { return seq_S(mu, h); });
}

RationalSequence seq_A(const IndexCombination& v, int horizon) {
    return linear_sum(v, horizon, [](const MultiIndex& mu, int h) { return seq_A(mu, h); });
}

RationalSequence delta(const RationalSequence& a, int k) {
    if (k < 0) throw std::invalid_argument("delta: negative order");
    if (k > a.horizon()) throw std::invalid_argument("delta: order exceeds the horizon");
    std::vector<Rational> cur = a.values();
    for (int step = 0; step < k; ++step) {
        for (std::size_t n = 0; n + 1 < cur.size(); ++n) cur[n] -= cur[n + 1];
        cur.pop_back();
    }
    return RationalSequence(std::move(cur));
}

RationalSequence delta_binomial(const RationalSequence& a, int k) {
    if (k < 0) throw std::invalid_argument("delta_binomial: negative order");
    if (k > a.horizon()) throw std::invalid_argument("delta_binomial: order exceeds the horizon");
    std::vector<Rational> out(static_cast<std::size_t>(a.horizon() - k) + 1);
    for (int n = 0; n <= a.horizon() - k; ++n) {
        Rational acc = 0;
        for (int i = 0; i <= k; ++i) {
            const Rational term = Rational(binomial(k, i)) * a(n + i);
            if (i % 2) acc -= term; else acc += term;
        }
        out[static_cast<std::size_t>(n)] = acc;
    }
    return RationalSequence(std::move(out));
}

RationalSequence nabla(const RationalSequence& a) {
    std::vector<Rational> out(a.values().size());
    for (int n = 0; n <= a.horizon(); ++n) {
        Rational acc = 0;
        for (int i = 0; i <= n; ++i) {
            const Rational term = Rational(binomial(n, i)) * a(i);
            if (i % 2) acc -= term; else acc += term;
        }
        out[static_cast<std::size_t>(n)] = acc;
    }
    return RationalSequence(std::move(out));
}

RationalSequence shift(const RationalSequence& a) {
    if (a.horizon() < 1) throw std::invalid_argument("shift: horizon too small");
    return RationalSequence(std::vector<Rational>(a.values().begin() + 1, a.values().end()));
}

const mpz_class& binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) {
        static const mpz_class zero = 0;
        return zero;
    }
    thread_local std::vector<std::vector<mpz_class>> rows{{mpz_class(1)}};
    while (static_cast<int>(rows.size()) <= n) {
        const auto& prev = rows.back();
        std::vector<mpz_class> next(prev.size() + 1);
        next.front() = 1;
        next.back() = 1;
        for (std::size_t i = 1; i + 1 < next.size(); ++i) next[i] = prev[i - 1] + prev[i];
        rows.push_back(std::move(next));
    }
    return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

namespace {

// Expanded position lists (i_1..i_m): entry t is the part that owns unit t.
std::vector<int> owners(const MultiIndex& mu) {
    std::vector<int> out;
    for (int i = 0; i < mu.length(); ++i) out.insert(out.end(), static_cast<std::size_t>(mu[i]), i);
    return out;
}

void check_s2_args(const MultiIndex& mu, const MultiIndex& nu, int n, int k) {
    if (mu.is_phi() || nu.is_phi()) throw std::invalid_argument("seq_s2: phi is not allowed");
    if (mu.weight() != nu.weight()) throw std::invalid_argument("seq_s2: weights differ");
    if (n < 0 || k < 0) throw std::invalid_argument("seq_s2: negative argument");
}

}  // namespace

Rational seq_s2(const MultiIndex& mu, const MultiIndex& nu, int n, int k) {
    check_s2_args(mu, nu, n, k);
    const std::vector<int> is = owners(mu);
    const std::vector<int> js = owners(nu);
    const std::size_t m = is.size();
    const std::size_t W = static_cast<std::size_t>(k) + 1;
    auto at = [W](std::size_t a, std::size_t b) { return a * W + b; };

    // f[a][b]: weighted count of chain prefixes ending with current values (a, b).
    std::vector<Rational> f(static_cast<std::size_t>(n + 1) * W);
    for (std::size_t a = 0; a <= static_cast<std::size_t>(n); ++a)
        for (std::size_t b = 0; b < W; ++b) f[at(a, b)] = Rational(1, static_cast<long>(a + b + 1));

    for (std::size_t t = 1; t < m; ++t) {
        const bool free_n = is[t] != is[t - 1];
        const bool free_k = js[t] != js[t - 1];
        std::vector<Rational> g = f;
        // A new variable may take any value at least the previous one: prefix sums.
        if (free_n)
            for (std::size_t a = 1; a <= static_cast<std::size_t>(n); ++a)
                for (std::size_t b = 0; b < W; ++b) g[at(a, b)] += g[at(a - 1, b)];
        if (free_k)
            for (std::size_t a = 0; a <= static_cast<std::size_t>(n); ++a)
                for (std::size_t b = 1; b < W; ++b) g[at(a, b)] += g[at(a, b - 1)];
        for (std::size_t a = 0; a <= static_cast<std::size_t>(n); ++a)
            for (std::size_t b = 0; b < W; ++b) g[at(a, b)] *= Rational(1, static_cast<long>(a + b + 1));
        f = std::move(g);
    }
    return f[at(static_cast<std::size_t>(n), static_cast<std::size_t>(k))] / Rational(binomial(n + k, n));
}

Rational seq_s2_enumerated(const MultiIndex& mu, const MultiIndex& nu, int n, int k) {
    check_s2_args(mu, nu, n, k);
    const std::vector<int> is = owners(mu);
    const std::vector<int> js = owners(nu);
    std::vector<int> ns(static_cast<std::size_t>(mu.length()));
    std::vector<int> ks(static_cast<std::size_t>(nu.length()));
    Rational total = 0;

    auto evaluate = [&] {
        Rational term = 1;
        for (std::size_t t = 0; t < is.size(); ++t)
            term /= ns[static_cast<std::size_t>(is[t])] + ks[static_cast<std::size_t>(js[t])] + 1;
        total += term;
    };
    std::function<void(std::size_t, int)> chain_k = [&](std::size_t pos, int lo) {
        if (pos + 1 == ks.size()) {
            ks[pos] = k;
            if (k >= lo) evaluate();
            return;
        }
        for (int v = lo; v <= k; ++v) {
            ks[pos] = v;
            chain_k(pos + 1, v);
        }
    };
    std::function<void(std::size_t, int)> chain_n = [&](std::size_t pos, int lo) {
        if (pos + 1 == ns.size()) {
            ns[pos] = n;
            if (n >= lo) chain_k(0, 0);
            return;
        }
        for (int v = lo; v <= n; ++v) {
            ns[pos] = v;
            chain_n(pos + 1, v);
        }
    };
    chain_n(0, 0);
    return total / Rational(binomial(n + k, n));
}

bool verify_difference_formula(const MultiIndex& mu, int n_max, int k_max) {
    const RationalSequence s = seq_s(mu, n_max + k_max);
    const MultiIndex mu_dual = dual(mu);
    for (int k = 0; k <= k_max; ++k) {
        const RationalSequence lhs = delta(s, k);
        for (int n = 0; n <= n_max; ++n)
            if (lhs(n) != seq_s2(mu, mu_dual, n, k)) return false;
    }
    return true;
}

namespace {

bool has_phi(const IndexCombination& v) { return v.coefficient(MultiIndex::phi()) != 0; }

}  // namespace

bool verify_product_sequences(const IndexCombination& v, const IndexCombination& w, int n_max) {
    if (seq_A(v, n_max) * seq_A(w, n_max) != seq_A(stuffle(v, w), n_max)) return false;
    if (seq_S(v, n_max) * seq_S(w, n_max) != seq_S(stuffle_bar(v, w), n_max)) return false;
    if (seq_S(v, n_max) != seq_A(op_d(v), n_max)) return false;
    if (seq_S(w, n_max) != seq_A(op_d(w), n_max)) return false;
    if (has_phi(v) || has_phi(w)) return true;
    if (seq_a(v, n_max) * seq_a(w, n_max) != seq_a(circ(v, w), n_max)) return false;
    if (seq_s(v, n_max) * seq_s(w, n_max) != seq_s(circ_bar(v, w), n_max)) return false;
    if (seq_s(v, n_max) != seq_a(op_d(v), n_max)) return false;
    return true;
}

}  // namespace mzv
