#include "mzv/lyndon.hpp"

#include <algorithm>
#include <stdexcept>

namespace mzv {

namespace {

// u strictly below v, where a proper prefix is below the longer word.
bool word_less(const std::vector<int>& u, std::size_t u_from, const std::vector<int>& v, std::size_t v_from) {
    return std::lexicographical_compare(u.begin() + static_cast<std::ptrdiff_t>(u_from), u.end(),
                                        v.begin() + static_cast<std::ptrdiff_t>(v_from), v.end());
}

}  // namespace

bool is_lyndon(const MultiIndex& mu) {
    if (mu.is_phi()) throw std::invalid_argument("is_lyndon: phi is not a word");
    const auto& w = mu.parts();
    for (std::size_t i = 1; i < w.size(); ++i)
        if (!word_less(w, 0, w, i)) return false;
    return true;
}

std::vector<LyndonWord> enumerate_lyndon(int m) {
    if (m < 1 || m > 20) throw std::invalid_argument("enumerate_lyndon: weight must lie in 1..20");
    std::vector<LyndonWord> out;
    for (const auto& mu : indices_of_weight(m))
        if (is_lyndon(mu)) out.push_back(LyndonWord{mu});
    return out;
}

int moebius(int n) {
    if (n < 1) throw std::invalid_argument("moebius: argument must be positive");
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    return n > 1 ? -result : result;
}

std::int64_t psi2(int m) {
    if (m < 2) throw std::invalid_argument("psi2: defined for m >= 2");
    if (m > 62) throw std::invalid_argument("psi2: m too large");
    std::int64_t sum = 0;
    for (int d = 1; d <= m; ++d)
        if (m % d == 0) sum += moebius(m / d) * (std::int64_t{1} << d);
    return sum / m;
}

std::int64_t dimension_formula(int k) {
    if (k < 2) throw std::invalid_argument("dimension_formula: k must be at least 2");
    return (std::int64_t{1} << (k - 1)) - psi2(k);
}

std::int64_t zagier_dim(int k) {
    if (k < 1 || k > 62) throw std::invalid_argument("zagier_dim: k must lie in 1..62");
    std::vector<std::int64_t> z{0, 1, 1, 1};
    for (int i = 4; i <= k; ++i) z.push_back(z[static_cast<std::size_t>(i - 2)] + z[static_cast<std::size_t>(i - 3)]);
    return (std::int64_t{1} << (k - 1)) - z[static_cast<std::size_t>(k)];
}

}  // namespace mzv
