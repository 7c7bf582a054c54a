#include "mzv/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <map>
#include <stdexcept>

namespace mzv {

namespace {

class NeumaierSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0;
    double comp_ = 0;
};

void require_convergent(const MultiIndex& mu) {
    if (mu.is_phi()) throw std::invalid_argument("zeta: phi is not a convergent index");
    if (mu.back() < 2) throw std::invalid_argument("divergent index " + mu.to_string());
}

// Partial sums at the requested checkpoints (ascending, each >= 1).
std::vector<double> checkpoint_sums(const MultiIndex& mu, const std::vector<long>& checkpoints, bool non_strict) {
    const std::size_t p = static_cast<std::size_t>(mu.length());
    std::vector<NeumaierSum> acc(p + 1);
    acc[0].add(1.0);
    std::vector<double> terms(p + 1);
    std::vector<double> out;
    std::size_t next = 0;
    const long last = checkpoints.back();
    for (long n = 0; n < last; ++n) {
        const double inv = 1.0 / static_cast<double>(n + 1);
        terms[0] = 0;
        for (std::size_t i = 1; i <= p; ++i) {
            double base = acc[i - 1].value();
            if (non_strict) base += terms[i - 1];
            terms[i] = base * std::pow(inv, mu[i - 1]);
        }
        for (std::size_t i = 1; i <= p; ++i) acc[i].add(terms[i]);
        while (next < checkpoints.size() && checkpoints[next] == n + 1) {
            out.push_back(acc[p].value());
            ++next;
        }
    }
    return out;
}

// Solves the square system for zeta given partial sums S_i at N_i.
double extrapolate(const std::vector<long>& ns, const std::vector<double>& sums, int depth, int decay) {
    const std::size_t dim = ns.size();
    const long double log_ref = std::log(static_cast<long double>(ns.front()));
    std::vector<std::vector<long double>> a(dim, std::vector<long double>(dim + 1));
    for (std::size_t i = 0; i < dim; ++i) {
        const long double n = static_cast<long double>(ns[i]);
        const long double l = std::log(n) - log_ref;
        const long double scale = std::pow(n, -static_cast<long double>(decay));
        a[i][0] = 1;
        long double power = 1;
        for (int j = 0; j < depth; ++j) {
            a[i][static_cast<std::size_t>(j) + 1] = -power * scale;
            power *= l;
        }
        a[i][dim] = sums[i];
    }
    for (std::size_t c = 0; c < dim; ++c) {
        std::size_t pivot = c;
        for (std::size_t r = c + 1; r < dim; ++r)
            if (std::fabs(a[r][c]) > std::fabs(a[pivot][c])) pivot = r;
        std::swap(a[c], a[pivot]);
        for (std::size_t r = 0; r < dim; ++r) {
            if (r == c || a[r][c] == 0) continue;
            const long double f = a[r][c] / a[c][c];
            for (std::size_t j = c; j <= dim; ++j) a[r][j] -= f * a[c][j];
        }
    }
    return static_cast<double>(a[0][dim] / a[0][0]);
}

struct CacheKey {
    MultiIndex mu;
    long N;
    bool non_strict;
    bool operator<(const CacheKey& o) const {
        if (N != o.N) return N < o.N;
        if (non_strict != o.non_strict) return non_strict < o.non_strict;
        return mu < o.mu;
    }
};

thread_local std::map<CacheKey, MzvEstimate> estimate_cache;

MzvEstimate estimate(const MultiIndex& mu, long N, bool non_strict) {
    require_convergent(mu);
    const int depth = mu.length();
    if (N < (2L << (depth + 1))) throw std::invalid_argument("zeta: truncation too small for the extrapolation");
    const CacheKey key{mu, N, non_strict};
    if (auto it = estimate_cache.find(key); it != estimate_cache.end()) return it->second;

    std::vector<long> ns;
    for (int i = depth + 1; i >= 0; --i) ns.push_back(N >> i);
    const std::vector<double> sums = checkpoint_sums(mu, ns, non_strict);
    // ns is ascending; the fit for N uses the top depth+1 points, the fit for N/2 the bottom ones.
    const std::vector<long> hi_n(ns.rbegin(), ns.rbegin() + depth + 1);
    const std::vector<double> hi_s(sums.rbegin(), sums.rbegin() + depth + 1);
    const std::vector<long> lo_n(ns.rbegin() + 1, ns.rend());
    const std::vector<double> lo_s(sums.rbegin() + 1, sums.rend());
    const int decay = mu.back() - 1;
    const double est_hi = extrapolate(hi_n, hi_s, depth, decay);
    const double est_lo = extrapolate(lo_n, lo_s, depth, decay);

    // The doubling estimate can vanish once the tail drops below double resolution.
    const double rounding = 16 * std::numeric_limits<double>::epsilon() * std::fabs(est_hi);
    MzvEstimate out{est_hi, 2 * std::fabs(est_hi - est_lo) + rounding, N, sums.back()};
    estimate_cache.emplace(key, out);
    return out;
}

MzvEstimate combine(const IndexCombination& v, long N, bool non_strict, bool plus_last) {
    MzvEstimate out{0, 0, N, 0};
    NeumaierSum value;
    NeumaierSum raw;
    for (const auto& [mu, c] : v) {
        const MzvEstimate e = estimate(plus_last ? plus(mu) : mu, N, non_strict);
        const double cd = c.get_d();
        value.add(cd * e.value);
        raw.add(cd * e.partial_sum);
        out.err += std::fabs(cd) * e.err;
    }
    out.value = value.value();
    out.partial_sum = raw.value();
    return out;
}

void require_truncation(long N) {
    if (N < 1) throw std::invalid_argument("zeta: truncation must be positive");
}

}  // namespace

double partial_sum(const MultiIndex& mu, long N, bool non_strict) {
    if (mu.is_phi()) throw std::invalid_argument("partial_sum: phi is not allowed");
    require_truncation(N);
    return checkpoint_sums(mu, {N}, non_strict).back();
}

MzvEstimate zeta_strict(const MultiIndex& mu, long N) {
    require_truncation(N);
    return estimate(mu, N, false);
}

MzvEstimate zeta(const IndexCombination& v, long N) {
    require_truncation(N);
    return combine(v, N, false, false);
}

MzvEstimate zeta_plus(const IndexCombination& v, long N) {
    require_truncation(N);
    return combine(v, N, false, true);
}

MzvEstimate zeta_bar(const IndexCombination& v, long N) {
    require_truncation(N);
    return combine(v, N, true, false);
}

void clear_numeric_cache() { estimate_cache.clear(); }

double default_tolerance(const IndexCombination& evaluated) { return evaluated.max_length() <= 2 ? 1e-6 : 1e-4; }

NumericReport verify_linear(const LinearRelation& rel, long N, double tol) {
    if (tol < 0) tol = default_tolerance(op_plus(rel.element));
    const MzvEstimate e = zeta_plus(rel.element, N);
    return NumericReport{rel.provenance, N, e.value, e.err, tol, std::fabs(e.value) <= std::max(tol, e.err)};
}

NumericReport verify_quadratic(const QuadraticRelation& rel, long N, double tol) {
    if (tol < 0) {
        int depth = rel.rhs.max_length();
        for (const auto& [a, b] : rel.lhs) depth = std::max({depth, a.max_length(), b.max_length()});
        tol = depth <= 2 ? 1e-6 : 1e-4;
    }
    NeumaierSum diff;
    double err = 0;
    for (const auto& [a, b] : rel.lhs) {
        const MzvEstimate x = zeta(a, N);
        const MzvEstimate y = zeta(b, N);
        diff.add(x.value * y.value);
        err += std::fabs(x.value) * y.err + std::fabs(y.value) * x.err + x.err * y.err;
    }
    const MzvEstimate r = zeta(rel.rhs, N);
    diff.add(-r.value);
    err += r.err;
    const double value = diff.value();
    return NumericReport{rel.provenance, N, value, err, tol, std::fabs(value) <= std::max(tol, err)};
}

std::vector<NumericReport> verify_linear_batch(const std::vector<LinearRelation>& rels, long N, double tol, int threads) {
    threads = std::max(1, threads);
    std::vector<NumericReport> out(rels.size());
    std::vector<std::future<void>> jobs;
    for (int t = 0; t < threads; ++t)
        jobs.push_back(std::async(std::launch::async, [&, t] {
            for (std::size_t i = static_cast<std::size_t>(t); i < rels.size(); i += static_cast<std::size_t>(threads))
                out[i] = verify_linear(rels[i], N, tol);
        }));
    for (auto& j : jobs) j.get();
    return out;
}

nlohmann::json to_json(const NumericReport& report) {
    return {{"relation", report.relation}, {"N", report.N}, {"value", report.value}, {"err", report.err},
            {"tol", report.tol}, {"pass", report.pass}};
}

}  // namespace mzv
