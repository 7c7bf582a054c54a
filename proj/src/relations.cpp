#include "mzv/relations.hpp"

#include <cstdint>
#include <stdexcept>

#include "mzv/ohno.hpp"
#include "mzv/products.hpp"

namespace mzv {

namespace {

std::string pair_label(const char* kind, const std::string& a, const std::string& b) {
    return std::string(kind) + "(" + a + "," + b + ")";
}

void require_homogeneous(const IndexCombination& v, const char* what) {
    if (!v.is_zero() && v.homogeneous_weight() < 0) throw std::invalid_argument(std::string(what) + ": input is not homogeneous");
}

void require_no_phi(const IndexCombination& v, const char* what) {
    if (v.coefficient(MultiIndex::phi()) != 0) throw std::invalid_argument(std::string(what) + ": phi component is not allowed");
}

}  // namespace

LinearRelation kawashima_linear(const MultiIndex& mu, const MultiIndex& nu) {
    if (mu.is_phi() || nu.is_phi()) throw std::invalid_argument("kawashima_linear: phi is not allowed");
    return LinearRelation{mu.weight() + nu.weight(), op_u(op_sigma(stuffle(mu, nu))),
                          pair_label("kawashima", mu.to_string(), nu.to_string())};
}

std::vector<std::pair<MultiIndex, MultiIndex>> kawashima_pairs(int k) {
    std::vector<std::pair<MultiIndex, MultiIndex>> out;
    for (int a = 1; 2 * a <= k; ++a) {
        const auto left = indices_of_weight(a);
        const auto right = indices_of_weight(k - a);
        for (const auto& mu : left)
            for (const auto& nu : right)
                if (2 * a < k || mu <= nu) out.emplace_back(mu, nu);
    }
    return out;
}

RelationMatrix kawashima_basis(int k, int cap) {
    if (k < 2) throw std::invalid_argument("kawashima_basis: weight must be at least 2");
    if (k > cap)
        throw std::invalid_argument("kawashima_basis: weight " + std::to_string(k) + " exceeds the cap " +
                                    std::to_string(cap) + "; raise the cap (e.g. --max-weight) if this is intended");
    RelationMatrix m(k);
    const std::size_t size = std::size_t{1} << (k - 1);
    std::vector<int> column_of_mask(size);
    for (int j = 0; j < m.ncols(); ++j)
        column_of_mask[encode_subset(m.columns()[static_cast<std::size_t>(j)]).marks] = j;

    // u is a subset-sum transform on the subset codes; the coefficients stay integral.
    std::vector<std::int64_t> f(size);
    for (const auto& [mu, nu] : kawashima_pairs(k)) {
        std::fill(f.begin(), f.end(), 0);
        for (const auto& [lambda, c] : stuffle(mu, nu)) {
            const std::int64_t v = c.get_num().get_si();
            f[encode_subset(lambda).marks] += lambda.length() % 2 ? -v : v;
        }
        for (std::size_t bit = 1; bit < size; bit <<= 1)
            for (std::size_t mask = 0; mask < size; ++mask)
                if (mask & bit) f[mask] += f[mask ^ bit];
        IndexCombination row;
        for (std::size_t mask = 0; mask < size; ++mask)
            if (f[mask] != 0) row.add(m.columns()[static_cast<std::size_t>(column_of_mask[mask])], Rational(f[mask]));
        m.add_row(row);
    }
    return m;
}

LinearRelation duality_generator(const MultiIndex& mu) {
    if (mu.is_phi()) throw std::invalid_argument("duality_generator: phi is not allowed");
    IndexCombination element(reversed(mu));
    element.add(dual(mu), Rational(-1));
    return LinearRelation{mu.weight(), element, "duality(" + mu.to_string() + ")"};
}

LinearRelation ohno_relation(const MultiIndex& mu, int r) {
    if (mu.is_phi()) throw std::invalid_argument("ohno_relation: phi is not allowed");
    if (r < 0) throw std::invalid_argument("ohno_relation: r must be non-negative");
    return LinearRelation{mu.weight() + r, ohno_generator(mu, r), "ohno(" + mu.to_string() + "," + std::to_string(r) + ")"};
}

IndexCombination duality_alternating_sum(const MultiIndex& mu) {
    if (mu.is_phi()) throw std::invalid_argument("duality_alternating_sum: phi is not allowed");
    IndexCombination out;
    for (int h = 0; h <= mu.length(); ++h) {
        IndexCombination term = stuffle(op_tau(IndexCombination(prefix(mu, h))), op_d(IndexCombination(suffix_from(mu, h))));
        if (h % 2) term *= Rational(-1);
        out += term;
    }
    return out;
}

bool verify_duality_sum(const MultiIndex& mu) { return duality_alternating_sum(mu).is_zero(); }

IndexCombination ones(int m) { return IndexCombination(MultiIndex::ones(m)); }

std::variant<LinearRelation, QuadraticRelation> quadratic_relation(const IndexCombination& v, const IndexCombination& w,
                                                                   int m) {
    if (m < 1) throw std::invalid_argument("quadratic_relation: m must be at least 1");
    require_homogeneous(v, "quadratic_relation");
    require_homogeneous(w, "quadratic_relation");
    require_no_phi(v, "quadratic_relation");
    require_no_phi(w, "quadratic_relation");
    const std::string label = "quadratic(" + v.to_string() + ";" + w.to_string() + ";" + std::to_string(m) + ")";
    const IndexCombination product = op_u(op_sigma(stuffle(v, w)));
    if (m == 1) {
        const int weight = product.is_zero() ? v.homogeneous_weight() + w.homogeneous_weight() : product.homogeneous_weight();
        return LinearRelation{weight, product, label};
    }
    QuadraticRelation q;
    q.m = m;
    q.provenance = label;
    const IndexCombination uv = op_u(op_sigma(v));
    const IndexCombination uw = op_u(op_sigma(w));
    for (int k = 1; k < m; ++k) q.lhs.emplace_back(circ(uv, ones(k)), circ(uw, ones(m - k)));
    q.rhs = circ(product, ones(m));
    return q;
}

std::vector<IndexCombination> taylor_coefficients(const IndexCombination& v, int m_max) {
    require_homogeneous(v, "taylor_coefficients");
    require_no_phi(v, "taylor_coefficients");
    const IndexCombination base = op_d(op_dual(v));
    std::vector<IndexCombination> out;
    for (int m = 1; m <= m_max; ++m) {
        IndexCombination c = circ(base, ones(m));
        if (m % 2 == 0) c *= Rational(-1);
        out.push_back(std::move(c));
    }
    return out;
}

namespace {

// Integers that do not fit in 64 bits are written as decimal strings.
nlohmann::json integer_json(const mpz_class& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

}  // namespace

nlohmann::json to_json(const IndexCombination& v) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [mu, c] : v)
        terms.push_back({{"index", mu.parts()}, {"num", integer_json(c.get_num())}, {"den", integer_json(c.get_den())}});
    return terms;
}

nlohmann::json to_json(const LinearRelation& rel) {
    return {{"weight", rel.weight}, {"provenance", rel.provenance}, {"terms", to_json(rel.element)}};
}

nlohmann::json to_json(const QuadraticRelation& rel) {
    nlohmann::json lhs = nlohmann::json::array();
    for (const auto& [a, b] : rel.lhs) lhs.push_back({{"left", to_json(a)}, {"right", to_json(b)}});
    return {{"m", rel.m}, {"provenance", rel.provenance}, {"lhs", lhs}, {"rhs", to_json(rel.rhs)}};
}

}  // namespace mzv
