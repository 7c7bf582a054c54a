#include "mzv/checks.hpp"

#include <algorithm>
#include <numeric>

#include "mzv/harmonic_sums.hpp"
#include "mzv/ohno.hpp"
#include "mzv/products.hpp"
#include "mzv/qlinalg.hpp"
#include "mzv/relations.hpp"

namespace mzv {

void CheckResult::record(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    if (failures == 0) first_failure = what;
    ++failures;
}

bool all_passed(const CheckSuite& suite) {
    return std::all_of(suite.begin(), suite.end(), [](const CheckResult& c) { return c.passed(); });
}

nlohmann::json to_json(const CheckResult& check) {
    nlohmann::json out{{"check", check.name}, {"cases", check.cases}, {"failures", check.failures}, {"pass", check.passed()}};
    if (check.failures) out["first_failure"] = check.first_failure;
    return out;
}

std::vector<MultiIndex> indices_up_to(int max_weight) {
    std::vector<MultiIndex> out;
    for (int w = 1; w <= max_weight; ++w) {
        auto level = indices_of_weight(w);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

namespace {

using IC = IndexCombination;

std::vector<std::pair<MultiIndex, MultiIndex>> pairs_up_to(int max_weight) {
    std::vector<std::pair<MultiIndex, MultiIndex>> out;
    const auto all = indices_up_to(max_weight - 1);
    for (const auto& mu : all)
        for (const auto& nu : all)
            if (mu.weight() + nu.weight() <= max_weight) out.emplace_back(mu, nu);
    return out;
}

std::string show(const MultiIndex& mu) { return mu.to_string(); }
std::string show(const MultiIndex& mu, const MultiIndex& nu) { return mu.to_string() + ", " + nu.to_string(); }

int tail_sum(const MultiIndex& mu, int from) {
    return std::accumulate(mu.parts().begin() + from, mu.parts().end(), 0);
}

// d(mu) through the expansion over the last block.
IC d_by_last_block(const MultiIndex& mu) {
    IC out;
    for (int i = 0; i < mu.length(); ++i)
        out += concat(op_d(IC(prefix(mu, i))), IC(MultiIndex{tail_sum(mu, i)}));
    return out;
}

IC d_product_expansion(const MultiIndex& mu, const MultiIndex& nu) {
    IC out;
    const IC dmu = op_d(IC(mu));
    const IC dnu = op_d(IC(nu));
    for (int i = 0; i < mu.length(); ++i)
        out += concat(stuffle(op_d(IC(prefix(mu, i))), dnu), IC(MultiIndex{tail_sum(mu, i)}));
    for (int j = 0; j < nu.length(); ++j)
        out += concat(stuffle(dmu, op_d(IC(prefix(nu, j)))), IC(MultiIndex{tail_sum(nu, j)}));
    for (int i = 0; i < mu.length(); ++i)
        for (int j = 0; j < nu.length(); ++j)
            out += concat(stuffle(op_d(IC(prefix(mu, i))), op_d(IC(prefix(nu, j)))),
                          IC(MultiIndex{tail_sum(mu, i) + tail_sum(nu, j)}));
    return out;
}

// The last-part recursion evaluated with the matrix enumeration on the smaller products.
IC stuffle_recursion_by_matrices(const MultiIndex& mu, const MultiIndex& nu) {
    const MultiIndex mh = drop_last(mu);
    const MultiIndex nh = drop_last(nu);
    return concat(stuffle_by_matrices(mh, nu), IC(MultiIndex{mu.back()})) +
           concat(stuffle_by_matrices(mu, nh), IC(MultiIndex{nu.back()})) +
           concat(stuffle_by_matrices(mh, nh), IC(MultiIndex{mu.back() + nu.back()}));
}

}  // namespace

CheckSuite check_operator_identities(int max_weight) {
    CheckResult involutions{"dual, tau and sigma are involutions"};
    CheckResult commute{"tau commutes with dual, sigma, u and d"};
    CheckResult dual_d_dual{"dual d dual = u"};
    CheckResult d_sigma{"d sigma d sigma = id"};
    CheckResult u_sigma{"u sigma u sigma = id"};
    CheckResult d_dual_dinv{"d dual d^-1 = -u sigma"};
    CheckResult uinv_dual_u{"u^-1 dual u = -sigma d"};
    CheckResult lengths{"l(mu) + l(mu*) = |mu| + 1"};
    CheckResult last_block{"d(mu) expands over the last block"};
    for (const auto& mu : indices_up_to(max_weight)) {
        const IC x(mu);
        involutions.record(op_dual(op_dual(x)) == x && op_tau(op_tau(x)) == x && op_sigma(op_sigma(x)) == x, show(mu));
        commute.record(op_dual(op_tau(x)) == op_tau(op_dual(x)) && op_sigma(op_tau(x)) == op_tau(op_sigma(x)) &&
                           op_u(op_tau(x)) == op_tau(op_u(x)) && op_d(op_tau(x)) == op_tau(op_d(x)),
                       show(mu));
        dual_d_dual.record(op_dual(op_d(op_dual(x))) == op_u(x), show(mu));
        d_sigma.record(op_d(op_sigma(op_d(op_sigma(x)))) == x, show(mu));
        u_sigma.record(op_u(op_sigma(op_u(op_sigma(x)))) == x, show(mu));
        d_dual_dinv.record(op_d(op_dual(op_d_inverse(x))) == -op_u(op_sigma(x)), show(mu));
        uinv_dual_u.record(op_u_inverse(op_dual(op_u(x))) == -op_sigma(op_d(x)), show(mu));
        lengths.record(mu.length() + dual(mu).length() == mu.weight() + 1, show(mu));
        last_block.record(op_d(x) == d_by_last_block(mu), show(mu));
    }

    CheckResult dual_concat{"(mu # nu)* = mu* #. nu*"};
    CheckResult u_concat{"u(mu # nu) = u(mu) # u(nu)"};
    CheckResult u_concat_dot{"u(mu #. nu) = u(mu) # u(nu) + u(mu) #. u(nu)"};
    CheckResult d_concat_dot{"d(mu #. nu) = d(mu) #. d(nu)"};
    CheckResult d_concat{"d(mu # nu) = d(mu) # d(nu) + d(mu) #. d(nu)"};
    CheckResult recursion{"harmonic product: last-part recursion matches the matrix enumeration"};
    CheckResult bar_matrices{"signed product: recursion matches the signed matrix enumeration"};
    CheckResult commutative{"harmonic products are commutative"};
    CheckResult d_bar{"d(v *bar w) = d(v) * d(w)"};
    CheckResult d_circ{"d(v (*)bar w) = d(v) (*) d(w)"};
    CheckResult expansion{"d(mu) * d(nu) block expansion"};
    for (const auto& [mu, nu] : pairs_up_to(max_weight)) {
        const IC x(mu);
        const IC y(nu);
        const std::string what = show(mu, nu);
        dual_concat.record(dual(concat(mu, nu)) == concat_dot(dual(mu), dual(nu)), what);
        u_concat.record(op_u(IC(concat(mu, nu))) == concat(op_u(x), op_u(y)), what);
        u_concat_dot.record(op_u(IC(concat_dot(mu, nu))) == concat(op_u(x), op_u(y)) + concat_dot(op_u(x), op_u(y)), what);
        d_concat_dot.record(op_d(IC(concat_dot(mu, nu))) == concat_dot(op_d(x), op_d(y)), what);
        d_concat.record(op_d(IC(concat(mu, nu))) == concat(op_d(x), op_d(y)) + concat_dot(op_d(x), op_d(y)), what);
        const IC product = stuffle(mu, nu);
        recursion.record(product == stuffle_by_matrices(mu, nu) && product == stuffle_recursion_by_matrices(mu, nu), what);
        bar_matrices.record(stuffle_bar(mu, nu) == stuffle_bar_by_matrices(mu, nu), what);
        commutative.record(product == stuffle(nu, mu) && stuffle_bar(mu, nu) == stuffle_bar(nu, mu), what);
        d_bar.record(op_d(stuffle_bar(x, y)) == stuffle(op_d(x), op_d(y)), what);
        d_circ.record(op_d(circ_bar(x, y)) == circ(op_d(x), op_d(y)), what);
        expansion.record(stuffle(op_d(x), op_d(y)) == d_product_expansion(mu, nu), what);
    }

    CheckResult associative{"harmonic products are associative"};
    const auto all = indices_up_to(max_weight - 2);
    for (const auto& a : all)
        for (const auto& b : all)
            for (const auto& c : all) {
                if (a.weight() + b.weight() + c.weight() > max_weight) continue;
                const IC x(a);
                const IC y(b);
                const IC z(c);
                associative.record(stuffle(stuffle(x, y), z) == stuffle(x, stuffle(y, z)) &&
                                       stuffle_bar(stuffle_bar(x, y), z) == stuffle_bar(x, stuffle_bar(y, z)),
                                   a.to_string() + ", " + b.to_string() + ", " + c.to_string());
            }

    return {involutions, commute,  dual_d_dual, d_sigma,     u_sigma,      d_dual_dinv, uinv_dual_u,
            lengths,     last_block, dual_concat, u_concat,  u_concat_dot, d_concat_dot, d_concat,
            recursion,   bar_matrices, commutative, associative, d_bar,     d_circ,      expansion};
}

CheckSuite check_sequence_products(int max_weight, int n_max) {
    CheckResult products{"A, S, a, s product identities and the d transport"};
    CheckResult bar_symmetry{"s_v = a_{d(v)} and a_v = s_{d^-1(v)}"};
    for (const auto& [mu, nu] : pairs_up_to(max_weight)) {
        products.record(verify_product_sequences(IC(mu), IC(nu), n_max), show(mu, nu));
    }
    for (const auto& mu : indices_up_to(max_weight)) {
        bar_symmetry.record(seq_s(IC(mu), n_max) == seq_a(op_d(IC(mu)), n_max) &&
                                seq_a(IC(mu), n_max) == seq_s(op_d_inverse(IC(mu)), n_max) &&
                                seq_A(IC(mu), n_max) == seq_S(op_d_inverse(IC(mu)), n_max),
                            show(mu));
    }
    return {products, bar_symmetry};
}

CheckSuite check_difference_formula(int max_weight, int grid, int nabla_weight, int nabla_n) {
    CheckResult theorem{"Delta^k s_mu (n) = s_{mu,mu*}(n,k)"};
    for (const auto& mu : indices_up_to(max_weight)) theorem.record(verify_difference_formula(mu, grid, grid), show(mu));
    CheckResult inversion{"nabla s_mu = s_{mu*}"};
    for (const auto& mu : indices_up_to(nabla_weight))
        inversion.record(nabla(seq_s(mu, nabla_n)) == seq_s(dual(mu), nabla_n), show(mu));
    return {theorem, inversion};
}

CheckSuite check_ohno_operators(int max_weight, int r_max) {
    std::vector<MultiIndex> labels{MultiIndex::phi()};
    for (const auto& mu : indices_up_to(max_weight)) labels.push_back(mu);
    const auto args = indices_up_to(max_weight);

    CheckResult sigma{"O_mu sigma = sigma O_mu, Obar_mu sigma = (-1)^|mu| sigma Obar_mu"};
    CheckResult tau{"O_v tau = tau O_{tau(v)}"};
    CheckResult leading_one{"O_mu((1) #. nu) = (1) #. O_mu(nu), Obar_mu((1) # nu) = (1) # Obar_mu(nu)"};
    for (const auto& mu : labels)
        for (const auto& nu : args) {
            const IC l(mu);
            const IC x(nu);
            const std::string what = show(mu, nu);
            const Rational sign = mu.weight() % 2 ? -1 : 1;
            sigma.record(ohno_apply(l, op_sigma(x)) == op_sigma(ohno_apply(l, x)) &&
                             ohno_bar_apply(l, op_sigma(x)) == sign * op_sigma(ohno_bar_apply(l, x)),
                         what);
            tau.record(ohno_apply(l, op_tau(x)) == op_tau(ohno_apply(op_tau(l), x)), what);
            const IC one(MultiIndex{1});
            leading_one.record(ohno_apply(l, concat_dot(one, x)) == concat_dot(one, ohno_apply(l, x)) &&
                                   ohno_bar_apply(l, concat(one, x)) == concat(one, ohno_bar_apply(l, x)),
                               what);
        }

    CheckResult composition{"O_v O_w = O_{v*w}"};
    for (const auto& [v, w] : pairs_up_to(max_weight))
        for (const auto& x : args) {
            const IC a(v);
            const IC b(w);
            composition.record(ohno_apply(a, ohno_apply(b, IC(x))) == ohno_apply(stuffle(a, b), IC(x)),
                               show(v, w) + " on " + show(x));
        }

    CheckResult leibniz{"O_{u(r)} over # and Obar_{u(r)} over #."};
    for (const auto& [mu, nu] : pairs_up_to(max_weight))
        for (int r = 0; r <= r_max; ++r) {
            IC concat_sum;
            IC dot_sum;
            for (int k = 0; k <= r; ++k) {
                concat_sum += concat(ohno_u(k)(IC(mu)), ohno_u(r - k)(IC(nu)));
                dot_sum += concat_dot(ohno_u(k).apply_bar(IC(mu)), ohno_u(r - k).apply_bar(IC(nu)));
            }
            leibniz.record(ohno_u(r)(IC(concat(mu, nu))) == concat_sum &&
                               ohno_u(r).apply_bar(IC(concat_dot(mu, nu))) == dot_sum,
                           show(mu, nu) + ", r=" + std::to_string(r));
        }

    CheckResult decomposition{"O_{1^r}, O_{u(r)} and Obar_{u(r)} decomposition formulas"};
    CheckResult chain{"u^-1 m_{1^r} u = sum_k Obar_{u(r-k)} O_{1^k} = partition sum"};
    CheckResult alternating{"sum_k (-1)^k u^-1 m_{1^{r-k}} u O_{u(k)} = Obar_{u(r)}"};
    for (const auto& mu : args)
        for (int r = 0; r <= r_max; ++r) {
            const std::string what = show(mu) + ", r=" + std::to_string(r);
            decomposition.record(ohno_ones_by_decomposition(r, mu) == ohno_apply(IC(MultiIndex::ones(r)), IC(mu)) &&
                                     ohno_u_by_decomposition(r, mu) == ohno_u(r)(IC(mu)) &&
                                     ohno_bar_u_by_decomposition(r, mu) == ohno_u(r).apply_bar(IC(mu)),
                                 what);
            chain.record(verify_conjugated_chain(mu, r), what);
            alternating.record(verify_alternating_chain(mu, r), what);
        }
    return {sigma, tau, composition, leibniz, leading_one, decomposition, chain, alternating};
}

CheckSuite check_duality_containment(int max_weight) {
    CheckResult containment{"tau(mu) - mu* lies in u sigma(V*V) with a verified certificate"};
    for (int k = 1; k <= max_weight; ++k) {
        if (k == 1) {
            containment.record(duality_generator(MultiIndex{1}).element.is_zero(), "(1)");
            continue;
        }
        const RelationMatrix m = kawashima_basis(k, max_weight);
        const RowSpace space(m);
        for (const auto& mu : indices_of_weight(k)) {
            const IC x = duality_generator(mu).element;
            const auto cert = space.member(x);
            containment.record(cert && check_certificate(m, x, *cert), show(mu));
        }
    }
    return {containment};
}

CheckSuite check_ohno_containment(int max_weight, int r_max) {
    CheckResult containment{"O_{u(r)}(tau - *)(mu) lies in u sigma(V*V) with a verified certificate"};
    for (int k = 2; k <= max_weight; ++k) {
        const RelationMatrix m = kawashima_basis(k, max_weight);
        const RowSpace space(m);
        for (int r = 0; r <= std::min(r_max, k - 1); ++r)
            for (const auto& mu : indices_of_weight(k - r)) {
                const IC x = ohno_relation(mu, r).element;
                const auto cert = space.member(x);
                containment.record(cert && check_certificate(m, x, *cert), show(mu) + ", r=" + std::to_string(r));
            }
    }
    return {containment};
}

std::vector<NumericReport> numeric_kawashima_reports(int pairs_up_to_weight, long N, double tol, int threads) {
    std::vector<LinearRelation> rels;
    for (int k = 2; k <= pairs_up_to_weight; ++k)
        for (const auto& [mu, nu] : kawashima_pairs(k)) rels.push_back(kawashima_linear(mu, nu));
    return verify_linear_batch(rels, N, tol, threads);
}

}  // namespace mzv
