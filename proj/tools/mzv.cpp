#include <cstdio>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mzv/checks.hpp"
#include "mzv/expression.hpp"
#include "mzv/lyndon.hpp"
#include "mzv/numeric.hpp"
#include "mzv/ohno.hpp"
#include "mzv/products.hpp"
#include "mzv/qlinalg.hpp"
#include "mzv/relations.hpp"

using nlohmann::json;
using namespace mzv;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kHardWeightCap = 20;

struct Config {
    int max_weight = kDefaultWeightCap;
    long truncation = kDefaultTruncation;
    double tol = -1;
    int threads = 1;
    std::string output = "text";
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require_weight(const Config& cfg, int w, const char* what) {
    if (w > cfg.max_weight)
        throw UsageError(std::string(what) + " " + std::to_string(w) + " exceeds --max-weight " + std::to_string(cfg.max_weight));
}

void print_combination(const Config& cfg, const IndexCombination& v) {
    if (cfg.output == "json")
        std::cout << json{{"result", v.to_string()}, {"terms", to_json(v)}}.dump(2) << '\n';
    else
        std::cout << v.to_string() << '\n';
}

IndexCombination apply_op(const std::string& op, const IndexCombination& v) {
    if (op == "tau") return op_tau(v);
    if (op == "sigma") return op_sigma(v);
    if (op == "u") return op_u(v);
    if (op == "d") return op_d(v);
    if (op == "uinv") return op_u_inverse(v);
    if (op == "dinv") return op_d_inverse(v);
    if (op == "dual") return op_dual(v);
    if (op == "plus") return op_plus(v);
    throw UsageError("unknown operator " + op);
}

IndexCombination apply_product(const std::string& kind, const IndexCombination& a, const IndexCombination& b) {
    if (kind == "*") return stuffle(a, b);
    if (kind == "starbar") return stuffle_bar(a, b);
    if (kind == "circ") return circ(a, b);
    if (kind == "circbar") return circ_bar(a, b);
    throw UsageError("unknown product " + kind);
}

void check_weights(const Config& cfg, const IndexCombination& v) {
    for (const auto& [mu, c] : v) require_weight(cfg, mu.weight(), "input weight");
}

struct TableRow {
    int k;
    std::int64_t d_z;
    std::int64_t d_formula;
    int d;
    int d_o;
    bool exact;
};

int run_rank_table(const Config& cfg, int k_min, int k_max, int exact_up_to) {
    if (k_min < 2 || k_max < k_min) throw UsageError("rank-table needs 2 <= --kmin <= --kmax");
    require_weight(cfg, k_max, "--kmax");
    std::vector<TableRow> rows;
    bool ok = true;
    for (int k = k_min; k <= k_max; ++k) {
        const RelationMatrix kawashima = kawashima_basis(k, cfg.max_weight);
        RelationMatrix ohno(k);
        for (const auto& g : ohno_generators(k)) ohno.add_row(g);
        const bool exact = k <= exact_up_to;
        const int d = exact ? rank(kawashima) : modular_rank(kawashima).rank;
        const int d_o = exact ? rank(ohno) : modular_rank(ohno).rank;
        rows.push_back(TableRow{k, zagier_dim(k), dimension_formula(k), d, d_o, exact});
        ok = ok && d == dimension_formula(k);
    }
    if (cfg.output == "json") {
        json out = json::array();
        for (const auto& r : rows) {
            json row{{"k", r.k}, {"d_Z", r.d_z}, {"d_formula", r.d_formula}, {"d", r.d}, {"d_O", r.d_o},
                     {"method", r.exact ? "exact" : "modular lower bound"}};
            if (!r.exact) {
                json primes = json::array();
                for (auto p : kDefaultPrimes) primes.push_back(p);
                row["primes"] = primes;
            }
            out.push_back(row);
        }
        std::cout << json{{"table", out}, {"pass", ok}}.dump(2) << '\n';
    } else {
        std::cout << std::setw(4) << "k" << std::setw(8) << "d_Z" << std::setw(12) << "d formula" << std::setw(12)
                  << "d" << std::setw(12) << "d_O" << "  method\n";
        for (const auto& r : rows)
            std::cout << std::setw(4) << r.k << std::setw(8) << r.d_z << std::setw(12) << r.d_formula << std::setw(12) << r.d
                      << std::setw(12) << r.d_o << "  " << (r.exact ? "exact" : "lower bound (mod p)") << '\n';
    }
    return ok ? 0 : kExitFail;
}

int report_checks(const Config& cfg, const std::string& suite, const CheckSuite& checks) {
    const bool ok = all_passed(checks);
    if (cfg.output == "json") {
        json list = json::array();
        for (const auto& c : checks) list.push_back(to_json(c));
        std::cout << json{{"suite", suite}, {"checks", list}, {"pass", ok}}.dump(2) << '\n';
    } else {
        for (const auto& c : checks) {
            std::cout << (c.passed() ? "PASS  " : "FAIL  ") << c.name << "  (" << c.cases << " cases";
            if (c.failures) std::cout << ", " << c.failures << " failed, first: " << c.first_failure;
            std::cout << ")\n";
        }
    }
    return ok ? 0 : kExitFail;
}

std::string format_double(double x) {
    std::ostringstream s;
    s << std::scientific << std::setprecision(3) << x;
    return s.str();
}

int report_numeric(const Config& cfg, const std::vector<NumericReport>& reports) {
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.pass;
    if (cfg.output == "json") {
        json list = json::array();
        for (const auto& r : reports) list.push_back(to_json(r));
        std::cout << json{{"suite", "numeric"}, {"reports", list}, {"pass", ok}}.dump(2) << '\n';
    } else {
        for (const auto& r : reports)
            std::cout << (r.pass ? "PASS  " : "FAIL  ") << r.relation << "  N=" << r.N << "  value=" << format_double(r.value)
                      << "  err=" << format_double(r.err) << "  tol=" << format_double(r.tol) << '\n';
    }
    return ok ? 0 : kExitFail;
}

int run_verify(const Config& cfg, const std::string& suite, std::optional<int> weight, int pairs_up_to,
               std::optional<int> grid, int r_max) {
    if (suite == "identities") {
        const int w = weight.value_or(7);
        require_weight(cfg, w, "--weight");
        CheckSuite checks = check_operator_identities(w);
        const CheckSuite seq = check_sequence_products(std::min(w, 6), grid.value_or(20));
        checks.insert(checks.end(), seq.begin(), seq.end());
        return report_checks(cfg, suite, checks);
    }
    if (suite == "theorem310") {
        const int w = weight.value_or(5);
        require_weight(cfg, w, "--weight");
        const int g = grid.value_or(6);
        return report_checks(cfg, suite, check_difference_formula(w, g, w + 1, 2 * g));
    }
    if (suite == "duality") {
        const int w = weight.value_or(7);
        require_weight(cfg, w, "--weight");
        return report_checks(cfg, suite, check_duality_containment(w));
    }
    if (suite == "ohno") {
        const int w = weight.value_or(8);
        require_weight(cfg, w, "--weight");
        CheckSuite checks = check_ohno_operators(std::min(w, 6), r_max);
        const CheckSuite containment = check_ohno_containment(w, r_max);
        checks.insert(checks.end(), containment.begin(), containment.end());
        return report_checks(cfg, suite, checks);
    }
    if (suite == "numeric") {
        require_weight(cfg, pairs_up_to + 1, "--pairs-up-to");
        std::vector<NumericReport> reports = numeric_kawashima_reports(pairs_up_to, cfg.truncation, cfg.tol, cfg.threads);
        LinearRelation euler{2, IndexCombination(MultiIndex{1, 1}) - IndexCombination(MultiIndex{2}), "euler(zeta(1,2)=zeta(3))"};
        reports.push_back(verify_linear(euler, cfg.truncation, cfg.tol));
        const auto q = quadratic_relation(MultiIndex{1}, MultiIndex{1}, 2);
        reports.push_back(verify_quadratic(std::get<QuadraticRelation>(q), cfg.truncation, cfg.tol));
        return report_numeric(cfg, reports);
    }
    throw UsageError("unknown suite " + suite);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multi-index algebra, relation spaces and multiple zeta value checks"};
    app.require_subcommand(1);
    app.fallthrough();
    Config cfg;
    app.add_option("--max-weight", cfg.max_weight, "Largest weight any command may touch")
        ->check(CLI::Range(1, kHardWeightCap))
        ->capture_default_str();
    app.add_option("--truncation", cfg.truncation, "Truncation N of the zeta series")
        ->envname("MZV_TRUNCATION")
        ->capture_default_str();
    app.add_option("--tol", cfg.tol, "Numeric tolerance (default: 1e-6 for depth <= 2, 1e-4 otherwise)");
    app.add_option("--threads", cfg.threads, "Worker threads")->envname("MZV_THREADS")->capture_default_str();
    app.add_option("--output", cfg.output, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

    std::string expr;
    std::string op;
    std::string kind;
    std::string lhs;
    std::string rhs;
    auto* dual_cmd = app.add_subcommand("dual", "Print the dual of a combination");
    dual_cmd->add_option("expr", expr, "Combination, e.g. \"(4,1,1)\"")->required();

    auto* apply_cmd = app.add_subcommand("apply", "Apply a linear operator");
    apply_cmd->add_option("op", op, "tau|sigma|u|d|uinv|dinv|dual|plus")
        ->required()
        ->check(CLI::IsMember({"tau", "sigma", "u", "d", "uinv", "dinv", "dual", "plus"}));
    apply_cmd->add_option("expr", expr, "Combination")->required();

    auto* product_cmd = app.add_subcommand("product", "Multiply two combinations");
    product_cmd->add_option("kind", kind, "*|starbar|circ|circbar")
        ->required()
        ->check(CLI::IsMember({"*", "starbar", "circ", "circbar"}));
    product_cmd->add_option("a", lhs, "Left factor")->required();
    product_cmd->add_option("b", rhs, "Right factor")->required();

    int k_min = 2;
    int k_max = 9;
    int exact_up_to = 9;
    auto* table_cmd = app.add_subcommand("rank-table", "Dimensions of the relation spaces by weight");
    table_cmd->add_option("--kmin", k_min)->capture_default_str();
    table_cmd->add_option("--kmax", k_max)->capture_default_str();
    table_cmd->add_option("--exact-up-to", exact_up_to, "Exact ranks up to this weight, modular lower bounds above")
        ->capture_default_str();

    std::string suite;
    std::optional<int> weight;
    std::optional<int> grid;
    int pairs_up_to = 5;
    int r_max = 3;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("suite", suite, "identities|theorem310|duality|ohno|numeric")
        ->required()
        ->check(CLI::IsMember({"identities", "theorem310", "duality", "ohno", "numeric"}));
    verify_cmd->add_option("--weight", weight, "Weight bound of the suite");
    verify_cmd->add_option("--grid", grid, "Bound on n and k (theorem310) or n (identities)");
    verify_cmd->add_option("--pairs-up-to", pairs_up_to, "Largest |mu| + |nu| for the numeric suite")->capture_default_str();
    verify_cmd->add_option("--r-max", r_max, "Largest r for the ohno suite")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cfg.truncation < 1000) throw UsageError("--truncation / MZV_TRUNCATION must be at least 1000");
        if (cfg.threads < 1 || cfg.threads > 256) throw UsageError("--threads / MZV_THREADS must lie in [1, 256]");
        if (*dual_cmd) {
            const IndexCombination v = parse_combination(expr);
            check_weights(cfg, v);
            print_combination(cfg, op_dual(v));
        } else if (*apply_cmd) {
            const IndexCombination v = parse_combination(expr);
            check_weights(cfg, v);
            print_combination(cfg, apply_op(op, v));
        } else if (*product_cmd) {
            const IndexCombination a = parse_combination(lhs);
            const IndexCombination b = parse_combination(rhs);
            check_weights(cfg, a);
            check_weights(cfg, b);
            const IndexCombination p = apply_product(kind, a, b);
            check_weights(cfg, p);
            print_combination(cfg, p);
        } else if (*table_cmd) {
            return run_rank_table(cfg, k_min, k_max, exact_up_to);
        } else if (*verify_cmd) {
            if (pairs_up_to < 2 || r_max < 0) throw UsageError("--pairs-up-to must be >= 2 and --r-max >= 0");
            return run_verify(cfg, suite, weight, pairs_up_to, grid, r_max);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error at position " << e.position() << ": " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return 0;
}
