#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "plr/bounds.hpp"
#include "plr/cbc.hpp"
#include "plr/discrepancy.hpp"
#include "plr/errors.hpp"
#include "plr/pointset.hpp"
#include "plr/quality.hpp"
#include "plr/vector_file.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitVerification = 3;

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string poly_text(const plr::Poly& g) {
    if (g.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = g.degree(); i >= 0; --i) {
        const int c = g.coeff(i);
        if (c == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0) {
            os << c;
        } else {
            if (c != 1) os << c << "*";
            os << (i == 1 ? "x" : "x^" + std::to_string(i));
        }
    }
    return os.str();
}

std::vector<double> parse_csv_doubles(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        const double v = std::stod(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("bad number in list: " + item);
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

// "poly:k" -> j^{-k}, "geo:q" -> q^j, "list:a,b,..." explicit.
// k_out reports the exponent when the rule is poly:k (needed by auto reduction).
std::vector<double> parse_weight_rule(const std::string& rule, int s, std::optional<double>* k_out) {
    if (rule.rfind("poly:", 0) == 0) {
        const double k = std::stod(rule.substr(5));
        if (k_out) *k_out = k;
        std::vector<double> g;
        for (int j = 1; j <= s; ++j) g.push_back(std::pow(static_cast<double>(j), -k));
        return g;
    }
    if (rule.rfind("geo:", 0) == 0) {
        const double q = std::stod(rule.substr(4));
        std::vector<double> g;
        for (int j = 1; j <= s; ++j) g.push_back(std::pow(q, j));
        return g;
    }
    if (rule.rfind("list:", 0) == 0) {
        std::vector<double> g = parse_csv_doubles(rule.substr(5));
        if (static_cast<int>(g.size()) < s) throw std::invalid_argument("weight list shorter than s");
        g.resize(static_cast<std::size_t>(s));
        return g;
    }
    throw std::invalid_argument("unknown weight rule: " + rule);
}

std::vector<int> parse_reduction_rule(const std::string& rule, const std::optional<double>& poly_k,
                                      int p, int s) {
    if (rule == "none") return std::vector<int>(static_cast<std::size_t>(s), 0);
    if (rule.rfind("auto:", 0) == 0) {
        if (!poly_k) throw std::invalid_argument("reduction auto:<alpha> requires weights poly:<k>");
        const double alpha = std::stod(rule.substr(5));
        return plr::suggest_ws(*poly_k, alpha, p, s);
    }
    if (rule.rfind("list:", 0) == 0) {
        std::vector<double> raw = parse_csv_doubles(rule.substr(5));
        if (static_cast<int>(raw.size()) < s) throw std::invalid_argument("reduction list shorter than s");
        std::vector<int> ws;
        for (int j = 0; j < s; ++j) {
            const double v = raw[static_cast<std::size_t>(j)];
            const int w = static_cast<int>(v);
            if (v != w || w < 0) throw std::invalid_argument("reduction indices must be nonnegative integers");
            ws.push_back(w);
        }
        return ws;
    }
    throw std::invalid_argument("unknown reduction rule: " + rule);
}

struct ProblemArgs {
    int p = 2;
    int m = 2;
    int s = 2;
    std::string modulus = "xm";
    std::string weights = "list:1,1";
    std::string reduction = "none";
};

void add_problem_flags(CLI::App* cmd, ProblemArgs* a) {
    cmd->add_option("-p", a->p, "prime base");
    cmd->add_option("-m", a->m, "modulus degree (N = p^m)");
    cmd->add_option("-s", a->s, "dimension");
    cmd->add_option("--modulus", a->modulus, "xm | irr")->check(CLI::IsMember({"xm", "irr"}));
    cmd->add_option("--weights", a->weights, "poly:<k> | geo:<q> | list:<csv>");
    cmd->add_option("--reduction", a->reduction, "none | auto:<alpha> | list:<csv>");
}

struct Problem {
    plr::Modulus modulus;
    plr::WeightSystem weights;
    int s;
};

Problem build_problem(const ProblemArgs& a) {
    if (!plr::is_prime_int(a.p)) throw std::invalid_argument(std::to_string(a.p) + " is not prime");
    if (a.m < 1) throw std::invalid_argument("m must be >= 1");
    if (a.s < 1) throw std::invalid_argument("s must be >= 1");
    std::optional<double> poly_k;
    plr::WeightSystem w;
    w.gammas = parse_weight_rule(a.weights, a.s, &poly_k);
    w.ws = parse_reduction_rule(a.reduction, poly_k, a.p, a.s);
    w.m = a.m;
    plr::validate_weights(w);
    plr::Modulus f = a.modulus == "xm" ? plr::monomial_modulus(a.p, a.m)
                                       : plr::irreducible_modulus(a.p, a.m);
    return Problem{std::move(f), std::move(w), a.s};
}

int cmd_construct(const ProblemArgs& args, const std::string& algo, const std::string& out_path,
                  std::uint64_t max_work) {
    Problem prob = build_problem(args);
    if (prob.weights.w(1) > 0) {
        std::cerr << "warning: w_1 > 0; the first component is drawn from a shrunken search set\n";
    }
    std::string used = algo;
    if (algo == "fast" && prob.modulus.kind == plr::ModulusKind::Irreducible) {
        std::cerr << "warning: fast algorithm requires modulus x^m; falling back to naive\n";
        used = "naive";
    }
    const plr::CbcResult result = used == "fast"
                                      ? plr::cbc_reduced_fast(prob.modulus, prob.weights, prob.s, max_work)
                                      : plr::cbc_reduced_naive(prob.modulus, prob.weights, prob.s, max_work);
    const plr::VectorFile vf = plr::make_vector_file(result, used);
    plr::save_vector_file(out_path, vf);
    std::cout << "wrote " << out_path << "\n";
    for (int d = 1; d <= prob.s; ++d) {
        std::cout << "g_" << d << " = " << poly_text(vf.reduced[static_cast<std::size_t>(d - 1)])
                  << "  (w = " << prob.weights.w(d)
                  << ", R = " << num(vf.r_values[static_cast<std::size_t>(d - 1)]) << ")\n";
    }
    std::cout << "bound = " << num(vf.bound.total) << "\n";
    return kExitOk;
}

int cmd_points(const std::string& path, const std::string& format) {
    plr::VectorFile vf;
    plr::GeneratingVector gv;
    try {
        vf = plr::load_vector_file(path);
        gv = plr::to_generating_vector(vf);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    const plr::PointSet ps = plr::generate_point_set(gv);
    plr::write_points(std::cout, ps,
                      format == "decimal" ? plr::PointFormat::Decimal : plr::PointFormat::Fraction);
    return kExitOk;
}

int cmd_bound(const ProblemArgs& args, std::optional<double> epsilon) {
    Problem prob = build_problem(args);
    const plr::BoundReport rep =
        plr::discrepancy_bound(prob.modulus.p(), prob.modulus.m, prob.s, prob.weights, prob.modulus.kind);
    std::cout << "joe_term = " << num(rep.joe_term) << "\n";
    std::cout << "product_term = " << num(rep.product_term) << "\n";
    std::cout << "total = " << num(rep.total) << "\n";
    for (const auto& flag : rep.hypothesis_flags) std::cout << "note: " << flag << "\n";
    if (epsilon) {
        const plr::NStarResult ns =
            plr::n_star_bound(prob.weights, prob.modulus.p(), prob.s, *epsilon, prob.modulus.kind);
        if (ns.found) {
            std::cout << "m_star = " << ns.m_star << "\n";
            std::cout << "n_star = " << ns.n_star << "\n";
        } else {
            std::cout << "n_star not reached below the search cap\n";
        }
    }
    return kExitOk;
}

int cmd_discrepancy(const std::string& path, std::uint64_t max_disc) {
    plr::VectorFile vf;
    plr::GeneratingVector gv;
    try {
        vf = plr::load_vector_file(path);
        gv = plr::to_generating_vector(vf);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    const plr::PointSet ps = plr::generate_point_set(gv);
    const plr::DiscrepancyResult star = plr::star_discrepancy_exact(ps, max_disc);
    const plr::DiscrepancyResult weighted =
        plr::weighted_star_discrepancy_exact(ps, vf.weights.gammas, max_disc);
    std::cout << "star = " << num(star.value) << "\n";
    std::cout << "weighted = " << num(weighted.value) << "\n";
    std::cout << "bound = " << num(vf.bound.total) << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& path, std::uint64_t max_dual, std::uint64_t max_disc) {
    plr::VectorFile vf;
    try {
        vf = plr::load_vector_file(path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    std::vector<std::string> failures;
    plr::GeneratingVector gv;
    try {
        gv = plr::to_generating_vector(vf);
    } catch (const std::exception& e) {
        std::cout << "FAIL membership: " << e.what() << "\n";
        return kExitVerification;
    }

    const auto close = [](double a, double b) {
        return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
    };

    for (int d = 1; d <= vf.s; ++d) {
        const double r = plr::r_kernel(gv, d);
        const double stored = vf.r_values[static_cast<std::size_t>(d - 1)];
        if (!close(r, stored)) {
            failures.push_back("r_value[" + std::to_string(d) + "] stored " + num(stored) +
                               " recomputed " + num(r));
        }
        const double tb = plr::theorem_bound(vf.weights, vf.p, vf.m, d, vf.modulus.kind);
        if (r > tb + 1e-9) {
            failures.push_back("quality bound violated at d=" + std::to_string(d) + ": " + num(r) +
                               " > " + num(tb));
        }
    }

    try {
        const double rd = plr::r_direct(gv, vf.s, max_dual);
        double imag = 0.0;
        const double rc = plr::r_character(gv, vf.s, &imag, max_dual);
        const double rk = plr::r_kernel(gv, vf.s);
        if (!close(rd, rk)) failures.push_back("dual-sum form disagrees: " + num(rd) + " vs " + num(rk));
        if (!close(rc, rk)) failures.push_back("character form disagrees: " + num(rc) + " vs " + num(rk));
        if (imag > 1e-9) failures.push_back("character form has imaginary residue " + num(imag));
        if (vf.modulus.kind == plr::ModulusKind::MonomialXm) {
            const double rw = plr::r_walsh(gv, vf.s);
            if (!close(rw, rk)) failures.push_back("product form disagrees: " + num(rw) + " vs " + num(rk));
        }
    } catch (const plr::capacity_error&) {
        std::cout << "capacity: cross-form quality checks skipped\n";
    }

    const plr::BoundReport rep =
        plr::discrepancy_bound(vf.p, vf.m, vf.s, vf.weights, vf.modulus.kind);
    if (!close(rep.joe_term, vf.bound.joe_term) || !close(rep.product_term, vf.bound.product_term) ||
        !close(rep.total, vf.bound.total)) {
        failures.push_back("stored bound does not match recomputation");
    }

    try {
        const plr::PointSet ps = plr::generate_point_set(gv);
        const plr::DiscrepancyResult weighted =
            plr::weighted_star_discrepancy_exact(ps, vf.weights.gammas, max_disc);
        std::cout << "weighted discrepancy " << num(weighted.value) << " vs bound " << num(rep.total)
                  << "\n";
        if (weighted.value > rep.total + 1e-9) {
            failures.push_back("exact weighted discrepancy exceeds the bound");
        }
    } catch (const plr::capacity_error&) {
        std::cout << "capacity: exact discrepancy check skipped\n";
    }

    if (!failures.empty()) {
        for (const auto& f : failures) std::cout << "FAIL " << f << "\n";
        return kExitVerification;
    }
    std::cout << "ok\n";
    return kExitOk;
}

int cmd_suggest_w(double k, double alpha, int p, int count) {
    if (!plr::is_prime_int(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    const std::vector<int> ws = plr::suggest_ws(k, alpha, p, count);
    for (std::size_t i = 0; i < ws.size(); ++i) {
        std::cout << (i ? "," : "") << ws[i];
    }
    std::cout << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"reduced CBC construction of polynomial lattice point sets"};
    app.require_subcommand(1);

    ProblemArgs cons_args;
    std::string cons_algo = "naive";
    std::string cons_out = "vector.json";
    std::uint64_t max_work = 1ull << 34;
    auto* cons = app.add_subcommand("construct", "run the CBC construction and write a vector file");
    add_problem_flags(cons, &cons_args);
    cons->add_option("--algo", cons_algo, "naive | fast")->check(CLI::IsMember({"naive", "fast"}));
    cons->add_option("-o,--output", cons_out, "output path");
    cons->add_option("--max-work", max_work, "construction work guard");

    std::string points_file;
    std::string points_format = "fraction";
    auto* points = app.add_subcommand("points", "emit the point set of a vector file");
    points->add_option("file", points_file, "vector file")->required();
    points->add_option("--format", points_format, "fraction | decimal")
        ->check(CLI::IsMember({"fraction", "decimal"}));

    ProblemArgs bound_args;
    double bound_epsilon = 0.0;
    auto* bound = app.add_subcommand("bound", "report the discrepancy bound for given parameters");
    add_problem_flags(bound, &bound_args);
    auto* eps_opt = bound->add_option("--epsilon", bound_epsilon, "also report the smallest N with bound <= epsilon");

    std::string disc_file;
    std::uint64_t max_disc = 1ull << 28;
    auto* disc = app.add_subcommand("discrepancy", "exact star discrepancies of a vector file");
    disc->add_option("file", disc_file, "vector file")->required();
    disc->add_option("--max-disc-n", max_disc, "discrepancy enumeration guard");

    std::string verify_file;
    std::uint64_t max_dual = 1ull << 24;
    std::uint64_t verify_max_disc = 1ull << 28;
    auto* verify = app.add_subcommand("verify", "recompute and check everything a vector file claims");
    verify->add_option("file", verify_file, "vector file")->required();
    verify->add_option("--max-dual-enum", max_dual, "dual-space enumeration guard");
    verify->add_option("--max-disc-n", verify_max_disc, "discrepancy enumeration guard");

    double sw_k = 2.0;
    double sw_alpha = 1.5;
    int sw_p = 2;
    int sw_count = 8;
    auto* sw = app.add_subcommand("suggest-w", "reduction indices for weights gamma_j = j^-k");
    sw->add_option("-k", sw_k, "weight decay exponent");
    sw->add_option("--alpha", sw_alpha, "target convergence rate, 1 < alpha < k");
    sw->add_option("-p", sw_p, "prime base");
    sw->add_option("-s,--count", sw_count, "number of indices");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cons->parsed()) return cmd_construct(cons_args, cons_algo, cons_out, max_work);
        if (points->parsed()) return cmd_points(points_file, points_format);
        if (bound->parsed()) {
            return cmd_bound(bound_args, eps_opt->count() ? std::optional<double>(bound_epsilon)
                                                          : std::nullopt);
        }
        if (disc->parsed()) return cmd_discrepancy(disc_file, max_disc);
        if (verify->parsed()) return cmd_verify(verify_file, max_dual, verify_max_disc);
        if (sw->parsed()) return cmd_suggest_w(sw_k, sw_alpha, sw_p, sw_count);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const plr::capacity_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
