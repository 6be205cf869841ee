#include "plr/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "plr/pointset.hpp"

namespace plr {

namespace {

double bound_factor(double gamma, int w, int p, int m, ModulusKind kind) {
    const double pd = static_cast<double>(p);
    const double pw = std::pow(pd, std::min(w, m));
    double c, k;
    if (kind == ModulusKind::MonomialXm) {
        c = 2.0;
        k = (pd * pd - 1.0) / (3.0 * pd);
    } else {
        c = 1.0;
        k = (pd + 1.0) / 3.0;
    }
    return 1.0 + gamma + gamma * c * pw * static_cast<double>(m) * k;
}

}  // namespace

double theorem_bound(const WeightSystem& weights, int p, int m, int d, ModulusKind kind) {
    if (d < 1 || d > weights.dims()) throw std::invalid_argument("dimension out of range");
    double prod = 1.0;
    for (int i = 1; i <= d; ++i) {
        prod *= bound_factor(weights.gamma(i), weights.w(i), p, m, kind);
    }
    return prod / std::pow(static_cast<double>(p), m);
}

JoeSum joe_sum(const std::vector<double>& gammas, double big_n) {
    if (big_n < 1.0) throw std::invalid_argument("N must be >= 1");
    JoeSum js;
    double full = 1.0;
    double damped = 1.0;
    double sum = 0.0;
    double big_gamma = 0.0;
    for (double g : gammas) {
        full *= 1.0 + g;
        damped *= 1.0 + g * (1.0 - 1.0 / big_n);
        sum += g;
        big_gamma += g / (1.0 + g);
    }
    js.exact = full - damped;
    js.upper = std::max(1.0, big_gamma) * std::exp(sum) / big_n;
    return js;
}

BoundReport discrepancy_bound(int p, int m, int s, const WeightSystem& weights, ModulusKind kind) {
    if (s < 1 || s > weights.dims()) throw std::invalid_argument("dimension out of range");
    const double big_n = std::pow(static_cast<double>(p), m);
    BoundReport rep;
    rep.kind = kind;
    std::vector<double> gammas(weights.gammas.begin(), weights.gammas.begin() + s);
    rep.joe_term = joe_sum(gammas, big_n).exact;
    double prod = 1.0;
    for (int i = 1; i <= s; ++i) {
        prod *= bound_factor(weights.gamma(i), weights.w(i), p, m, kind);
    }
    rep.product_term = prod / big_n;
    rep.total = rep.joe_term + rep.product_term;
    if (!weights.ws.empty() && weights.ws.front() > 0) {
        rep.hypothesis_flags.push_back("w1_nonzero");
    }
    return rep;
}

TractabilityReport tractability_check(const std::function<double(int)>& gamma,
                                      const std::function<int(int)>& w, int p, int horizon) {
    if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
    TractabilityReport rep;
    rep.partial_sums.reserve(static_cast<std::size_t>(horizon));
    double acc = 0.0;
    double last_increment = 0.0;
    for (int j = 1; j <= horizon; ++j) {
        last_increment = gamma(j) * std::pow(static_cast<double>(p), w(j));
        acc += last_increment;
        rep.partial_sums.push_back(acc);
    }
    rep.convergent_looking = last_increment < 1e-9;
    return rep;
}

std::vector<int> suggest_ws(double k, double alpha, int p, int count) {
    if (!(alpha > 1.0) || !(alpha < k)) throw std::invalid_argument("alpha must lie in (1, k)");
    if (count < 1) throw std::invalid_argument("count must be >= 1");
    std::vector<int> ws;
    ws.reserve(static_cast<std::size_t>(count));
    const double logp = std::log(static_cast<double>(p));
    for (int j = 1; j <= count; ++j) {
        ws.push_back(static_cast<int>(std::floor((k - alpha) * std::log(static_cast<double>(j)) / logp)));
    }
    return ws;
}

NStarResult n_star_bound(const WeightSystem& weights, int p, int s, double epsilon, ModulusKind kind,
                         int m_cap) {
    if (!(epsilon > 0.0) || !(epsilon < 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1)");
    NStarResult res;
    for (int m = 1; m <= m_cap; ++m) {
        const BoundReport rep = discrepancy_bound(p, m, s, weights.with_m(m), kind);
        if (rep.total <= epsilon) {
            res.found = true;
            res.m_star = m;
            res.n_star = pow_u64(static_cast<std::uint64_t>(p), m);
            return res;
        }
    }
    return res;  // not reached below the cap; the bound may exceed epsilon for all tried m
}

}  // namespace plr
