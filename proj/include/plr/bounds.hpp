#ifndef PLR_BOUNDS_HPP
#define PLR_BOUNDS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "plr/generating_vector.hpp"

namespace plr {

/// Discrepancy bound split into Joe's subset-sum term and the quality
/// product term.
struct BoundReport {
    double joe_term = 0.0;
    double product_term = 0.0;
    double total = 0.0;
    ModulusKind kind = ModulusKind::MonomialXm;
    std::vector<std::string> hypothesis_flags;
};

/// p^{-m} prod_{i<=d}(1 + gamma_i + gamma_i c p^{min(w_i,m)} m k), with
/// (c, k) = (2, (p^2-1)/(3p)) for x^m and (1, (p+1)/3) for irreducible f.
double theorem_bound(const WeightSystem& weights, int p, int m, int d, ModulusKind kind);

struct JoeSum {
    double exact = 0.0;  // prod(1+gamma_i) - prod(1+gamma_i(1-1/N))
    double upper = 0.0;  // max(1, Gamma) e^{sum gamma} / N
};
JoeSum joe_sum(const std::vector<double>& gammas, double big_n);

/// Joe term plus the theorem product term at full dimension s.
BoundReport discrepancy_bound(int p, int m, int s, const WeightSystem& weights, ModulusKind kind);

struct TractabilityReport {
    std::vector<double> partial_sums;  // partial sums of gamma_j p^{w_j}
    bool convergent_looking = false;
};

/// Numerical evidence for sum gamma_j p^{w_j} < infinity: verdict is
/// "convergent-looking" once the tail increments fall below 1e-9.
TractabilityReport tractability_check(const std::function<double(int)>& gamma,
                                      const std::function<int(int)>& w, int p, int horizon);

/// w_j = floor((k - alpha) log_p j), the reduction suggestion for weights
/// gamma_j = j^{-k} with 1 < alpha < k.
std::vector<int> suggest_ws(double k, double alpha, int p, int count);

struct NStarResult {
    bool found = false;
    int m_star = 0;
    std::uint64_t n_star = 0;
};

/// Smallest m with discrepancy_bound <= epsilon (an upper estimate of the
/// inverse discrepancy; inverts the bound, not the true discrepancy).
NStarResult n_star_bound(const WeightSystem& weights, int p, int s, double epsilon,
                         ModulusKind kind = ModulusKind::MonomialXm, int m_cap = 60);

}  // namespace plr

#endif
