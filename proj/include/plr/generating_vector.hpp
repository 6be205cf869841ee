#ifndef PLR_GENERATING_VECTOR_HPP
#define PLR_GENERATING_VECTOR_HPP

#include <vector>

#include "plr/fieldpoly.hpp"

namespace plr {

/// Product weights gamma_j together with the reduction indices w_j that
/// shrink the search set of the j-th component.
struct WeightSystem {
    std::vector<double> gammas;  // non-increasing, each in (0, 1]
    std::vector<int> ws;         // non-decreasing, nonnegative
    int m = 1;                   // context degree of the modulus

    int dims() const { return static_cast<int>(gammas.size()); }
    double gamma(int j) const { return gammas[static_cast<std::size_t>(j - 1)]; }  // 1-based
    int w(int j) const { return ws[static_cast<std::size_t>(j - 1)]; }             // 1-based

    /// Last index j with w_j < m; 0 if there is none.
    int t() const {
        int last = 0;
        for (int j = 1; j <= static_cast<int>(ws.size()); ++j) {
            if (w(j) < m) last = j;
        }
        return last;
    }

    /// Gamma = sum gamma_j / (1 + gamma_j), used in Joe's bound.
    double big_gamma() const {
        double g = 0.0;
        for (double x : gammas) g += x / (1.0 + x);
        return g;
    }

    WeightSystem with_m(int new_m) const { return WeightSystem{gammas, ws, new_m}; }
};

/// Throws std::invalid_argument when the monotonicity or range invariants fail.
void validate_weights(const WeightSystem& w);

/// Reduced generating vector: components g_j from the reduced search sets,
/// together with the shifted polynomials x^{w_j} g_j that actually generate
/// the point set.
struct GeneratingVector {
    Modulus modulus;
    WeightSystem weights;
    std::vector<Poly> reduced;  // g_j
    std::vector<Poly> shifted;  // x^{w_j} g_j, not reduced mod f

    int p() const { return modulus.p(); }
    int m() const { return modulus.m; }
    int s() const { return static_cast<int>(reduced.size()); }
};

/// Builds the shifted components and checks membership in the reduced
/// search sets (deg g_j < m - w_j and gcd(g_j, f) = 1 when w_j < m,
/// g_j = 1 otherwise).
GeneratingVector make_generating_vector(const Modulus& modulus, const WeightSystem& weights,
                                        std::vector<Poly> reduced);

}  // namespace plr

#endif
