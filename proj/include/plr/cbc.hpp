#ifndef PLR_CBC_HPP
#define PLR_CBC_HPP

#include <cstdint>
#include <vector>

#include "plr/generating_vector.hpp"

namespace plr {

/// Per-dimension record of the construction.
struct StepTrace {
    Poly chosen;
    double r_value = 0.0;
    std::size_t search_size = 0;
    std::size_t candidate_evals = 0;
    std::size_t psi_applications = 0;
};

struct ConstructionTrace {
    std::vector<StepTrace> steps;

    std::size_t total_psi_applications() const {
        std::size_t n = 0;
        for (const auto& st : steps) n += st.psi_applications;
        return n;
    }
};

struct CbcResult {
    GeneratingVector vector;
    ConstructionTrace trace;
};

/// Reduced search set for one component, ascending poly_index order:
/// all g with deg(g) < m - w coprime to f when w < m, the singleton {1}
/// otherwise.
std::vector<Poly> search_set(int p, int m, int w, const Modulus& f);

/// Reduced CBC construction: g_1 = 1, then each further component is the
/// argmin of the quality measure over its search set, re-evaluated per
/// candidate.  Ties break towards the smallest poly_index.
CbcResult cbc_reduced_naive(const Modulus& modulus, const WeightSystem& weights, int s,
                            std::uint64_t max_work = (1ull << 34));

/// Reduced fast CBC construction for f = x^m: maintains the eta vector
/// incrementally, folds it into p^{m-w_d} entries per step and scores all
/// candidates through one Omega application.  Produces the identical
/// vector and per-step quality values as the naive construction.
CbcResult cbc_reduced_fast(const Modulus& modulus, const WeightSystem& weights, int s,
                           std::uint64_t max_work = (1ull << 34));

/// Omega^{(l)} application: for every candidate g in the reduced search set
/// over x^l (ascending order), the psi-weighted inner product with the folded
/// vector of length p^l.  The psi kernel is the one of the p^{l+w} grid.
std::vector<double> omega_multiply(int l, int w, const std::vector<double>& folded, int p);
std::vector<double> omega_multiply(int l, int w, const std::vector<double>& folded, int p,
                                   const std::vector<double>& psi_tab, std::size_t* psi_count);

}  // namespace plr

#endif
