#ifndef PLR_DISCREPANCY_HPP
#define PLR_DISCREPANCY_HPP

#include <cstdint>
#include <vector>

#include "plr/pointset.hpp"

namespace plr {

struct DiscrepancyResult {
    double value = 0.0;
    std::vector<double> witness_box;  // box where the extremum is attained / approached

    struct Projection {
        std::vector<int> dims;  // 0-based coordinate indices of the subset u
        double gamma_u = 1.0;
        double star = 0.0;      // unweighted star discrepancy of the projection
        double weighted = 0.0;  // gamma_u * star
    };
    std::vector<Projection> projections;  // filled by the weighted variant
};

/// Signed local discrepancy (1/N) #(points in [0,t)) - prod t_j.
double local_discrepancy(const PointSet& ps, const std::vector<double>& t);

/// Exact sup over anchored boxes via critical-box enumeration; both the
/// half-open and the closed point count are taken per grid node so open
/// limits of the supremum are captured.
DiscrepancyResult star_discrepancy_exact(const PointSet& ps, std::uint64_t max_work = (1ull << 28));

/// max over nonempty coordinate subsets u of gamma_u times the star
/// discrepancy of the u-projection (projected points keep multiplicity).
DiscrepancyResult weighted_star_discrepancy_exact(const PointSet& ps, const std::vector<double>& gammas,
                                                  std::uint64_t max_work = (1ull << 28));

}  // namespace plr

#endif
