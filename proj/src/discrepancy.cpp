#include "plr/discrepancy.hpp"

#include <algorithm>
#include <stdexcept>

#include "plr/errors.hpp"

namespace plr {

double local_discrepancy(const PointSet& ps, const std::vector<double>& t) {
    if (static_cast<int>(t.size()) != ps.s) throw std::invalid_argument("box dimension mismatch");
    for (double tj : t) {
        if (!(tj > 0.0) || tj > 1.0) throw std::invalid_argument("box coordinates must lie in (0, 1]");
    }
    const double big_n = static_cast<double>(ps.size());
    std::uint64_t count = 0;
    for (const auto& row : ps.numerators) {
        bool inside = true;
        for (int j = 0; j < ps.s; ++j) {
            const double xj = static_cast<double>(row[static_cast<std::size_t>(j)]) /
                              static_cast<double>(ps.denominator());
            if (xj >= t[static_cast<std::size_t>(j)]) {
                inside = false;
                break;
            }
        }
        if (inside) ++count;
    }
    double vol = 1.0;
    for (double tj : t) vol *= tj;
    return static_cast<double>(count) / big_n - vol;
}

DiscrepancyResult star_discrepancy_exact(const PointSet& ps, std::uint64_t max_work) {
    const int s = ps.s;
    const std::uint64_t big_n = ps.size();
    const std::uint64_t den = ps.denominator();

    // critical coordinates per dimension: point values plus 1
    std::vector<std::vector<std::uint64_t>> grid(static_cast<std::size_t>(s));
    double boxes = 1.0;
    for (int j = 0; j < s; ++j) {
        auto& gj = grid[static_cast<std::size_t>(j)];
        for (const auto& row : ps.numerators) gj.push_back(row[static_cast<std::size_t>(j)]);
        gj.push_back(den);
        std::sort(gj.begin(), gj.end());
        gj.erase(std::unique(gj.begin(), gj.end()), gj.end());
        boxes *= static_cast<double>(gj.size());
    }
    if (boxes * static_cast<double>(big_n) * static_cast<double>(s) > static_cast<double>(max_work)) {
        throw capacity_error("star discrepancy enumeration exceeds guard");
    }

    DiscrepancyResult result;
    result.witness_box.assign(static_cast<std::size_t>(s), 1.0);
    std::vector<std::size_t> idx(static_cast<std::size_t>(s), 0);
    for (;;) {
        std::uint64_t open = 0;
        std::uint64_t closed = 0;
        double vol = 1.0;
        for (int j = 0; j < s; ++j) {
            vol *= static_cast<double>(grid[static_cast<std::size_t>(j)][idx[static_cast<std::size_t>(j)]]) /
                   static_cast<double>(den);
        }
        for (const auto& row : ps.numerators) {
            bool in_open = true;
            bool in_closed = true;
            for (int j = 0; j < s; ++j) {
                const std::uint64_t tj = grid[static_cast<std::size_t>(j)][idx[static_cast<std::size_t>(j)]];
                const std::uint64_t xj = row[static_cast<std::size_t>(j)];
                if (xj >= tj) in_open = false;
                if (xj > tj) {
                    in_closed = false;
                    break;
                }
            }
            if (in_open) ++open;
            if (in_closed) ++closed;
        }
        const double d_open = vol - static_cast<double>(open) / static_cast<double>(big_n);
        const double d_closed = static_cast<double>(closed) / static_cast<double>(big_n) - vol;
        const double local_max = std::max(d_open, d_closed);
        if (local_max > result.value) {
            result.value = local_max;
            for (int j = 0; j < s; ++j) {
                result.witness_box[static_cast<std::size_t>(j)] =
                    static_cast<double>(grid[static_cast<std::size_t>(j)][idx[static_cast<std::size_t>(j)]]) /
                    static_cast<double>(den);
            }
        }
        int j = s - 1;
        while (j >= 0) {
            if (++idx[static_cast<std::size_t>(j)] < grid[static_cast<std::size_t>(j)].size()) break;
            idx[static_cast<std::size_t>(j)] = 0;
            --j;
        }
        if (j < 0) break;
    }
    return result;
}

DiscrepancyResult weighted_star_discrepancy_exact(const PointSet& ps, const std::vector<double>& gammas,
                                                  std::uint64_t max_work) {
    const int s = ps.s;
    if (static_cast<int>(gammas.size()) < s) throw std::invalid_argument("need a weight per coordinate");
    DiscrepancyResult result;
    result.witness_box.assign(static_cast<std::size_t>(s), 1.0);
    for (unsigned mask = 1; mask < (1u << s); ++mask) {
        DiscrepancyResult::Projection proj;
        proj.gamma_u = 1.0;
        for (int j = 0; j < s; ++j) {
            if (mask & (1u << j)) {
                proj.dims.push_back(j);
                proj.gamma_u *= gammas[static_cast<std::size_t>(j)];
            }
        }
        PointSet sub;
        sub.p = ps.p;
        sub.m = ps.m;
        sub.s = static_cast<int>(proj.dims.size());
        sub.numerators.reserve(ps.numerators.size());
        for (const auto& row : ps.numerators) {  // multiplicity retained
            std::vector<std::uint64_t> r;
            r.reserve(proj.dims.size());
            for (int j : proj.dims) r.push_back(row[static_cast<std::size_t>(j)]);
            sub.numerators.push_back(std::move(r));
        }
        const DiscrepancyResult star = star_discrepancy_exact(sub, max_work);
        proj.star = star.value;
        proj.weighted = proj.gamma_u * star.value;
        if (proj.weighted > result.value) {
            result.value = proj.weighted;
            result.witness_box.assign(static_cast<std::size_t>(s), 1.0);
            for (std::size_t k = 0; k < proj.dims.size(); ++k) {
                result.witness_box[static_cast<std::size_t>(proj.dims[k])] = star.witness_box[k];
            }
        }
        result.projections.push_back(std::move(proj));
    }
    return result;
}

}  // namespace plr
