#ifndef PLR_POINTSET_HPP
#define PLR_POINTSET_HPP

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "plr/generating_vector.hpp"

namespace plr {

/// N x s array of exact point coordinates: point i, coordinate j equals
/// numerators[i][j] / p^m.  Row 0 is always the origin.
struct PointSet {
    int p = 2;
    int m = 1;
    int s = 1;
    std::vector<std::vector<std::uint64_t>> numerators;

    std::uint64_t size() const { return numerators.size(); }
    std::uint64_t denominator() const {
        std::uint64_t d = 1;
        for (int i = 0; i < m; ++i) d *= static_cast<std::uint64_t>(p);
        return d;
    }
    double coordinate(std::uint64_t i, int j) const {
        return static_cast<double>(numerators[i][static_cast<std::size_t>(j)]) /
               static_cast<double>(denominator());
    }
};

std::uint64_t pow_u64(std::uint64_t base, int exp);

/// p^m * phi_m(n(x) g(x) / f(x)) as an integer in [0, p^m).
std::uint64_t phi_m_numerator(std::uint64_t n, const Poly& g, const Modulus& f);

/// phi_m_numerator for every n in [0, p^m), computed by F_p-linearity of the
/// digit map (digitwise addition without carries).  Identical to calling
/// phi_m_numerator point by point.
std::vector<std::uint32_t> phi_column(const Poly& g, const Modulus& f);

PointSet generate_point_set(const GeneratingVector& gvec);

/// wal_h at the grid point numerator / p^m, base-p Walsh function system.
std::complex<double> walsh_value(std::uint64_t h, std::uint64_t numerator, int p, int m);

/// (1/p^m) sum_n prod_j wal_{h_j}(x_n^{(j)}); exactly 1 on the dual
/// (sum_j h_j x^{w_j} g_j = 0 mod f) and 0 otherwise.
double walsh_dual_average(const GeneratingVector& gvec, const std::vector<std::uint64_t>& h);

enum class PointFormat { Fraction, Decimal };

/// One point per line, coordinates separated by a single space; fractions
/// "k/p^m" or fixed-precision decimals.
void write_points(std::ostream& os, const PointSet& ps, PointFormat format);

}  // namespace plr

#endif
