#include "plr/pointset.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace plr {

std::uint64_t pow_u64(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

void validate_weights(const WeightSystem& w) {
    if (w.m < 1) throw std::invalid_argument("weight context degree m must be >= 1");
    if (w.gammas.size() != w.ws.size()) {
        throw std::invalid_argument("gamma and w sequences must have equal length");
    }
    for (std::size_t j = 0; j < w.gammas.size(); ++j) {
        if (!(w.gammas[j] > 0.0) || w.gammas[j] > 1.0) {
            throw std::invalid_argument("weights must lie in (0, 1]");
        }
        if (j > 0 && w.gammas[j] > w.gammas[j - 1]) {
            throw std::invalid_argument("weights must be non-increasing");
        }
        if (w.ws[j] < 0) throw std::invalid_argument("reduction indices must be nonnegative");
        if (j > 0 && w.ws[j] < w.ws[j - 1]) {
            throw std::invalid_argument("reduction indices must be non-decreasing");
        }
    }
}

GeneratingVector make_generating_vector(const Modulus& modulus, const WeightSystem& weights,
                                        std::vector<Poly> reduced) {
    validate_weights(weights);
    if (weights.m != modulus.m) throw std::invalid_argument("weight system degree does not match modulus");
    if (reduced.size() > weights.gammas.size()) {
        throw std::invalid_argument("more components than weights");
    }
    const int m = modulus.m;
    std::vector<Poly> shifted;
    shifted.reserve(reduced.size());
    for (std::size_t j = 0; j < reduced.size(); ++j) {
        const Poly& g = reduced[j];
        const int w = weights.ws[j];
        if (g.p != modulus.p()) throw std::invalid_argument("component field mismatch");
        if (w >= m) {
            if (!g.is_one()) throw std::invalid_argument("component with w_j >= m must be 1");
        } else {
            if (g.degree() >= m - w) {
                throw std::invalid_argument("component degree must be < m - w_j");
            }
            if (g.is_zero() || !poly_gcd(g, modulus.f).is_one()) {
                throw std::invalid_argument("component must be coprime to the modulus");
            }
        }
        shifted.push_back(poly_mul(x_power(g.p, w), g));
    }
    return GeneratingVector{modulus, weights, std::move(reduced), std::move(shifted)};
}

std::uint64_t phi_m_numerator(std::uint64_t n, const Poly& g, const Modulus& f) {
    const int p = f.p();
    const int m = f.m;
    const std::vector<int> t = laurent_digits(poly_mul(poly_from_index(n, p), g), f.f, m);
    std::uint64_t num = 0;
    for (int l = 1; l <= m; ++l) {
        num = num * static_cast<std::uint64_t>(p) + static_cast<std::uint64_t>(t[static_cast<std::size_t>(l - 1)]);
    }
    return num;
}

namespace {

// Depth-first fill over the base-p digits of n, accumulating the phi digits
// of n(x) g / f as carry-free digit sums of the x^r g columns.
void fill_column(int r, const std::vector<std::vector<int>>& base_digits, std::vector<int>& acc,
                 std::uint64_t offset, int p, int m, std::vector<std::uint32_t>& out) {
    if (r < 0) {
        std::uint32_t num = 0;
        for (int i = m - 1; i >= 0; --i) {
            num = num * static_cast<std::uint32_t>(p) + static_cast<std::uint32_t>(acc[static_cast<std::size_t>(i)]);
        }
        out[offset] = num;
        return;
    }
    const std::uint64_t stride = pow_u64(static_cast<std::uint64_t>(p), r);
    const auto& row = base_digits[static_cast<std::size_t>(r)];
    for (int c = 0; c < p; ++c) {
        fill_column(r - 1, base_digits, acc, offset + static_cast<std::uint64_t>(c) * stride, p, m, out);
        if (c + 1 < p) {
            for (int i = 0; i < m; ++i) {
                acc[static_cast<std::size_t>(i)] = (acc[static_cast<std::size_t>(i)] + row[static_cast<std::size_t>(i)]) % p;
            }
        }
    }
    // undo the p-1 additions
    for (int i = 0; i < m; ++i) {
        auto& a = acc[static_cast<std::size_t>(i)];
        a = (a + row[static_cast<std::size_t>(i)]) % p;
    }
}

}  // namespace

std::vector<std::uint32_t> phi_column(const Poly& g, const Modulus& f) {
    const int p = f.p();
    const int m = f.m;
    const std::uint64_t n_points = pow_u64(static_cast<std::uint64_t>(p), m);
    // digit vectors (ascending powers of p^{-1} reversed: index i holds the
    // digit multiplying p^i of the numerator) for x^r g / f
    std::vector<std::vector<int>> base_digits(static_cast<std::size_t>(m));
    for (int r = 0; r < m; ++r) {
        const std::vector<int> t = laurent_digits(poly_mul(x_power(p, r), g), f.f, m);
        std::vector<int> d(static_cast<std::size_t>(m));
        for (int l = 1; l <= m; ++l) d[static_cast<std::size_t>(m - l)] = t[static_cast<std::size_t>(l - 1)];
        base_digits[static_cast<std::size_t>(r)] = std::move(d);
    }
    std::vector<std::uint32_t> out(n_points, 0);
    std::vector<int> acc(static_cast<std::size_t>(m), 0);
    fill_column(m - 1, base_digits, acc, 0, p, m, out);
    return out;
}

PointSet generate_point_set(const GeneratingVector& gvec) {
    const int p = gvec.p();
    const int m = gvec.m();
    const int s = gvec.s();
    const std::uint64_t n_points = pow_u64(static_cast<std::uint64_t>(p), m);
    PointSet ps;
    ps.p = p;
    ps.m = m;
    ps.s = s;
    ps.numerators.assign(n_points, std::vector<std::uint64_t>(static_cast<std::size_t>(s), 0));
    for (int j = 0; j < s; ++j) {
        const std::vector<std::uint32_t> col = phi_column(gvec.shifted[static_cast<std::size_t>(j)], gvec.modulus);
        for (std::uint64_t n = 0; n < n_points; ++n) {
            ps.numerators[n][static_cast<std::size_t>(j)] = col[n];
        }
    }
    return ps;
}

std::complex<double> walsh_value(std::uint64_t h, std::uint64_t numerator, int p, int m) {
    // x_i is the i-th base-p digit of numerator/p^m counted from the most
    // significant end; h_i the i-th digit of h from the least significant end.
    int exponent = 0;
    std::uint64_t scale = pow_u64(static_cast<std::uint64_t>(p), m - 1);
    for (int i = 0; i < m && h > 0; ++i) {
        const int hi = static_cast<int>(h % static_cast<std::uint64_t>(p));
        const int xi = static_cast<int>(numerator / scale % static_cast<std::uint64_t>(p));
        exponent = (exponent + hi * xi) % p;
        h /= static_cast<std::uint64_t>(p);
        scale /= static_cast<std::uint64_t>(p);
    }
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(exponent) / static_cast<double>(p);
    return {std::cos(angle), std::sin(angle)};
}

double walsh_dual_average(const GeneratingVector& gvec, const std::vector<std::uint64_t>& h) {
    if (static_cast<int>(h.size()) != gvec.s()) {
        throw std::invalid_argument("frequency vector length must equal the dimension");
    }
    const PointSet ps = generate_point_set(gvec);
    const std::uint64_t n_points = ps.size();
    std::complex<double> acc{0.0, 0.0};
    for (std::uint64_t n = 0; n < n_points; ++n) {
        std::complex<double> term{1.0, 0.0};
        for (int j = 0; j < gvec.s(); ++j) {
            term *= walsh_value(h[static_cast<std::size_t>(j)], ps.numerators[n][static_cast<std::size_t>(j)],
                                ps.p, ps.m);
        }
        acc += term;
    }
    return acc.real() / static_cast<double>(n_points);
}

void write_points(std::ostream& os, const PointSet& ps, PointFormat format) {
    const std::uint64_t den = ps.denominator();
    const int digits = static_cast<int>(static_cast<double>(ps.m) * std::log10(static_cast<double>(ps.p))) + 2;
    for (const auto& row : ps.numerators) {
        for (int j = 0; j < ps.s; ++j) {
            if (j > 0) os << ' ';
            if (format == PointFormat::Fraction) {
                os << row[static_cast<std::size_t>(j)] << '/' << den;
            } else {
                char buf[64];
                std::snprintf(buf, sizeof(buf), "%.*f", digits,
                              static_cast<double>(row[static_cast<std::size_t>(j)]) / static_cast<double>(den));
                os << buf;
            }
        }
        os << '\n';
    }
}

}  // namespace plr
