#include "plr/quality.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "plr/errors.hpp"
#include "plr/pointset.hpp"

namespace plr {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<std::complex<double>> unit_roots(int p) {
    std::vector<std::complex<double>> w(static_cast<std::size_t>(p));
    for (int k = 0; k < p; ++k) {
        const double a = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(p);
        w[static_cast<std::size_t>(k)] = {std::cos(a), std::sin(a)};
    }
    return w;
}

// digit-level residue arithmetic mod a monic f, used for the bulk tables
struct ResidueDigits {
    int p;
    int m;
    std::vector<int> f;            // coefficients of f, size m+1, monic
    std::vector<signed char> dig;  // p^m x m digit matrix of all residues

    ResidueDigits(const Poly& modulus) : p(modulus.p), m(modulus.degree()) {
        f.resize(static_cast<std::size_t>(m) + 1);
        for (int i = 0; i <= m; ++i) f[static_cast<std::size_t>(i)] = modulus.coeff(i);
        const std::uint64_t count = pow_u64(static_cast<std::uint64_t>(p), m);
        dig.resize(count * static_cast<std::uint64_t>(m));
        for (std::uint64_t v = 0; v < count; ++v) {
            std::uint64_t k = v;
            for (int i = 0; i < m; ++i) {
                dig[v * static_cast<std::uint64_t>(m) + static_cast<std::uint64_t>(i)] =
                    static_cast<signed char>(k % static_cast<std::uint64_t>(p));
                k /= static_cast<std::uint64_t>(p);
            }
        }
    }

    // leading coefficient (at x^{m-1}) of (a * b) mod f for residue indices a, b
    int mul_lead(std::uint64_t a, std::uint64_t b, std::vector<int>& buf) const {
        const signed char* da = &dig[a * static_cast<std::uint64_t>(m)];
        const signed char* db = &dig[b * static_cast<std::uint64_t>(m)];
        buf.assign(static_cast<std::size_t>(2 * m - 1), 0);
        for (int i = 0; i < m; ++i) {
            if (da[i] == 0) continue;
            for (int j = 0; j < m; ++j) {
                buf[static_cast<std::size_t>(i + j)] += da[i] * db[j];
            }
        }
        for (auto& c : buf) c %= p;
        for (int d = 2 * m - 2; d >= m; --d) {
            const int q = buf[static_cast<std::size_t>(d)] % p;  // f is monic
            if (q == 0) continue;
            for (int i = 0; i <= m; ++i) {
                auto& c = buf[static_cast<std::size_t>(d - m + i)];
                c = ((c - q * f[static_cast<std::size_t>(i)]) % p + p) % p;
            }
        }
        return ((buf[static_cast<std::size_t>(m - 1)] % p) + p) % p;
    }
};

std::uint64_t add_index_digitwise(std::uint64_t a, std::uint64_t b, int p) {
    std::uint64_t r = 0;
    std::uint64_t scale = 1;
    const auto up = static_cast<std::uint64_t>(p);
    while (a > 0 || b > 0) {
        r += (a % up + b % up) % up * scale;
        a /= up;
        b /= up;
        scale *= up;
    }
    return r;
}

// cos-weighted kernel row: K[d] = (1/p) sum_{c=1}^{p-1} cos(2 pi c d / p) / sin^2(pi c / p)
std::vector<double> psi_kernel_row(int p) {
    std::vector<double> K(static_cast<std::size_t>(p), 0.0);
    for (int d = 0; d < p; ++d) {
        double acc = 0.0;
        for (int c = 1; c < p; ++c) {
            const double s = std::sin(kPi * static_cast<double>(c) / static_cast<double>(p));
            acc += std::cos(2.0 * kPi * static_cast<double>(c) * static_cast<double>(d) / static_cast<double>(p)) /
                   (s * s);
        }
        K[static_cast<std::size_t>(d)] = acc / static_cast<double>(p);
    }
    return K;
}

std::vector<double> r_plain_table(int p, int m) {
    const std::uint64_t count = pow_u64(static_cast<std::uint64_t>(p), m);
    std::vector<double> r(count, 0.0);
    for (std::uint64_t h = 1; h < count; ++h) {
        r[h] = r_plain(poly_from_index(h, p));
    }
    return r;
}

}  // namespace

double r_plain(const Poly& h) {
    if (h.is_zero()) throw std::invalid_argument("r_p(h) requires h != 0");
    const int p = h.p;
    const int a = h.degree();
    const double s = std::sin(kPi * static_cast<double>(h.leading()) / static_cast<double>(p));
    return 1.0 / (std::pow(static_cast<double>(p), a + 1) * s * s);
}

double r_weight(const Poly& h, double gamma) {
    if (h.is_zero()) return 1.0 + gamma;
    return gamma * r_plain(h);
}

double r_sum_multiples_enum(const Poly& a, int m) {
    if (a.is_zero() || !a.is_monic()) throw std::invalid_argument("Lemma sum requires a monic polynomial");
    const int p = a.p;
    const std::uint64_t count = pow_u64(static_cast<std::uint64_t>(p), m);
    double acc = 0.0;
    for (std::uint64_t k = 1; k < count; ++k) {
        const Poly h = poly_from_index(k, p);
        if (poly_mod(h, a).is_zero()) acc += r_plain(h);
    }
    return acc;
}

double r_sum_multiples_closed(const Poly& a, int m) {
    if (a.is_zero() || !a.is_monic()) throw std::invalid_argument("Lemma sum requires a monic polynomial");
    const int p = a.p;
    const int da = a.degree();
    if (da >= m) return 0.0;
    const double pd = static_cast<double>(p);
    return static_cast<double>(m - da) * (pd * pd - 1.0) / (3.0 * pd) * std::pow(pd, -da);
}

double r_sum_multiples(const Poly& a, int m) {
    const double closed = r_sum_multiples_closed(a, m);
    const double byenum = r_sum_multiples_enum(a, m);
    if (std::abs(closed - byenum) > 1e-12) {
        throw std::logic_error("closed form and enumeration disagree in r_sum_multiples");
    }
    return closed;
}

double r_direct(const GeneratingVector& gvec, int d, std::uint64_t max_terms) {
    if (d < 1 || d > gvec.s()) throw std::invalid_argument("dimension out of range");
    const int p = gvec.p();
    const int m = gvec.m();
    const std::uint64_t count = pow_u64(static_cast<std::uint64_t>(p), m);
    double total_size = 1.0;
    for (int i = 0; i < d; ++i) total_size *= static_cast<double>(count);
    if (total_size > static_cast<double>(max_terms)) {
        throw capacity_error("dual-space enumeration size exceeds guard");
    }

    // per component: residue h * q_i mod f and weight r_p(h, gamma_i), indexed by h
    std::vector<std::vector<std::uint64_t>> res(static_cast<std::size_t>(d));
    std::vector<std::vector<double>> wt(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        auto& ri = res[static_cast<std::size_t>(i)];
        auto& wi = wt[static_cast<std::size_t>(i)];
        ri.resize(count);
        wi.resize(count);
        const Poly& q = gvec.shifted[static_cast<std::size_t>(i)];
        const double gamma = gvec.weights.gamma(i + 1);
        for (std::uint64_t h = 0; h < count; ++h) {
            const Poly hp = poly_from_index(h, p);
            ri[h] = poly_index(poly_mul_mod(hp, q, gvec.modulus.f));
            wi[h] = r_weight(hp, gamma);
        }
    }

    // odometer over (h_1, ..., h_d), ascending index order
    std::vector<std::uint64_t> h(static_cast<std::size_t>(d), 0);
    double acc = 0.0;
    for (;;) {
        bool all_zero = true;
        std::uint64_t residue = 0;
        double prod = 1.0;
        for (int i = 0; i < d; ++i) {
            const std::uint64_t hi = h[static_cast<std::size_t>(i)];
            if (hi != 0) all_zero = false;
            residue = add_index_digitwise(residue, res[static_cast<std::size_t>(i)][hi], p);
            prod *= wt[static_cast<std::size_t>(i)][hi];
        }
        if (!all_zero && residue == 0) acc += prod;
        int i = d - 1;
        while (i >= 0) {
            if (++h[static_cast<std::size_t>(i)] < count) break;
            h[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
    }
    return acc;
}

double r_character(const GeneratingVector& gvec, int d, double* imag_residue, std::uint64_t max_terms) {
    if (d < 1 || d > gvec.s()) throw std::invalid_argument("dimension out of range");
    const int p = gvec.p();
    const int m = gvec.m();
    const std::uint64_t count = pow_u64(static_cast<std::uint64_t>(p), m);
    if (static_cast<double>(count) * static_cast<double>(count) > static_cast<double>(max_terms)) {
        throw capacity_error("character-sum table size exceeds guard");
    }

    const auto omega = unit_roots(p);
    const std::vector<double> rp = r_plain_table(p, m);
    const ResidueDigits ring(gvec.modulus.f);

    // residues h * q_i mod f per component
    std::vector<std::vector<std::uint64_t>> res(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        auto& ri = res[static_cast<std::size_t>(i)];
        ri.resize(count);
        const Poly& q = gvec.shifted[static_cast<std::size_t>(i)];
        for (std::uint64_t h = 0; h < count; ++h) {
            ri[h] = poly_index(poly_mul_mod(poly_from_index(h, p), q, gvec.modulus.f));
        }
    }

    // residuum of (v u / f) for all residue pairs: the x^{m-1} coefficient of v u mod f
    std::vector<std::uint8_t> lead(count * count);
    {
        std::vector<int> buf;
        for (std::uint64_t v = 0; v < count; ++v) {
            for (std::uint64_t u = 0; u < count; ++u) {
                lead[v * count + u] = static_cast<std::uint8_t>(ring.mul_lead(v, u, buf));
            }
        }
    }

    double prod_gamma = 1.0;
    for (int i = 1; i <= d; ++i) prod_gamma *= 1.0 + gvec.weights.gamma(i);

    std::complex<double> acc{0.0, 0.0};
    for (std::uint64_t v = 0; v < count; ++v) {
        std::complex<double> prod{1.0, 0.0};
        for (int i = 0; i < d; ++i) {
            std::complex<double> inner{0.0, 0.0};
            const auto& ri = res[static_cast<std::size_t>(i)];
            for (std::uint64_t h = 1; h < count; ++h) {
                inner += rp[h] * omega[lead[v * count + ri[h]]];
            }
            const double gamma = gvec.weights.gamma(i + 1);
            prod *= std::complex<double>{1.0 + gamma, 0.0} + gamma * inner;
        }
        acc += prod;
    }
    acc = acc / static_cast<double>(count) - prod_gamma;
    if (imag_residue != nullptr) *imag_residue = std::abs(acc.imag());
    return acc.real();
}

double psi_value(std::uint64_t numerator, int p, int m) {
    const std::vector<double> K = psi_kernel_row(p);
    double acc = 0.0;
    std::uint64_t scale = pow_u64(static_cast<std::uint64_t>(p), m - 1);
    for (int a = 0; a < m; ++a) {
        const int digit = static_cast<int>(numerator / scale % static_cast<std::uint64_t>(p));
        acc += K[static_cast<std::size_t>(digit)];
        if (digit != 0) break;  // deeper terms require a zero digit prefix
        scale /= static_cast<std::uint64_t>(p);
    }
    return acc;
}

std::vector<double> psi_table(int p, int m) {
    const std::vector<double> K = psi_kernel_row(p);
    const std::uint64_t count = pow_u64(static_cast<std::uint64_t>(p), m);
    std::vector<double> tab(count);
    for (std::uint64_t num = 0; num < count; ++num) {
        double acc = 0.0;
        std::uint64_t scale = count / static_cast<std::uint64_t>(p);
        for (int a = 0; a < m; ++a) {
            const int digit = static_cast<int>(num / scale % static_cast<std::uint64_t>(p));
            acc += K[static_cast<std::size_t>(digit)];
            if (digit != 0) break;
            scale /= static_cast<std::uint64_t>(p);
        }
        tab[num] = acc;
    }
    return tab;
}

double r_kernel(const GeneratingVector& gvec, int d) {
    if (d < 1 || d > gvec.s()) throw std::invalid_argument("dimension out of range");
    const int p = gvec.p();
    const int m = gvec.m();
    const std::uint64_t count = pow_u64(static_cast<std::uint64_t>(p), m);
    const std::vector<double> psi = psi_table(p, m);
    std::vector<std::vector<std::uint32_t>> cols(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        cols[static_cast<std::size_t>(i)] = phi_column(gvec.shifted[static_cast<std::size_t>(i)], gvec.modulus);
    }
    double prod_gamma = 1.0;
    for (int i = 1; i <= d; ++i) prod_gamma *= 1.0 + gvec.weights.gamma(i);
    double acc = 0.0;
    for (std::uint64_t n = 0; n < count; ++n) {
        double prod = 1.0;
        for (int i = 0; i < d; ++i) {
            const double gamma = gvec.weights.gamma(i + 1);
            prod *= 1.0 + gamma + gamma * psi[cols[static_cast<std::size_t>(i)][n]];
        }
        acc += prod;
    }
    return acc / static_cast<double>(count) - prod_gamma;
}

double r_walsh(const GeneratingVector& gvec, int d) {
    if (gvec.modulus.kind != ModulusKind::MonomialXm) {
        throw std::invalid_argument("the Walsh/eta form is only available for the modulus x^m");
    }
    return r_kernel(gvec, d);
}

double char_orthogonality(const Poly& g, const Poly& f, double* imag_residue) {
    if (f.is_zero() || !f.is_monic()) throw std::invalid_argument("modulus must be monic of degree m");
    const int p = g.p;
    const int m = f.degree();
    const std::uint64_t count = pow_u64(static_cast<std::uint64_t>(p), m);
    const auto omega = unit_roots(p);
    const Poly gr = poly_mod(g, f);
    std::complex<double> acc{0.0, 0.0};
    for (std::uint64_t v = 0; v < count; ++v) {
        const Poly prod = poly_mul_mod(poly_from_index(v, p), gr, f);
        acc += omega[static_cast<std::size_t>(prod.coeff(m - 1))];
    }
    if (imag_residue != nullptr) *imag_residue = std::abs(acc.imag());
    return acc.real();
}

double y_sum(const Poly& v, int w, int m, double* imag_residue) {
    const int p = v.p;
    const std::uint64_t count = pow_u64(static_cast<std::uint64_t>(p), m);
    const Poly f = x_power(p, m);
    const auto omega = unit_roots(p);
    const Poly xw = x_power(p, w);

    std::vector<Poly> search;
    if (w >= m) {
        search.push_back(one_poly(p));
    } else {
        const std::uint64_t reduced = pow_u64(static_cast<std::uint64_t>(p), m - w);
        for (std::uint64_t k = 1; k < reduced; ++k) {
            const Poly g = poly_from_index(k, p);
            if (g.coeff(0) != 0) search.push_back(g);  // coprime to x^m
        }
    }

    std::complex<double> acc{0.0, 0.0};
    for (const Poly& g : search) {
        const Poly vg = poly_mul(poly_mul(v, xw), g);
        for (std::uint64_t h = 1; h < count; ++h) {
            const Poly hp = poly_from_index(h, p);
            const Poly prod = poly_mod(poly_mul(vg, hp), f);
            acc += r_plain(hp) * omega[static_cast<std::size_t>(prod.coeff(m - 1))];
        }
    }
    if (imag_residue != nullptr) *imag_residue = std::abs(acc.imag());
    return acc.real();
}

double y_average(int w, int p, int m) {
    const std::uint64_t count = pow_u64(static_cast<std::uint64_t>(p), m);
    std::uint64_t set_size;
    if (w >= m) {
        set_size = 1;
    } else {
        set_size = pow_u64(static_cast<std::uint64_t>(p), m - w - 1) * static_cast<std::uint64_t>(p - 1);
    }
    double acc = 0.0;
    for (std::uint64_t v = 0; v < count; ++v) {
        acc += std::abs(y_sum(poly_from_index(v, p), w, m));
    }
    return acc / static_cast<double>(set_size);
}

}  // namespace plr
