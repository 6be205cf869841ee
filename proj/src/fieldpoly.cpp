#include "plr/fieldpoly.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace plr {

namespace {

void check_same_p(const Poly& a, const Poly& b) {
    if (a.p != b.p) {
        throw std::invalid_argument("polynomials live over different prime fields (p=" +
                                    std::to_string(a.p) + " vs p=" + std::to_string(b.p) + ")");
    }
}

int field_inverse(int a, int p) {
    a %= p;
    for (int x = 1; x < p; ++x) {
        if (a * x % p == 1) return x;
    }
    throw std::invalid_argument("no inverse of 0 in F_p");
}

void strip(std::vector<int>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

bool is_prime_int(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

Poly make_poly(int p, std::vector<int> coeffs) {
    if (!is_prime_int(p)) throw std::invalid_argument("p must be prime");
    if (static_cast<long long>(p) * p > std::numeric_limits<int>::max()) {
        throw std::invalid_argument("p too large for native coefficient arithmetic");
    }
    for (int c : coeffs) {
        if (c < 0 || c >= p) throw std::invalid_argument("coefficient out of range [0, p)");
    }
    strip(coeffs);
    return Poly{p, std::move(coeffs)};
}

Poly zero_poly(int p) { return make_poly(p, {}); }

Poly one_poly(int p) { return make_poly(p, {1}); }

Poly x_power(int p, int e) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    std::vector<int> c(static_cast<std::size_t>(e) + 1, 0);
    c.back() = 1;
    return make_poly(p, std::move(c));
}

Poly poly_from_index(std::uint64_t k, int p) {
    if (!is_prime_int(p)) throw std::invalid_argument("p must be prime");
    std::vector<int> c;
    const auto up = static_cast<std::uint64_t>(p);
    while (k > 0) {
        c.push_back(static_cast<int>(k % up));
        k /= up;
    }
    return Poly{p, std::move(c)};
}

std::uint64_t poly_index(const Poly& a) {
    std::uint64_t k = 0;
    const auto up = static_cast<std::uint64_t>(a.p);
    for (auto it = a.coeffs.rbegin(); it != a.coeffs.rend(); ++it) {
        if (k > (std::numeric_limits<std::uint64_t>::max() - static_cast<std::uint64_t>(*it)) / up) {
            throw std::overflow_error("poly_index overflows 64 bits");
        }
        k = k * up + static_cast<std::uint64_t>(*it);
    }
    return k;
}

Poly poly_add(const Poly& a, const Poly& b) {
    check_same_p(a, b);
    std::vector<int> c(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = (a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i))) % a.p;
    }
    strip(c);
    return Poly{a.p, std::move(c)};
}

Poly poly_sub(const Poly& a, const Poly& b) {
    check_same_p(a, b);
    std::vector<int> c(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = (a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i)) % a.p + a.p) % a.p;
    }
    strip(c);
    return Poly{a.p, std::move(c)};
}

Poly poly_mul(const Poly& a, const Poly& b) {
    check_same_p(a, b);
    if (a.is_zero() || b.is_zero()) return Poly{a.p, {}};
    std::vector<int> c(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
            c[i + j] = (c[i + j] + a.coeffs[i] * b.coeffs[j]) % a.p;
        }
    }
    strip(c);
    return Poly{a.p, std::move(c)};
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    check_same_p(a, b);
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    const int p = a.p;
    if (a.degree() < b.degree()) return {Poly{p, {}}, a};
    const int lead_inv = field_inverse(b.leading(), p);
    std::vector<int> rem = a.coeffs;
    std::vector<int> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1, 0);
    for (int d = a.degree(); d >= b.degree(); --d) {
        const int c = rem[static_cast<std::size_t>(d)];
        if (c == 0) continue;
        const int q = c * lead_inv % p;
        quot[static_cast<std::size_t>(d - b.degree())] = q;
        for (int i = 0; i <= b.degree(); ++i) {
            auto& r = rem[static_cast<std::size_t>(d - b.degree() + i)];
            r = ((r - q * b.coeffs[static_cast<std::size_t>(i)]) % p + p) % p;
        }
    }
    strip(rem);
    strip(quot);
    return {Poly{p, std::move(quot)}, Poly{p, std::move(rem)}};
}

Poly poly_mod(const Poly& a, const Poly& f) { return poly_divmod(a, f).second; }

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& f) {
    check_same_p(a, f);
    return poly_mod(poly_mul(a, b), f);
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    check_same_p(a, b);
    if (a.is_zero() && b.is_zero()) {
        throw std::invalid_argument("gcd(0, 0) is undefined");
    }
    Poly u = a;
    Poly v = b;
    while (!v.is_zero()) {
        Poly r = poly_mod(u, v);
        u = std::move(v);
        v = std::move(r);
    }
    // normalize monic
    const int inv = field_inverse(u.leading(), u.p);
    for (auto& c : u.coeffs) c = c * inv % u.p;
    return u;
}

bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) throw std::invalid_argument("irreducibility is defined for degree >= 1");
    const int p = f.p;
    const int m = f.degree();
    for (int d = 1; 2 * d <= m; ++d) {
        std::uint64_t base = 1;
        for (int i = 0; i < d; ++i) base *= static_cast<std::uint64_t>(p);
        for (std::uint64_t j = 0; j < base; ++j) {
            const Poly cand = poly_from_index(base + j, p);  // monic of degree d
            if (poly_mod(f, cand).is_zero()) return false;
        }
    }
    return true;
}

Poly smallest_irreducible(int p, int m) {
    if (m < 1) throw std::invalid_argument("degree must be >= 1");
    std::uint64_t base = 1;
    for (int i = 0; i < m; ++i) base *= static_cast<std::uint64_t>(p);
    for (std::uint64_t j = 0; j < base; ++j) {
        Poly cand = poly_from_index(base + j, p);  // monic of degree m
        if (is_irreducible(cand)) return cand;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

std::vector<int> laurent_digits(const Poly& g, const Poly& f, int m) {
    if (f.is_zero()) throw std::invalid_argument("Laurent expansion requires f != 0");
    if (m < 0) throw std::invalid_argument("digit count must be nonnegative");
    // g/f = q x^{-m} + (r/f) x^{-m} with g x^m = q f + r, so the first m
    // fractional digits of g/f are the coefficients of q at x^{m-1}..x^0.
    const Poly q = poly_divmod(poly_mul(g, x_power(g.p, m)), f).first;
    std::vector<int> t(static_cast<std::size_t>(m));
    for (int l = 1; l <= m; ++l) {
        t[static_cast<std::size_t>(l - 1)] = q.coeff(m - l);
    }
    return t;
}

Modulus monomial_modulus(int p, int m) {
    if (m < 1) throw std::invalid_argument("modulus degree must be >= 1");
    return Modulus{x_power(p, m), ModulusKind::MonomialXm, m};
}

Modulus irreducible_modulus(int p, int m) {
    return Modulus{smallest_irreducible(p, m), ModulusKind::Irreducible, m};
}

Modulus modulus_from_poly(Poly f, ModulusKind kind) {
    if (f.degree() < 1) throw std::invalid_argument("modulus must have degree >= 1");
    if (!f.is_monic()) throw std::invalid_argument("modulus must be monic");
    const int m = f.degree();
    if (kind == ModulusKind::MonomialXm) {
        if (f != x_power(f.p, m)) throw std::invalid_argument("monomial modulus must be exactly x^m");
    } else {
        if (!is_irreducible(f)) throw std::invalid_argument("modulus is not irreducible");
    }
    return Modulus{std::move(f), kind, m};
}

}  // namespace plr
