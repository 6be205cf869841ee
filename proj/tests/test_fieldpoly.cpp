#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "plr/fieldpoly.hpp"
#include "plr/pointset.hpp"

using namespace plr;

namespace {

// count of monic irreducibles of degree m over F_p via the Moebius/necklace
// formula, an independent combinatorial oracle
long long necklace_count(int p, int m) {
    auto mu = [](int n) {
        int result = 1;
        for (int d = 2; d * d <= n; ++d) {
            if (n % d == 0) {
                n /= d;
                if (n % d == 0) return 0;
                result = -result;
            }
        }
        if (n > 1) result = -result;
        return result;
    };
    long long acc = 0;
    for (int d = 1; d <= m; ++d) {
        if (m % d != 0) continue;
        long long pw = 1;
        for (int i = 0; i < m / d; ++i) pw *= p;
        acc += mu(d) * pw;
    }
    return acc / m;
}

Poly random_poly(std::mt19937& rng, int p, int max_deg) {
    std::uniform_int_distribution<int> digit(0, p - 1);
    std::vector<int> c(static_cast<std::size_t>(max_deg) + 1);
    for (auto& d : c) d = digit(rng);
    return make_poly(p, std::move(c));
}

}  // namespace

TEST_CASE("index to polynomial and back") {
    CHECK(poly_from_index(0, 2).is_zero());
    CHECK(poly_from_index(6, 2) == make_poly(2, {0, 1, 1}));
    CHECK(poly_from_index(5, 3) == make_poly(3, {2, 1}));
    for (int p : {2, 3, 5}) {
        for (std::uint64_t k = 0; k < 200; ++k) {
            CHECK(poly_index(poly_from_index(k, p)) == k);
        }
    }
}

TEST_CASE("modular multiplication") {
    const Poly x2 = x_power(2, 2);
    CHECK(poly_mul_mod(make_poly(2, {1, 1}), make_poly(2, {1, 1}), x2) == one_poly(2));
    CHECK(poly_mul_mod(zero_poly(2), make_poly(2, {1, 1}), x2).is_zero());
    CHECK(poly_mul_mod(x_power(2, 1), make_poly(2, {1, 1}), make_poly(2, {1, 1, 1})) == one_poly(2));
}

TEST_CASE("modular multiplication commutes and reduces") {
    std::mt19937 rng(7);
    for (int p : {2, 3}) {
        const Poly f = make_poly(p, p == 2 ? std::vector<int>{1, 1, 1} : std::vector<int>{1, 0, 1});
        for (int trial = 0; trial < 50; ++trial) {
            const Poly a = random_poly(rng, p, 4);
            const Poly b = random_poly(rng, p, 4);
            const Poly ab = poly_mul_mod(a, b, f);
            CHECK(ab == poly_mul_mod(b, a, f));
            CHECK(ab.degree() < f.degree());
        }
    }
}

TEST_CASE("gcd") {
    CHECK(poly_gcd(x_power(2, 1), x_power(2, 2)) == x_power(2, 1));
    CHECK(poly_gcd(make_poly(2, {1, 1}), x_power(2, 2)) == one_poly(2));
    const Poly f = make_poly(3, {2, 1, 1});
    const Poly g = poly_gcd(f, zero_poly(3));
    CHECK(g.is_monic());
    CHECK(poly_divmod(f, g).second.is_zero());
    CHECK_THROWS_AS(poly_gcd(zero_poly(2), zero_poly(2)), std::invalid_argument);
}

TEST_CASE("gcd divides both inputs") {
    std::mt19937 rng(11);
    for (int p : {2, 3, 5}) {
        for (int trial = 0; trial < 50; ++trial) {
            const Poly a = random_poly(rng, p, 5);
            const Poly b = random_poly(rng, p, 5);
            if (a.is_zero() && b.is_zero()) continue;
            const Poly g = poly_gcd(a, b);
            CHECK(g.is_monic());
            if (!a.is_zero()) CHECK(poly_divmod(a, g).second.is_zero());
            if (!b.is_zero()) CHECK(poly_divmod(b, g).second.is_zero());
        }
    }
}

TEST_CASE("irreducibility") {
    CHECK(is_irreducible(make_poly(2, {1, 1, 1})));
    CHECK_FALSE(is_irreducible(make_poly(2, {1, 0, 1})));
    CHECK(is_irreducible(x_power(2, 1)));
    CHECK(is_irreducible(x_power(5, 1)));
    CHECK_THROWS_AS(is_irreducible(one_poly(2)), std::invalid_argument);
}

TEST_CASE("irreducible counts match the necklace formula") {
    for (int p : {2, 3}) {
        for (int m = 1; m <= 6; ++m) {
            long long found = 0;
            const std::uint64_t base = pow_u64(static_cast<std::uint64_t>(p), m);
            for (std::uint64_t k = base; k < 2 * base; ++k) {
                if (is_irreducible(poly_from_index(k, p))) ++found;
            }
            CHECK(found == necklace_count(p, m));
        }
    }
}

TEST_CASE("smallest irreducible") {
    CHECK(smallest_irreducible(2, 2) == make_poly(2, {1, 1, 1}));
    CHECK(smallest_irreducible(2, 3) == make_poly(2, {1, 1, 0, 1}));
    CHECK(smallest_irreducible(2, 1) == x_power(2, 1));
}

TEST_CASE("Laurent expansion digits") {
    CHECK(laurent_digits(one_poly(2), x_power(2, 3), 3) == std::vector<int>{0, 0, 1});
    CHECK(laurent_digits(make_poly(2, {1, 1}), x_power(2, 2), 2) == std::vector<int>{1, 1});
    CHECK(laurent_digits(one_poly(2), make_poly(2, {1, 1, 1}), 2) == std::vector<int>{0, 1});
}

TEST_CASE("Laurent digits for x^m reverse the coefficients") {
    std::mt19937 rng(3);
    for (int p : {2, 3}) {
        for (int m = 1; m <= 5; ++m) {
            for (int trial = 0; trial < 20; ++trial) {
                const Poly g = random_poly(rng, p, m - 1);
                const std::vector<int> t = laurent_digits(g, x_power(p, m), m);
                for (int l = 1; l <= m; ++l) {
                    CHECK(t[static_cast<std::size_t>(l - 1)] == g.coeff(m - l));
                }
            }
        }
    }
}

TEST_CASE("modulus constructors enforce their kind") {
    const Modulus xm = monomial_modulus(2, 3);
    CHECK(xm.f == x_power(2, 3));
    CHECK(xm.m == 3);
    const Modulus irr = irreducible_modulus(2, 3);
    CHECK(irr.f == make_poly(2, {1, 1, 0, 1}));
    CHECK_THROWS_AS(modulus_from_poly(make_poly(2, {1, 0, 1}), ModulusKind::Irreducible),
                    std::invalid_argument);
    CHECK_THROWS_AS(modulus_from_poly(make_poly(2, {1, 1, 1}), ModulusKind::MonomialXm),
                    std::invalid_argument);
}
