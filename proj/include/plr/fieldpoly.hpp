#ifndef PLR_FIELDPOLY_HPP
#define PLR_FIELDPOLY_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace plr {

/// Polynomial over the prime field F_p, coefficients stored in ascending
/// degree with no trailing zero.  The empty coefficient list is the zero
/// polynomial.  Values are immutable once built through make_poly and
/// safe to share across threads.
struct Poly {
    int p = 2;
    std::vector<int> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    int leading() const { return coeffs.back(); }
    int coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(coeffs.size())) ? coeffs[static_cast<std::size_t>(i)] : 0;
    }
    bool is_monic() const { return !coeffs.empty() && coeffs.back() == 1; }
    bool is_one() const { return coeffs.size() == 1 && coeffs[0] == 1; }

    friend bool operator==(const Poly&, const Poly&) = default;
};

bool is_prime_int(long long n);

/// Validates digits and strips trailing zeros.
Poly make_poly(int p, std::vector<int> coeffs);
Poly zero_poly(int p);
Poly one_poly(int p);
Poly x_power(int p, int e);  // x^e

/// Base-p digits of k become the coefficients (the n <-> n(x) identification).
Poly poly_from_index(std::uint64_t k, int p);
std::uint64_t poly_index(const Poly& a);

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);  // (quotient, remainder)
Poly poly_mod(const Poly& a, const Poly& f);
Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& f);

/// Monic gcd via Euclid; both inputs zero is rejected.
Poly poly_gcd(const Poly& a, const Poly& b);

/// Trial division by all monic polynomials of degree <= deg(f)/2.
bool is_irreducible(const Poly& f);

/// The monic irreducible of degree m with minimal poly_index.
Poly smallest_irreducible(int p, int m);

/// First m digits (t_1,...,t_m) of the formal Laurent expansion of g/f,
/// so that the phi_m image of g/f equals sum t_l p^{-l}.
std::vector<int> laurent_digits(const Poly& g, const Poly& f, int m);

enum class ModulusKind { MonomialXm, Irreducible };

/// Degree-m modulus, either x^m or an irreducible polynomial.
struct Modulus {
    Poly f;
    ModulusKind kind = ModulusKind::MonomialXm;
    int m = 1;

    int p() const { return f.p; }
    friend bool operator==(const Modulus&, const Modulus&) = default;
};

Modulus monomial_modulus(int p, int m);
Modulus irreducible_modulus(int p, int m);  // smallest irreducible of degree m
Modulus modulus_from_poly(Poly f, ModulusKind kind);

}  // namespace plr

#endif
