#ifndef PLR_QUALITY_HPP
#define PLR_QUALITY_HPP

#include <cstdint>
#include <vector>

#include "plr/generating_vector.hpp"

namespace plr {

/// r_p(h, gamma): 1 + gamma for h = 0, gamma / (p^{a+1} sin^2(pi h_a / p))
/// for deg(h) = a with leading digit h_a.
double r_weight(const Poly& h, double gamma);
double r_plain(const Poly& h);  // gamma = 1 branch, h != 0

/// Sum of r_p(h) over nonzero multiples of the monic polynomial a inside
/// G_{p,m}.  Computed by enumeration and by the closed form
/// (m - deg a) (p^2-1)/(3p) p^{-deg a}; throws std::logic_error if the two
/// disagree beyond 1e-12.
double r_sum_multiples(const Poly& a, int m);
double r_sum_multiples_enum(const Poly& a, int m);
double r_sum_multiples_closed(const Poly& a, int m);

/// Dual-space definition of the quality measure: sum over nonzero frequency
/// vectors h with h . (shifted g) = 0 mod f of prod r_p(h_i, gamma_i).
double r_direct(const GeneratingVector& gvec, int d, std::uint64_t max_terms = (1ull << 24));

/// Character-sum form (additive character X_p applied to the residuum of
/// (v/f) h x^{w_i} g_i).  The optional out-parameter receives the absolute
/// imaginary residue of the complex accumulation.
double r_character(const GeneratingVector& gvec, int d, double* imag_residue = nullptr,
                   std::uint64_t max_terms = (1ull << 24));

/// psi kernel: sum_{h != 0} r_p(h) wal_h at the grid point numerator/p^m,
/// evaluated by the digit-factorized closed form (O(m) per value).
double psi_value(std::uint64_t numerator, int p, int m);
std::vector<double> psi_table(int p, int m);

/// Walsh/eta-product form of the quality measure; valid for f = x^m only
/// and rejects other moduli.
double r_walsh(const GeneratingVector& gvec, int d);

/// Same eta-product evaluation through the psi kernel composed with phi_m,
/// valid for any modulus.  Equals r_direct; this is the O(p^m m) evaluator
/// the CBC algorithms score candidates with.
double r_kernel(const GeneratingVector& gvec, int d);

/// sum_{v in G_{p,m}} X_p((v/f) g): exactly p^m when f | g, else 0.
double char_orthogonality(const Poly& g, const Poly& f, double* imag_residue = nullptr);

/// Y_{p^m,w}(v, x^m): double sum over the reduced search set and nonzero h.
double y_sum(const Poly& v, int w, int m, double* imag_residue = nullptr);

/// Mean of |Y_{p^m,w}(v, x^m)| over v, normalized by the search-set size.
double y_average(int w, int p, int m);

}  // namespace plr

#endif
