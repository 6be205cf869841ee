#include "plr/cbc.hpp"

#include <limits>
#include <stdexcept>

#include "plr/errors.hpp"
#include "plr/pointset.hpp"
#include "plr/quality.hpp"

namespace plr {

namespace {

std::size_t search_set_size(int p, int m, int w, ModulusKind kind) {
    if (w >= m) return 1;
    if (kind == ModulusKind::MonomialXm) {
        return static_cast<std::size_t>(pow_u64(static_cast<std::uint64_t>(p), m - w - 1)) *
               static_cast<std::size_t>(p - 1);
    }
    return static_cast<std::size_t>(pow_u64(static_cast<std::uint64_t>(p), m - w)) - 1;
}

WeightSystem trimmed(const WeightSystem& weights, int s) {
    WeightSystem w = weights;
    w.gammas.resize(static_cast<std::size_t>(s));
    w.ws.resize(static_cast<std::size_t>(s));
    return w;
}

void check_inputs(const Modulus& modulus, const WeightSystem& weights, int s, std::uint64_t max_work) {
    validate_weights(weights);
    if (s < 1) throw std::invalid_argument("dimension s must be >= 1");
    if (weights.dims() < s) throw std::invalid_argument("need at least s weights");
    if (weights.m != modulus.m) throw std::invalid_argument("weight system degree does not match modulus");
    const double big_n = static_cast<double>(pow_u64(static_cast<std::uint64_t>(modulus.p()), modulus.m));
    if (big_n * big_n * static_cast<double>(s) > static_cast<double>(max_work)) {
        throw capacity_error("CBC construction size exceeds work guard");
    }
}

}  // namespace

// Candidate scores for one step over f = x^m: fold the running product into
// p^{m-w} blocks, then one psi-row walk per candidate.  Both constructions
// score through here so their argmin decisions agree bit for bit.
static std::vector<double> score_candidates_xm(const std::vector<double>& running, int p, int m,
                                               int w, const std::vector<double>& psi,
                                               std::size_t* psi_count) {
    const int l = m - w;
    const std::uint64_t block_len = pow_u64(static_cast<std::uint64_t>(p), l);
    const std::uint64_t blocks = pow_u64(static_cast<std::uint64_t>(p), w);
    std::vector<double> folded(block_len, 0.0);
    for (std::uint64_t j = 0; j < blocks; ++j) {
        const std::uint64_t off = j * block_len;
        for (std::uint64_t n = 0; n < block_len; ++n) folded[n] += running[off + n];
    }
    return omega_multiply(l, w, folded, p, psi, psi_count);
}

std::vector<Poly> search_set(int p, int m, int w, const Modulus& f) {
    std::vector<Poly> set;
    if (w >= m) {
        set.push_back(one_poly(p));
        return set;
    }
    const std::uint64_t count = pow_u64(static_cast<std::uint64_t>(p), m - w);
    for (std::uint64_t k = 1; k < count; ++k) {
        Poly g = poly_from_index(k, p);
        if (poly_gcd(g, f.f).is_one()) set.push_back(std::move(g));
    }
    return set;
}

CbcResult cbc_reduced_naive(const Modulus& modulus, const WeightSystem& weights, int s,
                            std::uint64_t max_work) {
    check_inputs(modulus, weights, s, max_work);
    const int p = modulus.p();
    const int m = modulus.m;
    const std::uint64_t big_n = pow_u64(static_cast<std::uint64_t>(p), m);
    const std::vector<double> psi = psi_table(p, m);

    std::vector<double> prefix(big_n, 1.0);  // running product over chosen components
    std::vector<Poly> chosen;
    double prod_gamma = 1.0;
    ConstructionTrace trace;

    for (int d = 1; d <= s; ++d) {
        const int w = weights.w(d);
        const double gamma = weights.gamma(d);
        StepTrace st;
        st.search_size = search_set_size(p, m, w, modulus.kind);

        std::vector<std::uint32_t> best_col;
        if (d == 1) {
            st.chosen = one_poly(p);  // first component is fixed
            best_col = phi_column(x_power(p, w), modulus);
            st.candidate_evals = 1;
            st.psi_applications += big_n;
        } else if (modulus.kind == ModulusKind::MonomialXm && w < m) {
            const std::vector<double> scores =
                score_candidates_xm(prefix, p, m, w, psi, &st.psi_applications);
            const std::vector<Poly> candidates = search_set(p, m, w, modulus);
            st.candidate_evals = candidates.size();
            std::size_t best = 0;
            for (std::size_t i = 1; i < scores.size(); ++i) {
                if (scores[i] < scores[best]) best = i;  // strict: ties keep the smallest index
            }
            st.chosen = candidates[best];
            best_col = phi_column(poly_mul(x_power(p, w), st.chosen), modulus);
        } else {
            const std::vector<Poly> candidates = search_set(p, m, w, modulus);
            double best_score = std::numeric_limits<double>::infinity();
            for (const Poly& cand : candidates) {
                std::vector<std::uint32_t> col = phi_column(poly_mul(x_power(p, w), cand), modulus);
                double score = 0.0;
                for (std::uint64_t n = 0; n < big_n; ++n) {
                    score += prefix[n] * (1.0 + gamma + gamma * psi[col[n]]);
                }
                st.psi_applications += big_n;
                ++st.candidate_evals;
                if (score < best_score) {  // strict: first minimum keeps smallest index
                    best_score = score;
                    st.chosen = cand;
                    best_col = std::move(col);
                }
            }
        }

        for (std::uint64_t n = 0; n < big_n; ++n) {
            prefix[n] *= 1.0 + gamma + gamma * psi[best_col[n]];
        }
        st.psi_applications += big_n;
        prod_gamma *= 1.0 + gamma;
        double mean = 0.0;
        for (std::uint64_t n = 0; n < big_n; ++n) mean += prefix[n];
        st.r_value = mean / static_cast<double>(big_n) - prod_gamma;
        chosen.push_back(st.chosen);
        trace.steps.push_back(std::move(st));
    }

    return CbcResult{make_generating_vector(modulus, trimmed(weights, s), std::move(chosen)),
                     std::move(trace)};
}

std::vector<double> omega_multiply(int l, int w, const std::vector<double>& folded, int p,
                                   const std::vector<double>& psi_tab, std::size_t* psi_count) {
    if (l < 1) throw std::invalid_argument("Omega block size requires l >= 1");
    const std::uint64_t len = pow_u64(static_cast<std::uint64_t>(p), l);
    if (folded.size() != len) throw std::invalid_argument("folded vector must have length p^l");
    if (psi_tab.size() != pow_u64(static_cast<std::uint64_t>(p), l + w)) {
        throw std::invalid_argument("psi table must cover the p^{l+w} grid");
    }
    const std::uint64_t shift = pow_u64(static_cast<std::uint64_t>(p), w);
    const Modulus block = monomial_modulus(p, l);
    const std::vector<Poly> candidates = search_set(p, l, 0, block);
    std::vector<double> out;
    out.reserve(candidates.size());
    for (const Poly& g : candidates) {
        const std::vector<std::uint32_t> col = phi_column(g, block);
        double acc = 0.0;
        for (std::uint64_t n = 0; n < len; ++n) {
            acc += psi_tab[shift * static_cast<std::uint64_t>(col[n])] * folded[n];
        }
        if (psi_count != nullptr) *psi_count += len;
        out.push_back(acc);
    }
    return out;
}

std::vector<double> omega_multiply(int l, int w, const std::vector<double>& folded, int p) {
    const std::vector<double> psi = psi_table(p, l + w);
    return omega_multiply(l, w, folded, p, psi, nullptr);
}

CbcResult cbc_reduced_fast(const Modulus& modulus, const WeightSystem& weights, int s,
                           std::uint64_t max_work) {
    if (modulus.kind != ModulusKind::MonomialXm) {
        throw std::invalid_argument("the fast construction requires the modulus x^m");
    }
    check_inputs(modulus, weights, s, max_work);
    const int p = modulus.p();
    const int m = modulus.m;
    const std::uint64_t big_n = pow_u64(static_cast<std::uint64_t>(p), m);
    const std::vector<double> psi = psi_table(p, m);

    std::vector<double> eta(big_n, 1.0);
    std::vector<Poly> chosen;
    double prod_gamma = 1.0;
    ConstructionTrace trace;

    auto apply_component = [&](StepTrace& st, const Poly& g, int w, double gamma) {
        const std::vector<std::uint32_t> col = phi_column(poly_mul(x_power(p, w), g), modulus);
        for (std::uint64_t n = 0; n < big_n; ++n) {
            eta[n] *= 1.0 + gamma + gamma * psi[col[n]];
        }
        st.psi_applications += big_n;
        prod_gamma *= 1.0 + gamma;
        double mean = 0.0;
        for (std::uint64_t n = 0; n < big_n; ++n) mean += eta[n];
        st.r_value = mean / static_cast<double>(big_n) - prod_gamma;
    };

    for (int d = 1; d <= s; ++d) {
        const int w = weights.w(d);
        const double gamma = weights.gamma(d);
        StepTrace st;
        st.search_size = search_set_size(p, m, w, modulus.kind);

        if (d == 1 || w >= m) {
            st.chosen = one_poly(p);  // fixed component, no search
            st.candidate_evals = 0;
        } else {
            const std::vector<double> scores =
                score_candidates_xm(eta, p, m, w, psi, &st.psi_applications);
            const std::vector<Poly> candidates = search_set(p, m, w, modulus);
            st.candidate_evals = candidates.size();
            std::size_t best = 0;
            for (std::size_t i = 1; i < scores.size(); ++i) {
                if (scores[i] < scores[best]) best = i;
            }
            st.chosen = candidates[best];
        }

        apply_component(st, st.chosen, w, gamma);
        chosen.push_back(st.chosen);
        trace.steps.push_back(std::move(st));
    }

    return CbcResult{make_generating_vector(modulus, trimmed(weights, s), std::move(chosen)),
                     std::move(trace)};
}

}  // namespace plr
