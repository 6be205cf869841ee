#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "plr/bounds.hpp"

using namespace plr;

namespace {

WeightSystem make_weights(std::vector<double> gammas, std::vector<int> ws, int m) {
    WeightSystem w;
    w.gammas = std::move(gammas);
    w.ws = std::move(ws);
    w.m = m;
    validate_weights(w);
    return w;
}

// direct subset enumeration of sum_u gamma_u (1 - (1 - 1/N)^{|u|})
double joe_oracle(const std::vector<double>& gammas, double big_n) {
    const int s = static_cast<int>(gammas.size());
    double acc = 0.0;
    for (unsigned mask = 1; mask < (1u << s); ++mask) {
        double gamma_u = 1.0;
        int size = 0;
        for (int j = 0; j < s; ++j) {
            if (mask & (1u << j)) {
                gamma_u *= gammas[static_cast<std::size_t>(j)];
                ++size;
            }
        }
        acc += gamma_u * (1.0 - std::pow(1.0 - 1.0 / big_n, size));
    }
    return acc;
}

}  // namespace

TEST_CASE("quality product bound") {
    const auto w = make_weights({1.0, 1.0}, {0, 0}, 2);
    CHECK(theorem_bound(w, 2, 2, 2, ModulusKind::MonomialXm) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(theorem_bound(w, 2, 2, 2, ModulusKind::Irreducible) == doctest::Approx(4.0).epsilon(1e-12));
    // the reduction exponent caps at m
    const auto capped = make_weights({1.0, 1.0}, {0, 7}, 2);
    const auto at_m = make_weights({1.0, 1.0}, {0, 2}, 2);
    CHECK(theorem_bound(capped, 2, 2, 2, ModulusKind::MonomialXm) ==
          doctest::Approx(theorem_bound(at_m, 2, 2, 2, ModulusKind::MonomialXm)).epsilon(1e-14));
}

TEST_CASE("bound is monotone in the weights and the dimension") {
    const auto w = make_weights({0.9, 0.5, 0.3}, {0, 0, 1}, 3);
    const auto smaller = make_weights({0.8, 0.4, 0.2}, {0, 0, 1}, 3);
    for (auto kind : {ModulusKind::MonomialXm, ModulusKind::Irreducible}) {
        double prev = 0.0;
        for (int d = 1; d <= 3; ++d) {
            const double b = theorem_bound(w, 2, 3, d, kind);
            CHECK(b >= prev);
            CHECK(theorem_bound(smaller, 2, 3, d, kind) <= b);
            prev = b;
        }
    }
}

TEST_CASE("subset-sum term") {
    CHECK(joe_sum({1.0}, 4.0).exact == doctest::Approx(0.25).epsilon(1e-14));
    const JoeSum js = joe_sum({1.0, 1.0}, 4.0);
    CHECK(js.exact == doctest::Approx(0.9375).epsilon(1e-14));
    CHECK(js.upper == doctest::Approx(std::exp(2.0) / 4.0).epsilon(1e-12));
    CHECK(js.exact <= js.upper);
}

TEST_CASE("subset-sum closed form equals enumeration") {
    for (int s = 1; s <= 10; ++s) {
        std::vector<double> gammas;
        for (int j = 1; j <= s; ++j) gammas.push_back(1.0 / (j * j));
        for (double big_n : {2.0, 16.0, 1024.0}) {
            CHECK(std::abs(joe_sum(gammas, big_n).exact - joe_oracle(gammas, big_n)) <= 1e-12);
        }
    }
}

TEST_CASE("discrepancy bound composition") {
    const auto w2 = make_weights({1.0, 1.0}, {0, 0}, 2);
    const BoundReport rep = discrepancy_bound(2, 2, 2, w2, ModulusKind::MonomialXm);
    CHECK(rep.joe_term == doctest::Approx(0.9375).epsilon(1e-12));
    CHECK(rep.product_term == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(rep.total == doctest::Approx(4.9375).epsilon(1e-12));
    CHECK(rep.hypothesis_flags.empty());

    const auto w1 = make_weights({1.0}, {0}, 2);
    CHECK(discrepancy_bound(2, 2, 1, w1, ModulusKind::MonomialXm).total ==
          doctest::Approx(1.25).epsilon(1e-12));

    const auto tiny = make_weights({1e-14, 1e-14}, {0, 0}, 2);
    CHECK(discrepancy_bound(2, 2, 2, tiny, ModulusKind::MonomialXm).total ==
          doctest::Approx(0.25).epsilon(1e-6));

    const auto shifted = make_weights({1.0, 1.0}, {1, 1}, 2);
    const BoundReport flagged = discrepancy_bound(2, 2, 2, shifted, ModulusKind::MonomialXm);
    REQUIRE(flagged.hypothesis_flags.size() == 1);
    CHECK(flagged.hypothesis_flags[0] == "w1_nonzero");
}

TEST_CASE("series convergence evidence") {
    const auto quad = tractability_check([](int j) { return 1.0 / (static_cast<double>(j) * j); },
                                         [](int) { return 0; }, 2, 40000);
    CHECK(quad.convergent_looking);
    CHECK(quad.partial_sums.back() < 1.6449341);

    const auto flat = tractability_check([](int) { return 1.0; }, [](int) { return 0; }, 2, 1000);
    CHECK_FALSE(flat.convergent_looking);

    const auto reduced = tractability_check(
        [](int j) { return std::pow(static_cast<double>(j), -3.0); },
        [](int j) { return static_cast<int>(std::floor(std::log2(static_cast<double>(j)))); }, 2, 10000);
    CHECK(reduced.partial_sums.back() <= 1.6449340668482264 + 1e-9);
}

TEST_CASE("reduction index suggestion") {
    CHECK(suggest_ws(3.0, 2.0, 2, 4) == std::vector<int>{0, 1, 1, 2});
    CHECK(suggest_ws(2.0, 1.5, 3, 9).back() == 1);
    for (double alpha : {1.1, 1.9}) CHECK(suggest_ws(2.0, alpha, 2, 1).front() == 0);
    CHECK_THROWS_AS(suggest_ws(2.0, 2.0, 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(suggest_ws(2.0, 0.5, 2, 4), std::invalid_argument);
}

TEST_CASE("inverting the bound") {
    const auto w1 = make_weights({1.0}, {0}, 1);
    const NStarResult res = n_star_bound(w1, 2, 1, 0.1);
    REQUIRE(res.found);
    CHECK(res.m_star == 7);
    CHECK(res.n_star == 128);
    // the s=1 bound is (3+m)/2^m: still above 0.1 at m=6, below at m=7
    CHECK(discrepancy_bound(2, 6, 1, w1.with_m(6), ModulusKind::MonomialXm).total ==
          doctest::Approx(9.0 / 64.0).epsilon(1e-12));
    CHECK(discrepancy_bound(2, 7, 1, w1.with_m(7), ModulusKind::MonomialXm).total ==
          doctest::Approx(10.0 / 128.0).epsilon(1e-12));

    const auto loose = n_star_bound(w1, 2, 1, 0.999999);
    REQUIRE(loose.found);
    CHECK(loose.m_star >= 1);

    const auto tiny = make_weights({1e-9}, {0}, 1);
    const auto easy = n_star_bound(tiny, 2, 1, 0.5);
    REQUIRE(easy.found);
    CHECK(easy.m_star <= 2);
}
