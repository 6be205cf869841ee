#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "plr/cbc.hpp"
#include "plr/vector_file.hpp"

using namespace plr;

namespace {

VectorFile sample_file(ModulusKind kind) {
    const Modulus f = kind == ModulusKind::MonomialXm ? monomial_modulus(2, 3)
                                                      : irreducible_modulus(2, 3);
    WeightSystem w;
    w.gammas = {1.0, 0.5, 0.25};
    w.ws = {0, 0, 1};
    w.m = 3;
    const CbcResult result = cbc_reduced_naive(f, w, 3);
    return make_vector_file(result, "naive");
}

}  // namespace

TEST_CASE("serialization round trip") {
    for (auto kind : {ModulusKind::MonomialXm, ModulusKind::Irreducible}) {
        const VectorFile vf = sample_file(kind);
        const std::string text = serialize_vector_file(vf);
        const VectorFile back = parse_vector_file(text);
        CHECK(back.version == vf.version);
        CHECK(back.algorithm == vf.algorithm);
        CHECK(back.p == vf.p);
        CHECK(back.m == vf.m);
        CHECK(back.s == vf.s);
        CHECK(back.modulus == vf.modulus);
        CHECK(back.weights.gammas == vf.weights.gammas);
        CHECK(back.weights.ws == vf.weights.ws);
        CHECK(back.reduced == vf.reduced);
        CHECK(back.shifted == vf.shifted);
        CHECK(back.r_values == vf.r_values);
        CHECK(back.bound.total == vf.bound.total);
        CHECK(serialize_vector_file(back) == text);
    }
}

TEST_CASE("rebuilding the generating vector revalidates membership") {
    VectorFile vf = sample_file(ModulusKind::MonomialXm);
    const GeneratingVector gv = to_generating_vector(vf);
    CHECK(gv.reduced == vf.reduced);
    CHECK(gv.shifted == vf.shifted);

    VectorFile broken = vf;
    broken.reduced[1] = x_power(2, 1);  // shares a factor with x^3
    broken.shifted[1] = x_power(2, 1);
    CHECK_THROWS_AS(to_generating_vector(broken), std::invalid_argument);

    VectorFile skewed = vf;
    skewed.shifted[2] = skewed.reduced[2];  // drops the x^{w} shift
    CHECK_THROWS_AS(to_generating_vector(skewed), std::invalid_argument);
}

TEST_CASE("malformed input is rejected") {
    CHECK_THROWS_AS(parse_vector_file("not json"), std::invalid_argument);
    CHECK_THROWS_AS(parse_vector_file("{}"), std::invalid_argument);
    const VectorFile vf = sample_file(ModulusKind::MonomialXm);
    std::string text = serialize_vector_file(vf);
    const auto pos = text.find("\"kind\": \"xm\"");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 12, "\"kind\": \"??\"");
    CHECK_THROWS_AS(parse_vector_file(text), std::invalid_argument);
}
