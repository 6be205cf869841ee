#include "plr/vector_file.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace plr {

namespace {

using nlohmann::json;

json poly_to_json(const Poly& g) { return json(g.coeffs); }

Poly poly_from_json(const json& j, int p) {
    if (!j.is_array()) throw std::invalid_argument("polynomial coefficients must be an array");
    return make_poly(p, j.get<std::vector<int>>());
}

std::string kind_name(ModulusKind kind) {
    return kind == ModulusKind::MonomialXm ? "xm" : "irreducible";
}

ModulusKind kind_from_name(const std::string& name) {
    if (name == "xm") return ModulusKind::MonomialXm;
    if (name == "irreducible") return ModulusKind::Irreducible;
    throw std::invalid_argument("unknown modulus kind: " + name);
}

}  // namespace

VectorFile make_vector_file(const CbcResult& result, const std::string& algorithm) {
    const GeneratingVector& gv = result.vector;
    VectorFile vf;
    vf.algorithm = algorithm;
    vf.p = gv.p();
    vf.m = gv.m();
    vf.s = gv.s();
    vf.modulus = gv.modulus;
    vf.weights = gv.weights;
    vf.reduced = gv.reduced;
    vf.shifted = gv.shifted;
    for (const auto& st : result.trace.steps) vf.r_values.push_back(st.r_value);
    vf.bound = discrepancy_bound(vf.p, vf.m, vf.s, vf.weights, vf.modulus.kind);
    return vf;
}

std::string serialize_vector_file(const VectorFile& vf) {
    json generators = json::array();
    for (int j = 0; j < vf.s; ++j) {
        generators.push_back({{"reduced_coeffs", poly_to_json(vf.reduced[static_cast<std::size_t>(j)])},
                              {"shifted_coeffs", poly_to_json(vf.shifted[static_cast<std::size_t>(j)])}});
    }
    json doc{
        {"version", vf.version},
        {"algorithm", vf.algorithm},
        {"p", vf.p},
        {"m", vf.m},
        {"s", vf.s},
        {"modulus", {{"kind", kind_name(vf.modulus.kind)}, {"coeffs", poly_to_json(vf.modulus.f)}}},
        {"weights", {{"gammas", vf.weights.gammas}, {"ws", vf.weights.ws}}},
        {"generators", generators},
        {"r_values", vf.r_values},
        {"bound",
         {{"case", kind_name(vf.bound.kind)},
          {"joe_term", vf.bound.joe_term},
          {"product_term", vf.bound.product_term},
          {"total", vf.bound.total},
          {"hypothesis_flags", vf.bound.hypothesis_flags}}},
    };
    return doc.dump(2) + "\n";
}

VectorFile parse_vector_file(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed vector file: ") + e.what());
    }
    try {
        VectorFile vf;
        vf.version = doc.at("version").get<int>();
        if (vf.version != 1) throw std::invalid_argument("unsupported vector file version");
        vf.algorithm = doc.at("algorithm").get<std::string>();
        vf.p = doc.at("p").get<int>();
        vf.m = doc.at("m").get<int>();
        vf.s = doc.at("s").get<int>();
        const auto& mod = doc.at("modulus");
        vf.modulus = modulus_from_poly(poly_from_json(mod.at("coeffs"), vf.p),
                                       kind_from_name(mod.at("kind").get<std::string>()));
        if (vf.modulus.m != vf.m) throw std::invalid_argument("modulus degree does not match m");
        vf.weights.gammas = doc.at("weights").at("gammas").get<std::vector<double>>();
        vf.weights.ws = doc.at("weights").at("ws").get<std::vector<int>>();
        vf.weights.m = vf.m;
        const auto& gens = doc.at("generators");
        for (const auto& g : gens) {
            vf.reduced.push_back(poly_from_json(g.at("reduced_coeffs"), vf.p));
            vf.shifted.push_back(poly_from_json(g.at("shifted_coeffs"), vf.p));
        }
        if (static_cast<int>(vf.reduced.size()) != vf.s) {
            throw std::invalid_argument("generator count does not match s");
        }
        vf.r_values = doc.at("r_values").get<std::vector<double>>();
        const auto& bd = doc.at("bound");
        vf.bound.kind = kind_from_name(bd.at("case").get<std::string>());
        vf.bound.joe_term = bd.at("joe_term").get<double>();
        vf.bound.product_term = bd.at("product_term").get<double>();
        vf.bound.total = bd.at("total").get<double>();
        vf.bound.hypothesis_flags = bd.at("hypothesis_flags").get<std::vector<std::string>>();
        return vf;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed vector file: ") + e.what());
    }
}

void save_vector_file(const std::string& path, const VectorFile& vf) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file: " + path);
    os << serialize_vector_file(vf);
}

VectorFile load_vector_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << is.rdbuf();
    return parse_vector_file(ss.str());
}

GeneratingVector to_generating_vector(const VectorFile& vf) {
    GeneratingVector gv = make_generating_vector(vf.modulus, vf.weights, vf.reduced);
    if (gv.shifted != vf.shifted) {
        throw std::invalid_argument("shifted components are inconsistent with reduced components");
    }
    return gv;
}

}  // namespace plr
