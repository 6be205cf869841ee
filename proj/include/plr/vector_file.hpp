#ifndef PLR_VECTOR_FILE_HPP
#define PLR_VECTOR_FILE_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "plr/bounds.hpp"
#include "plr/cbc.hpp"
#include "plr/generating_vector.hpp"

namespace plr {

/// On-disk description of a constructed generating vector (JSON payload).
struct VectorFile {
    int version = 1;
    std::string algorithm;  // "naive" | "fast"
    int p = 2;
    int m = 1;
    int s = 1;
    Modulus modulus;
    WeightSystem weights;
    std::vector<Poly> reduced;
    std::vector<Poly> shifted;
    std::vector<double> r_values;
    BoundReport bound;
};

VectorFile make_vector_file(const CbcResult& result, const std::string& algorithm);

std::string serialize_vector_file(const VectorFile& vf);

/// Throws std::invalid_argument on malformed input.
VectorFile parse_vector_file(const std::string& text);

void save_vector_file(const std::string& path, const VectorFile& vf);
VectorFile load_vector_file(const std::string& path);

/// Rebuilds the generating vector (revalidating search-set membership).
GeneratingVector to_generating_vector(const VectorFile& vf);

}  // namespace plr

#endif
