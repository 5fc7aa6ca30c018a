#ifndef COMPATLIE_IO_HPP
#define COMPATLIE_IO_HPP

#include <string>

#include "compatlie/algebra.hpp"
#include "compatlie/extensions.hpp"

namespace compatlie {

/// Algebra file format: JSON with fields dimension, basis, parameters,
/// bracket1, bracket2; products are {i, j, terms: [{k, c}]} records with
/// 1-based indices, i < j only, coefficients as expression strings.
/// Unknown fields are rejected.
CompatAlgebra parse_algebra(const std::string& text);
std::string serialize_algebra(const CompatAlgebra& a);

/// Extension-spec format: JSON with field generators, a list of
/// {label, d1, d2} where d1/d2 are n x n matrices of expression strings
/// (rows of columns), plus optional generator_bracket1/2 product lists in
/// the extended index space.
ExtensionSpec parse_extension_spec(const std::string& text, const CompatAlgebra& base);
std::string serialize_extension_spec(const ExtensionSpec& spec);

}  // namespace compatlie

#endif
