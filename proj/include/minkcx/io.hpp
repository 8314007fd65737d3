/*
 * Stable document formats for complexes and families.
 *
 * JSON with 1-based vertex labels; coordinates are JSON integers or exact
 * fraction strings "p/q" (emitted in lowest terms). Floating-point tokens
 * are rejected. Emission is canonical, so a parse/emit round trip is
 * byte-identical.
 */

#pragma once

#include "minkcx/polytope.hpp"
#include "minkcx/realize.hpp"
#include "minkcx/simplicial_complex.hpp"

#include <string>

namespace minkcx {

SimplicialComplex parse_complex_doc(const std::string& text);
std::string complex_doc(const SimplicialComplex& cx);

PolytopeFamily parse_family_doc(const std::string& text);
std::string family_doc(const PolytopeFamily& fam);

DiscreteFamily parse_discrete_doc(const std::string& text);
std::string discrete_doc(const DiscreteFamily& dfam);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace minkcx
