#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lmlab/core.hpp"
#include "lmlab/lattice.hpp"

namespace lmlab {

// Vectors are comma-separated integers ("1,0,-1"); matrices and vector lists
// are rows separated by ';' ("1,2;2,-1"). Whitespace around tokens is ignored.

IntVector parse_vector(std::string_view text);
std::vector<IntVector> parse_vector_list(std::string_view text);
Lattice parse_lattice(std::string_view text);

std::string format_vector(const IntVector& v);
std::string format_lattice(const Lattice& lattice);

}  // namespace lmlab
