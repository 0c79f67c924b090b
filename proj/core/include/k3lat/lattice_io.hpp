#pragma once

// Lattice documents: {"label": ..., "rank": n, "gram": [n*n integers]}.
// The gram array may also be nested row by row. Integers that do not fit in
// 64 bits are written as decimal strings.

#include <filesystem>
#include <string>

#include "k3lat/lattice.hpp"

namespace k3lat {

// Throws std::invalid_argument on malformed input.
IntegralLattice parse_lattice(const std::string& text);
IntegralLattice read_lattice_file(const std::filesystem::path& path);

std::string lattice_to_json(const IntegralLattice& lattice, int indent = 2);

}  // namespace k3lat
