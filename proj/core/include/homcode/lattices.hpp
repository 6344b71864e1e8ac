#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "homcode/map.hpp"

namespace homcode {

// A generator request: family name plus integer parameters, written
// "family:key=value,key=value".
struct LatticeSpec {
  std::string family;
  std::map<std::string, long long> params;
};

LatticeSpec parse_lattice_spec(const std::string& text);

// Deterministic lattice constructions.  Families and parameters:
//   square_torus:L=<even >= 2>       4-valent torus, L*L vertices
//   hex_torus:a=<3k>,b=<3k>          3-valent torus, hexagonal faces
//   torus_488:a=<even>,b=<even>      3-valent torus, square and octagon faces
//   mixed_strip:w=<even>,h=<even>    torus with alternating 3/4-valent columns
//   planar_ktc_patch:w,h,boundaries=4|6   rectangle or T-shaped patch
//   planar_tcc_triangle:s=<n>        triangular patch with 3s boundary segments
// Dart numbering per family is fixed and documented with each construction.
CombinatorialMap generate(const LatticeSpec& spec);

CombinatorialMap generate(const std::string& spec_text);

}  // namespace homcode
