#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "homcode/hsc.hpp"

namespace homcode {

// A code with some face generators removed (holes).  The surface and the
// remaining generators are untouched; each removal is tracked by face and
// slot.
struct PuncturedCode {
  HscCode base;
  std::vector<std::pair<std::size_t, std::size_t>> removed;  // (face, slot), sorted
};

// Removes the named generator slots of a face.  Requires the base code to
// carry a face coloring (holes are registered per color and generator type).
// Unknown faces, unknown slots and repeated removals raise NoSuchGenerator.
PuncturedCode puncture(const HscCode& code, std::size_t face,
                       const std::vector<std::size_t>& slots);
PuncturedCode puncture(const PuncturedCode& punctured, std::size_t face,
                       const std::vector<std::size_t>& slots);

// Generator words that survive the punctures, in base generator order.
std::vector<PauliWord> remaining_generators(const PuncturedCode& punctured);

struct HoleCounts {
  // Hole registries keyed by "color" for single-generator faces and
  // "color/letter" for double-generator faces (color names red, green, blue).
  std::map<std::string, std::size_t> holes;
  std::map<std::string, std::size_t> logicals;  // max(h - 1, 0) per registry
  std::size_t formula_total = 0;                // sum of the logicals column
  std::size_t k_base = 0;                       // k before puncturing
  std::size_t k_punctured = 0;                  // k of the remaining generators
  std::size_t delta_k = 0;                      // k_punctured - k_base
};

// Counts hole-generated logical qubits two ways: the per-registry formula
// max(h_c - 1, 0) and the rank of the remaining generators.  The two always
// agree for colored homological codes; both are reported.
HoleCounts hole_logical_count(const PuncturedCode& punctured);

}  // namespace homcode
