#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "homcode/pauli.hpp"

namespace homcode {

struct CodeParams {
  std::size_t n = 0;              // physical qubits
  std::size_t s_given = 0;        // generators supplied
  std::size_t s_independent = 0;  // their GF(2) symplectic rank
  std::size_t k = 0;              // n - s_independent
  std::optional<std::size_t> d;   // set only when a distance search ran
  std::size_t redundancies = 0;   // s_given - s_independent
};

// Validates a generator list (equal lengths, pairwise commutation, -I not in
// the generated group) and reports the code parameters.  `qubits` must be
// supplied when the generator list is empty and otherwise must match.
CodeParams stabilizer_params(const std::vector<PauliWord>& generators,
                             std::optional<std::size_t> qubits = std::nullopt);

// Deterministic sign normalization: flips the signs of some generators so
// that no product of them equals minus identity.  A letter assignment fixes
// generators only up to sign, and such a flip set always exists, because
// sign flips realize every GF(2) functional on the dependency space of the
// generator rows.  Words that do not all pairwise commute (or have unequal
// lengths) are returned unchanged; downstream validation reports them.
std::vector<PauliWord> normalize_group_signs(std::vector<PauliWord> generators);

// Symplectic Gram-Schmidt over the normalizer: k anticommuting logical pairs,
// each commuting with the stabilizer and with every other pair.  Pivots are
// chosen lowest-index-first, so the result is deterministic.
std::vector<std::pair<PauliWord, PauliWord>> logical_basis(
    const std::vector<PauliWord>& generators);

struct DistanceResult {
  std::size_t cap = 0;
  std::optional<std::size_t> distance;  // empty means above the cap
  std::optional<PauliWord> witness;     // a minimum-weight logical when found
  bool above_cap() const { return !distance.has_value(); }
};

// Exhaustive search for the minimum weight of a logical operator (commutes
// with every generator, lies outside the stabilizer group), up to weight_cap.
// Requires k >= 1.
DistanceResult min_distance(const std::vector<PauliWord>& generators, std::size_t weight_cap);

}  // namespace homcode
