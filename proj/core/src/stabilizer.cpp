#include "homcode/stabilizer.hpp"

#include <algorithm>
#include <array>

#include "homcode/error.hpp"
#include "homcode/gf2.hpp"

namespace homcode {

namespace {

Gf2Matrix symplectic_rows(const std::vector<PauliWord>& generators, std::size_t n) {
  Gf2Matrix rows(0, 2 * n);
  for (const PauliWord& g : generators) rows.append_row(g.symplectic());
  return rows;
}

// Swaps the x and z halves of a symplectic vector; kernel vectors of the
// swapped stabilizer rows are exactly the commuting (normalizer) vectors.
BitVec swap_halves(const BitVec& vec) {
  std::size_t n = vec.size() / 2;
  BitVec out(vec.size());
  for (std::size_t q = 0; q < n; ++q) {
    if (vec.get(q)) out.set(n + q, true);
    if (vec.get(n + q)) out.set(q, true);
  }
  return out;
}

int symplectic_product(const BitVec& a, const BitVec& b) {
  std::size_t n = a.size() / 2;
  int acc = 0;
  for (std::size_t q = 0; q < n; ++q) {
    acc ^= (a.get(q) & b.get(n + q)) ^ (a.get(n + q) & b.get(q));
  }
  return acc;
}

void validate_generators(const std::vector<PauliWord>& generators, std::size_t n) {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].size() != n)
      throw Error(ErrorKind::LengthMismatch, "generators act on different qubit counts",
                  "{\"generator\":" + std::to_string(i) +
                      ",\"length\":" + std::to_string(generators[i].size()) +
                      ",\"expected\":" + std::to_string(n) + "}");
  }
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = i + 1; j < generators.size(); ++j)
      if (!generators[i].commutes_with(generators[j]))
        throw Error(ErrorKind::NonAbelian, "generators do not pairwise commute",
                    "{\"i\":" + std::to_string(i) + ",\"j\":" + std::to_string(j) + "}");

  // -I lies in the group exactly when some dependency among the generator
  // rows (a left-kernel combination, found as the right kernel of the
  // transpose) multiplies out to a word of sign -1; the word itself cancels
  // to I by construction.  Checking a basis suffices: sign is additive over
  // symmetric differences of commuting dependencies.
  Gf2Matrix rows = symplectic_rows(generators, n);
  for (const BitVec& combo : rows.transposed().kernel_basis()) {
    PauliWord product(n, +1);
    for (std::size_t i = 0; i < generators.size(); ++i)
      if (combo.get(i)) product = product.multiplied(generators[i]);
    if (product.sign() < 0) {
      std::string indices;
      for (std::size_t i = 0; i < generators.size(); ++i)
        if (combo.get(i)) indices += (indices.empty() ? "" : ",") + std::to_string(i);
      throw Error(ErrorKind::MinusIdentityInGroup,
                  "a product of generators equals minus identity",
                  "{\"generators\":[" + indices + "]}");
    }
  }
}

}  // namespace

std::vector<PauliWord> normalize_group_signs(std::vector<PauliWord> generators) {
  if (generators.size() < 2) return generators;
  std::size_t n = generators.front().size();
  for (const PauliWord& g : generators)
    if (g.size() != n) return generators;
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = i + 1; j < generators.size(); ++j)
      if (!generators[i].commutes_with(generators[j])) return generators;

  // Each dependency among the rows multiplies out to +I or -I; collect the
  // sign of every basis dependency.
  std::vector<BitVec> deps =
      symplectic_rows(generators, n).transposed().kernel_basis();
  if (deps.empty()) return generators;
  std::vector<bool> wants_flip(deps.size(), false);
  bool any = false;
  for (std::size_t b = 0; b < deps.size(); ++b) {
    PauliWord product(n, +1);
    for (std::size_t i = 0; i < generators.size(); ++i)
      if (deps[b].get(i)) product = product.multiplied(generators[i]);
    wants_flip[b] = product.sign() < 0;
    any = any || wants_flip[b];
  }
  if (!any) return generators;

  // Flipping the sign of generator set J multiplies the sign of dependency S
  // by (-1)^|S ∩ J|, so J must solve B x = e over GF(2) with B the dependency
  // basis and e the minus-sign indicator.  B has full row rank, hence the
  // system is always solvable; the reduced echelon form gives the
  // deterministic particular solution supported on the pivot columns.
  std::size_t s = generators.size();
  Gf2Matrix augmented(0, s + 1);
  for (std::size_t b = 0; b < deps.size(); ++b) {
    BitVec row(s + 1);
    for (std::size_t i = 0; i < s; ++i) row.set(i, deps[b].get(i));
    row.set(s, wants_flip[b]);
    augmented.append_row(row);
  }
  Gf2Rref solved = augmented.rref();
  for (std::size_t r = 0; r < solved.pivots.size(); ++r) {
    if (solved.pivots[r] >= s) return generators;  // unreachable: full row rank
    if (solved.mat.row(r).get(s)) {
      PauliWord& g = generators[solved.pivots[r]];
      g.set_sign(-g.sign());
    }
  }
  return generators;
}

CodeParams stabilizer_params(const std::vector<PauliWord>& generators,
                             std::optional<std::size_t> qubits) {
  std::size_t n;
  if (generators.empty()) {
    if (!qubits)
      throw Error(ErrorKind::ValidationError,
                  "qubit count is required for an empty generator list");
    n = *qubits;
  } else {
    n = generators.front().size();
    if (qubits && *qubits != n)
      throw Error(ErrorKind::LengthMismatch, "explicit qubit count disagrees with generators",
                  "{\"given\":" + std::to_string(*qubits) +
                      ",\"generators\":" + std::to_string(n) + "}");
  }
  validate_generators(generators, n);

  CodeParams params;
  params.n = n;
  params.s_given = generators.size();
  params.s_independent = symplectic_rows(generators, n).rank();
  params.k = n - params.s_independent;
  params.redundancies = params.s_given - params.s_independent;
  return params;
}

std::vector<std::pair<PauliWord, PauliWord>> logical_basis(
    const std::vector<PauliWord>& generators) {
  if (generators.empty())
    throw Error(ErrorKind::ValidationError,
                "logical basis requires at least one generator to fix the qubit count");
  CodeParams params = stabilizer_params(generators);
  const std::size_t n = params.n;

  // Normalizer = kernel of the half-swapped stabilizer rows.
  Gf2Matrix swapped(0, 2 * n);
  for (const PauliWord& g : generators) swapped.append_row(swap_halves(g.symplectic()));
  std::vector<BitVec> candidates = swapped.kernel_basis();

  // Reduce candidates modulo the stabilizer row space, then pair them up by
  // symplectic Gram-Schmidt, sweeping each new pair out of the remainder.
  Gf2Eliminator span(2 * n);
  for (const PauliWord& g : generators) span.add(g.symplectic());

  std::vector<std::pair<PauliWord, PauliWord>> pairs;
  std::vector<BitVec> pool;
  for (const BitVec& c : candidates) pool.push_back(c);

  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (span.contains(pool[i])) continue;
    std::size_t partner = SIZE_MAX;
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      if (span.contains(pool[j])) continue;
      if (symplectic_product(pool[i], pool[j])) {
        partner = j;
        break;
      }
    }
    if (partner == SIZE_MAX)
      throw Error(ErrorKind::ValidationError,
                  "normalizer element with no anticommuting partner");
    BitVec u = pool[i], w = pool[partner];
    for (std::size_t j = 0; j < pool.size(); ++j) {
      if (j == i || j == partner) continue;
      if (symplectic_product(pool[j], w)) pool[j] ^= u;
      if (symplectic_product(pool[j], u)) pool[j] ^= w;
    }
    span.add(u);
    span.add(w);
    pairs.emplace_back(PauliWord::from_symplectic(u), PauliWord::from_symplectic(w));
  }
  if (pairs.size() != params.k)
    throw Error(ErrorKind::ValidationError, "logical pairing does not match n - rank");
  return pairs;
}

namespace {

struct DistanceSearch {
  std::size_t n = 0;
  Gf2Eliminator* stabilizer_span;
  // letters[q][t] = syndrome bits of the single-qubit letter t at qubit q.
  // Letter order X, Z, Y keeps conventional CSS witnesses first.
  std::vector<std::array<BitVec, 3>> letter_syndromes;
  static constexpr char kLetters[3] = {'X', 'Z', 'Y'};

  std::optional<PauliWord> found;

  void search(PauliWord& word, BitVec& synd, std::size_t next_qubit, std::size_t remaining) {
    if (found) return;
    if (remaining == 0) {
      if (synd.any()) return;
      if (stabilizer_span->contains(word.symplectic())) return;
      found = word;
      return;
    }
    if (next_qubit + remaining > n) return;
    for (std::size_t q = next_qubit; q + remaining <= n; ++q) {
      for (int t = 0; t < 3; ++t) {
        word.set_letter(q, kLetters[t]);
        synd ^= letter_syndromes[q][t];
        search(word, synd, q + 1, remaining - 1);
        synd ^= letter_syndromes[q][t];
        word.set_letter(q, 'I');
        if (found) return;
      }
    }
  }
};

}  // namespace

DistanceResult min_distance(const std::vector<PauliWord>& generators, std::size_t weight_cap) {
  CodeParams params = stabilizer_params(generators);
  if (params.k == 0)
    throw Error(ErrorKind::ZeroLogicalQubits,
                "distance is undefined for a code with no logical qubits");

  DistanceSearch search;
  search.n = params.n;
  Gf2Eliminator span(2 * params.n);
  for (const PauliWord& g : generators) span.add(g.symplectic());
  search.stabilizer_span = &span;
  search.letter_syndromes.resize(params.n);
  for (std::size_t q = 0; q < params.n; ++q) {
    for (int t = 0; t < 3; ++t) {
      PauliWord single(params.n);
      single.set_letter(q, DistanceSearch::kLetters[t]);
      search.letter_syndromes[q][t] = syndrome(generators, single);
    }
  }

  DistanceResult result;
  result.cap = weight_cap;
  for (std::size_t w = 1; w <= weight_cap; ++w) {
    PauliWord word(params.n);
    BitVec synd(generators.size());
    search.search(word, synd, 0, w);
    if (search.found) {
      result.distance = w;
      result.witness = search.found;
      return result;
    }
  }
  return result;
}

}  // namespace homcode
