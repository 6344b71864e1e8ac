#include "homcode/label_set.hpp"

#include <algorithm>
#include <array>

#include "homcode/error.hpp"

namespace homcode {

namespace {

int letter_rank(char c) {
  switch (c) {
    case 'X': return 0;
    case 'Z': return 1;
    case 'Y': return 2;
    default: return 3;
  }
}

bool entry_less(const std::string& a, const std::string& b) {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(),
      [](char x, char y) { return letter_rank(x) < letter_rank(y); });
}

bool label_set_less(const LabelSet& a, const LabelSet& b) {
  return std::lexicographical_compare(
      a.entries.begin(), a.entries.end(), b.entries.begin(), b.entries.end(),
      [](const std::string& x, const std::string& y) { return entry_less(x, y); });
}

const std::array<std::array<char, 3>, 6>& letter_permutations() {
  // Images of (X, Y, Z) in order.
  static const std::array<std::array<char, 3>, 6> perms = {{{'X', 'Y', 'Z'},
                                                            {'X', 'Z', 'Y'},
                                                            {'Y', 'X', 'Z'},
                                                            {'Y', 'Z', 'X'},
                                                            {'Z', 'X', 'Y'},
                                                            {'Z', 'Y', 'X'}}};
  return perms;
}

char apply_perm(const std::array<char, 3>& perm, char c) {
  switch (c) {
    case 'X': return perm[0];
    case 'Y': return perm[1];
    default: return perm[2];
  }
}

LabelSet apply_letters(const std::array<char, 3>& perm, const LabelSet& labels) {
  LabelSet out = labels;
  for (std::string& entry : out.entries)
    for (char& c : entry) c = apply_perm(perm, c);
  return out;
}

LabelSet rotate(const LabelSet& labels, std::size_t by) {
  LabelSet out;
  std::size_t n = labels.entries.size();
  out.entries.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.entries.push_back(labels.entries[(i + by) % n]);
  return out;
}

LabelSet swap_all_pairs(const LabelSet& labels) {
  LabelSet out = labels;
  for (std::string& entry : out.entries)
    if (entry.size() == 2) std::swap(entry[0], entry[1]);
  return out;
}

template <typename Fn>
void for_each_per_entry_swap(const LabelSet& labels, Fn&& fn) {
  std::vector<std::size_t> pair_slots;
  for (std::size_t i = 0; i < labels.entries.size(); ++i)
    if (labels.entries[i].size() == 2) pair_slots.push_back(i);
  for (std::size_t mask = 0; mask < (std::size_t{1} << pair_slots.size()); ++mask) {
    LabelSet variant = labels;
    for (std::size_t b = 0; b < pair_slots.size(); ++b)
      if (mask & (std::size_t{1} << b)) {
        std::string& entry = variant.entries[pair_slots[b]];
        std::swap(entry[0], entry[1]);
      }
    fn(variant);
  }
}

LabelSet minimize(const LabelSet& labels, bool per_entry_swaps) {
  if (labels.entries.empty()) return labels;
  LabelSet best;
  bool have = false;
  auto consider = [&](const LabelSet& candidate) {
    if (!have || label_set_less(candidate, best)) {
      best = candidate;
      have = true;
    }
  };
  for (const auto& perm : letter_permutations()) {
    LabelSet mapped = apply_letters(perm, labels);
    for (std::size_t r = 0; r < mapped.entries.size(); ++r) {
      LabelSet rotated = rotate(mapped, r);
      if (per_entry_swaps) {
        for_each_per_entry_swap(rotated, consider);
      } else {
        consider(rotated);
        consider(swap_all_pairs(rotated));
      }
    }
  }
  return best;
}

}  // namespace

void validate_label_set(const LabelSet& labels) {
  if (labels.entries.empty())
    throw Error(ErrorKind::MalformedLabelSet, "label set has no entries");
  for (const std::string& entry : labels.entries) {
    if (entry.empty() || entry.size() > 2)
      throw Error(ErrorKind::MalformedLabelSet,
                  "label entry must hold one or two letters, got \"" + entry + "\"");
    for (char c : entry)
      if (c != 'X' && c != 'Y' && c != 'Z')
        throw Error(ErrorKind::MalformedLabelSet,
                    std::string("label entry letter must be X, Y or Z, got '") + c + "'");
    if (entry.size() == 2 && entry[0] == entry[1])
      throw Error(ErrorKind::MalformedLabelSet,
                  "two-letter label entry must use distinct letters, got \"" + entry + "\"");
  }
}

LabelSet canonical_label_set(const LabelSet& labels) {
  validate_label_set(labels);
  return minimize(labels, /*per_entry_swaps=*/false);
}

bool label_sets_equivalent(const LabelSet& a, const LabelSet& b) {
  return canonical_label_set(a) == canonical_label_set(b);
}

LabelSet enriched_canonical_label_set(const LabelSet& labels) {
  validate_label_set(labels);
  return minimize(labels, /*per_entry_swaps=*/true);
}

namespace {

// Slots i and j around a valence-v vertex belong to faces sharing an edge at
// the vertex exactly when they are cyclically consecutive.
bool slots_adjacent(std::size_t i, std::size_t j, std::size_t v) {
  std::size_t diff = (i + v - j) % v;
  return diff == 1 || diff == v - 1;
}

bool at_least_two_letter_types(const LabelSet& labels) {
  bool seen[3] = {false, false, false};
  for (const std::string& entry : labels.entries)
    for (char c : entry) seen[letter_rank(c)] = true;
  return int(seen[0]) + int(seen[1]) + int(seen[2]) >= 2;
}

// Generators of faces that meet the vertex without sharing an edge there
// overlap on that single qubit only, so commutation forces all their letters
// at the vertex to coincide.
bool non_adjacent_letters_equal(const LabelSet& labels) {
  std::size_t v = labels.entries.size();
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = i + 1; j < v; ++j) {
      if (slots_adjacent(i, j, v)) continue;
      for (char a : labels.entries[i])
        for (char b : labels.entries[j])
          if (a != b) return false;
    }
  return true;
}

std::vector<LabelSet> dedupe_and_sort(const std::vector<LabelSet>& raw) {
  std::vector<LabelSet> classes;
  for (const LabelSet& ls : raw) {
    LabelSet canon = enriched_canonical_label_set(ls);
    if (std::find(classes.begin(), classes.end(), canon) == classes.end())
      classes.push_back(canon);
  }
  std::sort(classes.begin(), classes.end(), label_set_less);
  return classes;
}

}  // namespace

std::vector<LabelSet> enumerate_label_classes(std::size_t valence, std::size_t gens_per_face) {
  if (valence < 2 || valence > 5)
    throw Error(ErrorKind::ConstraintViolation, "valence must lie in 2..5",
                "{\"valence\":" + std::to_string(valence) + "}");
  if (gens_per_face < 1 || gens_per_face > 2)
    throw Error(ErrorKind::ConstraintViolation, "generators per face must be 1 or 2",
                "{\"gens_per_face\":" + std::to_string(gens_per_face) + "}");

  // Counting constraints beyond the local rules.  A 2-valent bulk vertex
  // forces the polygon family: its single covered face carries the pair
  // {X, Z} and the opposite face stays empty, so the only class is the
  // one-entry set.  On 3-valent maps one generator per face leaves the
  // logical count growing with system size, so only two generators per face
  // qualify; the converse holds on 4- and 5-valent maps, where the local
  // rules below eliminate every two-generator assignment.
  if (valence == 2) {
    if (gens_per_face == 2) return {LabelSet{{"XZ"}}};
    return {};
  }
  if (valence == 3 && gens_per_face == 1) return {};

  std::vector<std::string> alphabet;
  if (gens_per_face == 1) {
    alphabet = {"X", "Z", "Y"};
  } else {
    alphabet = {"XZ", "ZX", "XY", "YX", "ZY", "YZ"};
  }

  std::vector<LabelSet> valid;
  std::vector<std::size_t> pick(valence, 0);
  while (true) {
    LabelSet candidate;
    for (std::size_t i = 0; i < valence; ++i) candidate.entries.push_back(alphabet[pick[i]]);
    if (non_adjacent_letters_equal(candidate) && at_least_two_letter_types(candidate))
      valid.push_back(candidate);
    std::size_t pos = 0;
    while (pos < valence && ++pick[pos] == alphabet.size()) pick[pos++] = 0;
    if (pos == valence) break;
  }
  return dedupe_and_sort(valid);
}

}  // namespace homcode
