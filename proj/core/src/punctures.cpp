#include "homcode/punctures.hpp"

#include <algorithm>

#include "homcode/error.hpp"
#include "homcode/stabilizer.hpp"

namespace homcode {

namespace {

std::string pair_json(std::size_t face, std::size_t slot) {
  return "{\"face\":" + std::to_string(face) + ",\"slot\":" + std::to_string(slot) + "}";
}

const FaceGenerators* find_face(const HscCode& code, std::size_t face) {
  for (const FaceGenerators& entry : code.faces)
    if (entry.face == face) return &entry;
  return nullptr;
}

void add_removals(PuncturedCode& punctured, std::size_t face,
                  const std::vector<std::size_t>& slots) {
  if (!punctured.base.coloring)
    throw Error(ErrorKind::ValidationError,
                "puncturing requires a face-colored code (holes are registered by color)");
  const FaceGenerators* entry = find_face(punctured.base, face);
  if (!entry)
    throw Error(ErrorKind::NoSuchGenerator, "no generators on this face",
                "{\"face\":" + std::to_string(face) + "}");
  if (slots.empty())
    throw Error(ErrorKind::NoSuchGenerator, "no slots named for the puncture",
                "{\"face\":" + std::to_string(face) + "}");
  for (std::size_t slot : slots) {
    if (slot >= entry->gens.size())
      throw Error(ErrorKind::NoSuchGenerator, "face has no generator at this slot",
                  pair_json(face, slot));
    std::pair<std::size_t, std::size_t> key{face, slot};
    if (std::find(punctured.removed.begin(), punctured.removed.end(), key) !=
        punctured.removed.end())
      throw Error(ErrorKind::NoSuchGenerator, "generator already removed",
                  pair_json(face, slot));
    punctured.removed.push_back(key);
  }
  std::sort(punctured.removed.begin(), punctured.removed.end());
}

}  // namespace

PuncturedCode puncture(const HscCode& code, std::size_t face,
                       const std::vector<std::size_t>& slots) {
  PuncturedCode punctured;
  punctured.base = code;
  add_removals(punctured, face, slots);
  return punctured;
}

PuncturedCode puncture(const PuncturedCode& previous, std::size_t face,
                       const std::vector<std::size_t>& slots) {
  PuncturedCode punctured = previous;
  add_removals(punctured, face, slots);
  return punctured;
}

std::vector<PauliWord> remaining_generators(const PuncturedCode& punctured) {
  std::vector<PauliWord> words;
  for (const FaceGenerators& entry : punctured.base.faces)
    for (std::size_t s = 0; s < entry.gens.size(); ++s) {
      std::pair<std::size_t, std::size_t> key{entry.face, s};
      if (std::binary_search(punctured.removed.begin(), punctured.removed.end(), key)) continue;
      words.push_back(face_generator_word(punctured.base.map, entry, s));
    }
  return words;
}

namespace {

const char* color_name(int color) {
  switch (color) {
    case 0: return "red";
    case 1: return "green";
    case 2: return "blue";
    default: return "uncolored";
  }
}

}  // namespace

HoleCounts hole_logical_count(const PuncturedCode& punctured) {
  HoleCounts counts;
  const HscCode& base = punctured.base;
  for (const auto& [face, slot] : punctured.removed) {
    const FaceGenerators* entry = find_face(base, face);
    int color = base.coloring ? base.coloring->color_of_face[face] : -1;
    std::string key = color_name(color);
    if (entry->gens.size() > 1) {
      const std::string& gen = entry->gens[slot];
      char letter = gen.empty() ? '?' : gen.front();
      for (char c : gen)
        if (c != letter) letter = '?';
      key += std::string("/") + letter;
    }
    counts.holes[key] += 1;
  }
  for (const auto& [key, h] : counts.holes) {
    std::size_t l = h > 0 ? h - 1 : 0;
    counts.logicals[key] = l;
    counts.formula_total += l;
  }

  std::size_t n = base.map.vertex_count();
  counts.k_base = stabilizer_params(code_generators(base), n).k;
  counts.k_punctured = stabilizer_params(remaining_generators(punctured), n).k;
  counts.delta_k = counts.k_punctured - counts.k_base;
  return counts;
}

}  // namespace homcode
