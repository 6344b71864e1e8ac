#include "homcode/hsc.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "homcode/error.hpp"

namespace homcode {

namespace {

std::string pair_json(const char* a, std::size_t va, const char* b, std::size_t vb) {
  std::ostringstream out;
  out << "{\"" << a << "\":" << va << ",\"" << b << "\":" << vb << "}";
  return out.str();
}

// Position of every dart inside its face cycle.
std::vector<std::size_t> dart_face_positions(const CombinatorialMap& map) {
  std::vector<std::size_t> pos(map.dart_count(), 0);
  for (const auto& cycle : map.face_cycles())
    for (std::size_t p = 0; p < cycle.size(); ++p) pos[cycle[p]] = p;
  return pos;
}

struct LetterBits {
  int x = 0, z = 0;
};

LetterBits letter_bits(char c) {
  switch (c) {
    case 'X': return {1, 0};
    case 'Y': return {1, 1};
    case 'Z': return {0, 1};
    default: return {0, 0};
  }
}

char bits_letter(int x, int z) {
  if (x && z) return 'Y';
  if (x) return 'X';
  if (z) return 'Z';
  return 'I';
}

void validate_face_entries(const CombinatorialMap& map, std::vector<FaceGenerators>& faces) {
  std::sort(faces.begin(), faces.end(),
            [](const FaceGenerators& a, const FaceGenerators& b) { return a.face < b.face; });
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const FaceGenerators& entry = faces[i];
    if (entry.face >= map.face_count())
      throw Error(ErrorKind::MalformedGenerators, "generator entry names a missing face",
                  "{\"face\":" + std::to_string(entry.face) + "}");
    if (i > 0 && faces[i - 1].face == entry.face)
      throw Error(ErrorKind::MalformedGenerators, "duplicate generator entry for a face",
                  "{\"face\":" + std::to_string(entry.face) + "}");
    if (entry.gens.empty() || entry.gens.size() > 2)
      throw Error(ErrorKind::MalformedGenerators,
                  "a face carries one or two generators",
                  pair_json("face", entry.face, "gens", entry.gens.size()));
    for (const std::string& gen : entry.gens) {
      if (gen.size() != map.face_length(entry.face))
        throw Error(ErrorKind::MalformedGenerators,
                    "generator length must equal the face length",
                    pair_json("face", entry.face, "length", gen.size()));
      for (char c : gen)
        if (c != 'X' && c != 'Y' && c != 'Z')
          throw Error(ErrorKind::MalformedGenerators,
                      std::string("generator letters must be X, Y or Z, got '") + c + "'",
                      "{\"face\":" + std::to_string(entry.face) + "}");
    }
  }
}

std::map<std::size_t, const FaceGenerators*> face_lookup(const std::vector<FaceGenerators>& faces) {
  std::map<std::size_t, const FaceGenerators*> lookup;
  for (const FaceGenerators& entry : faces) lookup[entry.face] = &entry;
  return lookup;
}

}  // namespace

PauliWord face_generator_word(const CombinatorialMap& map, const FaceGenerators& entry,
                              std::size_t slot) {
  if (slot >= entry.gens.size())
    throw Error(ErrorKind::NoSuchGenerator, "face has no generator at this slot",
                pair_json("face", entry.face, "slot", slot));
  const std::vector<Dart>& cycle = map.face_cycles().at(entry.face);
  const std::string& gen = entry.gens[slot];
  if (gen.size() != cycle.size())
    throw Error(ErrorKind::MalformedGenerators, "generator length must equal the face length",
                pair_json("face", entry.face, "length", gen.size()));
  PauliWord word(map.vertex_count());
  int phase = 0;  // exponent of i, mod 4
  for (std::size_t p = 0; p < cycle.size(); ++p) {
    if (gen[p] != 'X' && gen[p] != 'Y' && gen[p] != 'Z')
      throw Error(ErrorKind::MalformedGenerators,
                  std::string("generator letters must be X, Y or Z, got '") + gen[p] + "'",
                  pair_json("face", entry.face, "slot", slot));
    std::size_t q = map.vertex_of(cycle[p]);
    LetterBits cur = letter_bits(word.letter(q));
    LetterBits add = letter_bits(gen[p]);
    int x3 = cur.x ^ add.x, z3 = cur.z ^ add.z;
    phase = (phase + cur.x * cur.z + add.x * add.z + 2 * cur.z * add.x - x3 * z3 + 8) % 4;
    word.set_letter(q, bits_letter(x3, z3));
  }
  if (phase % 2 != 0)
    throw Error(ErrorKind::MalformedGenerators,
                "face letters multiply to an imaginary phase at a repeated vertex",
                pair_json("face", entry.face, "slot", slot));
  word.set_sign(phase == 2 ? -1 : +1);
  return word;
}

std::vector<PauliWord> code_generators(const HscCode& code,
                                       std::vector<std::pair<std::size_t, std::size_t>>* index) {
  std::vector<PauliWord> words;
  if (index) index->clear();
  for (const FaceGenerators& entry : code.faces)
    for (std::size_t s = 0; s < entry.gens.size(); ++s) {
      words.push_back(face_generator_word(code.map, entry, s));
      if (index) index->emplace_back(entry.face, s);
    }
  // A letter assignment fixes each generator only up to sign; choose the
  // signs so that no product of generators is minus identity (some label
  // classes need a flip on lattices whose qubit count is 2 mod 4).
  return normalize_group_signs(std::move(words));
}

LabelSet vertex_label_set(const HscCode& code, std::size_t vertex) {
  if (vertex >= code.map.vertex_count())
    throw Error(ErrorKind::ValidationError, "vertex id out of range");
  auto lookup = face_lookup(code.faces);
  std::vector<std::size_t> pos = dart_face_positions(code.map);
  const std::vector<Dart>& darts = code.map.vertex_cycles()[vertex];

  std::size_t start = SIZE_MAX;
  std::size_t best_face = SIZE_MAX;
  Dart best_dart = 0;
  for (std::size_t i = 0; i < darts.size(); ++i) {
    std::size_t f = code.map.face_of(darts[i]);
    if (!lookup.count(f)) continue;
    if (start == SIZE_MAX || f < best_face || (f == best_face && darts[i] < best_dart)) {
      start = i;
      best_face = f;
      best_dart = darts[i];
    }
  }
  if (start == SIZE_MAX)
    throw Error(ErrorKind::MalformedLabelSet, "vertex sees no generator-carrying face",
                "{\"vertex\":" + std::to_string(vertex) + "}");

  LabelSet labels;
  for (std::size_t i = 0; i < darts.size(); ++i) {
    Dart d = darts[(start + i) % darts.size()];
    std::size_t f = code.map.face_of(d);
    auto it = lookup.find(f);
    if (it == lookup.end()) continue;
    std::string entry;
    for (const std::string& gen : it->second->gens) entry.push_back(gen[pos[d]]);
    labels.entries.push_back(std::move(entry));
  }
  return labels;
}

namespace {

AdmissibilityResult rejected(std::string rule, std::string witness, std::string message) {
  AdmissibilityResult result;
  result.rejection = Rejection{std::move(rule), std::move(witness), std::move(message)};
  return result;
}

}  // namespace

AdmissibilityResult check_admissibility(const CombinatorialMap& map,
                                        std::vector<FaceGenerators> faces) {
  validate_face_entries(map, faces);

  // Rule I: generators correspond to the faces.  A 2-valent cycle may leave
  // one of its two faces empty (polygon family); everything else must be
  // fully covered.
  std::vector<bool> covered(map.face_count(), false);
  for (const FaceGenerators& entry : faces) covered[entry.face] = true;
  std::vector<std::size_t> uncovered;
  for (std::size_t f = 0; f < map.face_count(); ++f)
    if (!covered[f]) uncovered.push_back(f);
  bool polygon = map.uniform_valence() == 2 && map.face_count() == 2 && faces.size() == 1 &&
                 faces.front().gens.size() == 2;
  if (!uncovered.empty() && !polygon) {
    std::string list;
    for (std::size_t f : uncovered) list += (list.empty() ? "" : ",") + std::to_string(f);
    return rejected("I", "{\"uncovered_faces\":[" + list + "]}",
                    "every face must carry generators");
  }

  for (const FaceGenerators& entry : faces) {
    if (entry.gens.size() == 2) {
      if (map.face_length(entry.face) % 2 != 0)
        return rejected("I", "{\"face\":" + std::to_string(entry.face) + "}",
                        "a two-generator face must have even length");
      for (std::size_t p = 0; p < entry.gens[0].size(); ++p)
        if (entry.gens[0][p] == entry.gens[1][p])
          return rejected("I", pair_json("face", entry.face, "position", p),
                          "paired generators must differ at every vertex");
    }
  }

  // Induced words; support must be exactly the vertices of the face.
  std::vector<PauliWord> words;
  std::vector<std::pair<std::size_t, std::size_t>> index;
  for (const FaceGenerators& entry : faces) {
    for (std::size_t s = 0; s < entry.gens.size(); ++s) {
      PauliWord word = face_generator_word(map, entry, s);
      for (Dart d : map.face_cycles()[entry.face]) {
        std::size_t q = map.vertex_of(d);
        if (word.letter(q) == 'I')
          return rejected("I", pair_json("face", entry.face, "vertex", q),
                          "letters cancel at a repeated vertex, shrinking the support");
      }
      words.push_back(std::move(word));
      index.emplace_back(entry.face, s);
    }
  }

  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j)
      if (!words[i].commutes_with(words[j])) {
        std::ostringstream out;
        out << "{\"first\":{\"face\":" << index[i].first << ",\"slot\":" << index[i].second
            << "},\"second\":{\"face\":" << index[j].first << ",\"slot\":" << index[j].second
            << "}}";
        return rejected("commutation", out.str(), "generators do not pairwise commute");
      }

  // Rules IIA and III via the vertex label sets.
  HscCode draft;
  draft.map = map;
  draft.faces = faces;
  std::optional<LabelSet> reference;
  for (std::size_t v = 0; v < map.vertex_count(); ++v) {
    LabelSet labels = vertex_label_set(draft, v);
    std::set<char> kinds;
    for (const std::string& entry : labels.entries)
      for (char c : entry) kinds.insert(c);
    if (kinds.size() < 2)
      return rejected("IIA", "{\"vertex\":" + std::to_string(v) + "}",
                      "a vertex must see at least two letter types");
    LabelSet canon = enriched_canonical_label_set(labels);
    if (!reference) {
      reference = canon;
    } else if (canon != *reference) {
      return rejected("III", "{\"vertex\":" + std::to_string(v) + "}",
                      "all vertices must share one label class");
    }
  }

  // Rule II: the logical count must match the genus, and bulk-sized codes
  // must not carry weight-2 logicals.  Signs are normalized first: a letter
  // assignment fixes generators only up to sign, and some assignments need a
  // flip to keep minus identity out of the group.
  words = normalize_group_signs(std::move(words));
  CodeParams params = stabilizer_params(words, map.vertex_count());
  if (polygon) {
    if (params.k != map.vertex_count() - 2)
      return rejected("II", pair_json("k", params.k, "expected", map.vertex_count() - 2),
                      "polygon logical count must be n - 2");
    draft.family = "Polygon";
    AdmissibilityResult result;
    result.code = std::move(draft);
    return result;
  }

  std::size_t genus = euler_genus(map).genus;
  bool any_single = false, any_double = false;
  for (const FaceGenerators& entry : faces)
    (entry.gens.size() == 1 ? any_single : any_double) = true;
  std::vector<std::size_t> expected;
  if (any_single) expected.push_back(2 * genus);
  if (any_double) expected.push_back(4 * genus);
  expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
  if (std::find(expected.begin(), expected.end(), params.k) == expected.end()) {
    std::string list;
    for (std::size_t e : expected) list += (list.empty() ? "" : ",") + std::to_string(e);
    return rejected("II", "{\"k\":" + std::to_string(params.k) + ",\"expected\":[" + list + "]}",
                    "logical count does not match the genus");
  }
  if (map.vertex_count() >= kBulkMinQubits && params.k >= 1) {
    DistanceResult floor = min_distance(words, 2);
    if (floor.distance)
      return rejected("II",
                      "{\"logical_weight\":" + std::to_string(*floor.distance) +
                          ",\"witness\":\"" + floor.witness->to_string() + "\"}",
                      "bulk code carries a local logical operator");
  }

  draft.family = "custom";
  AdmissibilityResult result;
  result.code = std::move(draft);
  return result;
}

HscCode build_ktc(const CombinatorialMap& map) {
  FaceColoring coloring = face_coloring(map, 2);
  std::vector<FaceGenerators> faces;
  for (std::size_t f = 0; f < map.face_count(); ++f) {
    char letter = coloring.color_of_face[f] == 0 ? 'X' : 'Z';
    faces.push_back({f, {std::string(map.face_length(f), letter)}});
  }
  AdmissibilityResult result = check_admissibility(map, std::move(faces));
  if (!result.admissible())
    throw Error(ErrorKind::ValidationError,
                "two-colored construction failed admissibility: " + result.rejection->message,
                result.rejection->witness);
  HscCode code = std::move(*result.code);
  code.coloring = std::move(coloring);
  code.family = "KTC";
  return code;
}

HscCode build_tcc(const CombinatorialMap& map, int class_index) {
  if (class_index < 1 || class_index > 3)
    throw Error(ErrorKind::ConstraintViolation, "label class index must be 1, 2 or 3",
                "{\"class\":" + std::to_string(class_index) + "}");
  static const std::array<std::array<const char*, 3>, 3> kClassPairs = {{
      {"XZ", "XZ", "XZ"},
      {"XZ", "XZ", "XY"},
      {"XZ", "XY", "ZY"},
  }};
  const auto& pairs = kClassPairs[class_index - 1];
  FaceColoring coloring = face_coloring(map, 3);
  std::vector<FaceGenerators> faces;
  for (std::size_t f = 0; f < map.face_count(); ++f) {
    const char* pair = pairs[coloring.color_of_face[f]];
    std::size_t len = map.face_length(f);
    faces.push_back({f, {std::string(len, pair[0]), std::string(len, pair[1])}});
  }
  AdmissibilityResult result = check_admissibility(map, std::move(faces));
  if (!result.admissible())
    throw Error(ErrorKind::ValidationError,
                "three-colored construction failed admissibility: " + result.rejection->message,
                result.rejection->witness);
  HscCode code = std::move(*result.code);
  code.coloring = std::move(coloring);
  code.family = "TCC";
  code.tcc_class = class_index;
  return code;
}

Classification classify(const CombinatorialMap& map) {
  if (map.dart_count() == 0)
    throw Error(ErrorKind::DegenerateParameters, "cannot classify the empty map");
  if (!map.connected())
    throw Error(ErrorKind::Disconnected, "classification requires a connected map");

  Classification result;
  for (std::size_t v = 0; v < map.vertex_count(); ++v)
    if (map.valence(v) >= 5) {
      result.family = "Inadmissible";
      result.reason = "valence>=5";
      result.witness = pair_json("vertex", v, "valence", map.valence(v));
      return result;
    }
  for (std::size_t v = 0; v < map.vertex_count(); ++v)
    if (map.valence(v) == 1) {
      result.family = "Inadmissible";
      result.reason = "1-valent";
      result.witness = "{\"vertex\":" + std::to_string(v) + "}";
      return result;
    }
  std::size_t uniform = map.uniform_valence();
  if (uniform == 0) {
    result.family = "Inadmissible";
    result.reason = "mixed-valence";
    std::string list;
    for (const auto& [valence, count] : map.valence_profile())
      list += (list.empty() ? "" : ",") + std::to_string(valence);
    result.witness = "{\"valences\":[" + list + "]}";
    return result;
  }

  if (uniform == 2) {
    std::size_t length = map.vertex_count();
    if (length % 2 != 0) {
      result.family = "Inadmissible";
      result.reason = "odd-polygon";
      result.witness = "{\"length\":" + std::to_string(length) + "}";
      return result;
    }
    std::size_t len0 = map.face_length(0);
    std::vector<FaceGenerators> faces{
        {0, {std::string(len0, 'X'), std::string(len0, 'Z')}}};
    AdmissibilityResult adm = check_admissibility(map, std::move(faces));
    if (!adm.admissible())
      throw Error(ErrorKind::ValidationError,
                  "polygon construction failed admissibility: " + adm.rejection->message,
                  adm.rejection->witness);
    result.family = "PolygonCode";
    result.code = std::move(*adm.code);
    result.params = stabilizer_params(code_generators(*result.code), length);
    if (result.params->k >= 1) result.params->d = 2;
    return result;
  }

  if (uniform == 4) {
    try {
      result.code = build_ktc(map);
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::NotColorable) throw;
      result.family = "Inadmissible";
      result.reason = "4-valent-not-2-face-colorable";
      result.witness = err.detail();
      return result;
    }
    result.family = "KTC";
    result.params = stabilizer_params(code_generators(*result.code), map.vertex_count());
    return result;
  }

  if (uniform == 3) {
    try {
      result.code = build_tcc(map, 1);
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::NotColorable) throw;
      result.family = "Inadmissible";
      result.reason = "4-colorable-3-valent";
      result.witness = err.detail();
      return result;
    }
    result.family = "TCC";
    result.classes = {1, 2, 3};
    result.params = stabilizer_params(code_generators(*result.code), map.vertex_count());
    return result;
  }

  result.family = "Inadmissible";
  result.reason = "mixed-valence";
  result.witness = "{\"uniform_valence\":" + std::to_string(uniform) + "}";
  return result;
}

namespace {

std::vector<bool> vertex_mask(const CombinatorialMap& map, const std::vector<std::size_t>& set) {
  std::vector<bool> mask(map.vertex_count(), set.empty());
  for (std::size_t v : set) {
    if (v >= map.vertex_count())
      throw Error(ErrorKind::ValidationError, "transform names a missing vertex",
                  "{\"vertex\":" + std::to_string(v) + "}");
    mask[v] = true;
  }
  return mask;
}

}  // namespace

HscCode apply_label_transform(const HscCode& code, const LabelTransform& transform) {
  HscCode out = code;
  const CombinatorialMap& map = code.map;
  std::vector<std::size_t> pos = dart_face_positions(map);
  std::map<std::size_t, FaceGenerators*> lookup;
  for (FaceGenerators& entry : out.faces) lookup[entry.face] = &entry;

  bool structural_change = true;
  if (const auto* perm = std::get_if<LetterPermTransform>(&transform)) {
    std::array<char, 3> sorted = perm->images;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::array<char, 3>{'X', 'Y', 'Z'})
      throw Error(ErrorKind::CountChangingTransform,
                  "letter map must be a bijection of {X, Y, Z}",
                  std::string("{\"images\":\"") + perm->images[0] + perm->images[1] +
                      perm->images[2] + "\"}");
    std::vector<bool> mask = vertex_mask(map, perm->vertices);
    auto image = [&](char c) {
      return c == 'X' ? perm->images[0] : (c == 'Y' ? perm->images[1] : perm->images[2]);
    };
    for (FaceGenerators& entry : out.faces) {
      const std::vector<Dart>& cycle = map.face_cycles()[entry.face];
      for (std::string& gen : entry.gens)
        for (std::size_t p = 0; p < gen.size(); ++p)
          if (mask[map.vertex_of(cycle[p])]) gen[p] = image(gen[p]);
    }
  } else if (const auto* rot = std::get_if<RotationTransform>(&transform)) {
    std::vector<bool> mask = vertex_mask(map, rot->vertices);
    for (std::size_t v = 0; v < map.vertex_count(); ++v) {
      if (!mask[v]) continue;
      const std::vector<Dart>& darts = map.vertex_cycles()[v];
      std::size_t m = darts.size();
      std::vector<std::string> tuples(m);
      for (std::size_t i = 0; i < m; ++i) {
        auto it = lookup.find(map.face_of(darts[i]));
        if (it == lookup.end()) continue;
        for (const std::string& gen : it->second->gens) tuples[i].push_back(gen[pos[darts[i]]]);
      }
      for (std::size_t i = 0; i < m; ++i) {
        std::size_t target = (i + rot->steps) % m;
        if (tuples[i].size() != tuples[target].size())
          throw Error(ErrorKind::CountChangingTransform,
                      "rotation moves letters between corners of unequal generator count",
                      "{\"vertex\":" + std::to_string(v) + "}");
      }
      for (std::size_t i = 0; i < m; ++i) {
        std::size_t target = (i + rot->steps) % m;
        auto it = lookup.find(map.face_of(darts[target]));
        if (it == lookup.end()) continue;
        for (std::size_t s = 0; s < it->second->gens.size(); ++s)
          it->second->gens[s][pos[darts[target]]] = tuples[i][s];
      }
    }
  } else {
    for (FaceGenerators& entry : out.faces)
      if (entry.gens.size() == 2) std::swap(entry.gens[0], entry.gens[1]);
    structural_change = false;
  }

  std::vector<std::pair<std::size_t, std::size_t>> index;
  std::vector<PauliWord> words = code_generators(out, &index);
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j)
      if (!words[i].commutes_with(words[j])) {
        std::ostringstream detail;
        detail << "{\"first\":{\"face\":" << index[i].first << ",\"slot\":" << index[i].second
               << "},\"second\":{\"face\":" << index[j].first << ",\"slot\":" << index[j].second
               << "}}";
        throw Error(ErrorKind::TransformBreaksCommutation,
                    "transformed generators no longer commute", detail.str());
      }
  if (structural_change) {
    out.family = "custom";
    out.tcc_class.reset();
  }
  return out;
}

std::vector<Excitation> excitations(const HscCode& code, const PauliWord& error) {
  std::vector<std::pair<std::size_t, std::size_t>> index;
  std::vector<PauliWord> words = code_generators(code, &index);
  BitVec pattern = syndrome(words, error);
  std::map<std::size_t, const FaceGenerators*> lookup = face_lookup(code.faces);
  std::vector<Excitation> list;
  for (std::size_t j = 0; j < words.size(); ++j) {
    if (!pattern.get(j)) continue;
    Excitation ex;
    ex.face = index[j].first;
    ex.slot = index[j].second;
    const std::string& gen = lookup.at(ex.face)->gens.at(ex.slot);
    ex.generator_type = gen.empty() ? 'M' : gen.front();
    for (char c : gen)
      if (c != ex.generator_type) {
        ex.generator_type = 'M';
        break;
      }
    if (code.coloring) ex.color = code.coloring->color_of_face[ex.face];
    list.push_back(ex);
  }
  return list;
}

}  // namespace homcode
