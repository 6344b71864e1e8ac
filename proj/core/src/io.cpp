#include "homcode/io.hpp"

#include <algorithm>

#include "homcode/error.hpp"
#include "json.hpp"

namespace homcode {

namespace {

using nlohmann::json;

json map_to_json(const CombinatorialMap& map) {
  json j;
  j["darts"] = map.dart_count();
  j["alpha"] = map.alpha_perm();
  j["sigma"] = map.sigma_perm();
  j["meta"] = json::object();
  for (const auto& [key, value] : map.meta()) j["meta"][key] = value;
  return j;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& err) {
    throw Error(ErrorKind::ParseError, std::string("invalid JSON: ") + err.what());
  }
}

const json& require_key(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(ErrorKind::ParseError, std::string("missing key \"") + key + "\"");
  return j.at(key);
}

std::vector<Dart> read_perm(const json& j, const char* key, std::size_t darts) {
  const json& arr = require_key(j, key);
  if (!arr.is_array())
    throw Error(ErrorKind::ParseError, std::string("\"") + key + "\" must be an array");
  if (arr.size() != darts)
    throw Error(ErrorKind::ParseError,
                std::string("\"") + key + "\" must list exactly \"darts\" entries",
                "{\"darts\":" + std::to_string(darts) + ",\"got\":" +
                    std::to_string(arr.size()) + "}");
  std::vector<Dart> out;
  out.reserve(arr.size());
  for (const json& entry : arr) {
    if (!entry.is_number_integer())
      throw Error(ErrorKind::ParseError,
                  std::string("\"") + key + "\" entries must be integers");
    long long value = entry.get<long long>();
    if (value < 0 || (unsigned long long)value >= darts)
      throw Error(ErrorKind::ValidationError,
                  std::string("\"") + key + "\" entry out of dart range",
                  "{\"value\":" + std::to_string(value) + ",\"darts\":" +
                      std::to_string(darts) + "}");
    out.push_back(Dart(value));
  }
  return out;
}

CombinatorialMap map_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "map JSON must be an object");
  const json& darts_field = require_key(j, "darts");
  if (!darts_field.is_number_integer() || darts_field.get<long long>() < 0)
    throw Error(ErrorKind::ParseError, "\"darts\" must be a non-negative integer");
  std::size_t darts = darts_field.get<std::size_t>();
  std::vector<Dart> alpha = read_perm(j, "alpha", darts);
  std::vector<Dart> sigma = read_perm(j, "sigma", darts);
  std::map<std::string, std::string> meta;
  if (j.contains("meta")) {
    const json& m = j.at("meta");
    if (!m.is_object()) throw Error(ErrorKind::ParseError, "\"meta\" must be an object");
    for (const auto& [key, value] : m.items()) {
      if (!value.is_string())
        throw Error(ErrorKind::ParseError, "\"meta\" values must be strings",
                    "{\"key\":\"" + key + "\"}");
      meta[key] = value.get<std::string>();
    }
  }
  try {
    return CombinatorialMap::build(std::move(alpha), std::move(sigma), std::move(meta));
  } catch (const Error& err) {
    throw Error(ErrorKind::ValidationError, err.what(),
                err.detail().empty()
                    ? "{\"kind\":\"" + std::string(to_string(err.kind())) + "\"}"
                    : err.detail());
  }
}

std::string dump(const json& j) { return j.dump() + "\n"; }

}  // namespace

std::string write_map(const CombinatorialMap& map) { return dump(map_to_json(map)); }

CombinatorialMap read_map(const std::string& text) { return map_from_json(parse(text)); }

std::string write_code(const HscCode& code) {
  json j = map_to_json(code.map);
  j["faces"] = json::array();
  for (const FaceGenerators& entry : code.faces) {
    json f;
    f["face"] = entry.face;
    f["gens"] = entry.gens;
    j["faces"].push_back(std::move(f));
  }
  j["family"] = code.family;
  if (code.coloring) {
    j["coloring"] = {{"palette", code.coloring->palette},
                     {"colors", code.coloring->color_of_face}};
  }
  if (code.tcc_class) j["tcc_class"] = *code.tcc_class;
  return dump(j);
}

HscCode read_code(const std::string& text) {
  json j = parse(text);
  HscCode code;
  code.map = map_from_json(j);
  const json& faces = require_key(j, "faces");
  if (!faces.is_array()) throw Error(ErrorKind::ParseError, "\"faces\" must be an array");
  for (const json& f : faces) {
    const json& face_id = require_key(f, "face");
    if (!face_id.is_number_integer() || face_id.get<long long>() < 0)
      throw Error(ErrorKind::ParseError, "\"face\" must be a non-negative integer");
    FaceGenerators entry;
    entry.face = face_id.get<std::size_t>();
    if (entry.face >= code.map.face_count())
      throw Error(ErrorKind::ValidationError, "face id out of range",
                  "{\"face\":" + std::to_string(entry.face) + ",\"faces\":" +
                      std::to_string(code.map.face_count()) + "}");
    const json& gens = require_key(f, "gens");
    if (!gens.is_array() || gens.empty())
      throw Error(ErrorKind::ParseError, "\"gens\" must be a non-empty array");
    for (const json& g : gens) {
      if (!g.is_string()) throw Error(ErrorKind::ParseError, "generators must be strings");
      std::string word = g.get<std::string>();
      if (word.size() != code.map.face_length(entry.face))
        throw Error(ErrorKind::ValidationError,
                    "generator length must match the face cycle",
                    "{\"face\":" + std::to_string(entry.face) + ",\"length\":" +
                        std::to_string(word.size()) + ",\"cycle\":" +
                        std::to_string(code.map.face_length(entry.face)) + "}");
      for (char letter : word)
        if (letter != 'X' && letter != 'Y' && letter != 'Z')
          throw Error(ErrorKind::ValidationError, "generator letters must be X, Y or Z",
                      "{\"face\":" + std::to_string(entry.face) + "}");
      entry.gens.push_back(std::move(word));
    }
    code.faces.push_back(std::move(entry));
  }
  std::sort(code.faces.begin(), code.faces.end(),
            [](const FaceGenerators& a, const FaceGenerators& b) { return a.face < b.face; });
  for (std::size_t i = 1; i < code.faces.size(); ++i)
    if (code.faces[i].face == code.faces[i - 1].face)
      throw Error(ErrorKind::ValidationError, "duplicate face entry",
                  "{\"face\":" + std::to_string(code.faces[i].face) + "}");
  if (j.contains("family")) {
    const json& family = j.at("family");
    if (!family.is_string()) throw Error(ErrorKind::ParseError, "\"family\" must be a string");
    code.family = family.get<std::string>();
  }
  if (j.contains("coloring")) {
    const json& c = j.at("coloring");
    const json& palette = require_key(c, "palette");
    const json& colors = require_key(c, "colors");
    if (!palette.is_number_integer() || !colors.is_array())
      throw Error(ErrorKind::ParseError, "\"coloring\" needs integer palette and color array");
    FaceColoring coloring;
    coloring.palette = palette.get<std::size_t>();
    if (colors.size() != code.map.face_count())
      throw Error(ErrorKind::ValidationError, "coloring must cover every face",
                  "{\"colors\":" + std::to_string(colors.size()) + ",\"faces\":" +
                      std::to_string(code.map.face_count()) + "}");
    for (const json& color : colors) {
      if (!color.is_number_integer())
        throw Error(ErrorKind::ParseError, "colors must be integers");
      long long value = color.get<long long>();
      if (value < 0 || (unsigned long long)value >= coloring.palette)
        throw Error(ErrorKind::ValidationError, "color outside the palette",
                    "{\"color\":" + std::to_string(value) + ",\"palette\":" +
                        std::to_string(coloring.palette) + "}");
      coloring.color_of_face.push_back(int(value));
    }
    code.coloring = std::move(coloring);
  }
  if (j.contains("tcc_class")) {
    const json& tc = j.at("tcc_class");
    if (!tc.is_number_integer())
      throw Error(ErrorKind::ParseError, "\"tcc_class\" must be an integer");
    code.tcc_class = tc.get<int>();
  }
  return code;
}

bool looks_like_code(const std::string& text) {
  try {
    json j = json::parse(text);
    return j.is_object() && j.contains("faces");
  } catch (const json::parse_error&) {
    return false;
  }
}

std::string export_dot(const CombinatorialMap& map, const FaceColoring* coloring) {
  static const char* kPalette[3] = {"red", "green", "blue"};
  std::string out = "graph homcode {\n";
  for (std::size_t v = 0; v < map.vertex_count(); ++v)
    out += "  v" + std::to_string(v) + ";\n";
  for (std::size_t e = 0; e < map.edge_count(); ++e) {
    auto [u, v] = map.edge_endpoints(e);
    out += "  v" + std::to_string(u) + " -- v" + std::to_string(v) + " [label=\"e" +
           std::to_string(e) + "\"];\n";
  }
  if (coloring) {
    for (std::size_t f = 0; f < map.face_count(); ++f) {
      int color = f < coloring->color_of_face.size() ? coloring->color_of_face[f] : -1;
      const char* name = (color >= 0 && color < 3) ? kPalette[color] : "gray";
      out += "  f" + std::to_string(f) + " [shape=box, style=filled, fillcolor=\"" + name +
             "\", label=\"f" + std::to_string(f) + "\"];\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace homcode
