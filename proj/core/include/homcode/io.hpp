#pragma once

#include <string>

#include "homcode/hsc.hpp"
#include "homcode/map.hpp"
#include "homcode/transforms.hpp"

namespace homcode {

// Canonical JSON for a map: {"alpha": [...], "darts": N, "meta": {...},
// "sigma": [...]} with sorted keys, compact separators and a trailing
// newline, so equal maps serialize to equal bytes.
std::string write_map(const CombinatorialMap& map);

// Parses write_map output.  Structural problems (missing keys, wrong JSON
// types) raise ParseError; well-formed arrays that fail map validation
// (range, permutation, involution, connectivity) raise ValidationError with
// the underlying kind in the detail.
CombinatorialMap read_map(const std::string& text);

// Code JSON: the map keys plus "faces": [{"face": id, "gens": ["XX..."]}],
// "family", and optional "coloring" {"palette", "colors"} / "tcc_class".
std::string write_code(const HscCode& code);

// Parses write_code output; same error split as read_map, and generator
// shapes are validated against the face cycles.
HscCode read_code(const std::string& text);

// True when the text carries the code-level keys rather than a bare map.
bool looks_like_code(const std::string& text);

// Graphviz text: vertices as nodes, edges labeled by edge id, and — when a
// coloring is supplied — one box node per face filled with its palette color
// (red, green, blue).  Deterministic ordering; an empty map yields an empty
// graph body.
std::string export_dot(const CombinatorialMap& map, const FaceColoring* coloring = nullptr);

}  // namespace homcode
