#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace homcode {

// The cyclic sequence of generator letters a vertex sees, one entry per
// incident generator-carrying face corner in rotation order.  An entry is one
// letter (single-generator face) or two distinct letters in the face's
// declared generator order (double-generator face).
struct LabelSet {
  std::vector<std::string> entries;

  bool operator==(const LabelSet& other) const { return entries == other.entries; }
  bool operator!=(const LabelSet& other) const { return !(*this == other); }
};

// Throws MalformedLabelSet unless every entry is one or two distinct letters
// from {X, Y, Z}.
void validate_label_set(const LabelSet& labels);

// Canonical representative under the label symmetries: the 6 relabelings of
// {X, Y, Z}, cyclic rotation of the sequence, and one global swap applied to
// every two-letter entry at once.  Minimality is taken in the letter order
// X < Z < Y, so conventional forms like {X,Z,X,Z} are already canonical.
LabelSet canonical_label_set(const LabelSet& labels);

bool label_sets_equivalent(const LabelSet& a, const LabelSet& b);

// Canonical representative when, additionally, each two-letter entry may swap
// independently (the order of the two generators on a face is a per-face
// gauge, so sets differing only by such swaps describe the same code).
LabelSet enriched_canonical_label_set(const LabelSet& labels);

// All label classes realizable in the bulk of an admissible code for the
// given uniform valence (2..5) and generators per face (1 or 2), as sorted
// enriched-canonical representatives.  Beyond the local rules (distinct
// letters within a pair, equal letters across faces meeting only at the
// vertex, at least two letter types at the vertex), the counting constraints
// are applied: 3-valent bulk requires two generators per face, and 2-valent
// vertices only occur in the polygon family.
std::vector<LabelSet> enumerate_label_classes(std::size_t valence,
                                              std::size_t gens_per_face);

}  // namespace homcode
