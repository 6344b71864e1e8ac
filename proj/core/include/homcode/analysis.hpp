#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "homcode/hsc.hpp"
#include "homcode/map.hpp"

namespace homcode {

// Exact rational arithmetic over 64-bit integers, always normalized (positive
// denominator, reduced).  A zero denominator raises DegenerateParameters.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n) {}  // NOLINT: implicit integers are wanted
  Rational(long long n, long long d);

  long long num() const { return num_; }
  long long den() const { return den_; }

  Rational operator+(Rational o) const;
  Rational operator-(Rational o) const;
  Rational operator*(Rational o) const;
  Rational operator/(Rational o) const;

  bool operator==(Rational o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(Rational o) const { return !(*this == o); }
  bool operator<(Rational o) const { return num_ * o.den_ < o.num_ * den_; }
  bool operator<=(Rational o) const { return num_ * o.den_ <= o.num_ * den_; }
  bool operator>(Rational o) const { return o < *this; }
  bool operator>=(Rational o) const { return o <= *this; }

  // "p" for integers, "p/q" otherwise.
  std::string to_string() const;
  double to_double() const { return double(num_) / double(den_); }

 private:
  long long num_ = 0;
  long long den_ = 1;
};

// Where a map stops being a regular code template: vertices off the majority
// valence, odd faces, label sets off the majority class, and whether the
// majority-palette face coloring still succeeds.
struct TwistReport {
  std::size_t majority_valence = 0;
  std::vector<std::size_t> irregular_vertices;  // valence != majority
  std::vector<std::size_t> odd_faces;           // odd-length faces
  std::string majority_label;                   // canonical label class, "" without faces
  std::vector<std::size_t> label_deviants;      // label class != majority
  bool colorable = false;
  std::string coloring_error;  // error kind + witness when not colorable
};

// Finds twist sites: vertices whose canonical label set differs from the bulk
// majority (when a generator assignment is supplied), valence defects (a
// 3-valent vertex inside a 4-valent lattice), and odd faces (the 3-valent
// analogue).  Also reports whether the majority-valence palette still yields
// a proper face coloring.
TwistReport twist_sites(const CombinatorialMap& map, const std::vector<FaceGenerators>& faces);

enum class DensityPolicy {
  kMaxAdmissible,  // every face uses its maximum admissible generator count
  kUniformOne,     // one generator per face
};

struct DensityReport {
  std::vector<std::size_t> m_max;  // per-face maximum admissible generators
  Rational m_required;             // |V| / |F|: average m needed to null the density
  Rational f_avg;                  // 2|E| / |F|
  Rational f_avg_formula;          // 3-valent closed form, when applicable
  bool f_avg_formula_applicable = false;
  Rational density;                // 1 - (sum of assigned m) / |V|
  Rational appendix_density;       // 1 - 4 m_bar / (F_avg + c), c = |V_3| / |F|
  bool appendix_applicable = false;  // valences within {3, 4} only
  Rational c;
  std::string verdict;  // "vanishing" | "persistent-local-logicals"
};

// Logical-operator density of a lattice family member.  A face admits two
// generators only when it has even length and all its vertices are 3-valent;
// anything else caps it at one.  The density vanishes exactly when the
// assigned generator count reaches |V|; a 3-valent map with an odd face stays
// persistent regardless (its faces cannot be 3-colored).
DensityReport density_analysis(const CombinatorialMap& map, DensityPolicy policy);

struct FavgResult {
  Rational value;
  int asymptote = 0;  // 4 for 4-valent families, 6 for 3-valent
};

// Exact average face size of a closed uniform-valence surface graph:
//   4-valent: 4 V / (2 - 2g + V)        3-valent: 3 V / (2 - 2g + V/2)
// Raises DegenerateParameters for valences outside {3, 4}, odd V at valence
// 3, or a non-positive denominator.
FavgResult favg_analysis(std::size_t valence, std::size_t genus, std::size_t vertices);

}  // namespace homcode
