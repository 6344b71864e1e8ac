#include "homcode/analysis.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "homcode/error.hpp"
#include "homcode/label_set.hpp"
#include "homcode/transforms.hpp"

namespace homcode {

Rational::Rational(long long n, long long d) : num_(n), den_(d) {
  if (den_ == 0)
    throw Error(ErrorKind::DegenerateParameters, "rational with zero denominator",
                "{\"numerator\":" + std::to_string(n) + "}");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator+(Rational o) const {
  return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
Rational Rational::operator-(Rational o) const {
  return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}
Rational Rational::operator*(Rational o) const { return Rational(num_ * o.num_, den_ * o.den_); }
Rational Rational::operator/(Rational o) const {
  if (o.num_ == 0) throw Error(ErrorKind::DegenerateParameters, "rational division by zero");
  return Rational(num_ * o.den_, den_ * o.num_);
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

std::string label_key(const LabelSet& labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.entries.size(); ++i) {
    if (i) out += ',';
    out += labels.entries[i];
  }
  return out;
}

}  // namespace

TwistReport twist_sites(const CombinatorialMap& map, const std::vector<FaceGenerators>& faces) {
  if (map.dart_count() == 0)
    throw Error(ErrorKind::DegenerateParameters, "twist analysis needs a non-empty map");
  TwistReport report;

  auto profile = map.valence_profile();
  std::size_t best_count = 0;
  for (const auto& [valence, count] : profile)
    if (count > best_count) {
      best_count = count;
      report.majority_valence = valence;
    }
  for (std::size_t v = 0; v < map.vertex_count(); ++v)
    if (map.valence(v) != report.majority_valence) report.irregular_vertices.push_back(v);
  for (std::size_t f = 0; f < map.face_count(); ++f)
    if (map.face_length(f) % 2 == 1) report.odd_faces.push_back(f);

  int palette = report.majority_valence == 4 ? 2 : report.majority_valence == 3 ? 3 : 0;
  if (palette == 0) {
    report.coloring_error = "no face-coloring palette for majority valence " +
                            std::to_string(report.majority_valence);
  } else {
    try {
      face_coloring(map, palette);
      report.colorable = true;
    } catch (const Error& err) {
      report.coloring_error = std::string(to_string(err.kind())) +
                              (err.detail().empty() ? "" : " " + err.detail());
    }
  }

  if (!faces.empty()) {
    HscCode code;
    code.map = map;
    code.faces = faces;
    std::sort(code.faces.begin(), code.faces.end(),
              [](const FaceGenerators& a, const FaceGenerators& b) { return a.face < b.face; });
    std::vector<std::string> keys(map.vertex_count());
    std::map<std::string, std::size_t> tally;
    for (std::size_t v = 0; v < map.vertex_count(); ++v) {
      try {
        keys[v] = label_key(enriched_canonical_label_set(vertex_label_set(code, v)));
      } catch (const Error&) {
        keys[v] = "(uncovered)";
      }
      ++tally[keys[v]];
    }
    std::size_t best = 0;
    for (const auto& [key, count] : tally)
      if (count > best) {
        best = count;
        report.majority_label = key;
      }
    for (std::size_t v = 0; v < map.vertex_count(); ++v)
      if (keys[v] != report.majority_label) report.label_deviants.push_back(v);
  }
  return report;
}

DensityReport density_analysis(const CombinatorialMap& map, DensityPolicy policy) {
  if (map.dart_count() == 0)
    throw Error(ErrorKind::DegenerateParameters, "density analysis needs a non-empty map");
  if (!map.connected())
    throw Error(ErrorKind::Disconnected, "density analysis needs a connected map");

  DensityReport report;
  long long V = (long long)map.vertex_count();
  long long E = (long long)map.edge_count();
  long long F = (long long)map.face_count();

  long long assigned_total = 0;
  bool any_odd_face = false;
  for (std::size_t f = 0; f < map.face_count(); ++f) {
    bool even = map.face_length(f) % 2 == 0;
    if (!even) any_odd_face = true;
    bool all_three_valent = true;
    for (Dart d : map.face_cycles()[f])
      if (map.valence(map.vertex_of(d)) != 3) all_three_valent = false;
    std::size_t cap = (even && all_three_valent) ? 2 : 1;
    report.m_max.push_back(cap);
    assigned_total += policy == DensityPolicy::kMaxAdmissible ? (long long)cap : 1;
  }

  report.m_required = Rational(V, F);
  report.f_avg = Rational(2 * E, F);
  report.density = Rational(1) - Rational(assigned_total, V);

  auto profile = map.valence_profile();
  std::size_t genus = euler_genus(map).genus;
  bool uniform3 = map.uniform_valence() == 3;
  if (uniform3) {
    // 3 V / (2 - 2g + V/2), the closed-surface handshake identity.
    report.f_avg_formula =
        Rational(3 * V) / (Rational(2 - 2 * (long long)genus) + Rational(V, 2));
    report.f_avg_formula_applicable = true;
  }

  bool only34 = true;
  for (const auto& [valence, count] : profile)
    if (valence != 3 && valence != 4) only34 = false;
  if (only34) {
    long long v3 = profile.count(3) ? (long long)profile.at(3) : 0;
    report.c = Rational(v3, F);
    Rational m_bar = Rational(assigned_total, F);
    report.appendix_density = Rational(1) - (Rational(4) * m_bar) / (report.f_avg + report.c);
    report.appendix_applicable = true;
  }

  bool persistent = assigned_total < V || (uniform3 && any_odd_face);
  report.verdict = persistent ? "persistent-local-logicals" : "vanishing";
  return report;
}

FavgResult favg_analysis(std::size_t valence, std::size_t genus, std::size_t vertices) {
  long long V = (long long)vertices;
  long long chi = 2 - 2 * (long long)genus;
  FavgResult result;
  if (valence == 4) {
    // |E| = 2V, |F| = chi + V.
    long long denom = chi + V;
    if (V <= 0 || denom <= 0)
      throw Error(ErrorKind::DegenerateParameters,
                  "no closed 4-valent map with these parameters",
                  "{\"genus\":" + std::to_string(genus) + ",\"vertices\":" + std::to_string(V) +
                      "}");
    result.value = Rational(4 * V, denom);
    result.asymptote = 4;
    return result;
  }
  if (valence == 3) {
    if (V <= 0 || V % 2 != 0)
      throw Error(ErrorKind::DegenerateParameters,
                  "a 3-valent map needs a positive even vertex count",
                  "{\"vertices\":" + std::to_string(V) + "}");
    // |E| = 3V/2, |F| = chi + V/2.
    long long denom = 2 * chi + V;
    if (denom <= 0)
      throw Error(ErrorKind::DegenerateParameters,
                  "no closed 3-valent map with these parameters",
                  "{\"genus\":" + std::to_string(genus) + ",\"vertices\":" + std::to_string(V) +
                      "}");
    result.value = Rational(6 * V, denom);
    result.asymptote = 6;
    return result;
  }
  throw Error(ErrorKind::DegenerateParameters, "average face size is defined for valence 3 or 4",
              "{\"valence\":" + std::to_string(valence) + "}");
}

}  // namespace homcode
