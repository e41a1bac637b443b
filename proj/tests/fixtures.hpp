#pragma once

#include <string>
#include <vector>

#include "dmt/complex.hpp"
#include "dmt/morse.hpp"

namespace fixtures {

using dmt::MorseFunction;
using dmt::Rational;
using dmt::SimplicialComplex;

inline SimplicialComplex p2() { return SimplicialComplex::build_from_tuples({{"a", "b"}}); }

inline SimplicialComplex p3() {
  return SimplicialComplex::build_from_tuples({{"a", "b"}, {"b", "c"}});
}

inline SimplicialComplex c3() {
  return SimplicialComplex::build_from_tuples({{"a", "b"}, {"b", "c"}, {"a", "c"}});
}

inline SimplicialComplex c6() {
  return SimplicialComplex::build_from_tuples(
      {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"e", "f"}, {"a", "f"}});
}

inline SimplicialComplex filled_triangle() {
  return SimplicialComplex::build_from_tuples({{"a", "b", "c"}});
}

/// Three filled triangles sharing the hub vertex c0.
inline SimplicialComplex triangle_fan() {
  return SimplicialComplex::build_from_tuples(
      {{"c0", "v1", "v2"}, {"c0", "v2", "v3"}, {"c0", "v3", "v4"}});
}

/// All proper faces of the full simplex on four vertices (a two-sphere).
inline SimplicialComplex tetra_boundary() {
  return SimplicialComplex::build_from_tuples(
      {{"a", "b", "c"}, {"a", "b", "d"}, {"a", "c", "d"}, {"b", "c", "d"}});
}

inline MorseFunction named_function(
    const SimplicialComplex& K,
    const std::vector<std::pair<std::string, int64_t>>& entries) {
  std::vector<std::pair<std::string, Rational>> converted;
  converted.reserve(entries.size());
  for (const auto& [name, value] : entries) converted.emplace_back(name, Rational(value));
  return MorseFunction::from_named(K, converted);
}

inline std::vector<std::string> names_of(const SimplicialComplex& K,
                                         const std::vector<dmt::SimplexId>& ids) {
  std::vector<std::string> out;
  out.reserve(ids.size());
  for (dmt::SimplexId id : ids) out.push_back(K.name(id));
  return out;
}

}  // namespace fixtures
