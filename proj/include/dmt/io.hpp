#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "dmt/complex.hpp"
#include "dmt/morse.hpp"

namespace dmt {

namespace detail {

inline std::string location(std::string_view source, size_t line) {
  return std::string(source) + ":" + std::to_string(line);
}

inline std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string token;
  while (in >> token) out.push_back(token);
  return out;
}

inline bool skippable(const std::string& line) {
  const size_t first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

}  // namespace detail

/// Complex file: one simplex per non-comment line as whitespace-separated
/// vertex tokens; the face closure is taken on load.
inline SimplicialComplex read_complex(std::istream& in, std::string_view source = "<input>") {
  std::vector<Simplex> generators;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::skippable(line)) continue;
    try {
      generators.emplace_back(detail::split_ws(line));
    } catch (const Error& e) {
      throw Error(e.kind(), detail::location(source, lineno) + ": " + e.what());
    }
  }
  return SimplicialComplex::build(generators);
}

inline SimplicialComplex read_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse, "cannot read complex file '" + path + "'");
  return read_complex(in, path);
}

/// Morse function file: one `<canonical-simplex-name> <value>` per
/// non-comment line, covering the companion complex exactly.
inline MorseFunction read_dmf(std::istream& in, const SimplicialComplex& K,
                              std::string_view source = "<input>") {
  std::vector<std::pair<std::string, Rational>> entries;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::skippable(line)) continue;
    const std::vector<std::string> fields = detail::split_ws(line);
    if (fields.size() != 2)
      throw Error(ErrorKind::parse,
                  detail::location(source, lineno) + ": expected '<simplex> <value>'");
    try {
      entries.emplace_back(fields[0], Rational::parse(fields[1]));
    } catch (const Error& e) {
      throw Error(e.kind(), detail::location(source, lineno) + ": " + e.what());
    }
  }
  return MorseFunction::from_named(K, entries);
}

inline MorseFunction read_dmf_file(const std::string& path, const SimplicialComplex& K) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse, "cannot read function file '" + path + "'");
  return read_dmf(in, K, path);
}

inline void write_dmf(std::ostream& out, const SimplicialComplex& K, const MorseFunction& f) {
  for (SimplexId s = 0; s < static_cast<SimplexId>(K.size()); ++s)
    out << K.name(s) << ' ' << f.value(s).str() << '\n';
}

inline void write_complex(std::ostream& out, const SimplicialComplex& K) {
  // Maximal simplices are enough to rebuild the complex.
  for (SimplexId s = 0; s < static_cast<SimplexId>(K.size()); ++s) {
    if (!K.cofaces(s).empty()) continue;
    std::string line = K.name(s);
    for (auto& c : line)
      if (c == '-') c = ' ';
    out << line << '\n';
  }
}

namespace detail {

inline std::string dot_id(const std::string& name) { return "\"" + name + "\""; }

}  // namespace detail

/// DOT rendering of a bare complex: graphs are drawn as graphs, higher
/// dimensional complexes as their face poset diagram.
inline std::string to_dot(const SimplicialComplex& K) {
  std::ostringstream out;
  if (K.dim() <= 1) {
    out << "graph {\n";
    const auto [vf, vl] = K.ids_of_dim(0);
    for (SimplexId v = vf; v < vl; ++v) out << "  " << detail::dot_id(K.name(v)) << ";\n";
    const auto [ef, el] = K.ids_of_dim(1);
    for (SimplexId e = ef; e < el; ++e) {
      const auto fs = K.faces(e);
      out << "  " << detail::dot_id(K.name(fs[0])) << " -- " << detail::dot_id(K.name(fs[1]))
          << ";\n";
    }
    out << "}\n";
  } else {
    out << "digraph {\n  rankdir=BT;\n";
    for (SimplexId s = 0; s < static_cast<SimplexId>(K.size()); ++s)
      out << "  " << detail::dot_id(K.name(s)) << ";\n";
    for (SimplexId s = 0; s < static_cast<SimplexId>(K.size()); ++s)
      for (SimplexId face : K.faces(s))
        out << "  " << detail::dot_id(K.name(face)) << " -> " << detail::dot_id(K.name(s))
            << ";\n";
    out << "}\n";
  }
  return out.str();
}

/// DOT rendering with the gradient structure of a Morse function: matched
/// pairs become arrows from the lower to the upper simplex, critical
/// simplices are highlighted in red.
inline std::string to_dot(const SimplicialComplex& K, const MorseFunction& f) {
  const CriticalInfo info = critical_simplices(K, f);
  const GradientVectorField V = gradient_field(K, f);
  std::ostringstream out;
  if (K.dim() <= 1) {
    out << "digraph {\n  edge [dir=none];\n";
    const auto [vf, vl] = K.ids_of_dim(0);
    for (SimplexId v = vf; v < vl; ++v) {
      out << "  " << detail::dot_id(K.name(v));
      if (info.is_critical[v]) out << " [color=red]";
      out << ";\n";
    }
    const auto [ef, el] = K.ids_of_dim(1);
    for (SimplexId e = ef; e < el; ++e) {
      const auto fs = K.faces(e);
      const SimplexId tail = V.down(e);
      if (tail != kNoSimplex) {
        const SimplexId head = fs[0] == tail ? fs[1] : fs[0];
        out << "  " << detail::dot_id(K.name(tail)) << " -> " << detail::dot_id(K.name(head))
            << " [dir=forward];\n";
      } else {
        out << "  " << detail::dot_id(K.name(fs[0])) << " -> " << detail::dot_id(K.name(fs[1]))
            << " [color=red];\n";
      }
    }
    out << "}\n";
  } else {
    out << "digraph {\n  rankdir=BT;\n";
    for (SimplexId s = 0; s < static_cast<SimplexId>(K.size()); ++s) {
      out << "  " << detail::dot_id(K.name(s));
      if (info.is_critical[s]) out << " [color=red]";
      out << ";\n";
    }
    for (SimplexId s = 0; s < static_cast<SimplexId>(K.size()); ++s) {
      for (SimplexId face : K.faces(s)) {
        out << "  " << detail::dot_id(K.name(face)) << " -> " << detail::dot_id(K.name(s));
        if (V.up(face) == s) out << " [color=blue, penwidth=2]";
        out << ";\n";
      }
    }
    out << "}\n";
  }
  return out.str();
}

}  // namespace dmt
