#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "dmt/error.hpp"

namespace dmt {

inline bool is_valid_vertex_token(std::string_view token) {
  if (token.empty()) return false;
  for (char c : token) {
    const bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                    (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

/// A simplex as its strictly increasing tuple of vertex tokens.
///
/// Tokens match [A-Za-z0-9_]+ and are ordered lexicographically; the canonical
/// name joins them with "-" (e.g. "a-b-c" for the triangle on a, b, c).
class Simplex {
 public:
  explicit Simplex(std::vector<std::string> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty())
      throw Error(ErrorKind::malformed_simplex, "simplex with no vertices");
    for (const auto& v : vertices_) {
      if (!is_valid_vertex_token(v))
        throw Error(ErrorKind::malformed_simplex, "bad vertex token '" + v + "'");
    }
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
      throw Error(ErrorKind::malformed_simplex,
                  "repeated vertex in simplex '" + name() + "'");
  }

  /// Parses a canonical name such as "a-b-c".
  static Simplex parse(std::string_view name) {
    std::vector<std::string> tokens;
    size_t pos = 0;
    while (pos <= name.size()) {
      size_t dash = name.find('-', pos);
      if (dash == std::string_view::npos) dash = name.size();
      tokens.emplace_back(name.substr(pos, dash - pos));
      pos = dash + 1;
    }
    return Simplex(std::move(tokens));
  }

  int dim() const { return static_cast<int>(vertices_.size()) - 1; }
  const std::vector<std::string>& vertices() const { return vertices_; }

  std::string name() const {
    std::string out = vertices_.front();
    for (size_t i = 1; i < vertices_.size(); ++i) {
      out += '-';
      out += vertices_[i];
    }
    return out;
  }

  friend bool operator==(const Simplex& a, const Simplex& b) = default;
  friend bool operator<(const Simplex& a, const Simplex& b) {
    if (a.vertices_.size() != b.vertices_.size())
      return a.vertices_.size() < b.vertices_.size();
    return a.vertices_ < b.vertices_;
  }

 private:
  std::vector<std::string> vertices_;
};

}  // namespace dmt
