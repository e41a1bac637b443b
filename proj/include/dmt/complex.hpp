#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dmt/error.hpp"
#include "dmt/gf2.hpp"
#include "dmt/simplex.hpp"

namespace dmt {

/// Index of a simplex inside its complex. Ids are assigned in (dimension,
/// canonical name) order, so id order doubles as the deterministic output order.
using SimplexId = int32_t;
inline constexpr SimplexId kNoSimplex = -1;

/// A chain with coefficients in the two-element field: the sorted support of
/// equal-dimensional simplices.
struct Chain {
  int dim = -1;
  std::vector<SimplexId> support;

  bool empty() const { return support.empty(); }
  friend bool operator==(const Chain& a, const Chain& b) = default;
};

/// Symmetric difference, i.e. chain addition over the two-element field.
inline Chain chain_add(const Chain& a, const Chain& b) {
  Chain out;
  out.dim = a.empty() ? b.dim : a.dim;
  std::set_symmetric_difference(a.support.begin(), a.support.end(),
                                b.support.begin(), b.support.end(),
                                std::back_inserter(out.support));
  return out;
}

/// A finite simplicial complex closed under taking faces.
///
/// Immutable after construction; all queries are const and safe to share
/// across threads. Vertices are opaque string tokens ordered lexicographically.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Face closure of the given simplices. The input may list maximal and
  /// non-maximal simplices in any order; the result only depends on the set
  /// of input simplices.
  static SimplicialComplex build(const std::vector<Simplex>& generators) {
    SimplicialComplex K;

    std::vector<std::string> tokens;
    for (const auto& s : generators)
      tokens.insert(tokens.end(), s.vertices().begin(), s.vertices().end());
    std::sort(tokens.begin(), tokens.end());
    tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
    K.vertex_tokens_ = std::move(tokens);

    std::map<std::string, int32_t> vertex_index;
    for (int32_t i = 0; i < static_cast<int32_t>(K.vertex_tokens_.size()); ++i)
      vertex_index[K.vertex_tokens_[i]] = i;

    std::map<std::vector<int32_t>, SimplexId> members;
    for (const auto& s : generators) {
      std::vector<int32_t> vs;
      vs.reserve(s.vertices().size());
      for (const auto& v : s.vertices()) vs.push_back(vertex_index[v]);
      const size_t k = vs.size();
      if (k > 25)
        throw Error(ErrorKind::size_guard, "simplex on more than 25 vertices");
      for (uint32_t mask = 1; mask < (uint32_t(1) << k); ++mask) {
        std::vector<int32_t> sub;
        for (size_t i = 0; i < k; ++i)
          if (mask & (uint32_t(1) << i)) sub.push_back(vs[i]);
        members.emplace(std::move(sub), 0);
      }
    }

    K.verts_.reserve(members.size());
    for (const auto& [vs, _] : members) K.verts_.push_back(vs);
    std::sort(K.verts_.begin(), K.verts_.end(),
              [](const auto& a, const auto& b) {
                if (a.size() != b.size()) return a.size() < b.size();
                return a < b;
              });

    int max_dim = -1;
    for (SimplexId id = 0; id < static_cast<SimplexId>(K.verts_.size()); ++id) {
      K.index_[K.verts_[id]] = id;
      max_dim = std::max(max_dim, static_cast<int>(K.verts_[id].size()) - 1);
    }
    std::vector<size_t> dim_counts(max_dim + 1, 0);
    for (const auto& vs : K.verts_) dim_counts[vs.size() - 1] += 1;
    K.dim_start_.assign(max_dim + 2, 0);
    for (int d = 0; d <= max_dim; ++d) K.dim_start_[d + 1] = K.dim_start_[d] + dim_counts[d];

    K.faces_.resize(K.verts_.size());
    K.cofaces_.resize(K.verts_.size());
    for (SimplexId id = 0; id < static_cast<SimplexId>(K.verts_.size()); ++id) {
      const auto& vs = K.verts_[id];
      if (vs.size() == 1) continue;
      std::vector<int32_t> face(vs.size() - 1);
      for (size_t drop = 0; drop < vs.size(); ++drop) {
        size_t j = 0;
        for (size_t i = 0; i < vs.size(); ++i)
          if (i != drop) face[j++] = vs[i];
        const SimplexId fid = K.index_.at(face);
        K.faces_[id].push_back(fid);
        K.cofaces_[fid].push_back(id);
      }
      std::sort(K.faces_[id].begin(), K.faces_[id].end());
    }
    for (auto& cf : K.cofaces_) std::sort(cf.begin(), cf.end());
    return K;
  }

  static SimplicialComplex build_from_tuples(const std::vector<std::vector<std::string>>& tuples) {
    std::vector<Simplex> gens;
    gens.reserve(tuples.size());
    for (const auto& t : tuples) gens.emplace_back(t);
    return build(gens);
  }

  /// Maximum simplex dimension; -1 for the empty complex.
  int dim() const { return static_cast<int>(dim_start_.size()) - 2; }

  size_t size() const { return verts_.size(); }

  size_t count(int d) const {
    if (d < 0 || d > dim()) return 0;
    return dim_start_[d + 1] - dim_start_[d];
  }

  /// Half-open id range [first, last) of the d-dimensional simplices.
  std::pair<SimplexId, SimplexId> ids_of_dim(int d) const {
    if (d < 0 || d > dim()) return {0, 0};
    return {static_cast<SimplexId>(dim_start_[d]), static_cast<SimplexId>(dim_start_[d + 1])};
  }

  int dim_of(SimplexId id) const { return static_cast<int>(verts_[id].size()) - 1; }

  std::string name(SimplexId id) const {
    std::string out = vertex_tokens_[verts_[id][0]];
    for (size_t i = 1; i < verts_[id].size(); ++i) {
      out += '-';
      out += vertex_tokens_[verts_[id][i]];
    }
    return out;
  }

  Simplex simplex(SimplexId id) const {
    std::vector<std::string> tokens;
    tokens.reserve(verts_[id].size());
    for (int32_t v : verts_[id]) tokens.push_back(vertex_tokens_[v]);
    return Simplex(std::move(tokens));
  }

  std::optional<SimplexId> find(const Simplex& s) const {
    std::vector<int32_t> vs;
    vs.reserve(s.vertices().size());
    for (const auto& token : s.vertices()) {
      const auto it = std::lower_bound(vertex_tokens_.begin(), vertex_tokens_.end(), token);
      if (it == vertex_tokens_.end() || *it != token) return std::nullopt;
      vs.push_back(static_cast<int32_t>(it - vertex_tokens_.begin()));
    }
    const auto it = index_.find(vs);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  SimplexId id(const Simplex& s) const {
    const auto found = find(s);
    if (!found)
      throw Error(ErrorKind::unknown_simplex, "simplex '" + s.name() + "' is not in the complex");
    return *found;
  }

  SimplexId id_of_name(std::string_view name) const { return id(Simplex::parse(name)); }

  /// Codimension-1 faces, ascending by id.
  std::span<const SimplexId> faces(SimplexId id) const { return faces_[id]; }

  /// Codimension-1 cofaces, ascending by id.
  std::span<const SimplexId> cofaces(SimplexId id) const { return cofaces_[id]; }

  /// Boundary of a single simplex over the two-element field. Vertices have
  /// an empty boundary.
  Chain boundary(SimplexId id) const {
    Chain c;
    c.dim = dim_of(id) - 1;
    c.support.assign(faces_[id].begin(), faces_[id].end());
    return c;
  }

  Chain boundary(const Chain& chain) const {
    Chain out;
    out.dim = chain.dim - 1;
    for (SimplexId id : chain.support) out = chain_add(out, boundary(id));
    out.dim = chain.dim - 1;
    return out;
  }

  /// Betti numbers over the two-element field, indices 0..dim().
  std::vector<int64_t> betti_numbers() const {
    std::vector<char> all(verts_.size(), 1);
    return betti_numbers_masked(all);
  }

  /// Betti numbers of a face-closed subset of the complex, given by a
  /// membership mask over simplex ids. The result is padded to 0..dim().
  std::vector<int64_t> betti_numbers_masked(const std::vector<char>& member) const {
    const int n = dim();
    if (n < 0) return {};
    std::vector<int64_t> counts(n + 1, 0), ranks(n + 2, 0);
    std::vector<int32_t> local(verts_.size(), -1);
    for (int d = 0; d <= n; ++d) {
      const auto [first, last] = ids_of_dim(d);
      int32_t next = 0;
      for (SimplexId id = first; id < last; ++id)
        if (member[id]) local[id] = next++;
      counts[d] = next;
    }
    for (int d = 1; d <= n; ++d) {
      const auto [first, last] = ids_of_dim(d);
      Gf2Matrix m(static_cast<size_t>(counts[d - 1]), static_cast<size_t>(counts[d]));
      for (SimplexId id = first; id < last; ++id) {
        if (!member[id]) continue;
        for (SimplexId f : faces_[id]) m.set(local[f], local[id]);
      }
      ranks[d] = static_cast<int64_t>(m.rank());
    }
    std::vector<int64_t> betti(n + 1, 0);
    for (int d = 0; d <= n; ++d) betti[d] = counts[d] - ranks[d] - ranks[d + 1];
    return betti;
  }

  /// Alternating sum of the simplex counts.
  int64_t euler_characteristic() const {
    int64_t chi = 0;
    for (int d = 0; d <= dim(); ++d)
      chi += (d % 2 == 0) ? static_cast<int64_t>(count(d)) : -static_cast<int64_t>(count(d));
    return chi;
  }

  /// All simplices as value objects, in id order.
  std::vector<Simplex> all_simplices() const {
    std::vector<Simplex> out;
    out.reserve(size());
    for (SimplexId id = 0; id < static_cast<SimplexId>(size()); ++id)
      out.push_back(simplex(id));
    return out;
  }

 private:
  std::vector<std::string> vertex_tokens_;
  std::vector<std::vector<int32_t>> verts_;
  std::vector<size_t> dim_start_{0};
  std::vector<std::vector<SimplexId>> faces_, cofaces_;
  std::map<std::vector<int32_t>, SimplexId> index_;
};

}  // namespace dmt
