#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "dmt/complex.hpp"
#include "dmt/error.hpp"
#include "dmt/rational.hpp"

namespace dmt {

class MorseFunction;
class GradientVectorField;
struct GvfReport;

GradientVectorField gradient_field(const SimplicialComplex&, const MorseFunction&);
GvfReport validate_gvf(const SimplicialComplex&, const GradientVectorField&);
std::vector<GradientVectorField> enumerate_gvfs(const SimplicialComplex&);
MorseFunction random_dmf(const SimplicialComplex&, uint64_t seed);

/// A total assignment of exact rational values to the simplices of one
/// complex. Whether the assignment is a discrete Morse function is checked by
/// validate_dmf, never assumed.
class MorseFunction {
 public:
  MorseFunction() = default;

  static MorseFunction from_values(const SimplicialComplex& K, std::vector<Rational> values) {
    if (values.size() != K.size())
      throw Error(ErrorKind::incomplete_function,
                  "expected " + std::to_string(K.size()) + " values, got " +
                      std::to_string(values.size()));
    MorseFunction f;
    f.values_ = std::move(values);
    return f;
  }

  /// Builds from (canonical name, value) entries; every simplex of K must
  /// appear exactly once.
  static MorseFunction from_named(const SimplicialComplex& K,
                                  const std::vector<std::pair<std::string, Rational>>& entries) {
    std::vector<Rational> values(K.size());
    std::vector<char> seen(K.size(), 0);
    for (const auto& [name, value] : entries) {
      const SimplexId id = K.id_of_name(name);
      if (seen[id])
        throw Error(ErrorKind::parse, "duplicate value for simplex '" + name + "'");
      seen[id] = 1;
      values[id] = value;
    }
    for (SimplexId id = 0; id < static_cast<SimplexId>(K.size()); ++id) {
      if (!seen[id])
        throw Error(ErrorKind::incomplete_function,
                    "no value for simplex '" + K.name(id) + "'");
    }
    return from_values(K, std::move(values));
  }

  const Rational& value(SimplexId id) const { return values_[id]; }
  const std::vector<Rational>& values() const { return values_; }
  size_t size() const { return values_.size(); }

 private:
  std::vector<Rational> values_;
};

struct DmfViolation {
  enum class Kind {
    low_cofaces,      // more than one coface with value <= f(simplex)
    high_faces,       // more than one face with value >= f(simplex)
    repeated_value,   // value shared with another simplex
  };
  Kind kind;
  SimplexId simplex;
  std::vector<SimplexId> offenders;
};

struct DmfReport {
  bool ok = true;
  bool axioms_ok = true;
  bool injective = true;
  std::vector<DmfViolation> violations;
};

/// Checks the two discrete-Morse axioms (each simplex has at most one
/// non-increasing coface and at most one non-decreasing face) plus global
/// injectivity of the values.
inline DmfReport validate_dmf(const SimplicialComplex& K, const MorseFunction& f) {
  if (f.size() != K.size())
    throw Error(ErrorKind::incomplete_function, "function does not cover the complex");
  DmfReport report;
  for (SimplexId s = 0; s < static_cast<SimplexId>(K.size()); ++s) {
    std::vector<SimplexId> low_cofaces;
    for (SimplexId t : K.cofaces(s))
      if (f.value(t) <= f.value(s)) low_cofaces.push_back(t);
    if (low_cofaces.size() > 1) {
      report.axioms_ok = false;
      report.violations.push_back({DmfViolation::Kind::low_cofaces, s, std::move(low_cofaces)});
    }
    std::vector<SimplexId> high_faces;
    for (SimplexId v : K.faces(s))
      if (f.value(v) >= f.value(s)) high_faces.push_back(v);
    if (high_faces.size() > 1) {
      report.axioms_ok = false;
      report.violations.push_back({DmfViolation::Kind::high_faces, s, std::move(high_faces)});
    }
  }

  std::vector<SimplexId> by_value(K.size());
  for (size_t i = 0; i < by_value.size(); ++i) by_value[i] = static_cast<SimplexId>(i);
  std::stable_sort(by_value.begin(), by_value.end(),
                   [&](SimplexId a, SimplexId b) { return f.value(a) < f.value(b); });
  for (size_t i = 0; i + 1 < by_value.size(); ++i) {
    if (f.value(by_value[i]) == f.value(by_value[i + 1])) {
      report.injective = false;
      report.violations.push_back(
          {DmfViolation::Kind::repeated_value, by_value[i + 1], {by_value[i]}});
    }
  }
  report.ok = report.axioms_ok && report.injective;
  return report;
}

inline void require_valid_dmf(const SimplicialComplex& K, const MorseFunction& f) {
  const DmfReport report = validate_dmf(K, f);
  if (!report.ok) {
    std::string what = "not a valid discrete Morse function";
    if (!report.violations.empty()) {
      what += " (first violation at '" + K.name(report.violations.front().simplex) + "')";
    }
    throw Error(ErrorKind::invalid_function, what);
  }
}

struct CriticalInfo {
  std::vector<char> is_critical;        // by SimplexId
  std::vector<SimplexId> critical;      // ascending
  std::vector<int64_t> counts_by_dim;   // C_q, q = 0..dim
};

/// Critical simplices: no non-increasing coface and no non-decreasing face.
inline CriticalInfo critical_simplices(const SimplicialComplex& K, const MorseFunction& f) {
  require_valid_dmf(K, f);
  CriticalInfo info;
  info.is_critical.assign(K.size(), 1);
  info.counts_by_dim.assign(std::max(K.dim() + 1, 0), 0);
  for (SimplexId s = 0; s < static_cast<SimplexId>(K.size()); ++s) {
    for (SimplexId t : K.cofaces(s))
      if (f.value(t) <= f.value(s)) info.is_critical[s] = 0;
    for (SimplexId v : K.faces(s))
      if (f.value(v) >= f.value(s)) info.is_critical[s] = 0;
    if (info.is_critical[s]) {
      info.critical.push_back(s);
      info.counts_by_dim[K.dim_of(s)] += 1;
    }
  }
  return info;
}

/// The matching of pairs (face, coface) along which a Morse function fails to
/// increase. Pairs are kept sorted by their lower simplex.
class GradientVectorField {
 public:
  GradientVectorField() = default;

  /// Builds from explicit pairs; each pair must be a codimension-1 face
  /// relation. Matching and acyclicity are checked by validate_gvf.
  static GradientVectorField from_pairs(const SimplicialComplex& K,
                                        std::vector<std::pair<SimplexId, SimplexId>> pairs) {
    for (const auto& [lo, hi] : pairs) {
      if (lo < 0 || hi < 0 || lo >= static_cast<SimplexId>(K.size()) ||
          hi >= static_cast<SimplexId>(K.size()))
        throw Error(ErrorKind::invalid_field, "pair references an unknown simplex");
      const auto fs = K.faces(hi);
      if (K.dim_of(hi) != K.dim_of(lo) + 1 ||
          !std::binary_search(fs.begin(), fs.end(), lo))
        throw Error(ErrorKind::invalid_field,
                    "pair (" + K.name(lo) + ", " + K.name(hi) +
                        ") is not a codimension-1 face relation");
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    GradientVectorField V;
    V.pairs_ = std::move(pairs);
    V.build_partner_maps(K.size());
    return V;
  }

  const std::vector<std::pair<SimplexId, SimplexId>>& pairs() const { return pairs_; }
  size_t size() const { return pairs_.size(); }
  bool is_matching() const { return matching_; }
  bool acyclicity_verified() const { return acyclic_; }

  /// Matched coface of a lower pair member; kNoSimplex otherwise.
  SimplexId up(SimplexId s) const {
    require_matching();
    return static_cast<size_t>(s) < up_.size() ? up_[s] : kNoSimplex;
  }

  /// Matched face of an upper pair member; kNoSimplex otherwise.
  SimplexId down(SimplexId s) const {
    require_matching();
    return static_cast<size_t>(s) < down_.size() ? down_[s] : kNoSimplex;
  }

  bool paired(SimplexId s) const { return up(s) != kNoSimplex || down(s) != kNoSimplex; }

  friend bool operator==(const GradientVectorField& a, const GradientVectorField& b) {
    return a.pairs_ == b.pairs_;
  }

 private:
  friend GradientVectorField gradient_field(const SimplicialComplex&, const MorseFunction&);
  friend GvfReport validate_gvf(const SimplicialComplex&, const GradientVectorField&);
  friend std::vector<GradientVectorField> enumerate_gvfs(const SimplicialComplex&);
  friend MorseFunction random_dmf(const SimplicialComplex&, uint64_t);

  static GradientVectorField trusted(size_t complex_size,
                                     std::vector<std::pair<SimplexId, SimplexId>> pairs) {
    std::sort(pairs.begin(), pairs.end());
    GradientVectorField V;
    V.pairs_ = std::move(pairs);
    V.build_partner_maps(complex_size);
    V.acyclic_ = true;
    return V;
  }

  void build_partner_maps(size_t n) {
    up_.assign(n, kNoSimplex);
    down_.assign(n, kNoSimplex);
    matching_ = true;
    for (const auto& [lo, hi] : pairs_) {
      if (up_[lo] != kNoSimplex || down_[lo] != kNoSimplex ||
          up_[hi] != kNoSimplex || down_[hi] != kNoSimplex) {
        matching_ = false;
        up_.clear();
        down_.clear();
        return;
      }
      up_[lo] = hi;
      down_[hi] = lo;
    }
  }

  void require_matching() const {
    if (!matching_)
      throw Error(ErrorKind::invalid_field, "gradient field is not a matching");
  }

  std::vector<std::pair<SimplexId, SimplexId>> pairs_;
  std::vector<SimplexId> up_, down_;
  bool matching_ = true;
  mutable bool acyclic_ = false;
};

/// All pairs (face, coface) with f(face) >= f(coface). For a valid function
/// this is a matching, it is acyclic, and the unpaired simplices are exactly
/// the critical ones.
inline GradientVectorField gradient_field(const SimplicialComplex& K, const MorseFunction& f) {
  require_valid_dmf(K, f);
  std::vector<std::pair<SimplexId, SimplexId>> pairs;
  for (SimplexId hi = 0; hi < static_cast<SimplexId>(K.size()); ++hi) {
    for (SimplexId lo : K.faces(hi))
      if (f.value(lo) >= f.value(hi)) pairs.emplace_back(lo, hi);
  }
  GradientVectorField V = GradientVectorField::trusted(K.size(), std::move(pairs));
  if (!V.is_matching())
    throw Error(ErrorKind::invalid_function, "gradient pairs do not form a matching");
  return V;
}

struct GvfReport {
  bool ok = true;
  bool matching = true;
  std::vector<SimplexId> overused;  // simplices occurring in more than one pair
  std::vector<SimplexId> cycle;     // a closed gradient walk, if any
};

namespace detail {

/// Directed walk graph of a matching on the face poset: matched relations
/// ascend, all other codimension-1 relations descend. The matching is acyclic
/// exactly when this graph has no directed cycle.
inline std::vector<SimplexId> find_gradient_cycle(const SimplicialComplex& K,
                                                  const GradientVectorField& V) {
  const size_t n = K.size();
  std::vector<int8_t> color(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<SimplexId> path;

  const auto successors = [&](SimplexId s, std::vector<SimplexId>& out) {
    out.clear();
    const SimplexId up = V.up(s);
    if (up != kNoSimplex) out.push_back(up);
    for (SimplexId face : K.faces(s))
      if (V.up(face) != s) out.push_back(face);
  };

  std::vector<SimplexId> succ;
  for (SimplexId start = 0; start < static_cast<SimplexId>(n); ++start) {
    if (color[start] != 0) continue;
    // Iterative DFS; stack keeps (node, next-successor-index).
    std::vector<std::pair<SimplexId, size_t>> frames;
    frames.emplace_back(start, 0);
    color[start] = 1;
    path.assign(1, start);
    while (!frames.empty()) {
      auto& [node, next] = frames.back();
      successors(node, succ);
      if (next >= succ.size()) {
        color[node] = 2;
        frames.pop_back();
        path.pop_back();
        continue;
      }
      const SimplexId to = succ[next++];
      if (color[to] == 1) {
        const auto it = std::find(path.begin(), path.end(), to);
        return std::vector<SimplexId>(it, path.end());
      }
      if (color[to] == 0) {
        color[to] = 1;
        frames.emplace_back(to, 0);
        path.push_back(to);
      }
    }
  }
  return {};
}

}  // namespace detail

/// Checks that a candidate field is a matching and admits no closed gradient
/// walk.
inline GvfReport validate_gvf(const SimplicialComplex& K, const GradientVectorField& V) {
  GvfReport report;
  std::vector<int> uses(K.size(), 0);
  for (const auto& [lo, hi] : V.pairs_) {
    uses[lo] += 1;
    uses[hi] += 1;
  }
  for (SimplexId s = 0; s < static_cast<SimplexId>(K.size()); ++s)
    if (uses[s] > 1) report.overused.push_back(s);
  report.matching = report.overused.empty();
  if (!report.matching) {
    report.ok = false;
    return report;
  }
  if (!V.acyclic_) {
    report.cycle = detail::find_gradient_cycle(K, V);
    if (report.cycle.empty()) V.acyclic_ = true;
  }
  report.ok = report.cycle.empty();
  return report;
}

inline void require_valid_gvf(const SimplicialComplex& K, const GradientVectorField& V) {
  if (V.is_matching() && V.acyclicity_verified()) return;
  const GvfReport report = validate_gvf(K, V);
  if (!report.ok)
    throw Error(ErrorKind::invalid_field,
                report.matching ? "gradient field has a closed walk"
                                : "gradient field is not a matching");
}

/// An alternating sequence of p- and (p+1)-simplices following a gradient
/// field: after a lower simplex comes its matched coface, after an upper
/// simplex any face other than the one just used. A single simplex is the
/// trivial path.
struct GradientPath {
  int p = 0;
  std::vector<SimplexId> sequence;

  friend bool operator==(const GradientPath& a, const GradientPath& b) = default;
};

namespace detail {

template <typename Visitor>
void walk_v_paths(const SimplicialComplex& K, const GradientVectorField& V, SimplexId start,
                  SimplexId end, int p, Visitor&& visit) {
  std::vector<SimplexId> seq;

  // Both mutually recursive states are expressed with explicit lambdas; the
  // recursion depth is bounded by the number of simplices (acyclicity).
  auto at_lower = [&](auto&& self, SimplexId a) -> void {
    seq.push_back(a);
    if (a == end) visit(seq);
    const SimplexId b = V.up(a);
    if (b != kNoSimplex) {
      seq.push_back(b);
      for (SimplexId a2 : K.faces(b))
        if (a2 != a) self(self, a2);
      seq.pop_back();
    }
    seq.pop_back();
  };

  auto at_upper = [&](auto&& self, SimplexId b, SimplexId prev) -> void {
    seq.push_back(b);
    if (b == end) visit(seq);
    for (SimplexId a : K.faces(b)) {
      if (a == prev) continue;
      const SimplexId b2 = V.up(a);
      if (b2 == kNoSimplex) continue;
      seq.push_back(a);
      self(self, b2, a);
      seq.pop_back();
    }
    seq.pop_back();
  };

  if (K.dim_of(start) == p) {
    at_lower(at_lower, start);
  } else {
    at_upper(at_upper, start, kNoSimplex);
  }
}

}  // namespace detail

/// Exhaustive, duplicate-free enumeration of the gradient paths of type
/// (p, p+1) from start to end. Both endpoint conventions are supported: two
/// p-simplices, or two (p+1)-simplices. Includes the trivial path when
/// start == end.
inline std::vector<GradientPath> v_paths(const SimplicialComplex& K,
                                         const GradientVectorField& V, SimplexId start,
                                         SimplexId end, int p) {
  require_valid_gvf(K, V);
  const int ds = K.dim_of(start);
  if (ds != K.dim_of(end) || (ds != p && ds != p + 1))
    throw Error(ErrorKind::dimension,
                "path endpoints must both have dimension p or both p+1");
  std::vector<GradientPath> out;
  detail::walk_v_paths(K, V, start, end, p, [&](const std::vector<SimplexId>& seq) {
    out.push_back(GradientPath{p, seq});
  });
  return out;
}

/// Number of gradient paths of type (p, p+1) from start to end.
inline size_t count_v_paths(const SimplicialComplex& K, const GradientVectorField& V,
                            SimplexId start, SimplexId end, int p) {
  require_valid_gvf(K, V);
  const int ds = K.dim_of(start);
  if (ds != K.dim_of(end) || (ds != p && ds != p + 1))
    throw Error(ErrorKind::dimension,
                "path endpoints must both have dimension p or both p+1");
  size_t count = 0;
  detail::walk_v_paths(K, V, start, end, p,
                       [&](const std::vector<SimplexId>&) { ++count; });
  return count;
}

/// Entry value of each simplex: the smallest function value among the simplex
/// and all of its cofaces of any codimension. A simplex belongs to the
/// sub-level complex at c exactly when its entry value is <= c.
inline std::vector<Rational> entry_values(const SimplicialComplex& K, const MorseFunction& f) {
  std::vector<Rational> entry(f.values());
  for (int d = K.dim() - 1; d >= 0; --d) {
    const auto [first, last] = K.ids_of_dim(d);
    for (SimplexId s = first; s < last; ++s) {
      for (SimplexId t : K.cofaces(s))
        if (entry[t] < entry[s]) entry[s] = entry[t];
    }
  }
  return entry;
}

/// Sub-level complex at value c: all simplices with value <= c together with
/// their faces.
inline SimplicialComplex sublevel_complex(const SimplicialComplex& K, const MorseFunction& f,
                                          const Rational& c) {
  require_valid_dmf(K, f);
  const std::vector<Rational> entry = entry_values(K, f);
  std::vector<Simplex> members;
  for (SimplexId s = 0; s < static_cast<SimplexId>(K.size()); ++s)
    if (entry[s] <= c) members.push_back(K.simplex(s));
  return SimplicialComplex::build(members);
}

/// Transfers a function to a subcomplex by canonical names. Every simplex of
/// the subcomplex must exist in K.
inline MorseFunction restrict_to(const SimplicialComplex& K, const MorseFunction& f,
                                 const SimplicialComplex& sub) {
  std::vector<Rational> values(sub.size());
  for (SimplexId s = 0; s < static_cast<SimplexId>(sub.size()); ++s)
    values[s] = f.value(K.id(sub.simplex(s)));
  return MorseFunction::from_values(sub, std::move(values));
}

/// Canonically perturbs a function that satisfies the two Morse axioms but may
/// repeat values into an injective one with the same gradient field. Ties are
/// broken by dimension (higher first, so pairs keep their order) and then by
/// canonical name.
inline MorseFunction make_injective(const SimplicialComplex& K, const MorseFunction& f) {
  const DmfReport report = validate_dmf(K, f);
  if (!report.axioms_ok)
    throw Error(ErrorKind::invalid_function, "function violates the Morse axioms");
  std::vector<SimplexId> order(K.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<SimplexId>(i);
  std::sort(order.begin(), order.end(), [&](SimplexId a, SimplexId b) {
    if (f.value(a) != f.value(b)) return f.value(a) < f.value(b);
    if (K.dim_of(a) != K.dim_of(b)) return K.dim_of(a) > K.dim_of(b);
    return a < b;
  });
  std::vector<Rational> values(K.size());
  for (size_t i = 0; i < order.size(); ++i) values[order[i]] = Rational(static_cast<int64_t>(i));
  return MorseFunction::from_values(K, std::move(values));
}

}  // namespace dmt
