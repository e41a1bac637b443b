#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "dmt/complex.hpp"
#include "dmt/morse.hpp"

namespace dmt {

/// Total order in which simplices enter the sub-level filtration of a Morse
/// function. Every prefix cut at a value boundary is exactly the sub-level
/// complex at that value; within one entry value, faces precede cofaces.
struct FiltrationOrder {
  std::vector<SimplexId> order;    // position -> simplex
  std::vector<int32_t> position;   // simplex -> position
  std::vector<Rational> entry;     // simplex -> entry value
};

inline FiltrationOrder filtration_order(const SimplicialComplex& K, const MorseFunction& f) {
  require_valid_dmf(K, f);
  FiltrationOrder filt;
  filt.entry = entry_values(K, f);
  filt.order.resize(K.size());
  for (size_t i = 0; i < filt.order.size(); ++i) filt.order[i] = static_cast<SimplexId>(i);
  // Ids already encode (dimension, canonical name), so the id is the whole
  // tie-break.
  std::sort(filt.order.begin(), filt.order.end(), [&](SimplexId a, SimplexId b) {
    if (filt.entry[a] != filt.entry[b]) return filt.entry[a] < filt.entry[b];
    return a < b;
  });
  filt.position.resize(K.size());
  for (size_t pos = 0; pos < filt.order.size(); ++pos)
    filt.position[filt.order[pos]] = static_cast<int32_t>(pos);
  return filt;
}

/// Birth/death pair of a homology class; death == kNoSimplex marks an
/// essential class. The pair dimension is the birth dimension.
struct PersistencePair {
  SimplexId birth = kNoSimplex;
  SimplexId death = kNoSimplex;
  int dim = 0;

  bool essential() const { return death == kNoSimplex; }
  friend bool operator==(const PersistencePair& a, const PersistencePair& b) = default;
};

struct PersistenceResult {
  FiltrationOrder filtration;
  /// Pairs with a genuine lifetime (distinct entry values) plus essential
  /// classes, sorted by (dimension, birth position).
  std::vector<PersistencePair> pairs;
  /// Reduction pairs whose members enter at the same value. For a valid Morse
  /// function these coincide with the gradient pairs.
  std::vector<std::pair<SimplexId, SimplexId>> zero_pairs;
  /// Reduction bookkeeping by filtration position: partner position (or -1)
  /// and whether the column was a birth.
  std::vector<int32_t> partner;
  std::vector<char> birth_column;
};

/// Persistence of the sub-level filtration by column reduction of the
/// boundary matrix over the two-element field. The reduction realizes the
/// elder rule: every death column pairs with the youngest unpaired birth.
inline PersistenceResult persistence_pairs(const SimplicialComplex& K, const MorseFunction& f) {
  PersistenceResult result;
  result.filtration = filtration_order(K, f);
  const auto& filt = result.filtration;
  const size_t n = K.size();

  std::vector<std::vector<int32_t>> columns(n);  // reduced columns, by position
  std::vector<int32_t> owner(n, -1);             // pivot row -> owning column
  result.partner.assign(n, -1);
  result.birth_column.assign(n, 0);

  std::vector<int32_t> column, merged;
  for (size_t j = 0; j < n; ++j) {
    const SimplexId s = filt.order[j];
    column.clear();
    for (SimplexId face : K.faces(s)) column.push_back(filt.position[face]);
    std::sort(column.begin(), column.end());
    while (!column.empty()) {
      const int32_t pivot = column.back();
      const int32_t other = owner[pivot];
      if (other < 0) {
        owner[pivot] = static_cast<int32_t>(j);
        result.partner[pivot] = static_cast<int32_t>(j);
        result.partner[j] = pivot;
        break;
      }
      merged.clear();
      std::set_symmetric_difference(column.begin(), column.end(), columns[other].begin(),
                                    columns[other].end(), std::back_inserter(merged));
      column.swap(merged);
    }
    if (column.empty()) result.birth_column[j] = 1;
    columns[j] = column;
  }

  for (size_t j = 0; j < n; ++j) {
    if (!result.birth_column[j]) continue;
    const SimplexId birth = filt.order[j];
    const int32_t death_pos = result.partner[j];
    if (death_pos < 0) {
      result.pairs.push_back({birth, kNoSimplex, K.dim_of(birth)});
      continue;
    }
    const SimplexId death = filt.order[death_pos];
    if (filt.entry[birth] == filt.entry[death]) {
      result.zero_pairs.emplace_back(birth, death);
    } else {
      result.pairs.push_back({birth, death, K.dim_of(birth)});
    }
  }
  std::sort(result.pairs.begin(), result.pairs.end(),
            [&](const PersistencePair& a, const PersistencePair& b) {
              if (a.dim != b.dim) return a.dim < b.dim;
              return filt.position[a.birth] < filt.position[b.birth];
            });
  std::sort(result.zero_pairs.begin(), result.zero_pairs.end());
  return result;
}

/// Betti numbers of the filtration prefix of the given length, read off the
/// reduction: classes born before the cut and not yet dead.
inline std::vector<int64_t> betti_at_prefix(const SimplicialComplex& K,
                                            const PersistenceResult& result, size_t prefix) {
  std::vector<int64_t> betti(std::max(K.dim() + 1, 0), 0);
  for (size_t j = 0; j < prefix; ++j) {
    if (!result.birth_column[j]) continue;
    const int32_t death = result.partner[j];
    if (death >= 0 && static_cast<size_t>(death) < prefix) continue;
    betti[K.dim_of(result.filtration.order[j])] += 1;
  }
  return betti;
}

enum class CriticalClass : uint8_t {
  birth_paired,  // birth simplex of a finite pair
  death,         // death simplex of a finite pair
  essential,     // paired with infinity
};

inline const char* to_string(CriticalClass c) {
  switch (c) {
    case CriticalClass::birth_paired: return "BIRTH_PAIRED";
    case CriticalClass::death: return "DEATH";
    case CriticalClass::essential: return "ESSENTIAL";
  }
  return "?";
}

struct CriticalClassification {
  std::vector<SimplexId> critical;   // ascending
  std::vector<CriticalClass> cls;    // parallel to critical
};

/// Sorts every critical simplex into exactly one of: birth of a finite pair,
/// death of a finite pair, or essential.
inline CriticalClassification classify_critical(const SimplicialComplex& K,
                                                const MorseFunction& f) {
  const CriticalInfo info = critical_simplices(K, f);
  const PersistenceResult result = persistence_pairs(K, f);

  std::vector<int8_t> tag(K.size(), -1);
  for (const PersistencePair& pair : result.pairs) {
    tag[pair.birth] = pair.essential() ? static_cast<int8_t>(CriticalClass::essential)
                                       : static_cast<int8_t>(CriticalClass::birth_paired);
    if (!pair.essential()) tag[pair.death] = static_cast<int8_t>(CriticalClass::death);
  }

  CriticalClassification out;
  for (SimplexId s : info.critical) {
    if (tag[s] < 0)
      throw Error(ErrorKind::invalid_function,
                  "critical simplex '" + K.name(s) + "' missing from the pair structure");
    out.critical.push_back(s);
    out.cls.push_back(static_cast<CriticalClass>(tag[s]));
  }
  // A tagged non-critical simplex would contradict the pair structure.
  for (SimplexId s = 0; s < static_cast<SimplexId>(K.size()); ++s) {
    if (tag[s] >= 0 && !info.is_critical[s])
      throw Error(ErrorKind::invalid_function,
                  "non-critical simplex '" + K.name(s) + "' appears in a persistence pair");
  }
  return out;
}

struct MorseEqualityRow {
  int q = 0;
  int64_t critical_count = 0;   // number of critical simplices of dimension q
  int64_t betti = 0;            // Betti number
  int64_t pairs_born = 0;       // pairs whose birth has dimension q
  int64_t pairs_finite = 0;     // of those, pairs with a finite death
  bool count_identity_ok = false;   // C_q == betti_q + finite_{q-1} + finite_q
  bool prefix_identity_ok = false;  // alternating sum up to q, with finite_q remainder
};

struct MorseEqualitiesReport {
  std::vector<MorseEqualityRow> rows;
  bool top_identity_ok = false;  // full alternating sums of counts and Betti numbers agree
  bool ok = false;
};

/// Per-dimension census of critical simplices against persistence pairs: the
/// Morse inequalities sharpened to equalities by the finite-pair counts.
inline MorseEqualitiesReport morse_equalities_report(const SimplicialComplex& K,
                                                     const MorseFunction& f) {
  const CriticalInfo info = critical_simplices(K, f);
  const PersistenceResult result = persistence_pairs(K, f);
  const std::vector<int64_t> betti = K.betti_numbers();
  const int n = K.dim();

  MorseEqualitiesReport report;
  if (n < 0) {
    report.top_identity_ok = true;
    report.ok = true;
    return report;
  }

  std::vector<int64_t> born(n + 1, 0), finite(n + 2, 0);
  for (const PersistencePair& pair : result.pairs) {
    born[pair.dim] += 1;
    if (!pair.essential()) finite[pair.dim] += 1;
  }

  report.ok = true;
  int64_t alt_c = 0, alt_b = 0;
  for (int q = 0; q <= n; ++q) {
    MorseEqualityRow row;
    row.q = q;
    row.critical_count = info.counts_by_dim[q];
    row.betti = betti[q];
    row.pairs_born = born[q];
    row.pairs_finite = finite[q];
    const int64_t finite_below = q == 0 ? 0 : finite[q - 1];
    row.count_identity_ok = row.critical_count == row.betti + finite_below + finite[q];
    alt_c = row.critical_count - alt_c;
    alt_b = row.betti - alt_b;
    row.prefix_identity_ok = alt_c == alt_b + finite[q];
    report.ok = report.ok && row.count_identity_ok && row.prefix_identity_ok &&
                row.betti == row.pairs_born - row.pairs_finite;
    report.rows.push_back(row);
  }
  report.top_identity_ok = alt_c == alt_b + finite[n] && finite[n] == 0;
  report.ok = report.ok && report.top_identity_ok;
  return report;
}

}  // namespace dmt
