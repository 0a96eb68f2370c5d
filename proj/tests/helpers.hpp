// Shared helpers for tests: random system generators on a fixed 1/24 endpoint
// grid and brute-force pointwise oracles that re-derive axiom and maximality
// verdicts by indicator evaluation at probe midpoints.
#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "triang/tsys.hpp"

namespace helpers {

using namespace triang;

inline constexpr int kGrid = 24;  // all generated endpoints are multiples of 1/24

inline Rational probe_point(int cell) { return Rational(2 * cell + 1, 2 * kGrid); }

inline BorelSet random_borel(std::mt19937& rng, int max_pieces = 2) {
  std::uniform_int_distribution<int> endpoint(0, kGrid);
  std::vector<Interval> ivs;
  int pieces = static_cast<int>(rng() % (max_pieces + 1));
  for (int t = 0; t < pieces; ++t) {
    int a = endpoint(rng), b = endpoint(rng);
    if (a > b) std::swap(a, b);
    ivs.push_back({Rational(a, kGrid), Rational(b, kGrid)});
  }
  return BorelSet::canonicalize(std::move(ivs));
}

/// Arbitrary (usually invalid) system for checker-vs-oracle comparisons.
inline ExtTriSystem random_raw_system(std::mt19937& rng, int max_size) {
  int n = 1 + static_cast<int>(rng() % max_size);
  ExtTriSystem sys;
  sys.base.tmpl = IndexTemplate::finite(n);
  sys.base.S.assign(n, std::vector<BorelSet>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        sys.base.S[i][j] = rng() % 4 ? BorelSet::full() : random_borel(rng);
      } else {
        sys.base.S[i][j] = random_borel(rng);
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    sys.R.push_back(random_borel(rng));
    sys.C.push_back(random_borel(rng));
  }
  return sys;
}

/// Valid extended system: per probe cell, a random partial order plus a
/// pivot-anchored (or one-sided) Dedekind cut; the cut shape guarantees
/// axioms (4)-(6) by construction.
inline ExtTriSystem random_valid_system(std::mt19937& rng, int max_size,
                                        OrderKind kind = OrderKind::Finite) {
  int n = 1 + static_cast<int>(rng() % max_size);
  ExtTriSystem sys;
  switch (kind) {
    case OrderKind::Finite: sys.base.tmpl = IndexTemplate::finite(n); break;
    case OrderKind::Nat: sys.base.tmpl = IndexTemplate::nat(n); break;
    case OrderKind::Int: sys.base.tmpl = IndexTemplate::integers(n); break;
    case OrderKind::WellOrdered: sys.base.tmpl = IndexTemplate::well_ordered(n); break;
    case OrderKind::Rat: {
      std::vector<Rational> labels;
      for (int i = 1; i <= n; ++i) labels.push_back(Rational(i));
      sys.base.tmpl = IndexTemplate::rationals(std::move(labels));
      break;
    }
  }
  sys.base.S.assign(n, std::vector<BorelSet>(n, BorelSet::empty()));
  sys.R.assign(n, BorelSet::empty());
  sys.C.assign(n, BorelSet::empty());
  for (int i = 0; i < n; ++i) sys.base.S[i][i] = BorelSet::full();

  // cells: between random boundaries on the 1/kGrid lattice
  std::set<int> cuts = {0, kGrid};
  for (int t = 0; t < 4; ++t) cuts.insert(1 + static_cast<int>(rng() % (kGrid - 1)));
  std::vector<int> bounds(cuts.begin(), cuts.end());
  for (std::size_t cidx = 0; cidx + 1 < bounds.size(); ++cidx) {
    BorelSet cell =
        BorelSet::interval(Rational(bounds[cidx], kGrid), Rational(bounds[cidx + 1], kGrid));
    // random partial order: random topological permutation, random edges,
    // transitive closure
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) rel[i][i] = true;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (rng() % 2) rel[perm[a]][perm[b]] = true;
    for (int mid = 0; mid < n; ++mid)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (rel[a][mid] && rel[mid][b]) rel[a][b] = true;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && rel[i][j]) sys.base.S[i][j] = set_union(sys.base.S[i][j], cell);
    // cut: pivot-anchored, one-sided, or empty
    int shape = static_cast<int>(rng() % 4);
    if (shape == 0) {
      int v = static_cast<int>(rng() % n);
      for (int i = 0; i < n; ++i) {
        if (rel[i][v]) sys.R[i] = set_union(sys.R[i], cell);
        if (rel[v][i]) sys.C[i] = set_union(sys.C[i], cell);
      }
    } else if (shape == 1) {  // B only: any down-set
      int v = static_cast<int>(rng() % n);
      for (int i = 0; i < n; ++i)
        if (rel[i][v]) sys.R[i] = set_union(sys.R[i], cell);
    } else if (shape == 2) {  // A only: any up-set
      int v = static_cast<int>(rng() % n);
      for (int i = 0; i < n; ++i)
        if (rel[v][i]) sys.C[i] = set_union(sys.C[i], cell);
    }
    // shape 3: both empty
  }
  return sys;
}

// ---------------------------------------------------------------------------
// Brute-force oracles (pointwise indicator evaluation, no refinement machinery)
// ---------------------------------------------------------------------------

struct PointViolation {
  int axiom;
  std::vector<int> indices;  // 1-based
  int probe_cell;            // 0-based cell on the 1/kGrid lattice

  friend bool operator<(const PointViolation& a, const PointViolation& b) {
    return std::tie(a.axiom, a.indices, a.probe_cell) <
           std::tie(b.axiom, b.indices, b.probe_cell);
  }
  friend bool operator==(const PointViolation& a, const PointViolation& b) = default;
};

inline std::set<PointViolation> oracle_axioms(const ExtTriSystem& sys, bool extended,
                                              bool include_axiom6) {
  const int n = sys.size();
  std::set<PointViolation> out;
  for (int cell = 0; cell < kGrid; ++cell) {
    Rational x = probe_point(cell);
    auto s = [&](int i, int j) { return sys.base.S[i][j].contains_point(x); };
    auto r = [&](int i) { return sys.R[i].contains_point(x); };
    auto c = [&](int i) { return sys.C[i].contains_point(x); };
    for (int i = 0; i < n; ++i)
      if (!s(i, i)) out.insert({kAxiomDiagonal, {i + 1}, cell});
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (s(i, j) && s(j, i)) out.insert({kAxiomAntisymmetry, {i + 1, j + 1}, cell});
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          if (s(i, j) && s(j, k) && !s(i, k))
            out.insert({kAxiomTransitivity, {i + 1, j + 1, k + 1}, cell});
    if (!extended) continue;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (c(i) && s(i, j) && !c(j)) out.insert({kAxiomColumn, {i + 1, j + 1}, cell});
        if (s(i, j) && r(j) && !r(i)) out.insert({kAxiomRow, {i + 1, j + 1}, cell});
        if (include_axiom6 && r(i) && c(j) && !s(i, j))
          out.insert({kAxiomRowColumn, {i + 1, j + 1}, cell});
      }
    }
  }
  return out;
}

/// Expands a checker report (verbose) to the probe lattice for set comparison.
inline std::set<PointViolation> expand_report(const AxiomReport& rep) {
  std::set<PointViolation> out;
  for (const AxiomViolation& v : rep.violations) {
    for (int cell = 0; cell < kGrid; ++cell) {
      Rational x = probe_point(cell);
      if (v.cell.lo <= x && x < v.cell.hi) out.insert({v.axiom, v.indices, cell});
    }
  }
  return out;
}

/// Independent per-point maximality oracle re-deriving the cut conditions.
inline bool oracle_maximal_at(const ExtTriSystem& sys, const Rational& x, bool truncated) {
  const int n = sys.size();
  auto s = [&](int i, int j) {
    return i == j || sys.base.S[i][j].contains_point(x);
  };
  std::vector<bool> inA(n), inB(n);
  for (int i = 0; i < n; ++i) {
    inA[i] = sys.C[i].contains_point(x);
    inB[i] = sys.R[i].contains_point(x);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!s(i, j) && !s(j, i)) return false;  // not linear
  for (int i = 0; i < n; ++i)
    if (!inA[i] && !inB[i]) return false;  // coverage fails
  bool pivot = false;
  for (int i = 0; i < n; ++i) pivot = pivot || (inA[i] && inB[i]);
  if (pivot) return true;
  if (!truncated) return false;
  OrderKind kind = sys.base.tmpl.kind;
  bool a_empty = std::none_of(inA.begin(), inA.end(), [](bool b) { return b; });
  bool b_empty = std::none_of(inB.begin(), inB.end(), [](bool b) { return b; });
  bool a_all = std::all_of(inA.begin(), inA.end(), [](bool b) { return b; });
  bool b_all = std::all_of(inB.begin(), inB.end(), [](bool b) { return b; });
  bool two_sided_kind = kind == OrderKind::Int || kind == OrderKind::Rat;
  if (a_empty && b_all && kind != OrderKind::Finite) return true;
  if (b_empty && a_all && two_sided_kind) return true;
  // two-sided virtual cut: disjoint, both nonempty, covering
  if (!a_empty && !b_empty && two_sided_kind) return true;  // cover+disjoint already checked
  return false;
}

inline bool subset(const BorelSet& a, const BorelSet& b) {
  return set_difference(a, b).is_empty();
}

/// Entrywise extension check: every input set contained in the output set.
inline bool extends(const ExtTriSystem& in, const ExtTriSystem& out) {
  const int n = in.size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (!subset(in.base.S[i][j], out.base.S[i][j])) return false;
    if (!subset(in.R[i], out.R[i]) || !subset(in.C[i], out.C[i])) return false;
  }
  return true;
}

inline bool systems_equal(const ExtTriSystem& a, const ExtTriSystem& b) {
  if (a.size() != b.size()) return false;
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < a.size(); ++j)
      if (a.base.S[i][j] != b.base.S[i][j]) return false;
    if (a.R[i] != b.R[i] || a.C[i] != b.C[i]) return false;
  }
  return true;
}

}  // namespace helpers
