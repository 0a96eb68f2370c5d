#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "triang/borel.hpp"

namespace triang {

enum class OrderKind { Finite, Nat, Int, Rat, WellOrdered };

std::string order_kind_name(OrderKind k);
OrderKind order_kind_from_name(const std::string& name);

/// A finite truncation of an ordered index set. `Finite` means the indices
/// literally are {1..size}; the other kinds declare which infinite order the
/// represented labels were truncated from, which decides the legitimate
/// "at infinity" Dedekind cuts in truncated-mode maximality checks.
struct IndexTemplate {
  OrderKind kind = OrderKind::Finite;
  int size = 0;
  std::vector<Rational> labels;  // strictly increasing, length == size

  static IndexTemplate finite(int size);
  static IndexTemplate nat(int size);
  static IndexTemplate integers(int size);  // labels centered on 0
  static IndexTemplate well_ordered(int size);
  static IndexTemplate rationals(std::vector<Rational> labels);

  void validate() const;  // throws std::invalid_argument
};

struct TriSystem {
  IndexTemplate tmpl;
  std::vector<std::vector<BorelSet>> S;  // size x size
};

struct ExtTriSystem {
  TriSystem base;
  std::vector<BorelSet> R;
  std::vector<BorelSet> C;

  int size() const { return base.tmpl.size; }
  /// All S/R/C sets flattened (for building refinements).
  std::vector<BorelSet> all_sets() const;
};

// Axiom ids used in reports. 1-6 are the extended-triangular-system axioms;
// 7-9 are the per-cell maximality conditions.
inline constexpr int kAxiomDiagonal = 1;      // S_{i,i} = [0,1)
inline constexpr int kAxiomAntisymmetry = 2;  // S_{i,j} ∩ S_{j,i} = ∅
inline constexpr int kAxiomTransitivity = 3;  // S_{i,j} ∩ S_{j,k} ⊆ S_{i,k}
inline constexpr int kAxiomColumn = 4;        // C_i ∩ S_{i,j} ⊆ C_j
inline constexpr int kAxiomRow = 5;           // S_{i,j} ∩ R_j ⊆ R_i
inline constexpr int kAxiomRowColumn = 6;     // R_i ∩ C_j ⊆ S_{i,j}
inline constexpr int kMaxLinearity = 7;       // order not linear on the cell
inline constexpr int kMaxCoverage = 8;        // A ∪ B misses an index
inline constexpr int kMaxPivot = 9;           // no pivot and no admissible virtual cut

struct AxiomViolation {
  int axiom = 0;
  std::vector<int> indices;  // 1-based index tuple, empty for cut-level checks
  Interval cell;

  friend bool operator==(const AxiomViolation&, const AxiomViolation&) = default;
};

struct AxiomReport {
  bool passed = true;
  std::vector<AxiomViolation> violations;
};

enum class ExtCheckMode { Full, Nearly };  // Nearly skips axiom 6
enum class MaximalityMode { Finite, Truncated };

AxiomReport check_triangular(const TriSystem& sys, bool verbose = false);
AxiomReport check_extended(const ExtTriSystem& sys, ExtCheckMode mode = ExtCheckMode::Full,
                           bool verbose = false);

enum class VirtualCut {
  None,
  AEmptyAtInfinity,   // A = ∅, B = all: cut beyond the top of the order
  BEmptyAtInfinity,   // B = ∅, A = all: cut below the bottom (int/rat only)
  TwoSidedAtInfinity  // disjoint A ∪ B = all: cut at an unrepresented limit label
};

/// The order and Dedekind cut induced on the index set by one refinement cell.
struct Cut {
  Interval cell;
  std::vector<std::vector<bool>> relation;  // relation[i][j]: cell ⊆ S_{i+1,j+1}
  std::vector<int> A;                       // 1-based indices with cell ⊆ C_i
  std::vector<int> B;                       // 1-based indices with cell ⊆ R_i
  VirtualCut virtual_tag = VirtualCut::None;
};

Cut induced_cut_at(const ExtTriSystem& sys, const Rational& x);

/// Per-cell maximality check. Finite mode insists on a pivot (min A = max B);
/// truncated mode additionally admits the template's virtual cuts.
AxiomReport is_maximal(const ExtTriSystem& sys, MaximalityMode mode, bool verbose = false);

struct CompletionResult {
  ExtTriSystem system;
  int stage1_passes = 0;
  int repaired_cells = 0;
};

/// Deterministic maximal completion: stage 1 linearizes the order (row-major
/// pair enumeration, iterated to a fixed point), stage 2 completes the cuts,
/// and a final per-cell repair pass pivots any cut the stage-2 update formula
/// cannot reach. Targets Truncated mode for infinite-kind templates and
/// Finite mode for OrderKind::Finite.
CompletionResult complete_to_maximal(const ExtTriSystem& sys);

enum class ExampleKind { NatCase, IntCase, WellOrdered, Cantor, Mixed };
enum class CutCase { Pivot, AEmpty, BEmpty, TwoSided };

struct ExampleParams {
  int size = 6;
  CutCase cut = CutCase::Pivot;
  Rational pivot_label = Rational(1);  // for Pivot: must match a template label
  Rational gamma = Rational(0);       // for TwoSided on the Cantor template
  std::int64_t resolution_den = 8;    // Mixed: grid resolution 1/resolution_den
};

/// The constant-cut reference systems (and the cell-varying mixed blend).
ExtTriSystem build_example(ExampleKind kind, const ExampleParams& params);

}  // namespace triang
