#pragma once

#include <array>
#include <complex>
#include <optional>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "triang/tsys.hpp"

namespace triang {

/// Finite model of the uniform infinite-multiplicity nest: m grid cells on
/// [0,1), k blocks (truncated atom index), c channels per (cell, block). Basis
/// order is (cell, block, channel) lexicographic, so nest windows are
/// contiguous index ranges.
struct ModelSpace {
  int m = 16;
  int k = 6;
  int c = 4;
  IndexTemplate tmpl;  // tmpl.size == k

  static ModelSpace make(int m, int k, int c, OrderKind kind = OrderKind::Nat);

  int dim() const { return m * k * c; }
  /// Basis index for 0-based (cell, block, channel).
  int index(int cell, int block, int channel) const;
  /// Grid cell q as the interval [q/m, (q+1)/m).
  Interval cell_interval(int q) const;
  /// 0-based grid cells covered by K. Throws std::invalid_argument when K is
  /// not a union of whole grid cells.
  std::vector<int> aligned_cells(const BorelSet& K) const;

  void validate() const;
  friend bool operator==(const ModelSpace& a, const ModelSpace& b) {
    return a.m == b.m && a.k == b.k && a.c == b.c;
  }
};

/// A single weighted matrix entry: maps basis vector `from` to weight * `to`.
/// Coordinates are 0-based (cell, block, channel).
struct Link {
  std::array<int, 3> from;
  std::array<int, 3> to;
  std::complex<double> weight;
};

/// Dense operator on a ModelSpace. Operators built from link lists keep the
/// links, which lets fixture-aware code reason exactly (a compression is the
/// zero matrix iff no link lands in it).
class BlockOperator {
 public:
  static BlockOperator zero(const ModelSpace& space);
  static BlockOperator identity(const ModelSpace& space);
  static BlockOperator from_links(const ModelSpace& space, std::vector<Link> links);
  static BlockOperator from_matrix(const ModelSpace& space, Eigen::MatrixXcd mat);

  const ModelSpace& space() const { return space_; }
  const Eigen::MatrixXcd& mat() const { return mat_; }
  bool symbolic() const { return links_.has_value(); }
  const std::vector<Link>& links() const;  // throws if not symbolic

 private:
  ModelSpace space_;
  Eigen::MatrixXcd mat_;
  std::optional<std::vector<Link>> links_;
};

// --- Projection / partial-isometry selectors ---------------------------------
struct NestPrefix {
  int q;  // N_{q/m}: the first q grid cells, 0 <= q <= m
};
struct Block {
  int i;  // E_i, 1-based block index
};
struct BlockPair {
  int i, j;  // E_{i,j}: partial isometry sending block j to block i
};
struct Truncation {
  int n;  // M_n = E_1 + ... + E_n, 0 <= n <= k
};
struct Marker {
  BorelSet K;  // union of whole grid cells
  int i, j;    // E(K) E_{i,j}
};
using Selector = std::variant<NestPrefix, Block, BlockPair, Truncation, Marker>;

BlockOperator project(const ModelSpace& space, const Selector& sel);

// --- Norms and seminorms -----------------------------------------------------

/// Operator norm (largest singular value).
double op_norm(const BlockOperator& X);

/// Norm of (N_t - N_s) X (N_t - N_s) for the window of 0-based grid cells
/// [s_cell, t_cell). Throws std::domain_error on an empty or out-of-range
/// window.
double window_norm(const BlockOperator& X, int s_cell, int t_cell);

/// Model rendering of the diagonal seminorm i_x at a grid cell: the minimum of
/// window_norm over windows of width w_floor containing `cell` (compressions
/// only shrink norms, so wider windows never win). w_floor = 1 is the atomic
/// limit; w_floor = m recovers the full norm.
double diag_seminorm(const BlockOperator& X, int cell, int w_floor);

enum class Axis { Row, Col };

struct ProfileEntry {
  Interval cell;
  int truncation;  // n in the liminal schedule; 0 for plain cell profiles
  double value;
};

struct SeminormProfile {
  int w_floor = 1;
  std::vector<ProfileEntry> entries;

  /// Final (liminal) value; 0 for an empty profile.
  double liminal() const { return entries.empty() ? 0.0 : entries.back().value; }
};

/// Liminal row/col profile at one cell: diag_seminorm(E_index X M_n^perp)
/// (row) or (M_n^perp X E_index) (col) over n = 1..k-1. Throws when k < 2.
SeminormProfile liminal(const BlockOperator& X, Axis axis, int index, int cell, int w_floor);

/// r^infinity / c^infinity surrogate: minimum of diag_seminorm(E_index X M_S)
/// (row; column symmetric) over block subsets S with |S| >= s_min. The
/// seminorm is monotone in S, so only |S| = s_min subsets are enumerated;
/// exact enumeration requires k <= 16.
double rinf_seminorm(const BlockOperator& X, Axis axis, int index, int cell, int s_min,
                     int w_floor);

// --- Membership --------------------------------------------------------------

struct MembershipViolation {
  std::vector<int> indices;  // (i,j) for condition 1; (i) or (j) for 2/3
  Interval cell;
  double value;
};

struct MembershipReport {
  // violations[0..2] correspond to Def-style conditions 1..3.
  std::array<std::vector<MembershipViolation>, 3> violations;
  std::array<Rational, 3> exception_measure;
  bool member = false;
};

/// T(S,R,C) membership at model scale: condition 1 bounds
/// diag_seminorm(E_i X E_j) by tol outside S_{i,j}; conditions 2/3 bound the
/// horizon liminal row/col values outside R_i / C_j. Cells violating a
/// condition are tolerated up to total measure eta per condition. System sets
/// must be unions of whole grid cells and the template size must equal k.
MembershipReport membership(const BlockOperator& X, const ExtTriSystem& sys, double tol,
                            const Rational& eta, int w_floor);

/// Larson-ideal test: diag_seminorm(X, cell, 1) <= tol outside cells of total
/// measure <= eta.
bool is_larson_member(const BlockOperator& X, double tol, const Rational& eta);

/// Reads a (nearly) extended triangular system off an operator family:
/// S_{i,j} collects the grid cells where some op has single-cell block
/// seminorm >= min(thresholds); R_i / C_j likewise from the horizon liminal
/// values. Diagonal entries are forced to [0,1).
ExtTriSystem derive_support_system(const std::vector<BlockOperator>& ops,
                                   const std::vector<double>& thresholds, double tol);
/// Overload with an explicit space; required for the empty family (which
/// yields empty sets except the forced diagonals).
ExtTriSystem derive_support_system(const ModelSpace& space,
                                   const std::vector<BlockOperator>& ops,
                                   const std::vector<double>& thresholds, double tol);

// --- Fixtures ----------------------------------------------------------------

enum class FixtureKind { Nonclosure, RinfWitness, Nonsimple, Member, Violator };

struct FixtureParams {
  int i = 1;  // 1-based block indices
  int j = 2;
  BorelSet K;                         // rinf_witness / violator support
  int depth = 0;                      // rinf_witness: blocks used (default k)
  int condition = 1;                  // violator: membership condition to break
  const ExtTriSystem* sys = nullptr;  // member / violator target system
  unsigned seed = 0;                  // member: extra decorative links
};

/// Constructive witnesses. Nonclosure returns (X, Y); the others return one
/// operator. Capacity shortfalls raise std::invalid_argument naming the
/// binding constraint.
std::vector<BlockOperator> build_fixture(FixtureKind kind, const ModelSpace& space,
                                         const FixtureParams& params);

// --- Product inequality ------------------------------------------------------

struct InequalityRecord {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

/// Evaluates, at one cell, i(E_i XY E_j) against
/// sum_{t<=r} i(E_i X E_t) i(E_t Y E_j) + i(E_i X M_r^perp) i(M_r^perp Y E_j).
InequalityRecord product_inequality_check(const BlockOperator& X, const BlockOperator& Y, int i,
                                          int j, int cell, int r, int w_floor);

}  // namespace triang
