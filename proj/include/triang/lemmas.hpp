#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "triang/nestlab.hpp"

namespace triang {

/// One window ((p-1)/q, (p+1)/q) meeting the generating set.
struct IntervalWindow {
  Rational s, t;
  std::int64_t p = 0, q = 1;
};

struct IntervalFamily {
  std::vector<IntervalWindow> windows;  // q ascending, then p ascending
  // containment[n] = indices m with window m contained in window n.
  std::vector<std::vector<int>> containment;
};

/// All windows ((p-1)/q, (p+1)/q), 1 <= q <= q_max, 0 <= p <= q, whose open
/// interior meets K. Throws std::domain_error for empty K or q_max < 2.
IntervalFamily interval_family(const BorelSet& K, int q_max);

/// One recorded inequality: value measured against its bound.
struct Certificate {
  std::string label;
  double value = 0.0;
  double bound = 0.0;
};

struct Selection {
  std::vector<int> indices;            // selected 0-based positions, increasing
  std::vector<Eigen::MatrixXcd> P, Q;  // per-step projections (sub_sum_select)
  std::vector<std::vector<Certificate>> step_certificates;
};

/// Subsequence selection by spectral thresholding: step i picks the next
/// admissible index k with small cross-products against earlier picks, builds
/// P_i/Q_i from the singular vectors of A_k compressed to the orthogonal
/// complement of the earlier projections (threshold alpha_i/2 on the first
/// step, alpha_i/4 afterwards), and certifies
/// ||A_k - P_i A_k Q_i|| <= alpha_i. Optional constraints[i] restricts step
/// i's candidates. Throws std::runtime_error naming the first failed
/// inequality when no admissible candidate remains.
Selection sub_sum_select(const std::vector<BlockOperator>& A, const std::vector<double>& alpha,
                         const std::vector<std::vector<int>>& constraints = {});

/// Linking selection: greedily keeps indices whose new D summand neither sees
/// the accumulated sum (bound eps*a/2) nor disturbs earlier picks (bound
/// eps*a/2^(n+1)), then verifies ||A_k D_sum B_k|| > (1-eps)a for every pick.
/// Constraint groups, when given, are visited round-robin. Preconditions
/// ||A_i D_i B_i|| > a are checked and reported with the failing 1-based
/// index.
std::pair<Selection, BlockOperator> linking_select(const std::vector<BlockOperator>& A,
                                                   const std::vector<BlockOperator>& B,
                                                   const std::vector<BlockOperator>& D, double a,
                                                   double eps,
                                                   const std::vector<std::vector<int>>& constraints = {});

/// Marker-variant row/column factorization for link-list operators: builds
/// A = E_i A E_i and B = B E_j with A X B exactly the marker of (the grid
/// interior of) K, consuming one X-link of modulus > a per (cell, channel).
/// Throws on dense operators (unsupported) or capacity shortfalls (naming the
/// cell and channel).
std::pair<BlockOperator, BlockOperator> row_column_factors(const BlockOperator& X,
                                                           const BorelSet& K, int i, int j,
                                                           double a);

}  // namespace triang
