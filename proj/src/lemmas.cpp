#include "triang/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace triang {

IntervalFamily interval_family(const BorelSet& K, int q_max) {
  if (K.is_empty()) throw std::domain_error("interval_family: empty generating set");
  if (q_max < 2) throw std::domain_error("interval_family: q_max must be >= 2");
  IntervalFamily fam;
  for (std::int64_t q = 1; q <= q_max; ++q) {
    for (std::int64_t p = 0; p <= q; ++p) {
      Rational s(p - 1, q), t(p + 1, q);
      bool meets = false;
      for (const Interval& iv : K.intervals()) {
        // open window (s,t) meets half-open [lo,hi) iff lo < t and s < hi
        if (iv.lo < t && s < iv.hi) {
          meets = true;
          break;
        }
      }
      if (meets) fam.windows.push_back({s, t, p, q});
    }
  }
  const int n = static_cast<int>(fam.windows.size());
  fam.containment.assign(n, {});
  for (int outer = 0; outer < n; ++outer) {
    for (int inner = 0; inner < n; ++inner) {
      if (fam.windows[outer].s <= fam.windows[inner].s &&
          fam.windows[inner].t <= fam.windows[outer].t)
        fam.containment[outer].push_back(inner);
    }
  }
  return fam;
}

namespace {

Eigen::MatrixXcd sum_or_zero(const std::vector<Eigen::MatrixXcd>& ms, int dim) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& m : ms) out += m;
  return out;
}

double mnorm(const Eigen::MatrixXcd& A) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(A.adjoint() * A, Eigen::EigenvaluesOnly);
  double top = es.eigenvalues().maxCoeff();
  return top <= 0.0 ? 0.0 : std::sqrt(top);
}

}  // namespace

Selection sub_sum_select(const std::vector<BlockOperator>& A, const std::vector<double>& alpha,
                         const std::vector<std::vector<int>>& constraints) {
  if (A.empty()) throw std::invalid_argument("sub_sum_select: empty sequence");
  const int dim = A.front().space().dim();
  for (const BlockOperator& op : A) {
    if (op.space().dim() != dim)
      throw std::invalid_argument("sub_sum_select: operators on different spaces");
  }
  Selection sel;
  int last = -1;
  for (std::size_t step = 0; step < alpha.size(); ++step) {
    const double a_i = alpha[step];
    const double cross_bound = (a_i / 4.0) * (a_i / 4.0);
    const double threshold = step == 0 ? a_i / 2.0 : a_i / 4.0;
    Eigen::MatrixXcd Pc =
        Eigen::MatrixXcd::Identity(dim, dim) - sum_or_zero(sel.P, dim);
    Eigen::MatrixXcd Qc =
        Eigen::MatrixXcd::Identity(dim, dim) - sum_or_zero(sel.Q, dim);
    std::string first_failure;
    bool picked = false;
    for (int cand = last + 1; cand < static_cast<int>(A.size()) && !picked; ++cand) {
      if (step < constraints.size() && !constraints[step].empty() &&
          std::find(constraints[step].begin(), constraints[step].end(), cand) ==
              constraints[step].end())
        continue;
      std::vector<Certificate> certs;
      bool ok = true;
      for (std::size_t prev = 0; prev < sel.indices.size() && ok; ++prev) {
        const Eigen::MatrixXcd& Ap = A[sel.indices[prev]].mat();
        double c1 = mnorm(Ap * A[cand].mat().adjoint());
        double c2 = mnorm(Ap.adjoint() * A[cand].mat());
        certs.push_back({"cross ||A_prev A_cand*||", c1, cross_bound});
        certs.push_back({"cross ||A_prev* A_cand||", c2, cross_bound});
        if (c1 > cross_bound || c2 > cross_bound) {
          ok = false;
          if (first_failure.empty())
            first_failure = "step " + std::to_string(step + 1) + ", candidate " +
                            std::to_string(cand + 1) + ": cross-product norm " +
                            std::to_string(std::max(c1, c2)) + " exceeds " +
                            std::to_string(cross_bound);
        }
      }
      if (!ok) continue;
      Eigen::MatrixXcd compressed = Pc * A[cand].mat() * Qc;
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(compressed,
                                             Eigen::ComputeThinU | Eigen::ComputeThinV);
      Eigen::MatrixXcd P = Eigen::MatrixXcd::Zero(dim, dim);
      Eigen::MatrixXcd Q = Eigen::MatrixXcd::Zero(dim, dim);
      for (int l = 0; l < svd.singularValues().size(); ++l) {
        if (svd.singularValues()[l] >= threshold) {
          P += svd.matrixU().col(l) * svd.matrixU().col(l).adjoint();
          Q += svd.matrixV().col(l) * svd.matrixV().col(l).adjoint();
        }
      }
      double resid = mnorm(A[cand].mat() - P * A[cand].mat() * Q);
      certs.push_back({"residual ||A_k - P A_k Q||", resid, a_i});
      if (resid > a_i + 1e-12) {
        if (first_failure.empty())
          first_failure = "step " + std::to_string(step + 1) + ", candidate " +
                          std::to_string(cand + 1) + ": residual " + std::to_string(resid) +
                          " exceeds alpha " + std::to_string(a_i);
        continue;
      }
      sel.indices.push_back(cand);
      sel.P.push_back(std::move(P));
      sel.Q.push_back(std::move(Q));
      sel.step_certificates.push_back(std::move(certs));
      last = cand;
      picked = true;
    }
    if (!picked) {
      if (first_failure.empty())
        first_failure = "step " + std::to_string(step + 1) + ": no admissible candidate left";
      throw std::runtime_error("sub_sum_select: insufficient data (" + first_failure + ")");
    }
  }
  return sel;
}

std::pair<Selection, BlockOperator> linking_select(const std::vector<BlockOperator>& A,
                                                   const std::vector<BlockOperator>& B,
                                                   const std::vector<BlockOperator>& D, double a,
                                                   double eps,
                                                   const std::vector<std::vector<int>>& constraints) {
  if (A.empty() || A.size() != B.size() || A.size() != D.size())
    throw std::invalid_argument("linking_select: sequences must be nonempty and equal-length");
  const ModelSpace& sp = D.front().space();
  for (std::size_t idx = 0; idx < A.size(); ++idx) {
    double v = mnorm(A[idx].mat() * D[idx].mat() * B[idx].mat());
    if (v <= a)
      throw std::invalid_argument("linking_select: precondition failed at index " +
                                  std::to_string(idx + 1) + ": ||A D B|| = " +
                                  std::to_string(v) + " <= a = " + std::to_string(a));
  }
  Selection sel;
  Eigen::MatrixXcd d_sum = Eigen::MatrixXcd::Zero(sp.dim(), sp.dim());
  for (int cand = 0; cand < static_cast<int>(A.size()); ++cand) {
    if (!constraints.empty()) {
      // round-robin schedule over the constraint groups
      const auto& group = constraints[sel.indices.size() % constraints.size()];
      if (!group.empty() && std::find(group.begin(), group.end(), cand) == group.end())
        continue;
    }
    const int step = static_cast<int>(sel.indices.size()) + 1;  // 1-based
    std::vector<Certificate> certs;
    double seen = mnorm(A[cand].mat() * d_sum * B[cand].mat());
    double bound1 = eps * a / 2.0;
    certs.push_back({"||A_k D_partial B_k||", seen, bound1});
    bool ok = seen < bound1;
    double bound2 = eps * a / std::pow(2.0, step + 1);
    for (std::size_t prev = 0; prev < sel.indices.size() && ok; ++prev) {
      int pidx = sel.indices[prev];
      double back = mnorm(A[pidx].mat() * D[cand].mat() * B[pidx].mat());
      certs.push_back({"||A_prev D_k B_prev||", back, bound2});
      ok = back < bound2;
    }
    if (!ok) continue;
    sel.indices.push_back(cand);
    sel.step_certificates.push_back(std::move(certs));
    d_sum += D[cand].mat();
  }
  if (sel.indices.empty())
    throw std::runtime_error("linking_select: insufficient data (no index satisfied "
                             "||A_k D_partial B_k|| < eps*a/2)");
  BlockOperator D_sum = BlockOperator::from_matrix(sp, d_sum);
  for (int idx : sel.indices) {
    double v = mnorm(A[idx].mat() * D_sum.mat() * B[idx].mat());
    if (!(v > (1.0 - eps) * a))
      throw std::runtime_error("linking_select: insufficient data (final bound ||A D_sum B|| = " +
                               std::to_string(v) + " <= (1-eps)a at index " +
                               std::to_string(idx + 1) + ")");
  }
  return {std::move(sel), std::move(D_sum)};
}

std::pair<BlockOperator, BlockOperator> row_column_factors(const BlockOperator& X,
                                                           const BorelSet& K, int i, int j,
                                                           double a) {
  const ModelSpace& sp = X.space();
  if (i < 1 || i > sp.k || j < 1 || j > sp.k)
    throw std::domain_error("row_column_factors: block index out of range");
  if (!X.symbolic())
    throw std::invalid_argument(
        "row_column_factors: unsupported operator (needs an explicit link list; general "
        "interpolation is out of scope)");

  // Count shared endpoints: a link is usable only when no other link touches
  // its source or target vector, so routing through it is exact.
  std::map<std::array<int, 3>, int> from_count, to_count;
  for (const Link& l : X.links()) {
    ++from_count[l.from];
    ++to_count[l.to];
  }

  std::vector<Link> a_links, b_links;
  std::vector<bool> used(X.links().size(), false);
  for (int q = 0; q < sp.m; ++q) {
    Interval cell = sp.cell_interval(q);
    if (!K.contains_interval(cell)) continue;
    for (int ch = 0; ch < sp.c; ++ch) {
      bool found = false;
      for (std::size_t l = 0; l < X.links().size() && !found; ++l) {
        const Link& link = X.links()[l];
        if (used[l] || link.to[1] != i - 1) continue;
        if (std::abs(link.weight) <= a) continue;
        if (from_count[link.from] != 1 || to_count[link.to] != 1) continue;
        used[l] = true;
        b_links.push_back({{q, j - 1, ch}, link.from, 1.0});
        a_links.push_back({link.to, {q, i - 1, ch}, 1.0 / link.weight});
        found = true;
      }
      if (!found)
        throw std::invalid_argument("row_column_factors: no usable link of modulus > " +
                                    std::to_string(a) + " for cell [" + cell.lo.str() + "," +
                                    cell.hi.str() + ") channel " + std::to_string(ch));
    }
  }
  return {BlockOperator::from_links(sp, std::move(a_links)),
          BlockOperator::from_links(sp, std::move(b_links))};
}

}  // namespace triang
