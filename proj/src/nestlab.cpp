#include "triang/nestlab.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

namespace triang {

ModelSpace ModelSpace::make(int m, int k, int c, OrderKind kind) {
  ModelSpace s;
  s.m = m;
  s.k = k;
  s.c = c;
  switch (kind) {
    case OrderKind::Finite: s.tmpl = IndexTemplate::finite(k); break;
    case OrderKind::Nat: s.tmpl = IndexTemplate::nat(k); break;
    case OrderKind::Int: s.tmpl = IndexTemplate::integers(k); break;
    case OrderKind::WellOrdered: s.tmpl = IndexTemplate::well_ordered(k); break;
    case OrderKind::Rat: {
      std::vector<Rational> labels;
      for (int i = 1; i <= k; ++i) labels.push_back(Rational(i));
      s.tmpl = IndexTemplate::rationals(std::move(labels));
      break;
    }
  }
  s.validate();
  return s;
}

void ModelSpace::validate() const {
  if (m < 1 || k < 1 || c < 1)
    throw std::invalid_argument("ModelSpace: m, k, c must be positive");
  if (tmpl.size != k) throw std::invalid_argument("ModelSpace: template size != k");
  tmpl.validate();
}

int ModelSpace::index(int cell, int block, int channel) const {
  if (cell < 0 || cell >= m || block < 0 || block >= k || channel < 0 || channel >= c)
    throw std::domain_error("ModelSpace: basis coordinate out of range");
  return (cell * k + block) * c + channel;
}

Interval ModelSpace::cell_interval(int q) const {
  if (q < 0 || q >= m) throw std::domain_error("ModelSpace: cell out of range");
  return Interval{Rational(q, m), Rational(q + 1, m)};
}

std::vector<int> ModelSpace::aligned_cells(const BorelSet& K) const {
  std::vector<int> out;
  for (const Interval& iv : K.intervals()) {
    Rational lo = iv.lo * Rational(m);
    Rational hi = iv.hi * Rational(m);
    if (lo.den != 1 || hi.den != 1)
      throw std::invalid_argument("set endpoint " + iv.lo.str() + " or " + iv.hi.str() +
                                  " is not aligned to the 1/" + std::to_string(m) + " grid");
    for (std::int64_t q = lo.num; q < hi.num; ++q) out.push_back(static_cast<int>(q));
  }
  return out;
}

const std::vector<Link>& BlockOperator::links() const {
  if (!links_) throw std::logic_error("BlockOperator: no symbolic link list");
  return *links_;
}

BlockOperator BlockOperator::zero(const ModelSpace& space) {
  return from_links(space, {});
}

BlockOperator BlockOperator::identity(const ModelSpace& space) {
  BlockOperator X;
  X.space_ = space;
  X.mat_ = Eigen::MatrixXcd::Identity(space.dim(), space.dim());
  return X;
}

BlockOperator BlockOperator::from_links(const ModelSpace& space, std::vector<Link> links) {
  space.validate();
  BlockOperator X;
  X.space_ = space;
  X.mat_ = Eigen::MatrixXcd::Zero(space.dim(), space.dim());
  for (const Link& l : links) {
    int col = space.index(l.from[0], l.from[1], l.from[2]);
    int row = space.index(l.to[0], l.to[1], l.to[2]);
    X.mat_(row, col) += l.weight;
  }
  X.links_ = std::move(links);
  return X;
}

BlockOperator BlockOperator::from_matrix(const ModelSpace& space, Eigen::MatrixXcd mat) {
  space.validate();
  if (mat.rows() != space.dim() || mat.cols() != space.dim())
    throw std::invalid_argument("BlockOperator: matrix dimension mismatch");
  BlockOperator X;
  X.space_ = space;
  X.mat_ = std::move(mat);
  return X;
}

BlockOperator project(const ModelSpace& space, const Selector& sel) {
  space.validate();
  std::vector<Link> links;
  auto diag = [&](int cell, int block) {
    for (int ch = 0; ch < space.c; ++ch)
      links.push_back({{cell, block, ch}, {cell, block, ch}, 1.0});
  };
  if (const auto* p = std::get_if<NestPrefix>(&sel)) {
    if (p->q < 0 || p->q > space.m) throw std::domain_error("NestPrefix: q out of range");
    for (int q = 0; q < p->q; ++q)
      for (int b = 0; b < space.k; ++b) diag(q, b);
  } else if (const auto* p = std::get_if<Block>(&sel)) {
    if (p->i < 1 || p->i > space.k) throw std::domain_error("Block: index out of range");
    for (int q = 0; q < space.m; ++q) diag(q, p->i - 1);
  } else if (const auto* p = std::get_if<BlockPair>(&sel)) {
    if (p->i < 1 || p->i > space.k || p->j < 1 || p->j > space.k)
      throw std::domain_error("BlockPair: index out of range");
    for (int q = 0; q < space.m; ++q)
      for (int ch = 0; ch < space.c; ++ch)
        links.push_back({{q, p->j - 1, ch}, {q, p->i - 1, ch}, 1.0});
  } else if (const auto* p = std::get_if<Truncation>(&sel)) {
    if (p->n < 0 || p->n > space.k) throw std::domain_error("Truncation: n out of range");
    for (int q = 0; q < space.m; ++q)
      for (int b = 0; b < p->n; ++b) diag(q, b);
  } else if (const auto* p = std::get_if<Marker>(&sel)) {
    if (p->i < 1 || p->i > space.k || p->j < 1 || p->j > space.k)
      throw std::domain_error("Marker: index out of range");
    for (int q : space.aligned_cells(p->K))
      for (int ch = 0; ch < space.c; ++ch)
        links.push_back({{q, p->j - 1, ch}, {q, p->i - 1, ch}, 1.0});
  }
  return BlockOperator::from_links(space, std::move(links));
}

namespace {

double matrix_norm(const Eigen::MatrixXcd& A) {
  if (A.rows() == 0 || A.cols() == 0) return 0.0;
  // Largest singular value via the Hermitian eigenproblem of A^H A;
  // deterministic and accurate well past the 1e-9 reporting tolerance.
  Eigen::MatrixXcd gram = A.adjoint() * A;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram, Eigen::EigenvaluesOnly);
  double top = es.eigenvalues().maxCoeff();
  return top <= 0.0 ? 0.0 : std::sqrt(top);
}

/// The matrix with rows/columns kept only where the block predicate holds.
Eigen::MatrixXcd mask_blocks(const BlockOperator& X, const std::function<bool(int)>& row_keep,
                             const std::function<bool(int)>& col_keep) {
  const ModelSpace& sp = X.space();
  Eigen::VectorXd rows(sp.dim()), cols(sp.dim());
  for (int q = 0; q < sp.m; ++q) {
    for (int b = 0; b < sp.k; ++b) {
      double r = row_keep(b + 1) ? 1.0 : 0.0;
      double c = col_keep(b + 1) ? 1.0 : 0.0;
      for (int ch = 0; ch < sp.c; ++ch) {
        rows[sp.index(q, b, ch)] = r;
        cols[sp.index(q, b, ch)] = c;
      }
    }
  }
  return rows.asDiagonal() * X.mat() * cols.asDiagonal();
}

double masked_seminorm(const BlockOperator& X, const std::function<bool(int)>& row_keep,
                       const std::function<bool(int)>& col_keep, int cell, int w_floor) {
  BlockOperator Y = BlockOperator::from_matrix(X.space(), mask_blocks(X, row_keep, col_keep));
  return diag_seminorm(Y, cell, w_floor);
}

}  // namespace

double op_norm(const BlockOperator& X) { return matrix_norm(X.mat()); }

double window_norm(const BlockOperator& X, int s_cell, int t_cell) {
  const ModelSpace& sp = X.space();
  if (s_cell < 0 || t_cell > sp.m || s_cell >= t_cell)
    throw std::domain_error("window_norm: empty or out-of-range window");
  const int stride = sp.k * sp.c;
  const int off = s_cell * stride;
  const int len = (t_cell - s_cell) * stride;
  return matrix_norm(X.mat().block(off, off, len, len));
}

double diag_seminorm(const BlockOperator& X, int cell, int w_floor) {
  const ModelSpace& sp = X.space();
  if (cell < 0 || cell >= sp.m) throw std::domain_error("diag_seminorm: cell out of range");
  if (w_floor < 1 || w_floor > sp.m)
    throw std::domain_error("diag_seminorm: w_floor out of range");
  double best = -1.0;
  for (int s = std::max(0, cell - w_floor + 1); s <= std::min(cell, sp.m - w_floor); ++s) {
    double v = window_norm(X, s, s + w_floor);
    if (best < 0.0 || v < best) best = v;
  }
  return best < 0.0 ? 0.0 : best;
}

SeminormProfile liminal(const BlockOperator& X, Axis axis, int index, int cell, int w_floor) {
  const ModelSpace& sp = X.space();
  if (sp.k < 2) throw std::invalid_argument("liminal: truncation schedule needs k >= 2");
  if (index < 1 || index > sp.k) throw std::domain_error("liminal: index out of range");
  SeminormProfile prof;
  prof.w_floor = w_floor;
  for (int n = 1; n <= sp.k - 1; ++n) {
    double v;
    if (axis == Axis::Row) {
      v = masked_seminorm(
          X, [&](int b) { return b == index; }, [&](int b) { return b > n; }, cell, w_floor);
    } else {
      v = masked_seminorm(
          X, [&](int b) { return b > n; }, [&](int b) { return b == index; }, cell, w_floor);
    }
    prof.entries.push_back({sp.cell_interval(cell), n, v});
  }
  return prof;
}

double rinf_seminorm(const BlockOperator& X, Axis axis, int index, int cell, int s_min,
                     int w_floor) {
  const ModelSpace& sp = X.space();
  if (s_min < 1 || s_min > sp.k) throw std::domain_error("rinf_seminorm: s_min out of range");
  if (sp.k > 16)
    throw std::domain_error("rinf_seminorm: exact subset enumeration requires k <= 16");
  if (index < 1 || index > sp.k) throw std::domain_error("rinf_seminorm: index out of range");
  double best = -1.0;
  // Monotone in S, so only subsets of size exactly s_min matter.
  for (unsigned mask = 0; mask < (1u << sp.k); ++mask) {
    if (std::popcount(mask) != s_min) continue;
    auto in_s = [&](int b) { return (mask >> (b - 1)) & 1u; };
    double v;
    if (axis == Axis::Row) {
      v = masked_seminorm(X, [&](int b) { return b == index; }, in_s, cell, w_floor);
    } else {
      v = masked_seminorm(X, in_s, [&](int b) { return b == index; }, cell, w_floor);
    }
    if (best < 0.0 || v < best) best = v;
  }
  return best < 0.0 ? 0.0 : best;
}

namespace {

/// Horizon liminal value used by membership conditions 2/3. The own-block
/// diagonal term is a truncation artifact (in the untruncated order every
/// fixed block eventually falls inside M_n), so the row/col with index == k
/// reports 0.
double horizon_liminal(const BlockOperator& X, Axis axis, int index, int cell, int w_floor) {
  const int k = X.space().k;
  if (index >= k) return 0.0;
  if (axis == Axis::Row) {
    return masked_seminorm(
        X, [&](int b) { return b == index; }, [&](int b) { return b == k; }, cell, w_floor);
  }
  return masked_seminorm(
      X, [&](int b) { return b == k; }, [&](int b) { return b == index; }, cell, w_floor);
}

}  // namespace

MembershipReport membership(const BlockOperator& X, const ExtTriSystem& sys, double tol,
                            const Rational& eta, int w_floor) {
  const ModelSpace& sp = X.space();
  const int k = sp.k;
  if (sys.base.tmpl.size != k)
    throw std::invalid_argument("membership: system size != number of blocks");
  for (const BorelSet& s : sys.all_sets()) (void)sp.aligned_cells(s);

  MembershipReport rep;
  std::array<std::vector<bool>, 3> bad;
  for (auto& v : bad) v.assign(sp.m, false);

  for (int q = 0; q < sp.m; ++q) {
    Interval cell = sp.cell_interval(q);
    for (int i = 1; i <= k; ++i) {
      for (int j = 1; j <= k; ++j) {
        if (sys.base.S[i - 1][j - 1].contains_interval(cell)) continue;
        double v = masked_seminorm(
            X, [&](int b) { return b == i; }, [&](int b) { return b == j; }, q, w_floor);
        if (v > tol) {
          rep.violations[0].push_back({{i, j}, cell, v});
          bad[0][q] = true;
        }
      }
    }
    for (int i = 1; i <= k; ++i) {
      if (!sys.R[i - 1].contains_interval(cell)) {
        double v = horizon_liminal(X, Axis::Row, i, q, w_floor);
        if (v > tol) {
          rep.violations[1].push_back({{i}, cell, v});
          bad[1][q] = true;
        }
      }
      if (!sys.C[i - 1].contains_interval(cell)) {
        double v = horizon_liminal(X, Axis::Col, i, q, w_floor);
        if (v > tol) {
          rep.violations[2].push_back({{i}, cell, v});
          bad[2][q] = true;
        }
      }
    }
  }
  rep.member = true;
  for (int cond = 0; cond < 3; ++cond) {
    Rational meas(0);
    for (int q = 0; q < sp.m; ++q)
      if (bad[cond][q]) meas = meas + Rational(1, sp.m);
    rep.exception_measure[cond] = meas;
    if (eta < meas) rep.member = false;
  }
  return rep;
}

bool is_larson_member(const BlockOperator& X, double tol, const Rational& eta) {
  const ModelSpace& sp = X.space();
  Rational meas(0);
  for (int q = 0; q < sp.m; ++q) {
    if (diag_seminorm(X, q, 1) > tol) meas = meas + Rational(1, sp.m);
  }
  return !(eta < meas);
}

ExtTriSystem derive_support_system(const std::vector<BlockOperator>& ops,
                                   const std::vector<double>& thresholds, double tol) {
  if (ops.empty()) throw std::invalid_argument("derive_support_system: empty family");
  return derive_support_system(ops.front().space(), ops, thresholds, tol);
}

ExtTriSystem derive_support_system(const ModelSpace& sp,
                                   const std::vector<BlockOperator>& ops,
                                   const std::vector<double>& thresholds, double tol) {
  for (const BlockOperator& X : ops) {
    if (!(X.space() == sp))
      throw std::invalid_argument("derive_support_system: operators on different spaces");
  }
  double a = thresholds.empty() ? std::numeric_limits<double>::infinity()
                                : *std::min_element(thresholds.begin(), thresholds.end());
  const int k = sp.k;
  ExtTriSystem sys;
  sys.base.tmpl = sp.tmpl;
  sys.base.S.assign(k, std::vector<BorelSet>(k, BorelSet::empty()));
  sys.R.assign(k, BorelSet::empty());
  sys.C.assign(k, BorelSet::empty());
  for (int i = 1; i <= k; ++i) sys.base.S[i - 1][i - 1] = BorelSet::full();

  auto cell_set = [&](int q) {
    Interval iv = sp.cell_interval(q);
    return BorelSet::interval(iv.lo, iv.hi);
  };
  for (int q = 0; q < sp.m; ++q) {
    for (int i = 1; i <= k; ++i) {
      for (int j = 1; j <= k; ++j) {
        double best = 0.0;
        for (const BlockOperator& X : ops) {
          best = std::max(best, masked_seminorm(
                                    X, [&](int b) { return b == i; },
                                    [&](int b) { return b == j; }, q, 1));
        }
        if (best >= a - tol) sys.base.S[i - 1][j - 1] =
            set_union(sys.base.S[i - 1][j - 1], cell_set(q));
      }
      double r = 0.0, c = 0.0;
      for (const BlockOperator& X : ops) {
        r = std::max(r, horizon_liminal(X, Axis::Row, i, q, 1));
        c = std::max(c, horizon_liminal(X, Axis::Col, i, q, 1));
      }
      if (r >= a - tol) sys.R[i - 1] = set_union(sys.R[i - 1], cell_set(q));
      if (c >= a - tol) sys.C[i - 1] = set_union(sys.C[i - 1], cell_set(q));
    }
  }
  return sys;
}

namespace {

std::vector<BlockOperator> build_nonclosure(const ModelSpace& sp, const FixtureParams& p) {
  if (sp.m < 3)
    throw std::invalid_argument("nonclosure fixture: needs m >= 3 (width-3 windows)");
  if (p.i < 1 || p.i > sp.k || p.j < 1 || p.j > sp.k)
    throw std::invalid_argument("nonclosure fixture: block index out of range");
  int h = p.i;  // intermediate block; prefer one distinct from i and j
  for (int b = 1; b <= sp.k; ++b) {
    if (b != p.i && b != p.j) {
      h = b;
      break;
    }
  }
  // One "bridge" per width-3 window [t, t+3): X hops cell t+1 -> t into block
  // i, Y hops cell t+2 -> t+1 out of block j. Every link crosses cells, so
  // all single-cell compressions of X and Y are exactly zero, while every
  // width-3 window of E_i XY E_j contains a full unit bridge.
  std::vector<Link> xs, ys;
  for (int t = 0; t + 3 <= sp.m; ++t) {
    int ch = t % sp.c;
    xs.push_back({{t + 1, h - 1, ch}, {t, p.i - 1, ch}, 1.0});
    ys.push_back({{t + 2, p.j - 1, ch}, {t + 1, h - 1, ch}, 1.0});
  }
  return {BlockOperator::from_links(sp, std::move(xs)),
          BlockOperator::from_links(sp, std::move(ys))};
}

std::vector<BlockOperator> build_rinf_witness(const ModelSpace& sp, const FixtureParams& p) {
  int depth = p.depth == 0 ? sp.k : p.depth;
  if (depth < 1 || depth > sp.k)
    throw std::invalid_argument("rinf_witness fixture: needs k >= depth (depth=" +
                                std::to_string(depth) + ", k=" + std::to_string(sp.k) + ")");
  if (p.j < 1 || p.j > sp.k)
    throw std::invalid_argument("rinf_witness fixture: block index out of range");
  // Within every cell of K, fan the single j-column vector into the first
  // `depth` blocks; any block subset then retains a unit entry in the cell.
  std::vector<Link> links;
  for (int q : sp.aligned_cells(p.K)) {
    for (int b = 1; b <= depth; ++b) links.push_back({{q, p.j - 1, 0}, {q, b - 1, 0}, 1.0});
  }
  return {BlockOperator::from_links(sp, std::move(links))};
}

std::vector<BlockOperator> build_nonsimple(const ModelSpace& sp, const FixtureParams& p) {
  if (sp.k < 2 || p.i >= sp.k || p.i < 1)
    throw std::invalid_argument("nonsimple fixture: needs k >= 2 and 1 <= i < k");
  // A cell-diagonal block-k -> block-i column on every cell: each lower-left
  // corner M_n^perp X M_n is zero (the source block k is never inside M_n),
  // but the row-i horizon liminal value is 1 everywhere.
  std::vector<Link> links;
  for (int q = 0; q < sp.m; ++q) links.push_back({{q, sp.k - 1, 0}, {q, p.i - 1, 0}, 1.0});
  return {BlockOperator::from_links(sp, std::move(links))};
}

std::vector<BlockOperator> build_member(const ModelSpace& sp, const FixtureParams& p) {
  if (p.sys == nullptr) throw std::invalid_argument("member fixture: missing target system");
  const ExtTriSystem& sys = *p.sys;
  if (sys.base.tmpl.size != sp.k)
    throw std::invalid_argument("member fixture: system size != number of blocks");
  for (const BorelSet& s : sys.all_sets()) (void)sp.aligned_cells(s);
  std::vector<Link> links;
  for (int q = 0; q < sp.m; ++q) {
    Interval cell = sp.cell_interval(q);
    for (int b = 0; b < sp.k; ++b) links.push_back({{q, b, 0}, {q, b, 0}, 0.5});
    for (int i = 1; i <= sp.k; ++i) {
      for (int j = 1; j <= sp.k; ++j) {
        if (i == j || !sys.base.S[i - 1][j - 1].contains_interval(cell)) continue;
        // Cell-diagonal mass from block k feeds the row liminal value, and
        // mass into block k feeds the column liminal value; gate those on
        // R_i / C_j.
        if (j == sp.k && !sys.R[i - 1].contains_interval(cell)) continue;
        if (i == sp.k && !sys.C[j - 1].contains_interval(cell)) continue;
        links.push_back({{q, j - 1, 0}, {q, i - 1, 0}, 0.5});
      }
    }
  }
  // Decorative strictly cell-upper links; they vanish in every single-cell
  // compression and so cannot affect membership at w_floor = 1.
  std::mt19937 rng(p.seed);
  if (sp.m >= 2) {
    std::uniform_int_distribution<int> cell_d(0, sp.m - 2), blk(0, sp.k - 1),
        ch(0, sp.c - 1);
    for (int t = 0; t < sp.m; ++t) {
      int q = cell_d(rng);
      links.push_back({{q + 1, blk(rng), ch(rng)}, {q, blk(rng), ch(rng)}, 0.25});
    }
  }
  return {BlockOperator::from_links(sp, std::move(links))};
}

std::vector<BlockOperator> build_violator(const ModelSpace& sp, const FixtureParams& p) {
  if (p.sys == nullptr) throw std::invalid_argument("violator fixture: missing target system");
  const ExtTriSystem& sys = *p.sys;
  if (sys.base.tmpl.size != sp.k)
    throw std::invalid_argument("violator fixture: system size != number of blocks");
  std::vector<int> cells = sp.aligned_cells(p.K);
  if (cells.empty()) throw std::invalid_argument("violator fixture: K selects no grid cells");
  std::vector<Link> links;
  for (int q : cells) {
    Interval cell = sp.cell_interval(q);
    switch (p.condition) {
      case 1:
        if (p.i < 1 || p.i > sp.k || p.j < 1 || p.j > sp.k || p.i == p.j)
          throw std::invalid_argument("violator fixture: bad (i,j)");
        if (sys.base.S[p.i - 1][p.j - 1].contains_interval(cell))
          throw std::invalid_argument("violator fixture: K must avoid S_{i,j}");
        links.push_back({{q, p.j - 1, 0}, {q, p.i - 1, 0}, 1.0});
        break;
      case 2:
        if (p.i < 1 || p.i >= sp.k)
          throw std::invalid_argument("violator fixture: condition 2 needs 1 <= i < k");
        if (sys.R[p.i - 1].contains_interval(cell))
          throw std::invalid_argument("violator fixture: K must avoid R_i");
        links.push_back({{q, sp.k - 1, 0}, {q, p.i - 1, 0}, 1.0});
        break;
      case 3:
        if (p.j < 1 || p.j >= sp.k)
          throw std::invalid_argument("violator fixture: condition 3 needs 1 <= j < k");
        if (sys.C[p.j - 1].contains_interval(cell))
          throw std::invalid_argument("violator fixture: K must avoid C_j");
        links.push_back({{q, p.j - 1, 0}, {q, sp.k - 1, 0}, 1.0});
        break;
      default:
        throw std::invalid_argument("violator fixture: condition must be 1, 2, or 3");
    }
  }
  return {BlockOperator::from_links(sp, std::move(links))};
}

}  // namespace

std::vector<BlockOperator> build_fixture(FixtureKind kind, const ModelSpace& space,
                                         const FixtureParams& params) {
  space.validate();
  switch (kind) {
    case FixtureKind::Nonclosure: return build_nonclosure(space, params);
    case FixtureKind::RinfWitness: return build_rinf_witness(space, params);
    case FixtureKind::Nonsimple: return build_nonsimple(space, params);
    case FixtureKind::Member: return build_member(space, params);
    case FixtureKind::Violator: return build_violator(space, params);
  }
  throw std::logic_error("build_fixture: bad kind");
}

InequalityRecord product_inequality_check(const BlockOperator& X, const BlockOperator& Y, int i,
                                          int j, int cell, int r, int w_floor) {
  const ModelSpace& sp = X.space();
  if (!(Y.space() == sp))
    throw std::invalid_argument("product_inequality_check: operators on different spaces");
  if (r < 0 || r >= sp.k) throw std::domain_error("product_inequality_check: need 0 <= r < k");
  if (i < 1 || i > sp.k || j < 1 || j > sp.k)
    throw std::domain_error("product_inequality_check: block index out of range");
  BlockOperator XY = BlockOperator::from_matrix(sp, X.mat() * Y.mat());
  InequalityRecord rec;
  rec.lhs = masked_seminorm(
      XY, [&](int b) { return b == i; }, [&](int b) { return b == j; }, cell, w_floor);
  rec.rhs = 0.0;
  for (int t = 1; t <= r; ++t) {
    double xv = masked_seminorm(
        X, [&](int b) { return b == i; }, [&](int b) { return b == t; }, cell, w_floor);
    double yv = masked_seminorm(
        Y, [&](int b) { return b == t; }, [&](int b) { return b == j; }, cell, w_floor);
    rec.rhs += xv * yv;
  }
  double xt = masked_seminorm(
      X, [&](int b) { return b == i; }, [&](int b) { return b > r; }, cell, w_floor);
  double yt = masked_seminorm(
      Y, [&](int b) { return b > r; }, [&](int b) { return b == j; }, cell, w_floor);
  rec.rhs += xt * yt;
  rec.holds = rec.lhs <= rec.rhs + 1e-9;
  return rec;
}

}  // namespace triang
