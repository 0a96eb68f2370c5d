#include "triang/tsys.hpp"

#include <algorithm>
#include <stdexcept>

namespace triang {

std::string order_kind_name(OrderKind k) {
  switch (k) {
    case OrderKind::Finite: return "finite";
    case OrderKind::Nat: return "nat";
    case OrderKind::Int: return "int";
    case OrderKind::Rat: return "rat";
    case OrderKind::WellOrdered: return "well-ordered";
  }
  throw std::logic_error("order_kind_name");
}

OrderKind order_kind_from_name(const std::string& name) {
  if (name == "finite") return OrderKind::Finite;
  if (name == "nat") return OrderKind::Nat;
  if (name == "int") return OrderKind::Int;
  if (name == "rat") return OrderKind::Rat;
  if (name == "well-ordered") return OrderKind::WellOrdered;
  throw std::invalid_argument("unknown order kind: " + name);
}

static std::vector<Rational> iota_labels(std::int64_t from, int size) {
  std::vector<Rational> out;
  out.reserve(size);
  for (int i = 0; i < size; ++i) out.push_back(Rational(from + i));
  return out;
}

IndexTemplate IndexTemplate::finite(int size) {
  IndexTemplate t{OrderKind::Finite, size, iota_labels(1, size)};
  t.validate();
  return t;
}
IndexTemplate IndexTemplate::nat(int size) {
  IndexTemplate t{OrderKind::Nat, size, iota_labels(1, size)};
  t.validate();
  return t;
}
IndexTemplate IndexTemplate::integers(int size) {
  IndexTemplate t{OrderKind::Int, size, iota_labels(-(size / 2), size)};
  t.validate();
  return t;
}
IndexTemplate IndexTemplate::well_ordered(int size) {
  IndexTemplate t{OrderKind::WellOrdered, size, iota_labels(1, size)};
  t.validate();
  return t;
}
IndexTemplate IndexTemplate::rationals(std::vector<Rational> labels) {
  IndexTemplate t{OrderKind::Rat, static_cast<int>(labels.size()), std::move(labels)};
  t.validate();
  return t;
}

void IndexTemplate::validate() const {
  if (size < 1) throw std::invalid_argument("IndexTemplate: size must be positive");
  if (static_cast<int>(labels.size()) != size)
    throw std::invalid_argument("IndexTemplate: labels length != size");
  for (int i = 0; i + 1 < size; ++i) {
    if (!(labels[i] < labels[i + 1]))
      throw std::invalid_argument("IndexTemplate: labels not strictly increasing");
  }
}

std::vector<BorelSet> ExtTriSystem::all_sets() const {
  std::vector<BorelSet> out;
  for (const auto& row : base.S) out.insert(out.end(), row.begin(), row.end());
  out.insert(out.end(), R.begin(), R.end());
  out.insert(out.end(), C.begin(), C.end());
  return out;
}

namespace {

void require_shape(const TriSystem& sys) {
  const int n = sys.tmpl.size;
  sys.tmpl.validate();
  if (static_cast<int>(sys.S.size()) != n)
    throw std::invalid_argument("TriSystem: S has wrong row count");
  for (const auto& row : sys.S) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("TriSystem: ragged S matrix");
  }
}

void require_shape(const ExtTriSystem& sys) {
  require_shape(sys.base);
  const int n = sys.size();
  if (static_cast<int>(sys.R.size()) != n || static_cast<int>(sys.C.size()) != n)
    throw std::invalid_argument("ExtTriSystem: R/C length != size");
}

/// Per-cell inclusion tables over a fixed refinement.
struct CellTables {
  RefinementPartition part;
  // incS[c][i][j], incR[c][i], incC[c][i]
  std::vector<std::vector<std::vector<bool>>> incS;
  std::vector<std::vector<bool>> incR, incC;
};

CellTables build_tables(const ExtTriSystem& sys) {
  CellTables t;
  t.part = refinement(sys.all_sets());
  const int n = sys.size();
  const std::size_t nc = t.part.cells.size();
  t.incS.assign(nc, std::vector<std::vector<bool>>(n, std::vector<bool>(n, false)));
  t.incR.assign(nc, std::vector<bool>(n, false));
  t.incC.assign(nc, std::vector<bool>(n, false));
  for (std::size_t c = 0; c < nc; ++c) {
    const Interval& cell = t.part.cells[c];
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) t.incS[c][i][j] = sys.base.S[i][j].contains_interval(cell);
      t.incR[c][i] = sys.R[i].contains_interval(cell);
      t.incC[c][i] = sys.C[i].contains_interval(cell);
    }
  }
  return t;
}

/// Records the first violating cell per (axiom, tuple), or all when verbose.
class Reporter {
 public:
  explicit Reporter(bool verbose) : verbose_(verbose) {}

  // `cells` callback pattern: caller iterates cells in order and calls add().
  void add(int axiom, std::vector<int> indices, const Interval& cell) {
    report_.passed = false;
    report_.violations.push_back({axiom, std::move(indices), cell});
  }
  bool verbose() const { return verbose_; }
  AxiomReport take() { return std::move(report_); }

 private:
  bool verbose_;
  AxiomReport report_;
};

template <typename Pred>
void scan_cells(Reporter& rep, const RefinementPartition& part, int axiom,
                const std::vector<int>& indices, Pred violated) {
  for (std::size_t c = 0; c < part.cells.size(); ++c) {
    if (violated(c)) {
      rep.add(axiom, indices, part.cells[c]);
      if (!rep.verbose()) return;
    }
  }
}

void check_triangular_axioms(Reporter& rep, const CellTables& t, int n) {
  for (int i = 0; i < n; ++i) {
    scan_cells(rep, t.part, kAxiomDiagonal, {i + 1},
               [&](std::size_t c) { return !t.incS[c][i][i]; });
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      scan_cells(rep, t.part, kAxiomAntisymmetry, {i + 1, j + 1},
                 [&](std::size_t c) { return t.incS[c][i][j] && t.incS[c][j][i]; });
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        scan_cells(rep, t.part, kAxiomTransitivity, {i + 1, j + 1, k + 1}, [&](std::size_t c) {
          return t.incS[c][i][j] && t.incS[c][j][k] && !t.incS[c][i][k];
        });
      }
    }
  }
}

}  // namespace

AxiomReport check_triangular(const TriSystem& sys, bool verbose) {
  require_shape(sys);
  ExtTriSystem ext{sys, std::vector<BorelSet>(sys.tmpl.size), std::vector<BorelSet>(sys.tmpl.size)};
  CellTables t = build_tables(ext);
  Reporter rep(verbose);
  check_triangular_axioms(rep, t, sys.tmpl.size);
  return rep.take();
}

AxiomReport check_extended(const ExtTriSystem& sys, ExtCheckMode mode, bool verbose) {
  require_shape(sys);
  const int n = sys.size();
  CellTables t = build_tables(sys);
  Reporter rep(verbose);
  check_triangular_axioms(rep, t, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      scan_cells(rep, t.part, kAxiomColumn, {i + 1, j + 1}, [&](std::size_t c) {
        return t.incC[c][i] && t.incS[c][i][j] && !t.incC[c][j];
      });
      scan_cells(rep, t.part, kAxiomRow, {i + 1, j + 1}, [&](std::size_t c) {
        return t.incS[c][i][j] && t.incR[c][j] && !t.incR[c][i];
      });
      if (mode == ExtCheckMode::Full) {
        scan_cells(rep, t.part, kAxiomRowColumn, {i + 1, j + 1}, [&](std::size_t c) {
          return t.incR[c][i] && t.incC[c][j] && !t.incS[c][i][j];
        });
      }
    }
  }
  return rep.take();
}

namespace {

Cut make_cut(const CellTables& t, std::size_t c, int n, OrderKind kind) {
  Cut cut;
  cut.cell = t.part.cells[c];
  cut.relation.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cut.relation[i][j] = t.incS[c][i][j];
  for (int i = 0; i < n; ++i) {
    if (t.incC[c][i]) cut.A.push_back(i + 1);
    if (t.incR[c][i]) cut.B.push_back(i + 1);
  }
  const bool a_empty = cut.A.empty();
  const bool b_empty = cut.B.empty();
  const bool a_all = static_cast<int>(cut.A.size()) == n;
  const bool b_all = static_cast<int>(cut.B.size()) == n;
  bool disjoint = true, cover = true;
  for (int i = 0; i < n; ++i) {
    if (t.incC[c][i] && t.incR[c][i]) disjoint = false;
    if (!t.incC[c][i] && !t.incR[c][i]) cover = false;
  }
  const bool two_sided_kind = (kind == OrderKind::Int || kind == OrderKind::Rat);
  if (kind != OrderKind::Finite) {
    if (a_empty && b_all) {
      cut.virtual_tag = VirtualCut::AEmptyAtInfinity;
    } else if (b_empty && a_all && two_sided_kind) {
      cut.virtual_tag = VirtualCut::BEmptyAtInfinity;
    } else if (!a_empty && !b_empty && disjoint && cover && two_sided_kind) {
      cut.virtual_tag = VirtualCut::TwoSidedAtInfinity;
    }
  }
  return cut;
}

}  // namespace

Cut induced_cut_at(const ExtTriSystem& sys, const Rational& x) {
  require_shape(sys);
  if (x < Rational(0) || !(x < Rational(1)))
    throw std::domain_error("induced_cut_at: x outside [0,1)");
  CellTables t = build_tables(sys);
  std::size_t c = t.part.cell_index(x);
  return make_cut(t, c, sys.size(), sys.base.tmpl.kind);
}

namespace {

/// Cut-level maximality conditions (Lemma-style per-cell check). Appends
/// violations with axiom ids 7/8/9.
void check_cut_maximal(Reporter& rep, const Cut& cut, int n, OrderKind kind,
                       MaximalityMode mode) {
  bool linear = true;
  for (int i = 0; i < n && (rep.verbose() || linear); ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!cut.relation[i][j] && !cut.relation[j][i]) {
        linear = false;
        rep.add(kMaxLinearity, {i + 1, j + 1}, cut.cell);
        if (!rep.verbose()) break;
      }
    }
  }
  std::vector<bool> inA(n, false), inB(n, false);
  for (int a : cut.A) inA[a - 1] = true;
  for (int b : cut.B) inB[b - 1] = true;
  for (int i = 0; i < n; ++i) {
    if (!inA[i] && !inB[i]) {
      rep.add(kMaxCoverage, {i + 1}, cut.cell);
      if (!rep.verbose()) break;
    }
  }
  bool pivot = false;
  for (int i = 0; i < n; ++i) pivot = pivot || (inA[i] && inB[i]);
  if (!pivot) {
    const bool virtual_ok =
        mode == MaximalityMode::Truncated && cut.virtual_tag != VirtualCut::None;
    if (!virtual_ok) rep.add(kMaxPivot, {}, cut.cell);
  }
  (void)kind;
}

}  // namespace

AxiomReport is_maximal(const ExtTriSystem& sys, MaximalityMode mode, bool verbose) {
  AxiomReport pre = check_extended(sys, ExtCheckMode::Full);
  if (!pre.passed)
    throw std::invalid_argument("is_maximal: input is not an extended triangular system");
  CellTables t = build_tables(sys);
  const int n = sys.size();
  Reporter rep(verbose);
  for (std::size_t c = 0; c < t.part.cells.size(); ++c) {
    Cut cut = make_cut(t, c, n, sys.base.tmpl.kind);
    check_cut_maximal(rep, cut, n, sys.base.tmpl.kind, mode);
  }
  AxiomReport out = rep.take();
  std::sort(out.violations.begin(), out.violations.end(),
            [](const AxiomViolation& a, const AxiomViolation& b) {
              if (a.axiom != b.axiom) return a.axiom < b.axiom;
              if (a.indices != b.indices) return a.indices < b.indices;
              return a.cell.lo < b.cell.lo;
            });
  return out;
}

CompletionResult complete_to_maximal(const ExtTriSystem& input) {
  AxiomReport pre = check_extended(input, ExtCheckMode::Full);
  if (!pre.passed)
    throw std::invalid_argument("complete_to_maximal: input is not an extended triangular system");

  CompletionResult res;
  res.system = input;
  ExtTriSystem& s = res.system;
  const int n = s.size();

  // Stage 1: make the induced order linear everywhere. Row-major pair
  // enumeration; the one-pair update formulas only propagate through i0/j0,
  // so the pass is iterated to a fixed point.
  bool changed = true;
  while (changed) {
    changed = false;
    ++res.stage1_passes;
    for (int i0 = 0; i0 < n; ++i0) {
      for (int j0 = 0; j0 < n; ++j0) {
        if (i0 == j0) continue;
        BorelSet gap = complement(set_union(s.base.S[i0][j0], s.base.S[j0][i0]));
        if (gap.is_empty()) continue;
        changed = true;
        s.base.S[i0][j0] = complement(s.base.S[j0][i0]);
        for (int i = 0; i < n; ++i) {
          if (i == i0 || i == j0) continue;
          s.base.S[i][j0] =
              set_union(s.base.S[i][j0], set_intersect(s.base.S[i][i0], s.base.S[i0][j0]));
        }
        for (int j = 0; j < n; ++j) {
          if (j == i0 || j == j0) continue;
          s.base.S[i0][j] =
              set_union(s.base.S[i0][j], set_intersect(s.base.S[i0][j0], s.base.S[j0][j]));
        }
        std::vector<BorelSet> newR(n), newC(n);
        for (int i = 0; i < n; ++i) {
          BorelSet r = BorelSet::empty(), c = BorelSet::empty();
          for (int b = 0; b < n; ++b) {
            r = set_union(r, set_intersect(s.base.S[i][b], s.R[b]));
            c = set_union(c, set_intersect(s.C[b], s.base.S[b][i]));
          }
          newR[i] = std::move(r);
          newC[i] = std::move(c);
        }
        s.R = std::move(newR);
        s.C = std::move(newC);
      }
    }
  }

  // Stage 2: complete the cuts where the pivot index i0 lies in neither A
  // nor B on the cell.
  for (int i0 = 0; i0 < n; ++i0) {
    BorelSet free = complement(set_union(s.R[i0], s.C[i0]));
    if (free.is_empty()) continue;
    for (int i = 0; i < n; ++i) {
      s.R[i] = set_union(s.R[i], set_intersect(s.base.S[i][i0], free));
      s.C[i] = set_union(s.C[i], set_intersect(s.base.S[i0][i], free));
    }
  }

  // Repair pass: the stage-2 formula only reaches cells where the pivot is
  // outside A ∪ B, which misses cuts like A={2}, B={1} on a 2-chain. Pivot
  // those cells at max B (or min A) directly.
  const MaximalityMode mode = s.base.tmpl.kind == OrderKind::Finite ? MaximalityMode::Finite
                                                                    : MaximalityMode::Truncated;
  CellTables t = build_tables(s);
  for (std::size_t c = 0; c < t.part.cells.size(); ++c) {
    Cut cut = make_cut(t, c, n, s.base.tmpl.kind);
    Reporter probe(false);
    check_cut_maximal(probe, cut, n, s.base.tmpl.kind, mode);
    if (probe.take().passed) continue;
    int pivot = 0;
    if (!cut.B.empty()) {
      pivot = cut.B.front() - 1;
      for (int b : cut.B) {
        if (cut.relation[pivot][b - 1]) pivot = b - 1;
      }
    } else if (!cut.A.empty()) {
      pivot = cut.A.front() - 1;
      for (int a : cut.A) {
        if (cut.relation[a - 1][pivot]) pivot = a - 1;
      }
    }
    BorelSet cell = BorelSet::interval(cut.cell.lo, cut.cell.hi);
    for (int i = 0; i < n; ++i) {
      if (cut.relation[i][pivot]) s.R[i] = set_union(s.R[i], cell);
      if (cut.relation[pivot][i]) s.C[i] = set_union(s.C[i], cell);
    }
    ++res.repaired_cells;
  }
  return res;
}

namespace {

struct CutSpec {
  CutCase kind = CutCase::Pivot;
  int cut_pos = 0;  // Pivot: pivot position; TwoSided: first position of A
};

struct SubOrder {
  BorelSet region;
  std::vector<int> rank;  // rank[i] = position of index i in the linear order
  CutSpec cut;
};

ExtTriSystem assemble(IndexTemplate tmpl, const std::vector<SubOrder>& parts) {
  const int n = tmpl.size;
  ExtTriSystem sys;
  sys.base.tmpl = std::move(tmpl);
  sys.base.S.assign(n, std::vector<BorelSet>(n));
  sys.R.assign(n, BorelSet::empty());
  sys.C.assign(n, BorelSet::empty());
  for (int i = 0; i < n; ++i) sys.base.S[i][i] = BorelSet::full();
  for (const SubOrder& p : parts) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j && p.rank[i] < p.rank[j])
          sys.base.S[i][j] = set_union(sys.base.S[i][j], p.region);
      }
      bool in_b = false, in_a = false;
      switch (p.cut.kind) {
        case CutCase::Pivot:
          in_b = p.rank[i] <= p.cut.cut_pos;
          in_a = p.rank[i] >= p.cut.cut_pos;
          break;
        case CutCase::AEmpty:
          in_b = true;
          break;
        case CutCase::BEmpty:
          in_a = true;
          break;
        case CutCase::TwoSided:
          in_b = p.rank[i] < p.cut.cut_pos;
          in_a = p.rank[i] >= p.cut.cut_pos;
          break;
      }
      if (in_b) sys.R[i] = set_union(sys.R[i], p.region);
      if (in_a) sys.C[i] = set_union(sys.C[i], p.region);
    }
  }
  return sys;
}

std::vector<int> identity_rank(int n) {
  std::vector<int> r(n);
  for (int i = 0; i < n; ++i) r[i] = i;
  return r;
}

int label_position(const IndexTemplate& tmpl, const Rational& label) {
  for (int i = 0; i < tmpl.size; ++i) {
    if (tmpl.labels[i] == label) return i;
  }
  throw std::invalid_argument("build_example: pivot label " + label.str() +
                              " not in the template");
}

std::vector<Rational> dyadic_labels(int size) {
  // breadth-first dyadics 1/2; 1/4, 3/4; 1/8, ... sorted by value
  std::vector<Rational> out;
  for (std::int64_t den = 2; static_cast<int>(out.size()) < size; den *= 2) {
    for (std::int64_t num = 1; num < den && static_cast<int>(out.size()) < size; num += 2)
      out.push_back(Rational(num, den));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ExtTriSystem build_constant_example(IndexTemplate tmpl, const ExampleParams& p,
                                    bool allow_b_empty, bool allow_two_sided) {
  CutSpec cut;
  cut.kind = p.cut;
  switch (p.cut) {
    case CutCase::Pivot:
      cut.cut_pos = label_position(tmpl, p.pivot_label);
      break;
    case CutCase::AEmpty:
      break;
    case CutCase::BEmpty:
      if (!allow_b_empty)
        throw std::invalid_argument("build_example: B-empty cut not available for " +
                                    order_kind_name(tmpl.kind));
      break;
    case CutCase::TwoSided: {
      if (!allow_two_sided)
        throw std::invalid_argument("build_example: two-sided cut not available for " +
                                    order_kind_name(tmpl.kind));
      int pos = 0;
      for (const Rational& l : tmpl.labels) {
        if (l == p.gamma)
          throw std::invalid_argument("build_example: gamma must avoid the labels");
        if (l < p.gamma) ++pos;
      }
      if (pos == 0 || pos == tmpl.size)
        throw std::invalid_argument("build_example: gamma must split the labels");
      cut.cut_pos = pos;
      break;
    }
  }
  SubOrder whole{BorelSet::full(), identity_rank(tmpl.size), cut};
  return assemble(std::move(tmpl), {whole});
}

ExtTriSystem build_mixed(const ExampleParams& p) {
  const int n = p.size;
  if (n < 3) throw std::invalid_argument("build_example: mixed needs size >= 3");
  if (p.resolution_den < 1) throw std::invalid_argument("build_example: bad resolution");

  // Four sub-orders, one per reference behavior: natural order with an
  // at-infinity cut, a center-out relabeling with a pivot, the natural order
  // with a bottom pivot, and a bit-reversal relabeling with a two-sided cut.
  std::vector<int> center_out(n);
  {
    std::vector<int> order;
    int mid = n / 2;
    order.push_back(mid);
    for (int d = 1; static_cast<int>(order.size()) < n; ++d) {
      if (mid - d >= 0) order.push_back(mid - d);
      if (mid + d < n && static_cast<int>(order.size()) < n) order.push_back(mid + d);
    }
    for (int pos = 0; pos < n; ++pos) center_out[order[pos]] = pos;
  }
  std::vector<int> shuffled(n);
  {
    std::vector<std::pair<int, int>> keyed;  // (key, index)
    for (int i = 0; i < n; ++i) keyed.emplace_back((i * 5) % n * n + i, i);
    std::sort(keyed.begin(), keyed.end());
    for (int pos = 0; pos < n; ++pos) shuffled[keyed[pos].second] = pos;
  }

  std::vector<SubOrder> parts;
  parts.push_back({BorelSet::empty(), identity_rank(n), {CutCase::AEmpty, 0}});
  parts.push_back({BorelSet::empty(), center_out, {CutCase::Pivot, std::min(1, n - 1)}});
  parts.push_back({BorelSet::empty(), identity_rank(n), {CutCase::Pivot, 0}});
  parts.push_back({BorelSet::empty(), shuffled, {CutCase::TwoSided, n / 2}});

  const std::int64_t g = p.resolution_den;
  const std::int64_t sub = g * static_cast<std::int64_t>(parts.size());
  for (std::int64_t u = 0; u < g; ++u) {
    for (std::size_t t = 0; t < parts.size(); ++t) {
      Rational lo(u * static_cast<std::int64_t>(parts.size()) + static_cast<std::int64_t>(t),
                  sub);
      Rational hi(u * static_cast<std::int64_t>(parts.size()) + static_cast<std::int64_t>(t) + 1,
                  sub);
      parts[t].region = set_union(parts[t].region, BorelSet::interval(lo, hi));
    }
  }
  return assemble(IndexTemplate::rationals(iota_labels(1, n)), parts);
}

}  // namespace

ExtTriSystem build_example(ExampleKind kind, const ExampleParams& p) {
  switch (kind) {
    case ExampleKind::NatCase:
      return build_constant_example(IndexTemplate::nat(p.size), p, false, false);
    case ExampleKind::IntCase:
      return build_constant_example(IndexTemplate::integers(p.size), p, true, false);
    case ExampleKind::WellOrdered:
      return build_constant_example(IndexTemplate::well_ordered(p.size), p, false, false);
    case ExampleKind::Cantor:
      return build_constant_example(IndexTemplate::rationals(dyadic_labels(p.size)), p, true,
                                    true);
    case ExampleKind::Mixed:
      return build_mixed(p);
  }
  throw std::logic_error("build_example: bad kind");
}

}  // namespace triang
