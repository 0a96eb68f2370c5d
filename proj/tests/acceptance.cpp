// Acceptance suite: one line per criterion, PASS/FAIL, with elapsed time
// checked against each criterion's runtime budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <vector>

#include "helpers.hpp"
#include "triang/lemmas.hpp"
#include "triang/nestlab.hpp"
#include "triang/tsys.hpp"

using namespace triang;

namespace {

bool g_all_pass = true;

void run(int number, const char* title, double budget_seconds,
         const std::function<bool()>& body) {
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body();
  } catch (const std::exception& e) {
    std::printf("criterion %d: FAIL — %s (exception: %s)\n", number, title, e.what());
    g_all_pass = false;
    return;
  }
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (elapsed > budget_seconds) ok = false;
  std::printf("criterion %d: %s — %s (%.2fs, budget %.0fs)\n", number, ok ? "PASS" : "FAIL",
              title, elapsed, budget_seconds);
  g_all_pass = g_all_pass && ok;
}

BlockOperator random_cell_upper(const ModelSpace& sp, std::mt19937& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  const int stride = sp.k * sp.c;
  Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(sp.dim(), sp.dim());
  for (int r = 0; r < sp.dim(); ++r)
    for (int c = 0; c < sp.dim(); ++c)
      if (r / stride <= c / stride)
        mat(r, c) = std::complex<double>(gauss(rng), gauss(rng)) / std::sqrt(sp.dim());
  return BlockOperator::from_matrix(sp, mat);
}

// --- 1: checker vs brute-force oracle ---------------------------------------
bool criterion1() {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 1000; ++trial) {
    ExtTriSystem sys = helpers::random_raw_system(rng, 6);
    if (helpers::expand_report(check_extended(sys, ExtCheckMode::Full, true)) !=
        helpers::oracle_axioms(sys, true, true))
      return false;
    if (helpers::expand_report(check_extended(sys, ExtCheckMode::Nearly, true)) !=
        helpers::oracle_axioms(sys, true, false))
      return false;
    if (helpers::expand_report(check_triangular(sys.base, true)) !=
        helpers::oracle_axioms(sys, false, false))
      return false;
  }
  return true;
}

// --- 2: completion correctness ----------------------------------------------
bool criterion2() {
  std::mt19937 rng(202);
  const OrderKind kinds[] = {OrderKind::Finite, OrderKind::Nat, OrderKind::Int,
                             OrderKind::Rat, OrderKind::WellOrdered};
  for (int trial = 0; trial < 200; ++trial) {
    OrderKind kind = kinds[trial % 5];
    ExtTriSystem sys = helpers::random_valid_system(rng, 5, kind);
    if (!check_extended(sys).passed) return false;
    CompletionResult res = complete_to_maximal(sys);
    if (!helpers::extends(sys, res.system)) return false;
    if (!check_extended(res.system).passed) return false;
    bool truncated = kind != OrderKind::Finite;
    for (int cell = 0; cell < helpers::kGrid; ++cell) {
      if (!helpers::oracle_maximal_at(res.system, helpers::probe_point(cell), truncated))
        return false;
    }
    if (!helpers::systems_equal(res.system, complete_to_maximal(res.system).system))
      return false;
  }
  return true;
}

// --- 3: non-closure witness --------------------------------------------------
bool criterion3() {
  for (int m : {8, 16, 32}) {
    ModelSpace sp = ModelSpace::make(m, 6, 4);
    FixtureParams p;  // i=1, j=2
    auto ops = build_fixture(FixtureKind::Nonclosure, sp, p);
    // exact vanishing by link arithmetic: every link crosses cells, and the
    // physical link width is exactly one cell = 1/m (halving under doubling)
    for (const BlockOperator& f : ops) {
      for (const Link& l : f.links()) {
        if (l.from[0] == l.to[0]) return false;
        if (std::abs(l.from[0] - l.to[0]) != 1) return false;
      }
      // every width-1 window seminorm of every E_a f E_b is exactly the norm
      // of part of f's in-cell block, so it vanishes iff those blocks do
      const int stride = sp.k * sp.c;
      for (int q = 0; q < sp.m; ++q) {
        if (f.mat().block(q * stride, q * stride, stride, stride).norm() != 0.0) return false;
      }
      Eigen::MatrixXcd spot = project(sp, Block{1}).mat() * f.mat() * project(sp, Block{2}).mat();
      if (diag_seminorm(BlockOperator::from_matrix(sp, spot), 0, 1) != 0.0) return false;
    }
    BlockOperator e1xye2 = BlockOperator::from_matrix(
        sp, project(sp, Block{1}).mat() * ops[0].mat() * ops[1].mat() *
                project(sp, Block{2}).mat());
    for (int q = 0; q < sp.m; ++q) {
      if (diag_seminorm(e1xye2, q, 3) < 1.0 - 1e-9) return false;
    }
  }
  return true;
}

// --- 4: seminorm laws --------------------------------------------------------
bool criterion4() {
  ModelSpace sp = ModelSpace::make(12, 4, 2);
  std::mt19937 rng(404);
  for (int trial = 0; trial < 500; ++trial) {
    BlockOperator X = random_cell_upper(sp, rng), Y = random_cell_upper(sp, rng);
    BlockOperator sum = BlockOperator::from_matrix(sp, X.mat() + Y.mat());
    BlockOperator prod = BlockOperator::from_matrix(sp, X.mat() * Y.mat());
    BlockOperator scaled = BlockOperator::from_matrix(sp, -1.75 * X.mat());
    for (int q = 0; q < sp.m; ++q) {
      double ix = diag_seminorm(X, q, 1), iy = diag_seminorm(Y, q, 1);
      if (diag_seminorm(sum, q, 1) > ix + iy + 1e-9) return false;
      if (std::abs(diag_seminorm(scaled, q, 1) - 1.75 * ix) > 1e-9) return false;
      if (diag_seminorm(prod, q, 1) > ix * iy + 1e-9) return false;
    }
    if (trial % 25 == 0) {
      for (Axis ax : {Axis::Row, Axis::Col}) {
        for (int idx = 1; idx <= sp.k; ++idx) {
          for (int q = 0; q < sp.m; q += 4) {
            SeminormProfile prof = liminal(X, ax, idx, q, 1);
            for (std::size_t t = 1; t < prof.entries.size(); ++t)
              if (prof.entries[t].value > prof.entries[t - 1].value + 1e-9) return false;
          }
        }
      }
    }
  }
  return true;
}

// --- 5: product inequality ---------------------------------------------------
bool criterion5() {
  ModelSpace sp = ModelSpace::make(8, 4, 2);
  std::mt19937 rng(505);
  for (int trial = 0; trial < 200; ++trial) {
    BlockOperator X = random_cell_upper(sp, rng), Y = random_cell_upper(sp, rng);
    int i = 1 + static_cast<int>(rng() % sp.k);
    int j = 1 + static_cast<int>(rng() % sp.k);
    for (int r = 0; r < sp.k; ++r) {
      for (int q = 0; q < sp.m; ++q) {
        if (!product_inequality_check(X, Y, i, j, q, r, 1).holds) return false;
      }
    }
  }
  return true;
}

// --- 6: example suite --------------------------------------------------------
bool criterion6() {
  ExampleParams pivot1;
  pivot1.cut = CutCase::Pivot;
  pivot1.pivot_label = Rational(0);
  ExampleParams wo_pivot;
  wo_pivot.cut = CutCase::Pivot;
  wo_pivot.pivot_label = Rational(1);
  ExampleParams cantor;
  cantor.cut = CutCase::TwoSided;
  cantor.gamma = Rational(2, 5);
  ExtTriSystem nat = build_example(ExampleKind::NatCase, {6, CutCase::AEmpty});
  ExtTriSystem intc = build_example(ExampleKind::IntCase, pivot1);
  ExtTriSystem wo = build_example(ExampleKind::WellOrdered, wo_pivot);
  ExtTriSystem cant = build_example(ExampleKind::Cantor, cantor);
  ExtTriSystem mixed = build_example(ExampleKind::Mixed, {});
  for (const ExtTriSystem* sys : {&nat, &intc, &wo, &cant, &mixed}) {
    if (!check_extended(*sys).passed) return false;
    if (!is_maximal(*sys, MaximalityMode::Truncated).passed) return false;
  }
  for (const Rational& x : {Rational(1, 8), Rational(13, 16)}) {
    Cut c = induced_cut_at(nat, x);
    if (!c.A.empty() || static_cast<int>(c.B.size()) != 6) return false;
    if (c.virtual_tag != VirtualCut::AEmptyAtInfinity) return false;
    c = induced_cut_at(intc, x);  // labels -3..2, pivot 0 at index 4
    if (c.A != std::vector<int>{4, 5, 6} || c.B != std::vector<int>{1, 2, 3, 4}) return false;
    c = induced_cut_at(wo, x);  // pivot at the bottom label 1
    if (c.A.size() != 6 || c.B != std::vector<int>{1}) return false;
    c = induced_cut_at(cant, x);
    if (c.virtual_tag != VirtualCut::TwoSidedAtInfinity) return false;
    if (c.A.empty() || c.B.empty() || c.A.size() + c.B.size() != 6) return false;
  }
  // mixed: sub-region t of grid cell 0 carries the t-th reference behavior
  auto sample = [&](int t) {
    return induced_cut_at(mixed, Rational(2 * t + 1, 64));  // midpoint of sub-cell t
  };
  Cut m0 = sample(0);
  if (!m0.A.empty() || static_cast<int>(m0.B.size()) != 6) return false;
  Cut m1 = sample(1), m2 = sample(2);
  auto has_pivot = [](const Cut& c) {
    for (int a : c.A)
      for (int b : c.B)
        if (a == b) return true;
    return false;
  };
  if (!has_pivot(m1) || !has_pivot(m2)) return false;
  Cut m3 = sample(3);
  if (m3.virtual_tag != VirtualCut::TwoSidedAtInfinity) return false;
  return true;
}

// --- 7: non-simple discriminator --------------------------------------------
bool criterion7() {
  ModelSpace sp = ModelSpace::make(8, 6, 4);
  auto ops = build_fixture(FixtureKind::Nonsimple, sp, {});
  const BlockOperator& X = ops[0];
  for (int n = 1; n < sp.k; ++n) {
    Eigen::MatrixXcd mn = project(sp, Truncation{n}).mat();
    Eigen::MatrixXcd corner =
        (Eigen::MatrixXcd::Identity(sp.dim(), sp.dim()) - mn) * X.mat() * mn;
    if (!is_larson_member(BlockOperator::from_matrix(sp, corner), 1e-12, Rational(0)))
      return false;
  }
  ExtTriSystem bare;  // upper-triangular S with empty R and C
  bare.base.tmpl = sp.tmpl;
  bare.base.S.assign(sp.k, std::vector<BorelSet>(sp.k, BorelSet::empty()));
  bare.R.assign(sp.k, BorelSet::empty());
  bare.C.assign(sp.k, BorelSet::empty());
  for (int i = 0; i < sp.k; ++i)
    for (int j = i; j < sp.k; ++j) bare.base.S[i][j] = BorelSet::full();
  if (membership(X, bare, 1e-9, Rational(0), 1).member) return false;

  FixtureParams rp;
  rp.j = 1;
  rp.K = BorelSet::interval(Rational(1, 4), Rational(1, 2));
  auto witness = build_fixture(FixtureKind::RinfWitness, sp, rp);
  const BlockOperator& T = witness[0];
  for (const Link& l : T.links()) {
    if (l.from[1] != 0) return false;  // T = T E_1, so each E_m T E_1 is a finite link sum
  }
  for (int q = 0; q < sp.m; ++q) {
    bool in_k = rp.K.contains_interval(sp.cell_interval(q));
    for (int s = 1; s <= sp.k / 2; ++s) {
      double v = rinf_seminorm(T, Axis::Col, 1, q, s, 1);
      if (in_k && v < 1.0 - 1e-9) return false;
      if (!in_k && v != 0.0) return false;
    }
  }
  return true;
}

// --- 8: selection lemmas -----------------------------------------------------
bool criterion8() {
  ModelSpace sp = ModelSpace::make(16, 4, 2);
  std::mt19937 rng(808);
  // sub-sum: orthogonal-ish random rank-ones across distinct cells
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> cells(sp.m);
    for (int t = 0; t < sp.m; ++t) cells[t] = t;
    std::shuffle(cells.begin(), cells.end(), rng);
    std::vector<BlockOperator> A;
    for (int t = 0; t < 8; ++t)
      A.push_back(BlockOperator::from_links(
          sp, {{{cells[t], 0, 0}, {cells[t], 1, 0}, 0.9 + 0.02 * t}}));
    std::vector<double> alpha = {0.5, 0.25, 0.125, 0.0625};
    Selection sel = sub_sum_select(A, alpha);
    if (sel.indices.size() != alpha.size()) return false;
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(sp.dim(), sp.dim());
    double max_norm = 0.0, alpha_sum = 0.0;
    for (std::size_t step = 0; step < sel.indices.size(); ++step) {
      const Eigen::MatrixXcd& mat = A[sel.indices[step]].mat();
      double resid = (mat - sel.P[step] * mat * sel.Q[step]).operatorNorm();
      if (resid > alpha[step] + 1e-9) return false;
      const Certificate& cert = sel.step_certificates[step].back();
      if (std::abs(cert.value - resid) > 1e-9) return false;
      sum += mat;
      max_norm = std::max(max_norm, op_norm(A[sel.indices[step]]));
      alpha_sum += alpha[step];
    }
    if (sum.operatorNorm() > max_norm + alpha_sum + 1e-9) return false;
  }
  // linking: 50 randomized instances at eps = 0.5
  std::uniform_real_distribution<double> weight(0.8, 1.3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> cells(sp.m);
    for (int t = 0; t < sp.m; ++t) cells[t] = t;
    std::shuffle(cells.begin(), cells.end(), rng);
    std::vector<BlockOperator> A, B, D;
    for (int t = 0; t < 8; ++t) {
      int q = cells[t];
      D.push_back(BlockOperator::from_links(sp, {{{q, 0, 0}, {q, 1, 1}, weight(rng)}}));
      A.push_back(BlockOperator::from_links(sp, {{{q, 1, 1}, {q, 1, 1}, 1.0}}));
      B.push_back(BlockOperator::from_links(sp, {{{q, 0, 0}, {q, 0, 0}, 1.0}}));
    }
    auto [sel, d_sum] = linking_select(A, B, D, 0.7, 0.5);
    if (sel.indices.empty()) return false;
    for (int idx : sel.indices) {
      if ((A[idx].mat() * d_sum.mat() * B[idx].mat()).operatorNorm() <= 0.5 * 0.7)
        return false;
    }
  }
  return true;
}

// --- 9: row/column factors ---------------------------------------------------
bool criterion9() {
  ModelSpace sp = ModelSpace::make(8, 4, 2);
  std::mt19937 rng(909);
  // powers of two are exactly invertible, keeping A X B = marker bit-exact
  auto weight = [&rng]() {
    double w = static_cast<double>(1 << (rng() % 3));
    return rng() % 2 ? w : -w;
  };
  for (int trial = 0; trial < 50; ++trial) {
    int lo = static_cast<int>(rng() % sp.m);
    int hi = lo + 1 + static_cast<int>(rng() % (sp.m - lo));
    BorelSet K = BorelSet::interval(Rational(lo, sp.m), Rational(hi, sp.m));
    int i = 1 + static_cast<int>(rng() % sp.k);
    int j = 1 + static_cast<int>(rng() % sp.k);
    // one exclusive unit-range link per needed (cell, channel) slot
    std::vector<Link> links;
    int slot = 0;
    for (int q = lo; q < hi; ++q)
      for (int ch = 0; ch < sp.c; ++ch) {
        int src_cell = slot % sp.m;
        int src_ch = (slot / sp.m) % sp.c;
        links.push_back({{src_cell, sp.k - 1, src_ch},
                         {slot % sp.m, i - 1, (slot / sp.m) % sp.c},
                         weight()});
        ++slot;
      }
    BlockOperator X = BlockOperator::from_links(sp, links);
    auto [A, B] = row_column_factors(X, K, i, j, 0.5);
    Eigen::MatrixXcd marker = project(sp, Marker{K, i, j}).mat();
    if ((A.mat() * X.mat() * B.mat() - marker).norm() != 0.0) return false;
    for (int q = 0; q < sp.m; ++q) {
      if (!K.contains_interval(sp.cell_interval(q)) && diag_seminorm(B, q, 1) != 0.0)
        return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  run(1, "axiom-checker equivalence with the brute-force verifier", 10, criterion1);
  run(2, "completion extends, validates, maximizes, and is idempotent", 30, criterion2);
  run(3, "non-closure witness with refinement-doubling link widths", 20, criterion3);
  run(4, "cell seminorm laws and monotone liminal profiles", 60, criterion4);
  run(5, "product inequality at every cell and truncation split", 60, criterion5);
  run(6, "example suite produces maximal systems with the stated cuts", 60, criterion6);
  run(7, "non-simple discriminator and rinf witness", 30, criterion7);
  run(8, "selection-lemma certificates and linking bounds", 60, criterion8);
  run(9, "exact marker factorization with clean off-support columns", 60, criterion9);
  return g_all_pass ? 0 : 1;
}
