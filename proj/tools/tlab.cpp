// tlab: command-line front end for the triangular-system verification library.
//
// Exit codes: 0 = success / all checks passed, 1 = checks found violations,
// 2 = input or parameter error.

#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "triang/json_io.hpp"
#include "triang/lemmas.hpp"
#include "triang/nestlab.hpp"
#include "triang/tsys.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using triang::ojson;

struct RunConfig {
  std::string command;
  int m = 16, k = 6, c = 4;
  double tol = 1e-9;
  std::string eta = "0";
  int w_floor = 1;
  std::string format = "json";
  unsigned seed = 0;
  std::string out;

  ojson to_json() const {
    return ojson{{"command", command}, {"m", m},        {"k", k},
                 {"c", c},             {"tol", tol},    {"eta", eta},
                 {"w_floor", w_floor}, {"format", format}, {"seed", seed}};
  }
};

triang::Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return triang::Rational(std::stoll(s));
  return triang::Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

ojson wrap_report(const RunConfig& cfg, ojson body) {
  return ojson{{"version", kVersion}, {"config", cfg.to_json()}, {"report", std::move(body)}};
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream f(cfg.out);
    if (!f) throw std::runtime_error("cannot open output file " + cfg.out);
    f << text << "\n";
  }
}

void emit_json(const RunConfig& cfg, const ojson& j) { emit(cfg, j.dump(2)); }

ojson load_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open " + path);
  return ojson::parse(f);  // throws with position diagnostics
}

triang::ExtTriSystem load_system(const std::string& path) {
  return triang::system_from_json(load_json(path));
}

triang::BlockOperator load_operator(const std::string& path, const triang::ModelSpace& sp) {
  return triang::BlockOperator::from_links(sp, triang::links_from_json(load_json(path)));
}

int cmd_check(const RunConfig& cfg, const std::string& path, bool nearly, bool verbose) {
  triang::ExtTriSystem sys = load_system(path);
  triang::AxiomReport rep = triang::check_extended(
      sys, nearly ? triang::ExtCheckMode::Nearly : triang::ExtCheckMode::Full, verbose);
  emit_json(cfg, wrap_report(cfg, triang::report_to_json(rep)));
  return rep.passed ? 0 : 1;
}

int cmd_complete(const RunConfig& cfg, const std::string& path) {
  triang::ExtTriSystem sys = load_system(path);
  triang::AxiomReport pre = triang::check_extended(sys, triang::ExtCheckMode::Full);
  if (!pre.passed) {
    bool only_axiom6 = true;
    for (const auto& v : pre.violations) only_axiom6 = only_axiom6 && v.axiom == 6;
    if (only_axiom6) {
      emit_json(cfg, wrap_report(cfg, triang::report_to_json(pre)));
      return 1;
    }
    std::cerr << "input is not an extended triangular system:\n"
              << triang::report_to_json(pre).dump(2) << "\n";
    return 2;
  }
  triang::CompletionResult res = triang::complete_to_maximal(sys);
  triang::MaximalityMode mode = sys.base.tmpl.kind == triang::OrderKind::Finite
                                    ? triang::MaximalityMode::Finite
                                    : triang::MaximalityMode::Truncated;
  triang::AxiomReport max = triang::is_maximal(res.system, mode);
  ojson body{{"system", triang::system_to_json(res.system)},
             {"stage1_passes", res.stage1_passes},
             {"repaired_cells", res.repaired_cells},
             {"maximality", triang::report_to_json(max)}};
  emit_json(cfg, wrap_report(cfg, std::move(body)));
  return max.passed ? 0 : 1;
}

triang::ModelSpace space_of(const RunConfig& cfg) {
  return triang::ModelSpace::make(cfg.m, cfg.k, cfg.c);
}

int cmd_lab_seminorm(const RunConfig& cfg, const std::string& op_path, const std::string& axis,
                     int index) {
  triang::ModelSpace sp = space_of(cfg);
  triang::BlockOperator X = load_operator(op_path, sp);
  triang::SeminormProfile prof;
  prof.w_floor = cfg.w_floor;
  if (axis.empty()) {
    for (int q = 0; q < sp.m; ++q)
      prof.entries.push_back({sp.cell_interval(q), 0, triang::diag_seminorm(X, q, cfg.w_floor)});
  } else {
    triang::Axis ax = axis == "row" ? triang::Axis::Row : triang::Axis::Col;
    for (int q = 0; q < sp.m; ++q) {
      triang::SeminormProfile cellp = triang::liminal(X, ax, index, q, cfg.w_floor);
      prof.entries.insert(prof.entries.end(), cellp.entries.begin(), cellp.entries.end());
    }
  }
  emit(cfg, triang::profile_to_csv(prof));
  return 0;
}

int cmd_lab_membership(const RunConfig& cfg, const std::string& sys_path,
                       const std::string& op_path) {
  triang::ExtTriSystem sys = load_system(sys_path);
  triang::ModelSpace sp = space_of(cfg);
  sp.k = sys.base.tmpl.size;
  sp.tmpl = sys.base.tmpl;
  triang::BlockOperator X = load_operator(op_path, sp);
  triang::MembershipReport rep =
      triang::membership(X, sys, cfg.tol, parse_rational(cfg.eta), cfg.w_floor);
  emit_json(cfg, wrap_report(cfg, triang::membership_to_json(rep)));
  return 0;
}

int cmd_lab_witness(const RunConfig& cfg, const std::string& kind) {
  triang::ModelSpace sp = space_of(cfg);
  triang::FixtureParams params;
  if (kind == "nonclosure") {
    auto ops = triang::build_fixture(triang::FixtureKind::Nonclosure, sp, params);
    triang::BlockOperator xy =
        triang::BlockOperator::from_matrix(sp, ops[0].mat() * ops[1].mat());
    triang::BlockOperator eixyej = triang::BlockOperator::from_matrix(
        sp, triang::project(sp, triang::Block{1}).mat() * xy.mat() *
                triang::project(sp, triang::Block{2}).mat());
    double min_val = -1.0;
    for (int q = 0; q < sp.m; ++q) {
      double v = triang::diag_seminorm(eixyej, q, 3);
      if (min_val < 0.0 || v < min_val) min_val = v;
    }
    ojson body{{"X", triang::links_to_json(ops[0].links())},
               {"Y", triang::links_to_json(ops[1].links())},
               {"min_width3_seminorm", min_val}};
    emit_json(cfg, wrap_report(cfg, std::move(body)));
    std::cout << "min over cells of i(E1 XY E2, w=3) = " << min_val << "\n";
    return min_val >= 1.0 - 1e-9 ? 0 : 1;
  }
  if (kind == "rinf") {
    params.j = 1;
    params.K = triang::BorelSet::interval(triang::Rational(1, 4), triang::Rational(1, 2));
    auto ops = triang::build_fixture(triang::FixtureKind::RinfWitness, sp, params);
    ojson vals = ojson::array();
    bool ok = true;
    for (int q : sp.aligned_cells(params.K)) {
      double v = triang::rinf_seminorm(ops[0], triang::Axis::Col, 1, q, 1, cfg.w_floor);
      ok = ok && v >= 1.0 - 1e-9;
      vals.push_back(ojson{{"cell", triang::to_json(sp.cell_interval(q))}, {"rinf", v}});
    }
    emit_json(cfg, wrap_report(cfg, ojson{{"T", triang::links_to_json(ops[0].links())},
                                          {"values", vals}}));
    return ok ? 0 : 1;
  }
  if (kind == "nonsimple") {
    auto ops = triang::build_fixture(triang::FixtureKind::Nonsimple, sp, params);
    emit_json(cfg, wrap_report(cfg, ojson{{"X", triang::links_to_json(ops[0].links())}}));
    return 0;
  }
  std::cerr << "unknown witness kind: " << kind << "\n";
  return 2;
}

int cmd_lab_inequality(const RunConfig& cfg, int r) {
  triang::ModelSpace sp = space_of(cfg);
  std::mt19937 rng(cfg.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto random_upper = [&]() {
    Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(sp.dim(), sp.dim());
    const int stride = sp.k * sp.c;
    for (int row = 0; row < sp.dim(); ++row) {
      for (int col = 0; col < sp.dim(); ++col) {
        if (row / stride > col / stride) continue;  // strictly-lower cells stay zero
        mat(row, col) = std::complex<double>(gauss(rng), gauss(rng)) / std::sqrt(sp.dim());
      }
    }
    return triang::BlockOperator::from_matrix(sp, mat);
  };
  triang::BlockOperator X = random_upper(), Y = random_upper();
  ojson cells = ojson::array();
  bool all_hold = true;
  for (int q = 0; q < sp.m; ++q) {
    for (int i = 1; i <= sp.k; ++i) {
      for (int j = 1; j <= sp.k; ++j) {
        triang::InequalityRecord rec =
            triang::product_inequality_check(X, Y, i, j, q, r, cfg.w_floor);
        all_hold = all_hold && rec.holds;
        if (!rec.holds) {
          cells.push_back(ojson{{"cell", q},
                                {"i", i},
                                {"j", j},
                                {"record", triang::inequality_to_json(rec)}});
        }
      }
    }
  }
  emit_json(cfg,
            wrap_report(cfg, ojson{{"all_hold", all_hold}, {"failures", cells}}));
  return all_hold ? 0 : 1;
}

int cmd_demo(const RunConfig& cfg, const std::string& which, int size) {
  triang::ExampleParams params;
  params.size = size;
  triang::ExampleKind kind;
  if (which == "nat") {
    kind = triang::ExampleKind::NatCase;
    params.cut = triang::CutCase::AEmpty;
  } else if (which == "int") {
    kind = triang::ExampleKind::IntCase;
    params.cut = triang::CutCase::Pivot;
    params.pivot_label = triang::Rational(0);
  } else if (which == "wo") {
    kind = triang::ExampleKind::WellOrdered;
    params.cut = triang::CutCase::Pivot;
    params.pivot_label = triang::Rational(1);
  } else if (which == "cantor") {
    kind = triang::ExampleKind::Cantor;
    params.cut = triang::CutCase::TwoSided;
    params.gamma = triang::Rational(5, 11);  // irrational surrogate between dyadic labels
  } else if (which == "mixed") {
    kind = triang::ExampleKind::Mixed;
  } else {
    std::cerr << "unknown demo: " << which << "\n";
    return 2;
  }
  triang::ExtTriSystem sys = triang::build_example(kind, params);
  triang::AxiomReport ext = triang::check_extended(sys);
  triang::AxiomReport max = triang::is_maximal(sys, triang::MaximalityMode::Truncated);
  ojson cuts = ojson::array();
  for (const triang::Rational& x :
       {triang::Rational(1, 16), triang::Rational(5, 16), triang::Rational(13, 16)}) {
    cuts.push_back(triang::cut_to_json(triang::induced_cut_at(sys, x)));
  }
  ojson body{{"system", triang::system_to_json(sys)},
             {"extended_check", triang::report_to_json(ext)},
             {"maximality", triang::report_to_json(max)},
             {"sample_cuts", cuts}};
  emit_json(cfg, wrap_report(cfg, std::move(body)));
  return ext.passed && max.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification laboratory for extended triangular systems"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--m", cfg.m, "grid cells");
  app.add_option("--k", cfg.k, "blocks");
  app.add_option("--c", cfg.c, "channels per (cell, block)");
  app.add_option("--tol", cfg.tol, "numeric tolerance");
  app.add_option("--eta", cfg.eta, "measure budget (rational, e.g. 1/8)");
  app.add_option("--wfloor", cfg.w_floor, "window floor in cells");
  app.add_option("--format", cfg.format, "output format (json|csv)");
  app.add_option("--seed", cfg.seed, "seed for randomized sweeps");
  app.add_option("--out", cfg.out, "output file (default stdout)");

  std::string sys_path, op_path, axis, witness_kind, demo_kind;
  int index = 1, r = 1, size = 6;
  bool nearly = false, verbose = false;

  CLI::App* check = app.add_subcommand("check", "validate a system file");
  check->fallthrough();
  check->add_option("system", sys_path, "system JSON file")->required();
  check->add_flag("--nearly", nearly, "check axioms (1)-(5) only");
  check->add_flag("--verbose", verbose, "report every violating cell");

  CLI::App* complete = app.add_subcommand("complete", "maximal completion of a system file");
  complete->fallthrough();
  complete->add_option("system", sys_path, "system JSON file")->required();

  CLI::App* lab = app.add_subcommand("lab", "block-operator laboratory");
  lab->fallthrough();
  lab->require_subcommand(1);
  CLI::App* seminorm = lab->add_subcommand("seminorm", "seminorm / liminal profiles (CSV)");
  seminorm->fallthrough();
  seminorm->add_option("--op", op_path, "operator link-list JSON")->required();
  seminorm->add_option("--axis", axis, "row|col for liminal profiles");
  seminorm->add_option("--index", index, "block index for liminal profiles");
  CLI::App* member = lab->add_subcommand("membership", "T(S,R,C) membership report");
  member->fallthrough();
  member->add_option("--system", sys_path, "system JSON file")->required();
  member->add_option("--op", op_path, "operator link-list JSON")->required();
  CLI::App* witness = lab->add_subcommand("witness", "constructive fixtures");
  witness->fallthrough();
  witness->add_option("kind", witness_kind, "nonclosure|rinf|nonsimple")->required();
  CLI::App* inequality = lab->add_subcommand("inequality", "product inequality sweep");
  inequality->fallthrough();
  inequality->add_option("--r", r, "truncation split point");

  CLI::App* demo = app.add_subcommand("demo", "reference example systems");
  demo->fallthrough();
  demo->add_option("example", demo_kind, "nat|int|wo|cantor|mixed")->required();
  demo->add_option("--size", size, "truncation size");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) {
      cfg.command = "check";
      return cmd_check(cfg, sys_path, nearly, verbose);
    }
    if (complete->parsed()) {
      cfg.command = "complete";
      return cmd_complete(cfg, sys_path);
    }
    if (lab->parsed()) {
      if (seminorm->parsed()) {
        cfg.command = "lab seminorm";
        return cmd_lab_seminorm(cfg, op_path, axis, index);
      }
      if (member->parsed()) {
        cfg.command = "lab membership";
        return cmd_lab_membership(cfg, sys_path, op_path);
      }
      if (witness->parsed()) {
        cfg.command = "lab witness";
        return cmd_lab_witness(cfg, witness_kind);
      }
      if (inequality->parsed()) {
        cfg.command = "lab inequality";
        return cmd_lab_inequality(cfg, r);
      }
    }
    if (demo->parsed()) {
      cfg.command = "demo";
      return cmd_demo(cfg, demo_kind, size);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
