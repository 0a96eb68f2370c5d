#include "triang/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace triang {

ojson to_json(const Rational& r) { return ojson::array({r.num, r.den}); }

Rational rational_from_json(const ojson& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("rational: expected [num, den]");
  return Rational(j[0].get<std::int64_t>(), j[1].get<std::int64_t>());
}

ojson to_json(const Interval& iv) { return ojson::array({to_json(iv.lo), to_json(iv.hi)}); }

Interval interval_from_json(const ojson& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("interval: expected [lo, hi]");
  return Interval{rational_from_json(j[0]), rational_from_json(j[1])};
}

ojson to_json(const BorelSet& s) {
  ojson out = ojson::array();
  for (const Interval& iv : s.intervals()) out.push_back(to_json(iv));
  return out;
}

BorelSet borel_from_json(const ojson& j) {
  if (!j.is_array()) throw std::invalid_argument("borel set: expected interval list");
  std::vector<Interval> ivs;
  for (const ojson& e : j) ivs.push_back(interval_from_json(e));
  return BorelSet::canonicalize(std::move(ivs));
}

ojson to_json(const IndexTemplate& t) {
  ojson labels = ojson::array();
  for (const Rational& l : t.labels) labels.push_back(to_json(l));
  return ojson{{"kind", order_kind_name(t.kind)}, {"size", t.size}, {"labels", labels}};
}

IndexTemplate template_from_json(const ojson& j) {
  IndexTemplate t;
  t.kind = order_kind_from_name(j.at("kind").get<std::string>());
  t.size = j.at("size").get<int>();
  for (const ojson& l : j.at("labels")) t.labels.push_back(rational_from_json(l));
  t.validate();
  return t;
}

ojson system_to_json(const ExtTriSystem& sys) {
  ojson s = ojson::array();
  for (const auto& row : sys.base.S) {
    ojson jrow = ojson::array();
    for (const BorelSet& e : row) jrow.push_back(to_json(e));
    s.push_back(jrow);
  }
  ojson r = ojson::array(), c = ojson::array();
  for (const BorelSet& e : sys.R) r.push_back(to_json(e));
  for (const BorelSet& e : sys.C) c.push_back(to_json(e));
  return ojson{{"template", to_json(sys.base.tmpl)}, {"S", s}, {"R", r}, {"C", c}};
}

ExtTriSystem system_from_json(const ojson& j) {
  ExtTriSystem sys;
  sys.base.tmpl = template_from_json(j.at("template"));
  for (const ojson& jrow : j.at("S")) {
    std::vector<BorelSet> row;
    for (const ojson& e : jrow) row.push_back(borel_from_json(e));
    sys.base.S.push_back(std::move(row));
  }
  for (const ojson& e : j.at("R")) sys.R.push_back(borel_from_json(e));
  for (const ojson& e : j.at("C")) sys.C.push_back(borel_from_json(e));
  return sys;
}

ojson report_to_json(const AxiomReport& rep) {
  ojson v = ojson::array();
  for (const AxiomViolation& viol : rep.violations) {
    v.push_back(ojson{
        {"axiom", viol.axiom}, {"indices", viol.indices}, {"cell", to_json(viol.cell)}});
  }
  return ojson{{"passed", rep.passed}, {"violations", v}};
}

namespace {
std::string virtual_cut_name(VirtualCut tag) {
  switch (tag) {
    case VirtualCut::None: return "none";
    case VirtualCut::AEmptyAtInfinity: return "a-empty-at-infinity";
    case VirtualCut::BEmptyAtInfinity: return "b-empty-at-infinity";
    case VirtualCut::TwoSidedAtInfinity: return "two-sided-at-infinity";
  }
  return "none";
}
}  // namespace

ojson cut_to_json(const Cut& cut) {
  ojson rel = ojson::array();
  for (const auto& row : cut.relation) {
    ojson jrow = ojson::array();
    for (bool b : row) jrow.push_back(b ? 1 : 0);
    rel.push_back(jrow);
  }
  return ojson{{"cell", to_json(cut.cell)},
               {"relation", rel},
               {"A", cut.A},
               {"B", cut.B},
               {"virtual", virtual_cut_name(cut.virtual_tag)}};
}

ojson membership_to_json(const MembershipReport& rep) {
  ojson conds = ojson::array();
  for (int cond = 0; cond < 3; ++cond) {
    ojson v = ojson::array();
    for (const MembershipViolation& viol : rep.violations[cond]) {
      v.push_back(ojson{
          {"indices", viol.indices}, {"cell", to_json(viol.cell)}, {"value", viol.value}});
    }
    conds.push_back(ojson{{"condition", cond + 1},
                          {"exception_measure", to_json(rep.exception_measure[cond])},
                          {"violations", v}});
  }
  return ojson{{"member", rep.member}, {"conditions", conds}};
}

ojson links_to_json(const std::vector<Link>& links) {
  ojson out = ojson::array();
  for (const Link& l : links) {
    out.push_back(ojson{{"from", l.from},
                        {"to", l.to},
                        {"re", l.weight.real()},
                        {"im", l.weight.imag()}});
  }
  return out;
}

std::vector<Link> links_from_json(const ojson& j) {
  std::vector<Link> out;
  for (const ojson& e : j) {
    Link l;
    for (int t = 0; t < 3; ++t) {
      l.from[t] = e.at("from")[t].get<int>();
      l.to[t] = e.at("to")[t].get<int>();
    }
    l.weight = {e.at("re").get<double>(), e.at("im").get<double>()};
    out.push_back(l);
  }
  return out;
}

ojson inequality_to_json(const InequalityRecord& rec) {
  return ojson{{"lhs", rec.lhs}, {"rhs", rec.rhs}, {"holds", rec.holds}};
}

ojson selection_to_json(const Selection& sel) {
  ojson steps = ojson::array();
  for (std::size_t step = 0; step < sel.step_certificates.size(); ++step) {
    ojson certs = ojson::array();
    for (const Certificate& cert : sel.step_certificates[step]) {
      certs.push_back(
          ojson{{"label", cert.label}, {"value", cert.value}, {"bound", cert.bound}});
    }
    steps.push_back(ojson{{"index", sel.indices[step]}, {"certificates", certs}});
  }
  return ojson{{"indices", sel.indices}, {"steps", steps}};
}

std::string profile_to_csv(const SeminormProfile& prof) {
  std::ostringstream out;
  out << "cell_lo,cell_hi,value,truncation\n";
  out.precision(12);
  for (const ProfileEntry& e : prof.entries) {
    out << e.cell.lo.str() << "," << e.cell.hi.str() << "," << e.value << "," << e.truncation
        << "\n";
  }
  return out.str();
}

}  // namespace triang
