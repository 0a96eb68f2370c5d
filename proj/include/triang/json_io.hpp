#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "triang/lemmas.hpp"
#include "triang/nestlab.hpp"
#include "triang/tsys.hpp"

namespace triang {

// Stable serialization: nlohmann::ordered_json keeps field order fixed, so
// identical inputs produce byte-identical reports.
using ojson = nlohmann::ordered_json;

// Rationals serialize as [num, den]; intervals as [lo, hi]; Borel sets as
// interval lists.
ojson to_json(const Rational& r);
Rational rational_from_json(const ojson& j);

ojson to_json(const Interval& iv);
Interval interval_from_json(const ojson& j);

ojson to_json(const BorelSet& s);
BorelSet borel_from_json(const ojson& j);

ojson to_json(const IndexTemplate& t);
IndexTemplate template_from_json(const ojson& j);

ojson system_to_json(const ExtTriSystem& sys);
ExtTriSystem system_from_json(const ojson& j);

ojson report_to_json(const AxiomReport& rep);
ojson cut_to_json(const Cut& cut);
ojson membership_to_json(const MembershipReport& rep);

ojson links_to_json(const std::vector<Link>& links);
std::vector<Link> links_from_json(const ojson& j);

ojson inequality_to_json(const InequalityRecord& rec);
ojson selection_to_json(const Selection& sel);

/// CSV with header cell_lo,cell_hi,value,truncation.
std::string profile_to_csv(const SeminormProfile& prof);

}  // namespace triang
