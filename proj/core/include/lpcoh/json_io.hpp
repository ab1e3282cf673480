#ifndef LPCOH_JSON_IO_HPP
#define LPCOH_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "lpcoh/admissibility.hpp"
#include "lpcoh/real_forms.hpp"
#include "lpcoh/root_system.hpp"
#include "lpcoh/strip.hpp"

namespace lpcoh {

using json = nlohmann::ordered_json;

// Stable JSON schemas. Rationals serialize as {"num": int, "den": int};
// group specs as their canonical spelling.

json to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(const Root& root);
json to_json(const RootSystem& rs, bool full);

json to_json(const GoodRootReport& report);
GoodRootReport good_root_report_from_json(const json& j);

json to_json(const StripReport& report);
StripReport strip_report_from_json(const json& j);

json to_json(const HypStatus& st);
HypStatus hyp_status_from_json(const json& j);

json to_json(const CohomologyStatus& st);
CohomologyStatus cohomology_status_from_json(const json& j);

json to_json(const ClassifiedEntry& entry);

json to_json(const MultDatabase& db);
MultDatabase database_from_json(const json& j);

}  // namespace lpcoh

#endif
