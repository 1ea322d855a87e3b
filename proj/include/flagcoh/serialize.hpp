#pragma once

#include "flagcoh/borel.hpp"
#include "flagcoh/grassmann.hpp"

#include <json.hpp>

namespace flagcoh {

using json = nlohmann::ordered_json;

json to_json(const RootSystem& rs);
json to_json(const BettiTable& t);
json to_json(const GenerationReport& r);
json to_json(const ReductionCertificate& c);

namespace grassmann {

/// {"n": n, "terms": [{"h": i, "d": j, "c": "p/q"}, ...]}
json to_json(const LHElement& e);
LHElement lh_element_from_json(const json& j);

/// {"terms": [{"a": a, "b": b, "coef": c}, ...]}
json to_json(const SchubertSum& s);
SchubertSum schubert_sum_from_json(const json& j, int n);

}  // namespace grassmann

}  // namespace flagcoh
