#pragma once

#include <string>

#include "json.hpp"

#include "equicob/cobordism.hpp"
#include "equicob/dataset.hpp"
#include "equicob/localization.hpp"
#include "equicob/search.hpp"

namespace equicob {

// Dataset wire schema:
//   {"rank": n, "points": [{"weights": [[int,...],...], "sign": 1|-1}, ...]}
// Weight entries with |value| >= 2^53 are serialized as decimal strings so
// the JSON stays lossless; the parser accepts either form.

nlohmann::ordered_json int_to_json(const Int& v);
Int json_to_int(const nlohmann::json& j, const std::string& location);

nlohmann::ordered_json dataset_to_json(const Dataset& d);
Dataset dataset_from_json(const nlohmann::json& j);  // SchemaError on malformed input

std::string dataset_to_string(const Dataset& d);       // single line
Dataset dataset_from_string(const std::string& text);

// Parse + validate. Throws IoError, SchemaError, or ValidationError naming
// the offending point.
Dataset load_dataset(const std::string& path);

nlohmann::ordered_json verdict_to_json(const Verdict& v);
nlohmann::ordered_json consistency_report_to_json(const ConsistencyReport& r);
nlohmann::ordered_json outcome_to_json(const SearchOutcome& o);
nlohmann::ordered_json lemma_report_to_json(const LemmaReport& r);

}  // namespace equicob
