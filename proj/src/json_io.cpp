#include "equicob/json_io.hpp"

#include <fstream>
#include <sstream>

namespace equicob {

namespace {

// Largest integer JSON numbers carry losslessly through double-based
// consumers; larger values travel as decimal strings.
const Int kJsonSafeBound = Int(1) << 53;

bool is_decimal_string(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
}

}  // namespace

nlohmann::ordered_json int_to_json(const Int& v) {
    if (v >= kJsonSafeBound || v <= -kJsonSafeBound) return v.str();
    return v.convert_to<long long>();
}

Int json_to_int(const nlohmann::json& j, const std::string& location) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_number_unsigned()) return Int(j.get<unsigned long long>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (!is_decimal_string(s)) throw SchemaError(location + ": not a decimal integer: \"" + s + "\"");
        return Int(s);
    }
    throw SchemaError(location + ": expected an integer or a decimal string");
}

nlohmann::ordered_json dataset_to_json(const Dataset& d) {
    nlohmann::ordered_json j;
    j["rank"] = d.rank;
    nlohmann::ordered_json points = nlohmann::ordered_json::array();
    for (const FixedPointDatum& p : d.points) {
        nlohmann::ordered_json weights = nlohmann::ordered_json::array();
        for (const LatticeVector& w : p.weights) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (const Int& e : w) row.push_back(int_to_json(e));
            weights.push_back(std::move(row));
        }
        nlohmann::ordered_json point;
        point["weights"] = std::move(weights);
        point["sign"] = p.sign;
        points.push_back(std::move(point));
    }
    j["points"] = std::move(points);
    return j;
}

Dataset dataset_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw SchemaError("top level: expected an object");
    if (!j.contains("rank")) throw SchemaError("rank: missing");
    if (!j["rank"].is_number_integer() && !j["rank"].is_number_unsigned())
        throw SchemaError("rank: expected an integer");
    Dataset d;
    d.rank = j["rank"].get<int>();
    if (d.rank < 1) throw SchemaError("rank: must be >= 1");
    if (!j.contains("points") || !j["points"].is_array() || j["points"].empty())
        throw SchemaError("points: expected a nonempty array");

    for (std::size_t i = 0; i < j["points"].size(); ++i) {
        const nlohmann::json& pj = j["points"][i];
        const std::string where = "points[" + std::to_string(i) + "]";
        if (!pj.is_object()) throw SchemaError(where + ": expected an object");
        if (!pj.contains("weights") || !pj["weights"].is_array())
            throw SchemaError(where + ".weights: expected an array");
        if (!pj.contains("sign")) throw SchemaError(where + ".sign: missing");
        if (!pj["sign"].is_number_integer() && !pj["sign"].is_number_unsigned())
            throw SchemaError(where + ".sign: expected 1 or -1");
        FixedPointDatum p;
        p.sign = pj["sign"].get<int>();
        if (p.sign != 1 && p.sign != -1) throw SchemaError(where + ".sign: expected 1 or -1");
        for (std::size_t k = 0; k < pj["weights"].size(); ++k) {
            const nlohmann::json& wj = pj["weights"][k];
            const std::string wwhere = where + ".weights[" + std::to_string(k) + "]";
            if (!wj.is_array()) throw SchemaError(wwhere + ": expected an array of integers");
            LatticeVector w;
            for (std::size_t c = 0; c < wj.size(); ++c) {
                w.push_back(json_to_int(wj[c], wwhere + "[" + std::to_string(c) + "]"));
            }
            p.weights.push_back(std::move(w));
        }
        d.points.push_back(std::move(p));
    }
    return d;
}

std::string dataset_to_string(const Dataset& d) { return dataset_to_json(d).dump(); }

Dataset dataset_from_string(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("parse: ") + e.what());
    }
    return dataset_from_json(j);
}

Dataset load_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(path + ": " + e.what());
    }
    Dataset d = dataset_from_json(j);
    const ValidationReport report = validate_dataset(d);
    if (!report.valid) {
        for (const PointValidation& pv : report.points) {
            if (!pv.ok()) throw ValidationError(pv.index, pv.detail);
        }
        throw ValidationError(0, "invalid dataset");
    }
    return d;
}

nlohmann::ordered_json verdict_to_json(const Verdict& v) {
    nlohmann::ordered_json j;
    j["bounds"] = v.bounds;
    j["route"] = route_name(v.route);
    if (v.witness_key) {
        nlohmann::ordered_json key = nlohmann::ordered_json::array();
        for (const LatticeVector& w : v.witness_key->sorted_weights) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (const Int& e : w) row.push_back(int_to_json(e));
            key.push_back(std::move(row));
        }
        j["witness_key"] = std::move(key);
        j["witness_multiplicity"] = int_to_json(v.witness_multiplicity);
    }
    if (v.witness_omega) {
        j["witness_omega"] = v.witness_omega->entries;
        j["witness_value"] = v.witness_value;
    }
    return j;
}

nlohmann::ordered_json consistency_report_to_json(const ConsistencyReport& r) {
    nlohmann::ordered_json j;
    j["degree_cap"] = r.degree_cap;
    j["all_pass"] = r.all_pass();
    j["violations"] = r.violation_count;
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const ConsistencyEntry& e : r.entries) {
        nlohmann::ordered_json ej;
        ej["omega"] = e.omega.entries;
        ej["value"] = e.value_text;
        ej["pass"] = e.pass;
        if (!e.pass) ej["reason"] = e.reason;
        entries.push_back(std::move(ej));
    }
    j["entries"] = std::move(entries);
    return j;
}

nlohmann::ordered_json outcome_to_json(const SearchOutcome& o) {
    nlohmann::ordered_json j;
    j["candidates_examined"] = o.candidates_examined;
    j["pruned_by_canonical_form"] = o.pruned_by_canonical_form;
    j["pruned_by_structure"] = o.pruned_by_structure;
    j["consistent_count"] = o.consistent_count;
    nlohmann::ordered_json hits = nlohmann::ordered_json::array();
    for (const SearchHit& h : o.nonbounding_hits) {
        nlohmann::ordered_json hj;
        hj["candidate_index"] = h.candidate_index;
        hj["dataset"] = dataset_to_json(h.dataset);
        hj["verdict"] = verdict_to_json(h.verdict);
        hits.push_back(std::move(hj));
    }
    j["nonbounding_hits"] = std::move(hits);
    return j;
}

nlohmann::ordered_json lemma_report_to_json(const LemmaReport& r) {
    nlohmann::ordered_json j;
    j["rank"] = r.rank;
    j["trials"] = r.trials;
    j["sigma1_top_checked"] = r.sigma1_top_checked;
    j["sigma1_top_violations"] = r.sigma1_top_violations;
    j["sigma12_checked"] = r.sigma12_checked;
    j["sigma12_violations"] = r.sigma12_violations;
    j["orthogonality_checked"] = r.orthogonality_checked;
    j["orthogonality_violations"] = r.orthogonality_violations;
    j["ok"] = r.ok();
    return j;
}

}  // namespace equicob
