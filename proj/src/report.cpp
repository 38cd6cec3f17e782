/*
   Copyright 2026 The hyperbms Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "hyperbms/report.hpp"

#include <json.hpp>

namespace hbms {

using nlohmann::json;

std::string to_string(Status status) {
    switch (status) {
        case Status::Completed: return "Completed";
        case Status::NotSyndrome: return "NotSyndrome";
        case Status::FootprintOverflow: return "FootprintOverflow";
        case Status::Ambiguous: return "Ambiguous";
        case Status::BranchBudgetExceeded: return "BranchBudgetExceeded";
    }
    return "?";
}

Status parse_status(const std::string& text) {
    for (auto s : {Status::Completed, Status::NotSyndrome, Status::FootprintOverflow, Status::Ambiguous,
                   Status::BranchBudgetExceeded})
        if (to_string(s) == text) return s;
    throw ParseError("unknown status '" + text + "'");
}

int exit_code(Status status) {
    switch (status) {
        case Status::Completed: return 0;
        case Status::NotSyndrome:
        case Status::FootprintOverflow: return 1;
        case Status::Ambiguous:
        case Status::BranchBudgetExceeded: return 3;
    }
    return 1;
}

void to_json(json& j, const IndexPair& n) { j = json::array({n.n1, n.n2}); }
void from_json(const json& j, IndexPair& n) {
    if (!j.is_array() || j.size() != 2) throw ParseError("index pair must be a 2-element array");
    n = {j.at(0).get<int>(), j.at(1).get<int>()};
}

void to_json(json& j, const AttemptRecord& a) {
    j = {{"tau", a.tau}, {"t", a.t}, {"order", a.order}, {"outcome", a.outcome}, {"leaves", a.leaves}};
}
void from_json(const json& j, AttemptRecord& a) {
    a.tau = j.at("tau").get<IndexPair>();
    a.t = j.at("t").get<int>();
    a.order = j.at("order").get<std::string>();
    a.outcome = j.at("outcome").get<std::string>();
    a.leaves = j.at("leaves").get<std::size_t>();
}

void to_json(json& j, const InferredRecord& r) { j = {{"cell", r.cell}, {"value", r.value}, {"how", r.how}}; }
void from_json(const json& j, InferredRecord& r) {
    r.cell = j.at("cell").get<IndexPair>();
    r.value = j.at("value").get<std::string>();
    r.how = j.at("how").get<std::string>();
}

std::string report_to_json(const CompletionReport& r, int indent) {
    json j;
    j["status"] = to_string(r.status);
    j["tau"] = r.tau ? json(*r.tau) : json(nullptr);
    j["t"] = r.t;
    j["order"] = r.order ? json(*r.order) : json(nullptr);
    j["basis"] = r.basis;
    j["footprint"] = r.footprint;
    j["support"] = r.support;
    j["coefficients"] = r.coefficients;
    if (r.descent)
        j["descent"] = {{"tau", r.descent->tau}, {"coefficients", r.descent->coefficients}};
    else
        j["descent"] = nullptr;
    j["completed_table"] = r.completed_table;
    j["branches_tried"] = r.branches_tried;
    j["warnings"] = r.warnings;
    j["attempts"] = r.attempts;
    j["inferred"] = r.inferred;
    return j.dump(indent);
}

CompletionReport report_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("report is not valid JSON: ") + e.what());
    }
    try {
        CompletionReport r;
        r.status = parse_status(j.at("status").get<std::string>());
        if (!j.at("tau").is_null()) r.tau = j.at("tau").get<IndexPair>();
        r.t = j.at("t").get<int>();
        if (!j.at("order").is_null()) r.order = j.at("order").get<std::string>();
        r.basis = j.at("basis").get<std::vector<std::string>>();
        r.footprint = j.at("footprint").get<std::vector<IndexPair>>();
        r.support = j.at("support").get<std::vector<IndexPair>>();
        r.coefficients = j.at("coefficients").get<std::vector<std::string>>();
        if (!j.at("descent").is_null())
            r.descent = DescentRecord{j.at("descent").at("tau").get<IndexPair>(),
                                      j.at("descent").at("coefficients").get<std::vector<std::string>>()};
        r.completed_table = j.at("completed_table").get<std::vector<std::string>>();
        r.branches_tried = j.at("branches_tried").get<std::size_t>();
        r.warnings = j.at("warnings").get<std::vector<std::string>>();
        if (j.contains("attempts")) r.attempts = j.at("attempts").get<std::vector<AttemptRecord>>();
        if (j.contains("inferred")) r.inferred = j.at("inferred").get<std::vector<InferredRecord>>();
        return r;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed report: ") + e.what());
    }
}

}  // namespace hbms
