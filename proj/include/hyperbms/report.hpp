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

#ifndef HYPERBMS_REPORT_HPP
#define HYPERBMS_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "hyperbms/lattice.hpp"

namespace hbms {

enum class Status { Completed, NotSyndrome, FootprintOverflow, Ambiguous, BranchBudgetExceeded };

std::string to_string(Status status);
Status parse_status(const std::string& text);

/// CLI exit code of `complete`: 0 Completed, 1 NotSyndrome/FootprintOverflow, 3 Ambiguous/BranchBudgetExceeded.
int exit_code(Status status);

struct AttemptRecord {
    IndexPair tau;
    int t = 0;
    std::string order;
    std::string outcome;
    std::size_t leaves = 0;
    bool operator==(const AttemptRecord&) const = default;
};

struct InferredRecord {
    /// Table coordinates.
    IndexPair cell;
    std::string value;
    std::string how;
    bool operator==(const InferredRecord&) const = default;
};

struct DescentRecord {
    IndexPair tau;
    std::vector<std::string> coefficients;
    bool operator==(const DescentRecord&) const = default;
};

/// Outcome of the completion pipeline; every value is held in its text form.
struct CompletionReport {
    Status status = Status::NotSyndrome;
    std::optional<IndexPair> tau;
    int t = 0;
    std::optional<std::string> order;
    std::vector<std::string> basis;
    std::vector<IndexPair> footprint;
    std::vector<IndexPair> support;
    std::vector<std::string> coefficients;
    std::optional<DescentRecord> descent;
    std::vector<std::string> completed_table;
    std::size_t branches_tried = 0;
    std::vector<std::string> warnings;
    std::vector<AttemptRecord> attempts;
    std::vector<InferredRecord> inferred;

    bool operator==(const CompletionReport&) const = default;
};

std::string report_to_json(const CompletionReport& report, int indent = 2);
CompletionReport report_from_json(const std::string& text);

}  // namespace hbms

#endif  // HYPERBMS_REPORT_HPP
