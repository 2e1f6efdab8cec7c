// Copyright 2026 The nilrec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NILREC_IO_HPP_
#define NILREC_IO_HPP_

#include <string>

#include "nilrec/combinatorics.hpp"
#include "nilrec/pipeline.hpp"
#include "nilrec/point_set.hpp"
#include "nilrec/systems.hpp"
#include "nilrec/verification.hpp"

namespace nilrec::io {

std::string PointSetToJson(const LatticePointSet& set);

struct ParsedPointSet {
  LatticePointSet set;  // certificate left as none
  Certificate claimed = Certificate::kNone;
};

// Throws kParse on malformed input, kRange on out-of-range points.
ParsedPointSet PointSetFromJson(const std::string& text);

std::string WitnessToJson(const verification::PatternWitness& w);

// Columns s,count.
std::string SliceSizesToCsv(const combinatorics::SliceSelection& selection);

// The timestamp is the only field that varies between identical runs; pass
// an empty string to omit it.
std::string ReportToJson(const experiments::MeasureReport& report,
                         const std::string& timestamp);
std::string ReportToCsv(const experiments::MeasureReport& report);
std::string ReportToTable(const experiments::MeasureReport& report);

std::string SystemToJson(const dynamics::RecurrenceSystem& system);

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, const std::string& contents);

}  // namespace nilrec::io

#endif  // NILREC_IO_HPP_
