// SPDX-License-Identifier: Apache-2.0
//
// uavcov: coverage and backhaul analysis for urban UAV networks
// Copyright (C) 2026 The uavcov Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef UAVCOV_RECORDS_HPP
#define UAVCOV_RECORDS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace uavcov
{

inline constexpr const char* kVersion = "0.1.0";

/// One (point, engine, metric) result.
struct ResultRecord
{
    std::vector<double> point; // values of the writer's point columns, config units
    std::string engine;        // analytic | mc
    std::string metric;
    double value = 0;
    std::optional<double> se;
    std::optional<std::size_t> n;
    std::optional<double> wall_s;
};

enum class Format
{
    Csv,
    Json
};

struct RunMeta
{
    std::string command;
    std::uint64_t seed = 0;
    std::string config_hash;
    std::vector<std::pair<std::string, std::string>> extra; // written after the fixed keys
};

/// Streams records in a fixed schema.
///
/// CSV: `# key: value` metadata lines, then the header
///   <point columns...>,engine,metric,value,se,n[,wall_s]
/// with empty cells for absent optionals. JSON: one object per line, the
/// first carrying the metadata under "meta".
class RecordWriter
{
  public:
    RecordWriter(std::ostream& out, Format format, std::vector<std::string> point_columns, bool timing);

    void write_header(const RunMeta& meta);
    void write(const ResultRecord& record);

  private:
    std::ostream& out_;
    Format format_;
    std::vector<std::string> columns_;
    bool timing_;
};

} // namespace uavcov

#endif
