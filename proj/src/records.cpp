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

#include <uavcov/records.hpp>

#include <uavcov/config.hpp>

#include <json.hpp>

#include <stdexcept>

namespace uavcov
{

RecordWriter::RecordWriter(std::ostream& out, Format format, std::vector<std::string> point_columns, bool timing)
    : out_(out), format_(format), columns_(std::move(point_columns)), timing_(timing)
{
}

void RecordWriter::write_header(const RunMeta& meta)
{
    if (format_ == Format::Json)
    {
        nlohmann::ordered_json j;
        j["tool"] = "uavcov";
        j["version"] = kVersion;
        j["command"] = meta.command;
        j["seed"] = meta.seed;
        j["config_hash"] = meta.config_hash;
        for (const auto& [k, v] : meta.extra)
            j[k] = v;
        out_ << nlohmann::ordered_json{{"meta", j}}.dump() << '\n';
        return;
    }
    out_ << "# tool: uavcov\n";
    out_ << "# version: " << kVersion << '\n';
    out_ << "# command: " << meta.command << '\n';
    out_ << "# seed: " << meta.seed << '\n';
    out_ << "# config_hash: " << meta.config_hash << '\n';
    for (const auto& [k, v] : meta.extra)
        out_ << "# " << k << ": " << v << '\n';
    for (const auto& c : columns_)
        out_ << c << ',';
    out_ << "engine,metric,value,se,n";
    if (timing_)
        out_ << ",wall_s";
    out_ << '\n';
}

void RecordWriter::write(const ResultRecord& r)
{
    if (r.point.size() != columns_.size())
        throw std::logic_error("record point does not match the writer's columns");
    if (format_ == Format::Json)
    {
        nlohmann::ordered_json j;
        for (std::size_t i = 0; i < columns_.size(); ++i)
            j[columns_[i]] = r.point[i];
        j["engine"] = r.engine;
        j["metric"] = r.metric;
        j["value"] = r.value;
        j["se"] = r.se ? nlohmann::ordered_json(*r.se) : nlohmann::ordered_json(nullptr);
        j["n"] = r.n ? nlohmann::ordered_json(*r.n) : nlohmann::ordered_json(nullptr);
        if (timing_)
            j["wall_s"] = r.wall_s ? nlohmann::ordered_json(*r.wall_s) : nlohmann::ordered_json(nullptr);
        out_ << j.dump() << '\n';
    }
    else
    {
        for (double v : r.point)
            out_ << format_number(v) << ',';
        out_ << r.engine << ',' << r.metric << ',' << format_number(r.value) << ',';
        if (r.se)
            out_ << format_number(*r.se);
        out_ << ',';
        if (r.n)
            out_ << *r.n;
        if (timing_)
        {
            out_ << ',';
            if (r.wall_s)
                out_ << format_number(*r.wall_s);
        }
        out_ << '\n';
    }
    out_.flush();
}

} // namespace uavcov
