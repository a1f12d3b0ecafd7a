// SPDX-License-Identifier: Apache-2.0
//
// wipt-sim: Monte Carlo simulator for multi-antenna wireless information and power transfer
// Copyright (C) 2026 The wipt-sim Authors
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
#ifndef WIPT_CSV_HPP
#define WIPT_CSV_HPP

#include "wipt/experiment.hpp"
#include "wipt/format.hpp"
#include "wipt/optimize.hpp"
#include "wipt/stats.hpp"
#include "wipt/swipt.hpp"

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace wipt::csv
{

inline constexpr std::string_view curve_header = "sweep_param,sweep_value,tau_s,metric_name,metric_value,std_error";
inline constexpr std::string_view summary_header = "sweep_value,tau_star_s,objective,ci95_low,ci95_high,feasible";
inline constexpr std::string_view re_region_header = "protocol,knob,rate_bpshz,energy_j";
inline constexpr std::string_view separated_header =
    "strategy,share,rate_bpshz,secrecy_rate_bpshz,harvested_power_w";
inline constexpr std::string_view min_power_header =
    "sweep_value,tau_star_s,objective,ci95_low,ci95_high,feasible,P_star_w";

// Comma-joined fields, LF line endings. Fields never contain commas or quotes here.
class Document
{
public:
    explicit Document(std::string_view header) { text_.append(header).push_back('\n'); }

    void row(std::initializer_list<std::string> fields)
    {
        bool first = true;
        for (const auto &f : fields)
        {
            if (!first)
                text_.push_back(',');
            text_ += f;
            first = false;
        }
        text_.push_back('\n');
    }

    const std::string &str() const noexcept { return text_; }

private:
    std::string text_;
};

inline std::string num(double v) { return format_number(v); }
inline std::string flag(bool b) { return b ? "true" : "false"; }

// One row per (sweep value, grid point), then one `<metric>_at_tau_star` row per sweep value.
inline std::string curve(const ExperimentTable &table)
{
    Document doc(curve_header);
    for (const auto &row : table.rows)
    {
        const std::string value = format_sweep_value(table.sweep_parameter, row.sweep_value);
        for (const auto &pt : row.tradeoff.curve)
            doc.row({table.sweep_parameter, value, num(pt.tau), table.metric_name, num(pt.objective),
                     num(pt.std_error)});
        doc.row({table.sweep_parameter, value, num(row.tradeoff.tau_star), table.metric_name + "_at_tau_star",
                 num(row.objective.mean), num(row.objective.std_error)});
    }
    return doc.str();
}

inline std::string summary(const ExperimentTable &table)
{
    Document doc(summary_header);
    for (const auto &row : table.rows)
        doc.row({format_sweep_value(table.sweep_parameter, row.sweep_value), num(row.tradeoff.tau_star),
                 num(row.objective.mean), num(row.objective.ci95_low), num(row.objective.ci95_high),
                 flag(row.tradeoff.feasible)});
    return doc.str();
}

struct MeanREPoint
{
    std::string protocol;
    double knob;
    double rate;
    double energy;
};

inline std::string re_region(const std::vector<MeanREPoint> &points)
{
    Document doc(re_region_header);
    for (const auto &p : points)
        doc.row({p.protocol, num(p.knob), num(p.rate), num(p.energy)});
    return doc.str();
}

struct MeanSecrecyPoint
{
    std::string strategy;
    SecrecyPoint point;
};

inline std::string separated(const std::vector<MeanSecrecyPoint> &points)
{
    Document doc(separated_header);
    for (const auto &p : points)
        doc.row({p.strategy, num(p.point.share), num(p.point.rate), num(p.point.secrecy_rate),
                 num(p.point.harvested_power)});
    return doc.str();
}

inline std::string min_power(double min_rate, const PowerSolution &solution, const SummaryStat &at_star)
{
    Document doc(min_power_header);
    doc.row({num(min_rate), num(solution.tradeoff.tau_star), num(at_star.mean), num(at_star.ci95_low),
             num(at_star.ci95_high), flag(solution.feasible), num(solution.tx_power)});
    return doc.str();
}

} // namespace wipt::csv

#endif
