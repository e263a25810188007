// Copyright 2026 The qrac Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

/**
 * @file report.hpp
 * @brief JSON, CSV and plain-table rendering of results.
 *
 * Tables print six decimals; JSON keeps full double precision. CSV uses a
 * comma delimiter, dot decimal separator and a header row.
 */

#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bounds.hpp"
#include "codes.hpp"
#include "qracse.hpp"
#include "rational.hpp"
#include "teleport.hpp"

namespace qrac {

using Json = nlohmann::ordered_json;

enum class OutputFormat { table, json, csv };

inline OutputFormat format_from_string(const std::string &s) {
    if (s == "table") {
        return OutputFormat::table;
    }
    if (s == "json") {
        return OutputFormat::json;
    }
    if (s == "csv") {
        return OutputFormat::csv;
    }
    throw std::invalid_argument("unknown output format '" + s + "'");
}

/// Six-decimal fixed rendering used by every table and CSV cell.
inline std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

/// Quotes a CSV field when it contains a delimiter, quote or line break.
inline std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

inline Json rational_json(const Rational &r) {
    return Json{{"numerator", r.numerator()},
                {"denominator", r.denominator()},
                {"text", to_string(r)},
                {"value", to_double(r)}};
}

inline Json optional_rational_json(const std::optional<Rational> &r) {
    return r ? rational_json(*r) : Json(nullptr);
}

inline Json table_json(const EncodingTable &t) {
    Json arr = Json::array();
    for (const auto &p : t.entries()) {
        arr.push_back({p.first, p.second});
    }
    return arr;
}

// --- ProtocolReport ---------------------------------------------------------

inline Json to_json(const ProtocolReport &r) {
    Json per_string = Json::object();
    for (std::size_t c = 0; c < r.per_string.size(); ++c) {
        Json row = Json::object();
        for (std::size_t v = 0; v < r.per_string[c].size(); ++v) {
            row[std::to_string(v)] = r.per_string[c][v];
        }
        per_string[r.choice_labels.at(c)] = row;
    }
    Json per_choice = Json::object();
    for (std::size_t c = 0; c < r.per_choice.size(); ++c) {
        per_choice[r.choice_labels.at(c)] = r.per_choice[c];
    }
    Json j{{"kind", "protocol"},
           {"name", r.name},
           {"d", r.d},
           {"variant", to_string(r.variant)},
           {"accounting", r.accounting ? Json(to_string(*r.accounting)) : Json(nullptr)},
           {"p_avg", r.p_avg},
           {"p_min", r.p_min},
           {"exact_p_avg", optional_rational_json(r.exact_p_avg)},
           {"exact_p_min", optional_rational_json(r.exact_p_min)},
           {"per_choice", per_choice},
           {"per_string", per_string},
           {"annotations", r.annotations}};
    return j;
}

inline std::string to_csv(const ProtocolReport &r) {
    std::ostringstream os;
    os << "choice,value,probability\n";
    for (std::size_t c = 0; c < r.per_string.size(); ++c) {
        for (std::size_t v = 0; v < r.per_string[c].size(); ++v) {
            os << csv_field(r.choice_labels.at(c)) << ',' << v << ','
               << fixed6(r.per_string[c][v]) << '\n';
        }
    }
    return os.str();
}

inline std::string to_table(const ProtocolReport &r) {
    std::ostringstream os;
    os << r.name << "  d=" << r.d << "  variant=" << to_string(r.variant);
    if (r.accounting) {
        os << "  accounting=" << to_string(*r.accounting);
    }
    os << '\n';
    for (std::size_t c = 0; c < r.per_choice.size(); ++c) {
        os << "  P[" << r.choice_labels.at(c) << "] = " << fixed6(r.per_choice[c]) << '\n';
    }
    os << "  P_avg = " << fixed6(r.p_avg);
    if (r.exact_p_avg) {
        os << "  (" << to_string(*r.exact_p_avg) << ')';
    }
    os << "\n  P_min = " << fixed6(r.p_min);
    if (r.exact_p_min) {
        os << "  (" << to_string(*r.exact_p_min) << ')';
    }
    os << '\n';
    for (const auto &a : r.annotations) {
        os << "  note: " << a << '\n';
    }
    return os.str();
}

/// One row in the layout P_min, trivial P_min, P_avg, trivial P_avg.
struct ComparisonRow {
    ProtocolReport protocol;
    ProtocolReport trivial;
};

inline Json to_json(const ComparisonRow &row) {
    return Json{{"kind", "comparison"},
                {"d", row.protocol.d},
                {"variant", to_string(row.protocol.variant)},
                {"p_min", row.protocol.p_min},
                {"trivial_p_min", row.trivial.p_min},
                {"p_avg", row.protocol.p_avg},
                {"trivial_p_avg", row.trivial.p_avg},
                {"protocol", to_json(row.protocol)},
                {"trivial", to_json(row.trivial)}};
}

inline std::string to_csv(const ComparisonRow &row) {
    std::ostringstream os;
    os << "d,variant,p_min,trivial_p_min,p_avg,trivial_p_avg\n";
    os << row.protocol.d << ',' << to_string(row.protocol.variant) << ','
       << fixed6(row.protocol.p_min) << ',' << fixed6(row.trivial.p_min) << ','
       << fixed6(row.protocol.p_avg) << ',' << fixed6(row.trivial.p_avg) << '\n';
    return os.str();
}

inline std::string to_table(const ComparisonRow &row) {
    std::ostringstream os;
    os << to_table(row.protocol);
    os << "  " << "d  P_min     P_min(triv)  P_avg     P_avg(triv)\n";
    os << "  " << row.protocol.d << "  " << fixed6(row.protocol.p_min) << "  "
       << fixed6(row.trivial.p_min) << "     " << fixed6(row.protocol.p_avg) << "  "
       << fixed6(row.trivial.p_avg) << '\n';
    return os.str();
}

// --- StrategyResult ---------------------------------------------------------

inline Json to_json(const StrategyResult &r) {
    return Json{{"kind", "strategy"},
                {"strategy", r.strategy_name},
                {"d", r.d},
                {"entanglement_fidelity_F", r.entanglement_fidelity_F},
                {"transmission_fidelity_f", r.transmission_fidelity_f},
                {"success_probability", r.success_probability},
                {"exact_F", optional_rational_json(r.exact_F)},
                {"exact_f", optional_rational_json(r.exact_f)},
                {"exact_success", optional_rational_json(r.exact_success)},
                {"cross_check", r.cross_check ? Json(*r.cross_check) : Json(nullptr)},
                {"annotations", r.annotations}};
}

inline std::string to_csv(const StrategyResult &r) {
    std::ostringstream os;
    os << "strategy,d,F,f,success,exact_F,exact_f\n";
    os << csv_field(r.strategy_name) << ',' << r.d << ',' << fixed6(r.entanglement_fidelity_F)
       << ',' << fixed6(r.transmission_fidelity_f) << ',' << fixed6(r.success_probability) << ','
       << (r.exact_F ? to_string(*r.exact_F) : "") << ','
       << (r.exact_f ? to_string(*r.exact_f) : "") << '\n';
    return os.str();
}

inline std::string to_table(const StrategyResult &r) {
    std::ostringstream os;
    os << r.strategy_name << "  d=" << r.d << '\n';
    os << "  F = " << fixed6(r.entanglement_fidelity_F);
    if (r.exact_F) {
        os << "  (exact " << to_string(*r.exact_F) << ')';
    }
    os << "\n  f = " << fixed6(r.transmission_fidelity_f);
    if (r.exact_f) {
        os << "  (exact " << to_string(*r.exact_f) << ')';
    }
    os << '\n';
    if (r.cross_check) {
        os << "  full-state check = " << fixed6(*r.cross_check) << '\n';
    }
    for (const auto &a : r.annotations) {
        os << "  note: " << a << '\n';
    }
    return os.str();
}

// --- BoundResult ------------------------------------------------------------

inline Json to_json(const BoundResult &b) {
    Json j{{"kind", "bound"},
           {"label", b.label},
           {"method", b.method},
           {"value", b.value}};
    if (b.exact) {
        j["numerator"] = b.exact->numerator();
        j["denominator"] = b.exact->denominator();
        j["exact"] = to_string(*b.exact);
    }
    if (!b.point.empty()) {
        j["point"] = b.point;
    }
    return j;
}

inline std::string to_csv(const std::vector<BoundResult> &bs) {
    std::ostringstream os;
    os << "label,method,value,exact\n";
    for (const auto &b : bs) {
        os << csv_field(b.label) << ',' << b.method << ',' << fixed6(b.value) << ','
           << (b.exact ? to_string(*b.exact) : "") << '\n';
    }
    return os.str();
}

inline std::string to_table(const std::vector<BoundResult> &bs) {
    std::ostringstream os;
    for (const auto &b : bs) {
        os << b.label << " [" << b.method << "] = " << fixed6(b.value);
        if (b.exact) {
            os << "  (" << to_string(*b.exact) << ')';
        }
        os << '\n';
    }
    return os.str();
}

inline BoundResult exact_bound(std::string label, const Rational &r) {
    return BoundResult{std::move(label), "closed_form", to_double(r), r, {}};
}

} // namespace qrac
