// Copyright 2026 The loqsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <stdexcept>

#include "loqsim/harness.hpp"

namespace loqsim::harness {

void write_csv(std::ostream &out, const Table &table) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        out << (i ? "," : "") << table.columns[i];
    }
    out << '\n';
    for (const auto &row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            if (row[i].is_string()) {
                const auto &text = row[i].get_ref<const std::string &>();
                if (text.find_first_of(",\"\n") == std::string::npos) {
                    out << text;
                } else {
                    out << '"';
                    for (char ch : text) out << (ch == '"' ? "\"\"" : std::string(1, ch));
                    out << '"';
                }
            } else {
                out << row[i].dump();
            }
        }
        out << '\n';
    }
}

void write_json(std::ostream &out, const Table &table, const ExperimentConfig &config) {
    nlohmann::json j;
    j["config"] = to_json(config);
    j["columns"] = table.columns;
    j["rows"] = table.rows;
    j["summary"] = table.summary;
    out << j.dump(2) << '\n';
}

void emit(const Table &table, const ExperimentConfig &config) {
    if (config.format != "csv" && config.format != "json") {
        throw std::invalid_argument("format must be csv or json");
    }
    std::ofstream file;
    if (!config.out.empty()) {
        file.open(config.out);
        if (!file) throw std::runtime_error("cannot open " + config.out + " for writing");
    }
    std::ostream &out = config.out.empty() ? std::cout : file;
    if (config.format == "csv") {
        write_csv(out, table);
    } else {
        write_json(out, table, config);
    }
}

}  // namespace loqsim::harness
