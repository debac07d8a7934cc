// SPDX-License-Identifier: Apache-2.0
//
// Minimal RFC 4180 CSV reading and writing (quoted fields, embedded
// separators, quotes and newlines).

#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace symmine {

inline std::string csv_escape(std::string_view field) {
    const bool needs_quotes =
        field.find_first_of(",\"\r\n") != std::string_view::npos;
    if (!needs_quotes) return std::string(field);
    std::string out;
    out.reserve(field.size() + 2);
    out.push_back('"');
    for (char c : field) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

inline void write_csv_row(std::ostream& os, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) os << ',';
        os << csv_escape(fields[i]);
    }
    os << '\n';
}

// Streaming record reader. A record may span several physical lines when a
// quoted field contains newlines.
class CsvReader {
public:
    explicit CsvReader(std::istream& in) : in_(in) {}

    // Reads the next record into `fields`. Returns false at end of input.
    // Throws std::runtime_error on malformed quoting.
    bool next_record(std::vector<std::string>& fields);

    // 1-based index of the first physical line of the last record read.
    std::size_t record_line() const { return record_line_; }

private:
    std::istream& in_;
    std::size_t line_ = 0;
    std::size_t record_line_ = 0;
};

inline bool CsvReader::next_record(std::vector<std::string>& fields) {
    fields.clear();
    std::string field;
    bool in_quotes = false;
    bool any_input = false;

    std::string line;
    while (std::getline(in_, line)) {
        ++line_;
        if (!any_input) record_line_ = line_;
        any_input = true;
        if (!line.empty() && line.back() == '\r') line.pop_back();

        std::size_t i = 0;
        while (i < line.size()) {
            const char c = line[i];
            if (in_quotes) {
                if (c == '"') {
                    if (i + 1 < line.size() && line[i + 1] == '"') {
                        field.push_back('"');
                        ++i;
                    } else {
                        in_quotes = false;
                    }
                } else {
                    field.push_back(c);
                }
            } else if (c == '"' && field.empty()) {
                in_quotes = true;
            } else if (c == ',') {
                fields.push_back(std::move(field));
                field.clear();
            } else {
                field.push_back(c);
            }
            ++i;
        }
        if (!in_quotes) {
            fields.push_back(std::move(field));
            return true;
        }
        field.push_back('\n'); // quoted newline
    }
    if (in_quotes)
        throw std::runtime_error("csv: unterminated quoted field starting at line " +
                                 std::to_string(record_line_));
    return any_input ? (fields.push_back(std::move(field)), true) : false;
}

} // namespace symmine
