#pragma once

// Report rendering: markdown, CSV (RFC 4180) and JSON. A report is a list of
// titled tables plus free-form findings; all emitters are deterministic.

#include <nlohmann/json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"

namespace gacodes {

struct Table {
    std::string title;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> notes;

    void add_row(std::vector<std::string> r) {
        detail::require(r.size() == columns.size(), "Table::add_row: width mismatch in '" + title + "'");
        rows.push_back(std::move(r));
    }
};

struct Report {
    std::string command;
    std::vector<std::string> summary;   // one-line facts shown above the tables
    std::vector<Table> tables;
    std::vector<std::string> findings;  // disagreements with printed tables; never failures
    nlohmann::json data;                // structured payload for the JSON format
};

enum class Format { Markdown, Csv, Json };

inline Format parse_format(const std::string& s) {
    if (s == "md" || s == "markdown") return Format::Markdown;
    if (s == "csv") return Format::Csv;
    if (s == "json") return Format::Json;
    throw ParseError("unknown format '" + s + "' (expected json, csv or md)");
}

namespace detail {

inline std::string md_cell(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '|') out += "\\|";
        else if (c == '\n') out += ' ';
        else out += c;
    }
    return out;
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

inline void csv_line(std::ostringstream& os, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_field(cells[i]);
    os << "\r\n";
}

}  // namespace detail

inline std::string to_markdown(const Report& r) {
    std::ostringstream os;
    os << "# " << r.command << "\n\n";
    for (const auto& s : r.summary) os << "- " << s << "\n";
    if (!r.summary.empty()) os << "\n";
    for (const auto& t : r.tables) {
        os << "## " << t.title << "\n\n";
        os << "|";
        for (const auto& c : t.columns) os << " " << detail::md_cell(c) << " |";
        os << "\n|";
        for (std::size_t i = 0; i < t.columns.size(); ++i) os << "---|";
        os << "\n";
        for (const auto& row : t.rows) {
            os << "|";
            for (const auto& c : row) os << " " << detail::md_cell(c) << " |";
            os << "\n";
        }
        for (const auto& n : t.notes) os << "\n> " << n << "\n";
        os << "\n";
    }
    os << "## findings\n\n";
    if (r.findings.empty()) os << "none\n";
    for (const auto& f : r.findings) os << "- " << f << "\n";
    return os.str();
}

/// One CSV block per table, blocks separated by an empty record; the first record of each
/// block is (table, <title>), then the header row.
inline std::string to_csv(const Report& r) {
    std::ostringstream os;
    bool first = true;
    auto block = [&](const std::string& title, const std::vector<std::string>& cols,
                     const std::vector<std::vector<std::string>>& rows) {
        if (!first) os << "\r\n";
        first = false;
        detail::csv_line(os, {"table", title});
        detail::csv_line(os, cols);
        for (const auto& row : rows) detail::csv_line(os, row);
    };
    std::vector<std::vector<std::string>> summary;
    for (const auto& s : r.summary) summary.push_back({s});
    block("summary", {"fact"}, summary);
    for (const auto& t : r.tables) block(t.title, t.columns, t.rows);
    std::vector<std::vector<std::string>> findings;
    for (const auto& f : r.findings) findings.push_back({f});
    block("findings", {"finding"}, findings);
    return os.str();
}

/// {"command", "summary", "tables": [{"title", "columns", "rows", "notes"}], "findings", "data"}
inline std::string to_json_text(const Report& r) {
    nlohmann::json j;
    j["command"] = r.command;
    j["summary"] = r.summary;
    j["tables"] = nlohmann::json::array();
    for (const auto& t : r.tables)
        j["tables"].push_back({{"title", t.title}, {"columns", t.columns}, {"rows", t.rows}, {"notes", t.notes}});
    j["findings"] = r.findings;
    j["data"] = r.data.is_null() ? nlohmann::json::object() : r.data;
    return j.dump(2) + "\n";
}

inline std::string render(const Report& r, Format f) {
    switch (f) {
        case Format::Markdown: return to_markdown(r);
        case Format::Csv: return to_csv(r);
        case Format::Json: return to_json_text(r);
    }
    return {};
}

}  // namespace gacodes
