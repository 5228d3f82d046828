#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "eltlab/error.hpp"
#include "eltlab/matrix.hpp"

namespace eltlab {

/// One row per line, entries separated by ", ", trailing newline.
template <LayerRing L>
std::string format_matrix(const BasicMatrix<L>& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ", ";
            out += m(i, j).to_string();
        }
        out += '\n';
    }
    return out;
}

/// `{"rows": r, "cols": c, "entries": [["1^[1]", ...], ...]}`
template <LayerRing L>
std::string format_matrix_json(const BasicMatrix<L>& m) {
    nlohmann::json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["entries"] = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        auto row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
        j["entries"].push_back(row);
    }
    return j.dump() + "\n";
}

namespace detail {

template <LayerRing L>
BasicMatrix<L> from_rows(const std::vector<std::vector<BasicScalar<L>>>& rows) {
    BasicMatrix<L> m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

template <LayerRing L>
BasicMatrix<L> parse_matrix_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.byte ? e.byte - 1 : 0, "malformed JSON matrix");
    }
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw ParseError(0, "JSON matrix needs rows, cols and entries");
    if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned() || !j["entries"].is_array())
        throw ParseError(0, "JSON matrix has ill-typed fields");
    const auto rows = j["rows"].get<std::size_t>(), cols = j["cols"].get<std::size_t>();
    if (rows == 0 || cols == 0 || j["entries"].size() != rows)
        throw ParseError(0, "JSON matrix entries do not match rows");
    BasicMatrix<L> m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const auto& row = j["entries"][r];
        if (!row.is_array() || row.size() != cols) throw ParseError(0, "JSON row " + std::to_string(r) + " has wrong length");
        for (std::size_t c = 0; c < cols; ++c) {
            if (!row[c].is_string()) throw ParseError(0, "JSON entries must be scalar strings");
            m(r, c) = BasicScalar<L>::parse(row[c].get<std::string>());
        }
    }
    return m;
}

}  // namespace detail

/// Parses the line format or, when the first non-blank character is `{`, the
/// JSON variant. Blank lines are skipped. Error positions are offsets into `text`.
template <LayerRing L>
BasicMatrix<L> parse_matrix(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) throw ParseError(0, "empty matrix");
    if (text[first] == '{') return detail::parse_matrix_json<L>(text);

    std::vector<std::vector<BasicScalar<L>>> rows;
    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        const auto nl = text.find('\n', line_start);
        const auto line =
            text.substr(line_start, nl == std::string_view::npos ? std::string_view::npos : nl - line_start);
        if (line.find_first_not_of(" \t\r") != std::string_view::npos) {
            std::vector<BasicScalar<L>> row;
            std::size_t cell = 0;
            while (true) {
                const auto comma = line.find(',', cell);
                const auto raw =
                    line.substr(cell, comma == std::string_view::npos ? std::string_view::npos : comma - cell);
                try {
                    row.push_back(BasicScalar<L>::parse(raw));
                } catch (const ParseError& e) {
                    throw ParseError(line_start + cell + e.position(), "malformed matrix entry");
                }
                if (comma == std::string_view::npos) break;
                cell = comma + 1;
            }
            if (!rows.empty() && row.size() != rows.front().size())
                throw ParseError(line_start, "row length differs from first row");
            rows.push_back(std::move(row));
        }
        if (nl == std::string_view::npos) break;
        line_start = nl + 1;
    }
    return detail::from_rows<L>(rows);
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::InvalidArgument, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace eltlab
