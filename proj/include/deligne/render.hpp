#pragma once

// Plain-text table layout and number formatting shared by the CLI and the
// golden outputs. Column widths count Unicode codepoints, not bytes, so that
// labels like ⟨a+b⟩ line up.

#include <cstdio>
#include <string>
#include <vector>

namespace deligne {

inline std::size_t utf8_length(const std::string& s) {
    std::size_t n = 0;
    for (unsigned char c : s)
        if ((c & 0xC0) != 0x80) ++n;
    return n;
}

// fixed 8 decimal places with trailing zeros (and a bare point) trimmed, so
// integers print as integers and irrational dims stay reproducible
inline std::string format_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.8f", x);
    std::string s = buf;
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    if (s == "-0") s = "0";
    return s;
}

// rows of cells to aligned text: two-space gutters, left-justified cells,
// trailing whitespace trimmed from every line
inline std::string render_grid(const std::vector<std::vector<std::string>>& rows) {
    std::size_t cols = 0;
    for (const auto& r : rows) cols = std::max(cols, r.size());
    std::vector<std::size_t> width(cols, 0);
    for (const auto& r : rows)
        for (std::size_t c = 0; c < r.size(); ++c)
            width[c] = std::max(width[c], utf8_length(r[c]));
    std::string out;
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t c = 0; c < r.size(); ++c) {
            if (c) line += "  ";
            line += r[c];
            if (c + 1 < r.size()) line.append(width[c] - utf8_length(r[c]), ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line;
        out += '\n';
    }
    return out;
}

// same rows as comma-separated values; cells never contain commas here
inline std::string render_csv(const std::vector<std::vector<std::string>>& rows) {
    std::string out;
    for (const auto& r : rows) {
        for (std::size_t c = 0; c < r.size(); ++c) {
            if (c) out += ',';
            out += r[c];
        }
        out += '\n';
    }
    return out;
}

} // namespace deligne
