#include <algorithm>
#include <charconv>
#include <map>
#include <string>
#include <vector>

#include "fca/context.hpp"
#include "fca/errors.hpp"

namespace fca {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    return lines;
}

std::string_view trim(std::string_view s) {
    constexpr std::string_view ws = " \t\r\v\f";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

bool is_blank(std::string_view s) { return trim(s).empty(); }

std::string at_line(std::size_t line) { return "line " + std::to_string(line) + ": "; }

std::optional<std::size_t> parse_count(std::string_view s) {
    s = trim(s);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

// One CSV record; double-quoted fields may contain commas and "" escapes.
std::vector<std::string> split_csv_record(std::string_view line, std::size_t line_no) {
    std::vector<std::string> cells;
    std::string cell;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cell += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cell += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            cells.push_back(std::move(cell));
            cell.clear();
        } else {
            cell += ch;
        }
    }
    if (quoted) throw ParseError(ParseErrc::MalformedRow, line_no, at_line(line_no) + "unterminated quoted field");
    cells.push_back(std::move(cell));
    for (auto& c : cells) c = std::string(trim(c));
    return cells;
}

}  // namespace

FormalContext parse_cxt(std::string_view text) {
    const auto lines = split_lines(text);
    std::size_t at = 0;
    auto next_line = [&]() -> std::optional<std::string_view> {
        if (at >= lines.size()) return std::nullopt;
        return lines[at++];
    };

    const auto magic = next_line();
    if (!magic || trim(*magic) != "B")
        throw ParseError(ParseErrc::MalformedHeader, 1, "line 1: expected 'B' (Burmeister format)");
    // Context name line, normally blank.
    if (!next_line()) throw ParseError(ParseErrc::MalformedHeader, 2, "line 2: truncated header");

    std::size_t dims[2] = {0, 0};
    for (std::size_t& dim : dims) {
        const auto line = next_line();
        const std::size_t line_no = at;
        if (!line) throw ParseError(ParseErrc::MalformedHeader, line_no, at_line(line_no) + "truncated header");
        const auto value = parse_count(*line);
        if (!value)
            throw ParseError(ParseErrc::MalformedHeader, line_no,
                             at_line(line_no) + "expected a non-negative count, got '" + std::string(*line) + "'");
        dim = *value;
    }
    const std::size_t n_obj = dims[0];
    const std::size_t n_attr = dims[1];

    while (at < lines.size() && is_blank(lines[at])) ++at;

    auto read_names = [&](std::size_t count, const char* what) {
        std::vector<std::string> names;
        names.reserve(count);
        for (std::size_t i = 0; i < count; ++i) {
            const auto line = next_line();
            if (!line)
                throw ParseError(ParseErrc::DimensionMismatch, at,
                                 "expected " + std::to_string(count) + " " + what + " names, found " +
                                     std::to_string(i));
            names.emplace_back(trim(*line));
        }
        return names;
    };
    auto objects = read_names(n_obj, "object");
    auto attributes = read_names(n_attr, "attribute");

    std::vector<AttrSet> rows;
    rows.reserve(n_obj);
    for (std::size_t g = 0; g < n_obj; ++g) {
        const auto line = next_line();
        const std::size_t line_no = at;
        if (!line) {
            if (n_attr == 0) {
                rows.emplace_back(0);
                continue;
            }
            throw ParseError(ParseErrc::DimensionMismatch, line_no,
                             "expected " + std::to_string(n_obj) + " incidence rows, found " + std::to_string(g));
        }
        const std::string_view cells = trim(*line);
        if (cells.size() != n_attr)
            throw ParseError(ParseErrc::DimensionMismatch, line_no,
                             at_line(line_no) + "row has " + std::to_string(cells.size()) + " cells, expected " +
                                 std::to_string(n_attr));
        AttrSet row(n_attr);
        for (std::size_t m = 0; m < n_attr; ++m) {
            const char c = cells[m];
            if (c == 'X' || c == 'x')
                row.insert(m);
            else if (c != '.')
                throw IllegalCellError(c, g, m, line_no);
        }
        rows.push_back(std::move(row));
    }
    for (; at < lines.size(); ++at)
        if (!is_blank(lines[at]))
            throw ParseError(ParseErrc::DimensionMismatch, at + 1, at_line(at + 1) + "unexpected content after rows");

    try {
        return FormalContext(std::move(objects), std::move(attributes), std::move(rows));
    } catch (const ParseError& e) {
        throw ParseError(e.code(), 0, std::string("cxt: ") + e.what());
    }
}

FormalContext parse_csv(std::string_view text) {
    const auto lines = split_lines(text);
    std::size_t at = 0;
    while (at < lines.size() && is_blank(lines[at])) ++at;
    if (at >= lines.size()) throw ParseError(ParseErrc::MalformedHeader, 1, "csv: missing header row");

    const auto header = split_csv_record(lines[at], at + 1);
    ++at;
    std::vector<std::string> attributes(header.begin() + 1, header.end());

    std::vector<std::string> objects;
    std::vector<AttrSet> rows;
    for (; at < lines.size(); ++at) {
        const std::size_t line_no = at + 1;
        if (is_blank(lines[at])) continue;
        const auto cells = split_csv_record(lines[at], line_no);
        if (cells.size() != header.size())
            throw ParseError(ParseErrc::MalformedRow, line_no,
                             at_line(line_no) + "expected " + std::to_string(header.size()) + " cells, found " +
                                 std::to_string(cells.size()));
        AttrSet row(attributes.size());
        for (std::size_t m = 0; m < attributes.size(); ++m) {
            const std::string& cell = cells[m + 1];
            if (cell == "1")
                row.insert(m);
            else if (!cell.empty() && cell != "0")
                throw ParseError(ParseErrc::NonBinaryCell, line_no,
                                 at_line(line_no) + "non-binary cell '" + cell + "' in column " +
                                     std::to_string(m + 2));
        }
        objects.push_back(cells[0]);
        rows.push_back(std::move(row));
    }
    return FormalContext(std::move(objects), std::move(attributes), std::move(rows));
}

FormalContext parse_fimi(std::string_view text) {
    auto lines = split_lines(text);

    std::vector<std::vector<std::uint64_t>> transactions;
    transactions.reserve(lines.size());
    std::map<std::uint64_t, std::size_t> item_index;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::vector<std::uint64_t> items;
        std::string_view rest = lines[i];
        while (true) {
            const auto b = rest.find_first_not_of(" \t\r\v\f");
            if (b == std::string_view::npos) break;
            rest.remove_prefix(b);
            const auto e = std::min(rest.find_first_of(" \t\r\v\f"), rest.size());
            const std::string_view token = rest.substr(0, e);
            std::uint64_t item = 0;
            const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), item);
            if (ec != std::errc{} || ptr != token.data() + token.size())
                throw ParseError(ParseErrc::MalformedRow, i + 1,
                                 at_line(i + 1) + "item '" + std::string(token) + "' is not a non-negative integer");
            items.push_back(item);
            item_index.emplace(item, 0);
            rest.remove_prefix(e);
        }
        transactions.push_back(std::move(items));
    }

    std::vector<std::string> attributes;
    attributes.reserve(item_index.size());
    for (auto& [item, index] : item_index) {
        index = attributes.size();
        attributes.push_back(std::to_string(item));
    }
    std::vector<std::string> objects;
    std::vector<AttrSet> rows;
    objects.reserve(transactions.size());
    rows.reserve(transactions.size());
    for (std::size_t g = 0; g < transactions.size(); ++g) {
        AttrSet row(attributes.size());
        for (auto item : transactions[g]) row.insert(item_index.at(item));
        objects.push_back(std::to_string(g + 1));
        rows.push_back(std::move(row));
    }
    return FormalContext(std::move(objects), std::move(attributes), std::move(rows));
}

std::string serialize_cxt(const FormalContext& ctx) {
    std::string out = "B\n\n";
    out += std::to_string(ctx.num_objects()) + "\n";
    out += std::to_string(ctx.num_attributes()) + "\n\n";
    for (const auto& name : ctx.object_names()) out += name + "\n";
    for (const auto& name : ctx.attribute_names()) out += name + "\n";
    for (std::size_t g = 0; g < ctx.num_objects(); ++g) {
        for (std::size_t m = 0; m < ctx.num_attributes(); ++m)
            out += ctx.incident(ObjectId{g}, AttributeId{m}) ? 'X' : '.';
        out += '\n';
    }
    return out;
}

}  // namespace fca
