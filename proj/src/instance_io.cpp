#include "leontief/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace leontief {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line), column_(column)
{
}

namespace {

struct Token {
    std::string_view text;
    std::size_t column;
};

struct Line {
    std::size_t number;
    std::vector<Token> tokens;
    std::size_t end_column;
};

std::vector<Line> significant_lines(std::string_view text)
{
    std::vector<Line> lines;
    std::size_t number = 0;
    while (!text.empty() || number == 0) {
        ++number;
        const std::size_t nl = text.find('\n');
        std::string_view raw = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

        Line line{number, {}, raw.size() + 1};
        std::size_t i = 0;
        while (i < raw.size()) {
            if (raw[i] == ' ' || raw[i] == '\t') {
                ++i;
                continue;
            }
            std::size_t start = i;
            while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t') ++i;
            line.tokens.push_back({raw.substr(start, i - start), start + 1});
        }
        if (line.tokens.empty() || line.tokens.front().text.front() == '#') continue;
        lines.push_back(std::move(line));
    }
    return lines;
}

class Reader {
public:
    explicit Reader(std::string_view text) : lines_(significant_lines(text)) {}

    const Line& next(const char* expected)
    {
        if (pos_ >= lines_.size()) {
            const std::size_t line = lines_.empty() ? 1 : lines_.back().number + 1;
            throw ParseError(line, 1, std::string("unexpected end of input, expected ") + expected);
        }
        return lines_[pos_++];
    }

    bool at_end() const { return pos_ >= lines_.size(); }
    const Line& peek() const { return lines_[pos_]; }

private:
    std::vector<Line> lines_;
    std::size_t pos_ = 0;
};

void expect_keyword(const Line& line, std::size_t index, std::string_view keyword)
{
    if (index >= line.tokens.size()) {
        throw ParseError(line.number, line.end_column, "expected '" + std::string(keyword) + "'");
    }
    if (line.tokens[index].text != keyword) {
        throw ParseError(line.number, line.tokens[index].column,
                         "expected '" + std::string(keyword) + "', found '" + std::string(line.tokens[index].text) + "'");
    }
}

void expect_count(const Line& line, std::size_t count)
{
    if (line.tokens.size() > count) {
        throw ParseError(line.number, line.tokens[count].column,
                         "unexpected token '" + std::string(line.tokens[count].text) + "'");
    }
    if (line.tokens.size() < count) throw ParseError(line.number, line.end_column, "missing value");
}

std::size_t to_size(const Line& line, std::size_t index, const char* what)
{
    if (index >= line.tokens.size()) throw ParseError(line.number, line.end_column, std::string("missing ") + what);
    const Token& t = line.tokens[index];
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc{} || ptr != t.text.data() + t.text.size()) {
        throw ParseError(line.number, t.column, std::string("invalid ") + what + " '" + std::string(t.text) + "'");
    }
    return value;
}

Rational to_rational(const Line& line, std::size_t index)
{
    const Token& t = line.tokens[index];
    try {
        return parse_rational(t.text);
    } catch (const std::invalid_argument&) {
        throw ParseError(line.number, t.column, "invalid rational '" + std::string(t.text) + "'");
    }
}

RationalVector rational_row(const Line& line, std::string_view keyword, std::size_t count)
{
    expect_keyword(line, 0, keyword);
    expect_count(line, count + 1);
    RationalVector out;
    out.reserve(count);
    for (std::size_t i = 1; i <= count; ++i) out.push_back(to_rational(line, i));
    return out;
}

}  // namespace

Instance parse_instance(std::string_view text)
{
    Reader reader(text);

    const Line& header = reader.next("header");
    expect_keyword(header, 0, "leontief-lp");
    expect_keyword(header, 1, "v1");
    expect_count(header, 2);

    const Line& dims = reader.next("dimensions");
    expect_keyword(dims, 0, "m");
    const std::size_t m = to_size(dims, 1, "row count");
    expect_keyword(dims, 2, "n");
    const std::size_t n = to_size(dims, 3, "column count");
    expect_count(dims, 4);

    RationalVector b = rational_row(reader.next("b"), "b", m);
    RationalVector c = rational_row(reader.next("c"), "c", n);

    const Line& a_line = reader.next("A");
    expect_keyword(a_line, 0, "A");
    const std::size_t nnz = to_size(a_line, 1, "entry count");
    expect_count(a_line, 2);

    std::vector<std::tuple<std::size_t, std::size_t, Rational>> triplets;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t k = 0; k < nnz; ++k) {
        const Line& entry = reader.next("matrix entry");
        if (!entry.tokens.empty() && entry.tokens[0].text == "end") {
            throw ParseError(entry.number, entry.tokens[0].column,
                             "expected " + std::to_string(nnz) + " entries, found " + std::to_string(k));
        }
        expect_count(entry, 3);
        const std::size_t i = to_size(entry, 0, "row index");
        const std::size_t j = to_size(entry, 1, "column index");
        if (i < 1 || i > m) throw ParseError(entry.number, entry.tokens[0].column, "row index out of range");
        if (j < 1 || j > n) throw ParseError(entry.number, entry.tokens[1].column, "column index out of range");
        if (!seen.insert({i, j}).second) {
            throw ParseError(entry.number, entry.tokens[0].column,
                             "duplicate entry (" + std::to_string(i) + ", " + std::to_string(j) + ")");
        }
        triplets.emplace_back(i - 1, j - 1, to_rational(entry, 2));
    }

    const Line& end = reader.next("end");
    expect_keyword(end, 0, "end");
    expect_count(end, 1);
    if (!reader.at_end()) {
        const Line& extra = reader.peek();
        throw ParseError(extra.number, extra.tokens[0].column, "content after 'end'");
    }
    return Instance::from_triplets(m, n, triplets, std::move(b), std::move(c));
}

Instance read_instance(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_instance(buffer.str());
}

std::string emit_instance(const Instance& inst)
{
    std::ostringstream out;
    out << "leontief-lp v1\n";
    out << "m " << inst.m << " n " << inst.n() << "\n";
    out << "b";
    for (const Rational& v : inst.b) out << ' ' << to_string(v);
    out << "\nc";
    for (const Rational& v : inst.c) out << ' ' << to_string(v);
    std::size_t nnz = 0;
    for (const Column& col : inst.columns) nnz += col.size();
    out << "\nA " << nnz << "\n";
    for (std::size_t j = 0; j < inst.n(); ++j) {
        for (const Entry& e : inst.columns[j]) out << e.row + 1 << ' ' << j + 1 << ' ' << to_string(e.value) << "\n";
    }
    out << "end\n";
    return out.str();
}

}  // namespace leontief
