#include "geodom/io.hpp"

#include <fstream>
#include <sstream>

namespace geodom::io {

std::vector<Line> read_lines(std::istream& in) {
    std::vector<Line> out;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
        Line line;
        line.number = number;
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            if (i >= raw.size()) break;
            std::size_t start = i;
            while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            line.tokens.push_back({raw.substr(start, i - start), static_cast<int>(start) + 1});
        }
        if (!line.tokens.empty()) out.push_back(std::move(line));
    }
    return out;
}

std::vector<Line> read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    return read_lines(in);
}

void fail(const Line& line, std::size_t token, const std::string& msg) {
    int column = token < line.tokens.size() ? line.tokens[token].column : 1;
    throw ParseError(msg, line.number, column);
}

void expect_size(const Line& line, std::size_t count) {
    if (line.size() != count)
        fail(line, std::min(count, line.size()),
             "'" + line.keyword() + "' expects " + std::to_string(count - 1) + " argument(s)");
}

QuadNum quad_at(const Line& line, std::size_t token) {
    if (token >= line.size()) fail(line, token, "missing number");
    try {
        return exactnum::parse_quad(line.tokens[token].text);
    } catch (const ParseError& e) {
        throw ParseError(e.what(), line.number, line.tokens[token].column + e.column() - 1);
    } catch (const ArithmeticError& e) {
        fail(line, token, e.what());
    }
}

Rational rational_at(const Line& line, std::size_t token) {
    QuadNum v = quad_at(line, token);
    if (!v.is_rational()) fail(line, token, "expected a rational number");
    return v.rat();
}

long integer_at(const Line& line, std::size_t token) {
    if (token >= line.size()) fail(line, token, "missing integer");
    const std::string& t = line.tokens[token].text;
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(t, &used);
    } catch (const std::exception&) {
        fail(line, token, "expected an integer, got '" + t + "'");
    }
    if (used != t.size()) fail(line, token, "expected an integer, got '" + t + "'");
    return v;
}

}  // namespace geodom::io
