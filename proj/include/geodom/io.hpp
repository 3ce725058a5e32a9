#pragma once

// Line-oriented reader shared by the text file formats. Blank lines and
// everything after '#' are ignored; tokens are whitespace separated.

#include <istream>
#include <string>
#include <vector>

#include "geodom/exactnum.hpp"

namespace geodom::io {

struct Token {
    std::string text;
    int column = 0;
};

struct Line {
    int number = 0;
    std::vector<Token> tokens;

    const std::string& keyword() const { return tokens.front().text; }
    std::size_t size() const { return tokens.size(); }
};

std::vector<Line> read_lines(std::istream& in);
std::vector<Line> read_file(const std::string& path);

[[noreturn]] void fail(const Line& line, std::size_t token, const std::string& msg);
void expect_size(const Line& line, std::size_t count);

QuadNum quad_at(const Line& line, std::size_t token);
Rational rational_at(const Line& line, std::size_t token);
long integer_at(const Line& line, std::size_t token);

}  // namespace geodom::io
