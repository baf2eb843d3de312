#pragma once

#include <cctype>
#include <istream>
#include <string>
#include <vector>

#include "graphlift/errors.hpp"

namespace graphlift::detail {

struct Token {
    std::string text;
    int col = 0;
};

struct Line {
    int number = 0;
    std::vector<Token> tokens;
};

// `#` comments to end of line, ASCII whitespace separation, blank lines
// dropped.
inline std::vector<Line> tokenize(std::istream& in) {
    std::vector<Line> out;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto pos = raw.find('#'); pos != std::string::npos) raw.resize(pos);
        Line line{lineno, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            if (std::isspace(static_cast<unsigned char>(raw[i]))) {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
            line.tokens.push_back({raw.substr(i, j - i), static_cast<int>(i) + 1});
            i = j;
        }
        if (!line.tokens.empty()) out.push_back(std::move(line));
    }
    return out;
}

[[noreturn]] inline void fail(const std::string& msg, const Line& line, int tok_idx) {
    int col = 1;
    if (!line.tokens.empty()) {
        if (tok_idx < static_cast<int>(line.tokens.size()))
            col = line.tokens[tok_idx].col;
        else
            col = line.tokens.back().col + static_cast<int>(line.tokens.back().text.size());
    }
    throw parse_error(msg, line.number, col);
}

inline void expect_arity(const Line& line, int n) {
    if (static_cast<int>(line.tokens.size()) != n)
        fail("wrong number of tokens on line", line,
             std::min<int>(n, static_cast<int>(line.tokens.size())));
}

inline bool valid_identifier(const std::string& s) {
    if (s.empty() || s.size() > 64) return false;
    for (char c : s) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' ||
              c == '+' || c == '-'))
            return false;
    }
    return true;
}

} // namespace graphlift::detail
