#pragma once

#include <stdexcept>
#include <string>

namespace graphlift {

// Malformed input text. Carries the 1-based line/column of the offending token.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, int line, int col)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " +
                             std::to_string(col) + ")"),
          line_(line), col_(col) {}

    int line() const { return line_; }
    int column() const { return col_; }

private:
    int line_;
    int col_;
};

// Structural violation of a map or certificate (endpoint mismatch etc.).
class validation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A configured size cap would be exceeded.
class resource_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The pair covering is nontrivial, so the transitivity formula does not exist.
class gamma_undefined_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace graphlift
