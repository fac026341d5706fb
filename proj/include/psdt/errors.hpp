#pragma once

#include <stdexcept>
#include <string>

namespace psdt {

// Raised when an exact search is asked to run past its configured size cap.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Raised by the text-format parsers; line is 1-based, 0 when not applicable.
struct ParseError : std::runtime_error {
    int line;
    ParseError(const std::string& what, int line_no = 0)
        : std::runtime_error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + what
                                         : what),
          line(line_no) {}
};

}  // namespace psdt
