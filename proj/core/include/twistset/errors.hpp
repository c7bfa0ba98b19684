#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace twistset {

// Raised when an operation would materialize (or enumerate) more work than
// the caller's budget allows.  `needed` is the amount that would have been
// required; `needed_overflows` marks counts that do not fit in 64 bits.
struct budget_error : std::runtime_error {
    std::uint64_t needed = 0;
    bool needed_overflows = false;

    budget_error(const std::string& what, std::uint64_t needed_, bool overflows = false)
        : std::runtime_error(what), needed(needed_), needed_overflows(overflows) {}
};

// Raised by the text front-ends (formula parser, proof scripts, store files).
struct parse_error : std::runtime_error {
    int line = 0;  // 1-based; 0 when the input is a single line
    int column = 0;

    parse_error(const std::string& what, int line_, int column_)
        : std::runtime_error(what), line(line_), column(column_) {}
};

// Raised when a formula cannot be evaluated in the requested context
// (unbound variable, unknown constant, wrong semantics for `=>`, ...).
struct eval_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace twistset
