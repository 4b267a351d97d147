#ifndef TDOM_ERRORS_HPP
#define TDOM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tdom {

// Bad arguments, violated preconditions, malformed files.
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Input exceeds a documented size limit of an exact algorithm.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A verified postcondition or internal claim failed; signals a bug,
// never a property of the input.
struct invariant_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Parse failure with the 1-based line number of the offending line.
struct parse_error : input_error {
    int line;
    parse_error(const std::string& msg, int line_no)
        : input_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

}  // namespace tdom

#endif
