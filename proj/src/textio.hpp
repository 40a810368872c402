#ifndef PUNFORGE_SRC_TEXTIO_HPP
#define PUNFORGE_SRC_TEXTIO_HPP

#include <string>
#include <vector>

#include "punforge/types.hpp"

namespace punforge::textio {

struct Line {
    int number;        // 1-based
    std::string text;  // comment-stripped, trimmed; may be empty
};

// Splits a document into lines, strips '#' comments and surrounding
// whitespace. Blank lines are kept (they separate records).
std::vector<Line> read_lines(const std::string& text);

// Splits on runs of spaces/tabs. Double-quoted stretches become single
// fields without the quotes ("in the jungle" -> one field). Throws
// std::invalid_argument on an unterminated quote; the Line overload rewraps
// that as a located ParseError.
std::vector<std::string> fields(const std::string& line);
std::vector<std::string> fields(const Line& line, const std::string& source);

bool is_identifier(const std::string& s);     // [a-z][a-z0-9_]*
bool is_lower_token(const std::string& s);    // [a-z][a-z0-9'-]*

}  // namespace punforge::textio

#endif
