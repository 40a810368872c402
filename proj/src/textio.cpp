#include "textio.hpp"

#include <cctype>
#include <stdexcept>

namespace punforge::textio {

std::vector<Line> read_lines(const std::string& text) {
    std::vector<Line> out;
    std::string current;
    int number = 1;
    auto flush = [&]() {
        auto hash = current.find('#');
        if (hash != std::string::npos) current.erase(hash);
        std::size_t begin = current.find_first_not_of(" \t\r");
        std::size_t end = current.find_last_not_of(" \t\r");
        if (begin == std::string::npos)
            out.push_back({number, ""});
        else
            out.push_back({number, current.substr(begin, end - begin + 1)});
        current.clear();
        ++number;
    };
    for (char c : text) {
        if (c == '\n')
            flush();
        else
            current.push_back(c);
    }
    if (!current.empty()) flush();
    return out;
}

std::vector<std::string> fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool in_field = false;
    bool quoted = false;
    for (char c : line) {
        if (quoted) {
            if (c == '"') {
                out.push_back(cur);
                cur.clear();
                quoted = false;
                in_field = false;
            } else {
                cur.push_back(c);
            }
        } else if (c == '"') {
            if (in_field) {
                out.push_back(cur);
                cur.clear();
            }
            quoted = true;
            in_field = false;
        } else if (c == ' ' || c == '\t') {
            if (in_field) {
                out.push_back(cur);
                cur.clear();
                in_field = false;
            }
        } else {
            cur.push_back(c);
            in_field = true;
        }
    }
    if (quoted) throw std::invalid_argument("unterminated quote");
    if (in_field) out.push_back(cur);
    return out;
}

std::vector<std::string> fields(const Line& line, const std::string& source) {
    try {
        return fields(line.text);
    } catch (const std::invalid_argument& e) {
        throw punforge::ParseError(source, line.number, e.what());
    }
}

bool is_identifier(const std::string& s) {
    if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s) {
        if (!std::islower(static_cast<unsigned char>(c)) &&
            !std::isdigit(static_cast<unsigned char>(c)) && c != '_')
            return false;
    }
    return true;
}

bool is_lower_token(const std::string& s) {
    if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s) {
        if (!std::islower(static_cast<unsigned char>(c)) &&
            !std::isdigit(static_cast<unsigned char>(c)) && c != '\'' && c != '-')
            return false;
    }
    return true;
}

}  // namespace punforge::textio
