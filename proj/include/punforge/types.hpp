#ifndef PUNFORGE_TYPES_HPP
#define PUNFORGE_TYPES_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace punforge {

// A lexeme names one meaning of a word or phrase; ids look like "jumper_1".
using LexemeId = std::string;

// Near-surface text fragment: ordered lowercase word tokens.
using Chunk = std::vector<std::string>;

enum class Category { Np, Noun, Adj, Verb };

// Lexical relations a characteristic link may specialize to. SpecIsClass is
// the one derived label: the [spec_is, class] pair read as a two-lexeme
// sequence.
enum class Relation {
    Class,
    SpecIs,
    Is,
    Has,
    ActVerb,
    ActObj,
    InactVerb,
    Location,
    UsedTo,
    UsedToObj,
    Synonym,
    DescribesAll,
    SpecIsClass,
};

// Relations whose slot holds a chunk of text rather than a lexeme.
bool relation_is_chunk_valued(Relation r);

const std::string& to_string(Relation r);
const std::string& to_string(Category c);
std::optional<Relation> relation_from_string(const std::string& name);
std::optional<Category> category_from_string(const std::string& name);

// A value bound to a schema variable: either a lexeme sequence (usually
// length one; length two only via spec_is_class) or a text chunk.
struct Binding {
    enum class Kind { Lexemes, ChunkText };

    Kind kind = Kind::Lexemes;
    std::vector<std::string> items;

    static Binding lexeme(LexemeId id) { return {Kind::Lexemes, {std::move(id)}}; }
    static Binding lexemes(std::vector<LexemeId> ids) { return {Kind::Lexemes, std::move(ids)}; }
    static Binding chunk(Chunk c) { return {Kind::ChunkText, std::move(c)}; }

    bool is_chunk() const { return kind == Kind::ChunkText; }
    bool operator==(const Binding& o) const { return kind == o.kind && items == o.items; }
    std::string display() const;
};

// Parse/validation failure located in an input document.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string source, int line, const std::string& message);
    const std::string& source() const { return source_; }
    int line() const { return line_; }

private:
    std::string source_;
    int line_;
};

// One validation or lint finding. Advisory findings do not abort a parse but
// count against `punforge validate`.
struct Violation {
    std::string where;
    std::string message;
    bool advisory = false;
};

std::string join_tokens(const Chunk& tokens);
Chunk split_tokens(const std::string& text);

}  // namespace punforge

#endif
