#include "punforge/types.hpp"

#include <array>
#include <sstream>

namespace punforge {

namespace {

const std::array<std::pair<Relation, std::string>, 13> kRelationNames = {{
    {Relation::Class, "class"},
    {Relation::SpecIs, "spec_is"},
    {Relation::Is, "is"},
    {Relation::Has, "has"},
    {Relation::ActVerb, "act_verb"},
    {Relation::ActObj, "act_obj"},
    {Relation::InactVerb, "inact_verb"},
    {Relation::Location, "location"},
    {Relation::UsedTo, "used_to"},
    {Relation::UsedToObj, "used_to_obj"},
    {Relation::Synonym, "synonym"},
    {Relation::DescribesAll, "describes_all"},
    {Relation::SpecIsClass, "spec_is_class"},
}};

const std::array<std::pair<Category, std::string>, 4> kCategoryNames = {{
    {Category::Np, "np"},
    {Category::Noun, "noun"},
    {Category::Adj, "adj"},
    {Category::Verb, "verb"},
}};

}  // namespace

bool relation_is_chunk_valued(Relation r) {
    return r == Relation::Has || r == Relation::ActObj || r == Relation::Location ||
           r == Relation::UsedToObj;
}

const std::string& to_string(Relation r) {
    for (const auto& [rel, name] : kRelationNames)
        if (rel == r) return name;
    throw std::logic_error("unmapped relation");
}

const std::string& to_string(Category c) {
    for (const auto& [cat, name] : kCategoryNames)
        if (cat == c) return name;
    throw std::logic_error("unmapped category");
}

std::optional<Relation> relation_from_string(const std::string& name) {
    for (const auto& [rel, rel_name] : kRelationNames)
        if (rel_name == name) return rel;
    return std::nullopt;
}

std::optional<Category> category_from_string(const std::string& name) {
    for (const auto& [cat, cat_name] : kCategoryNames)
        if (cat_name == name) return cat;
    return std::nullopt;
}

std::string Binding::display() const {
    std::ostringstream os;
    if (kind == Kind::ChunkText) {
        os << '"' << join_tokens(items) << '"';
    } else {
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (i) os << '+';
            os << items[i];
        }
    }
    return os.str();
}

ParseError::ParseError(std::string source, int line, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + message),
      source_(std::move(source)),
      line_(line) {}

std::string join_tokens(const Chunk& tokens) {
    std::string out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i) out += ' ';
        out += tokens[i];
    }
    return out;
}

Chunk split_tokens(const std::string& text) {
    Chunk out;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

}  // namespace punforge
