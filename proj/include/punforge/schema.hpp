#ifndef PUNFORGE_SCHEMA_HPP
#define PUNFORGE_SCHEMA_HPP

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "punforge/homophones.hpp"
#include "punforge/lexicon.hpp"
#include "punforge/types.hpp"

namespace punforge {

// A schema is a variable graph: key variables are filled from the noun
// phrase and the homophone base; characteristic variables wait for a
// template to fix their relation.
struct Schema {
    struct CharLink {
        std::string char_var;
        std::string source_var;
    };

    std::string name;
    std::vector<std::string> variables;               // declaration order
    std::set<std::string> char_vars;
    std::string np_var;
    std::vector<std::string> constituents;            // word variables, in phrase order
    std::vector<std::pair<std::string, std::string>> homophone_links;
    std::vector<std::pair<std::string, std::string>> identity_links;
    std::vector<CharLink> char_links;                 // exactly one per characteristic variable
    std::vector<std::string> punchline_recipe;
    std::vector<std::string> question_slots;          // characteristic variables, slot order
    bool extrapolated = false;

    bool is_key(const std::string& var) const { return char_vars.count(var) == 0; }
    const CharLink& char_link_for(const std::string& char_var) const;
};

class SchemaSet {
public:
    void add(Schema schema);
    const Schema& at(const std::string& name) const;
    const Schema* find(const std::string& name) const;
    const std::vector<Schema>& all() const { return schemata_; }  // file order

private:
    std::vector<Schema> schemata_;
};

SchemaSet parse_schemata(const std::string& text, const std::string& source = "<schemata>");

// Key-variable bindings for one homophone choice; characteristic variables
// are still open.
struct PartialInstantiation {
    std::string schema;
    std::map<std::string, Binding> bindings;

    struct Substitution {
        std::string var;       // the homophone-bound variable
        LexemeId original;     // the constituent it substitutes
        LexemeId substitute;
        PairKind kind;
    };
    std::vector<Substitution> substitutions;
};

// Fits a noun phrase into the schema: binds the np variable, constituents
// from comp_lex, identity-linked variables, and one result per choice of
// homophone partner. No satisfying homophone yields an empty list; a
// comp_lex/constituents arity mismatch throws.
std::vector<PartialInstantiation> fit_np(const Schema& schema, const LexemeId& np,
                                         const Lexicon& lexicon, const HomophoneBase& base);

}  // namespace punforge

#endif
