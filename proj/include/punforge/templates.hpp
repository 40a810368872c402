#ifndef PUNFORGE_TEMPLATES_HPP
#define PUNFORGE_TEMPLATES_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "punforge/schema.hpp"
#include "punforge/types.hpp"

namespace punforge {

// How a slot's binding becomes text:
//   entity      - noun phrase with determiner agreement ("a sheep")
//   entity_bare - noun phrase, no determiner ("pig", after "kind of")
//   adjective   - bare adjective; must precede an entity placeholder, the
//                 pair realizes as one noun phrase ("a quirky quantifier")
//   verb_can    - "that can" + infinitive ("that can leap")
//   verb_you    - "you" + second-person form ("you ignore")
//   verb_inf    - bare infinitive (after a skeleton auxiliary)
//   chunk       - pass a chunk slot value through unchanged
enum class FragmentRole { Entity, EntityBare, Adjective, VerbCan, VerbYou, VerbInf, ChunkText };

const std::string& to_string(FragmentRole r);

struct SlotSpec {
    std::vector<Relation> allowed;
    FragmentRole role = FragmentRole::Entity;
};

struct Template {
    std::string name;
    std::set<std::string> compatible_schemata;
    std::vector<SlotSpec> slots;               // one per schema question slot
    std::vector<std::string> question_skeleton;  // tokens; "{n}" marks slot n's fragment
    std::vector<std::string> answer_skeleton;    // tokens; exactly one "{punchline}"
    bool extrapolated = false;
};

class TemplateSet {
public:
    void add(Template tpl);
    const Template& at(const std::string& name) const;
    const Template* find(const std::string& name) const;
    const std::vector<Template>& all() const { return templates_; }  // file order

private:
    std::vector<Template> templates_;
};

TemplateSet parse_templates(const std::string& text, const std::string& source = "<templates>");

// A fully specified joke underpinning: every variable bound, every
// characteristic link fixed to a relation.
struct Instantiation {
    std::string schema;
    std::string template_name;
    bool schema_extrapolated = false;
    bool template_extrapolated = false;
    std::map<std::string, Binding> bindings;
    std::vector<std::pair<std::string, Relation>> specialized;  // char var -> relation, slot order
    std::vector<PartialInstantiation::Substitution> substitutions;

    // Canonical form covering schema, template, bindings, and specialized
    // relations; substitution records are derived metadata and excluded.
    std::string canonical_key() const;
};

bool template_compatible(const Template& tpl, const Schema& schema);

// Fixes each characteristic link to one of the template's allowed relations
// and binds the characteristic variables from the lexicon; one result per
// combination of relation choices and values (relations in label order,
// values in slot-line order). Empty when some slot has no populated
// relation. Throws on template/schema incompatibility.
std::vector<Instantiation> specialize_and_complete(const PartialInstantiation& partial,
                                                   const Template& tpl, const Schema& schema,
                                                   const Lexicon& lexicon);

}  // namespace punforge

#endif
