#include "punforge/templates.hpp"

#include <algorithm>
#include <sstream>

#include "textio.hpp"

namespace punforge {

namespace {

using textio::fields;

std::optional<FragmentRole> role_from_string(const std::string& name) {
    if (name == "entity") return FragmentRole::Entity;
    if (name == "entity_bare") return FragmentRole::EntityBare;
    if (name == "adjective") return FragmentRole::Adjective;
    if (name == "verb_can") return FragmentRole::VerbCan;
    if (name == "verb_you") return FragmentRole::VerbYou;
    if (name == "verb_inf") return FragmentRole::VerbInf;
    if (name == "chunk") return FragmentRole::ChunkText;
    return std::nullopt;
}

// "{3}" -> 3; anything else -> 0.
int placeholder_index(const std::string& token) {
    if (token.size() < 3 || token.front() != '{' || token.back() != '}') return 0;
    int value = 0;
    for (std::size_t i = 1; i + 1 < token.size(); ++i) {
        if (!isdigit(static_cast<unsigned char>(token[i]))) return 0;
        value = value * 10 + (token[i] - '0');
    }
    return value;
}

void validate_template(const Template& t, const std::string& source, int line) {
    auto fail = [&](const std::string& msg) { throw ParseError(source, line, msg); };
    if (t.slots.empty()) fail("template '" + t.name + "' declares no slots");
    if (t.question_skeleton.empty()) fail("template '" + t.name + "' lacks a question");
    if (t.answer_skeleton.empty()) fail("template '" + t.name + "' lacks an answer");
    if (t.compatible_schemata.empty()) fail("template '" + t.name + "' lists no schemata");

    std::vector<int> seen(t.slots.size(), 0);
    for (const auto& tok : t.question_skeleton) {
        if (tok.find('{') == std::string::npos) {
            if (tok != "?" && tok != "." && tok != "," && !textio::is_lower_token(tok))
                fail("skeleton token '" + tok + "' is not a lowercase word");
            continue;
        }
        int idx = placeholder_index(tok);
        if (idx < 1 || idx > static_cast<int>(t.slots.size()))
            fail("question placeholder '" + tok + "' does not name a declared slot");
        ++seen[idx - 1];
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (seen[i] != 1)
            fail("slot " + std::to_string(i + 1) + " must appear exactly once in the question");
    if (t.question_skeleton.back() != "?") fail("question must end with '?'");

    int punchlines = 0;
    for (const auto& tok : t.answer_skeleton) {
        if (tok == "{punchline}") ++punchlines;
        else if (tok.find('{') != std::string::npos)
            fail("unknown answer placeholder '" + tok + "'");
    }
    if (punchlines != 1) fail("answer must contain exactly one {punchline}");
    if (t.answer_skeleton.back() != ".") fail("answer must end with '.'");

    for (std::size_t i = 0; i < t.slots.size(); ++i) {
        if (t.slots[i].allowed.empty())
            fail("slot " + std::to_string(i + 1) + " allows no relations");
        // An adjective fragment only makes sense glued onto a following
        // entity; enforce the adjacency here so fill can rely on it.
        if (t.slots[i].role == FragmentRole::Adjective) {
            bool ok = false;
            for (std::size_t k = 0; k + 1 < t.question_skeleton.size(); ++k) {
                if (placeholder_index(t.question_skeleton[k]) == static_cast<int>(i + 1)) {
                    int next = placeholder_index(t.question_skeleton[k + 1]);
                    ok = next >= 1 && t.slots[next - 1].role == FragmentRole::Entity;
                }
            }
            if (!ok)
                fail("adjective slot " + std::to_string(i + 1) +
                     " must immediately precede an entity slot in the question");
        }
    }
}

}  // namespace

const std::string& to_string(FragmentRole r) {
    static const std::string names[] = {"entity",   "entity_bare", "adjective", "verb_can",
                                        "verb_you", "verb_inf",    "chunk"};
    return names[static_cast<int>(r)];
}

void TemplateSet::add(Template tpl) {
    if (find(tpl.name)) throw std::invalid_argument("duplicate template: " + tpl.name);
    templates_.push_back(std::move(tpl));
}

const Template& TemplateSet::at(const std::string& name) const {
    const Template* t = find(name);
    if (!t) throw std::invalid_argument("unknown template: " + name);
    return *t;
}

const Template* TemplateSet::find(const std::string& name) const {
    for (const auto& t : templates_)
        if (t.name == name) return &t;
    return nullptr;
}

TemplateSet parse_templates(const std::string& text, const std::string& source) {
    TemplateSet set;
    Template current;
    bool open = false;
    int open_line = 0;

    auto finish = [&]() {
        if (!open) return;
        validate_template(current, source, open_line);
        try {
            set.add(std::move(current));
        } catch (const std::invalid_argument& e) {
            throw ParseError(source, open_line, e.what());
        }
        current = Template{};
        open = false;
    };

    for (const auto& line : textio::read_lines(text)) {
        if (line.text.empty()) continue;
        auto f = fields(line, source);
        const std::string& key = f[0];
        if (key == "template") {
            finish();
            if (f.size() != 2) throw ParseError(source, line.number, "expected 'template <name>'");
            current.name = f[1];
            open = true;
            open_line = line.number;
            continue;
        }
        if (!open) throw ParseError(source, line.number, "expected 'template <name>' first");
        if (key == "schemata") {
            if (f.size() < 2) throw ParseError(source, line.number, "empty schemata list");
            current.compatible_schemata.insert(f.begin() + 1, f.end());
        } else if (key == "slot") {
            if (f.size() < 4) throw ParseError(source, line.number, "malformed slot line");
            int idx = 0;
            try {
                idx = std::stoi(f[1]);
            } catch (...) {
                throw ParseError(source, line.number, "slot index must be a number");
            }
            if (idx < 1 || idx > 8)
                throw ParseError(source, line.number, "slot index out of range");
            if (static_cast<int>(current.slots.size()) < idx) current.slots.resize(idx);
            SlotSpec& spec = current.slots[idx - 1];
            if (f[2] == "allow") {
                std::string joined;
                for (std::size_t k = 3; k < f.size(); ++k) joined += f[k];
                std::istringstream is(joined);
                std::string rel_name;
                while (std::getline(is, rel_name, '|')) {
                    auto rel = relation_from_string(rel_name);
                    if (!rel)
                        throw ParseError(source, line.number,
                                         "unknown relation label '" + rel_name + "'");
                    spec.allowed.push_back(*rel);
                }
                if (spec.allowed.empty())
                    throw ParseError(source, line.number, "slot allows no relations");
            } else if (f[2] == "role") {
                auto role = role_from_string(f[3]);
                if (!role)
                    throw ParseError(source, line.number, "unknown fragment role '" + f[3] + "'");
                spec.role = *role;
            } else {
                throw ParseError(source, line.number, "expected 'slot <n> allow|role ...'");
            }
        } else if (key == "question") {
            if (f.size() != 2) throw ParseError(source, line.number, "question wants one quoted string");
            current.question_skeleton = split_tokens(f[1]);
        } else if (key == "answer") {
            if (f.size() != 2) throw ParseError(source, line.number, "answer wants one quoted string");
            current.answer_skeleton = split_tokens(f[1]);
        } else if (key == "provenance") {
            if (f.size() != 2 || (f[1] != "paper" && f[1] != "extrapolated"))
                throw ParseError(source, line.number, "expected 'provenance paper|extrapolated'");
            current.extrapolated = (f[1] == "extrapolated");
        } else {
            throw ParseError(source, line.number, "unknown template directive '" + key + "'");
        }
    }
    finish();
    return set;
}

std::string Instantiation::canonical_key() const {
    std::ostringstream os;
    os << schema << '|' << template_name;
    for (const auto& [var, binding] : bindings) os << '|' << var << '=' << binding.display();
    for (const auto& [var, rel] : specialized) os << '|' << var << ':' << to_string(rel);
    return os.str();
}

bool template_compatible(const Template& tpl, const Schema& schema) {
    return tpl.compatible_schemata.count(schema.name) != 0 &&
           tpl.slots.size() == schema.question_slots.size();
}

std::vector<Instantiation> specialize_and_complete(const PartialInstantiation& partial,
                                                   const Template& tpl, const Schema& schema,
                                                   const Lexicon& lexicon) {
    if (schema.name != partial.schema)
        throw std::invalid_argument("partial instantiation does not belong to schema " +
                                    schema.name);
    if (!template_compatible(tpl, schema))
        throw std::invalid_argument("template '" + tpl.name + "' is not compatible with schema '" +
                                    schema.name + "'");

    // Candidate (relation, value) pairs per slot: relations in label order,
    // values in slot-line order.
    std::vector<std::vector<std::pair<Relation, Binding>>> options(tpl.slots.size());
    for (std::size_t i = 0; i < tpl.slots.size(); ++i) {
        const auto& char_var = schema.question_slots[i];
        const auto& source_var = schema.char_link_for(char_var).source_var;
        auto it = partial.bindings.find(source_var);
        if (it == partial.bindings.end()) return {};
        const Binding& source = it->second;
        if (source.is_chunk() || source.items.size() != 1) return {};

        std::vector<Relation> relations = tpl.slots[i].allowed;
        std::sort(relations.begin(), relations.end(),
                  [](Relation a, Relation b) { return to_string(a) < to_string(b); });
        for (Relation rel : relations)
            for (const auto& value : relation_values(lexicon, source.items[0], rel))
                options[i].emplace_back(rel, value);
        if (options[i].empty()) return {};
    }

    std::vector<Instantiation> out;
    std::vector<std::size_t> pick(tpl.slots.size(), 0);
    while (true) {
        Instantiation inst;
        inst.schema = schema.name;
        inst.template_name = tpl.name;
        inst.schema_extrapolated = schema.extrapolated;
        inst.template_extrapolated = tpl.extrapolated;
        inst.bindings = partial.bindings;
        inst.substitutions = partial.substitutions;
        for (std::size_t i = 0; i < pick.size(); ++i) {
            const auto& [rel, value] = options[i][pick[i]];
            inst.bindings[schema.question_slots[i]] = value;
            inst.specialized.emplace_back(schema.question_slots[i], rel);
        }
        out.push_back(std::move(inst));

        std::size_t level = pick.size();
        while (level > 0) {
            --level;
            if (++pick[level] < options[level].size()) break;
            pick[level] = 0;
            if (level == 0) return out;
        }
    }
}

}  // namespace punforge
