#include "punforge/lexicon.hpp"

#include <algorithm>
#include <sstream>

#include "textio.hpp"

namespace punforge {

namespace {

using textio::fields;
using textio::is_identifier;
using textio::Line;

enum class SlotType { Bool, ChunkValue, Lexeme, LexemeList };

struct SlotDef {
    const char* name;
    SlotType type;
    bool syntactic;
    std::optional<Relation> relation;  // semantic slots only
    bool np_ok, noun_ok, adj_ok, verb_ok;
};

// Slot inventory and the categories each slot is used with.
const SlotDef kSlots[] = {
    {"vowel_start", SlotType::Bool, true, {}, true, true, true, false},
    {"second", SlotType::ChunkValue, true, {}, false, false, false, true},
    {"third", SlotType::ChunkValue, true, {}, false, false, false, true},
    {"comp_lex", SlotType::LexemeList, true, {}, true, false, false, false},
    {"countable", SlotType::Bool, true, {}, true, true, false, false},
    {"abstract", SlotType::Bool, true, {}, true, true, true, true},
    {"class", SlotType::Lexeme, false, Relation::Class, true, true, false, false},
    {"spec_is", SlotType::Lexeme, false, Relation::SpecIs, true, true, false, false},
    {"is", SlotType::Lexeme, false, Relation::Is, true, true, false, false},
    {"has", SlotType::ChunkValue, false, Relation::Has, true, true, false, false},
    {"act_verb", SlotType::Lexeme, false, Relation::ActVerb, true, true, false, false},
    {"act_obj", SlotType::ChunkValue, false, Relation::ActObj, true, true, false, false},
    {"inact_verb", SlotType::Lexeme, false, Relation::InactVerb, true, true, false, false},
    {"location", SlotType::ChunkValue, false, Relation::Location, true, true, false, false},
    {"used_to", SlotType::Lexeme, false, Relation::UsedTo, true, true, false, false},
    {"used_to_obj", SlotType::ChunkValue, false, Relation::UsedToObj, true, true, false, false},
    {"synonym", SlotType::Lexeme, false, Relation::Synonym, true, true, true, false},
    {"describes_all", SlotType::Lexeme, false, Relation::DescribesAll, false, true, true, false},
};

const SlotDef* slot_def(const std::string& name) {
    for (const auto& def : kSlots)
        if (name == def.name) return &def;
    return nullptr;
}

bool slot_allowed(const SlotDef& def, Category cat) {
    switch (cat) {
        case Category::Np: return def.np_ok;
        case Category::Noun: return def.noun_ok;
        case Category::Adj: return def.adj_ok;
        case Category::Verb: return def.verb_ok;
    }
    return false;
}

bool parse_bool(const std::string& value, const std::string& source, int line) {
    if (value == "yes") return true;
    if (value == "no") return false;
    throw ParseError(source, line, "expected yes/no, got '" + value + "'");
}

Chunk parse_chunk(const std::string& value, const std::string& source, int line) {
    Chunk tokens = split_tokens(value);
    if (tokens.empty()) throw ParseError(source, line, "empty chunk value");
    for (const auto& tok : tokens)
        if (!textio::is_lower_token(tok))
            throw ParseError(source, line, "chunk token '" + tok + "' is not a lowercase word");
    return tokens;
}

}  // namespace

std::vector<LexemeId> LexicalEntry::values_of(Relation r) const {
    std::vector<LexemeId> out;
    for (const auto& [rel, id] : sem_lexemes)
        if (rel == r) out.push_back(id);
    return out;
}

std::vector<Chunk> LexicalEntry::chunks_of(Relation r) const {
    std::vector<Chunk> out;
    for (const auto& [rel, c] : sem_chunks)
        if (rel == r) out.push_back(c);
    return out;
}

bool LexicalEntry::operator==(const LexicalEntry& o) const {
    return lexeme == o.lexeme && category == o.category && written_form == o.written_form &&
           vowel_start == o.vowel_start && countable == o.countable &&
           abstract_tag == o.abstract_tag && second == o.second && third == o.third &&
           comp_lex == o.comp_lex && sem_lexemes == o.sem_lexemes && sem_chunks == o.sem_chunks;
}

void Lexicon::add(LexicalEntry entry) {
    if (entries_.count(entry.lexeme))
        throw std::invalid_argument("duplicate lexeme: " + entry.lexeme);
    if (entry.category == Category::Np) np_index_.insert(entry.written_form);
    entries_.emplace(entry.lexeme, std::move(entry));
}

const LexicalEntry& Lexicon::at(const LexemeId& id) const {
    auto it = entries_.find(id);
    if (it == entries_.end()) throw std::invalid_argument("unknown lexeme: " + id);
    return it->second;
}

const LexicalEntry* Lexicon::find(const LexemeId& id) const {
    auto it = entries_.find(id);
    return it == entries_.end() ? nullptr : &it->second;
}

std::vector<LexemeId> Lexicon::noun_phrases() const {
    std::vector<LexemeId> out;
    for (const auto& [id, entry] : entries_)
        if (entry.category == Category::Np) out.push_back(id);
    return out;
}

Lexicon parse_lexicon(const std::string& text, const std::string& source) {
    Lexicon lexicon;
    std::map<LexemeId, int> record_lines;

    auto lines = textio::read_lines(text);
    std::size_t i = 0;
    while (i < lines.size()) {
        if (lines[i].text.empty()) {
            ++i;
            continue;
        }
        // Record header.
        auto head = fields(lines[i], source);
        int head_line = lines[i].number;
        if (head[0] != "lexeme")
            throw ParseError(source, head_line, "expected 'lexeme <id>' to start a record");
        if (head.size() != 2 || !is_identifier(head[1]))
            throw ParseError(source, head_line, "malformed lexeme id");

        LexicalEntry entry;
        entry.lexeme = head[1];
        bool have_category = false;
        bool have_written = false;
        ++i;
        for (; i < lines.size() && !lines[i].text.empty(); ++i) {
            auto f = fields(lines[i], source);
            int line = lines[i].number;
            const std::string& slot = f[0];
            if (slot == "lexeme")
                throw ParseError(source, line, "records must be separated by a blank line");
            if (f.size() < 2) throw ParseError(source, line, "slot '" + slot + "' has no value");

            if (slot == "category") {
                if (have_category || f.size() != 2)
                    throw ParseError(source, line, "expected one 'category <np|noun|adj|verb>'");
                auto cat = category_from_string(f[1]);
                if (!cat) throw ParseError(source, line, "unknown category '" + f[1] + "'");
                entry.category = *cat;
                have_category = true;
                continue;
            }
            if (slot == "written_form") {
                if (have_written || f.size() != 2)
                    throw ParseError(source, line, "expected one quoted written_form");
                entry.written_form = parse_chunk(f[1], source, line);
                have_written = true;
                continue;
            }
            const SlotDef* def = slot_def(slot);
            if (!def) throw ParseError(source, line, "unknown slot name '" + slot + "'");
            if (def->type != SlotType::LexemeList && f.size() != 2)
                throw ParseError(source, line,
                                 "slot '" + slot + "' wants one value (quote chunk values)");
            switch (def->type) {
                case SlotType::Bool: {
                    bool value = parse_bool(f[1], source, line);
                    std::optional<bool>* target = nullptr;
                    if (slot == "vowel_start") target = &entry.vowel_start;
                    else if (slot == "countable") target = &entry.countable;
                    else target = &entry.abstract_tag;
                    if (target->has_value())
                        throw ParseError(source, line, "duplicate slot '" + slot + "'");
                    *target = value;
                    break;
                }
                case SlotType::ChunkValue: {
                    Chunk value = parse_chunk(f[1], source, line);
                    if (def->syntactic) {
                        auto* target = (slot == "second") ? &entry.second : &entry.third;
                        if (target->has_value())
                            throw ParseError(source, line, "duplicate slot '" + slot + "'");
                        *target = value;
                    } else {
                        entry.sem_chunks.emplace_back(*def->relation, value);
                    }
                    break;
                }
                case SlotType::Lexeme: {
                    if (f.size() != 2 || !is_identifier(f[1]))
                        throw ParseError(source, line, "slot '" + slot + "' expects one lexeme id");
                    entry.sem_lexemes.emplace_back(*def->relation, f[1]);
                    break;
                }
                case SlotType::LexemeList: {
                    if (!entry.comp_lex.empty())
                        throw ParseError(source, line, "duplicate comp_lex");
                    for (std::size_t k = 1; k < f.size(); ++k) {
                        if (!is_identifier(f[k]))
                            throw ParseError(source, line, "bad lexeme id '" + f[k] + "'");
                        entry.comp_lex.push_back(f[k]);
                    }
                    break;
                }
            }
        }
        if (!have_category) throw ParseError(source, head_line, "record lacks a category");
        if (!have_written) throw ParseError(source, head_line, "record lacks a written_form");
        try {
            lexicon.add(std::move(entry));
        } catch (const std::invalid_argument& e) {
            throw ParseError(source, head_line, e.what());
        }
        record_lines[head[1]] = head_line;
    }

    for (const auto& [id, entry] : lexicon.entries()) {
        for (const auto& violation : validate_entry(entry, lexicon)) {
            if (!violation.advisory)
                throw ParseError(source, record_lines[id], violation.message);
        }
    }
    return lexicon;
}

std::string serialize_lexicon(const Lexicon& lexicon) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [id, e] : lexicon.entries()) {
        if (!first) os << '\n';
        first = false;
        os << "lexeme " << id << '\n';
        os << "category " << to_string(e.category) << '\n';
        os << "written_form \"" << join_tokens(e.written_form) << "\"\n";
        if (e.vowel_start) os << "vowel_start " << (*e.vowel_start ? "yes" : "no") << '\n';
        if (e.countable) os << "countable " << (*e.countable ? "yes" : "no") << '\n';
        if (e.abstract_tag) os << "abstract " << (*e.abstract_tag ? "yes" : "no") << '\n';
        if (e.second) os << "second \"" << join_tokens(*e.second) << "\"\n";
        if (e.third) os << "third \"" << join_tokens(*e.third) << "\"\n";
        if (!e.comp_lex.empty()) {
            os << "comp_lex";
            for (const auto& c : e.comp_lex) os << ' ' << c;
            os << '\n';
        }
        for (const auto& [rel, value] : e.sem_lexemes)
            os << to_string(rel) << ' ' << value << '\n';
        for (const auto& [rel, value] : e.sem_chunks)
            os << to_string(rel) << " \"" << join_tokens(value) << "\"\n";
    }
    return os.str();
}

std::vector<Violation> validate_entry(const LexicalEntry& entry, const Lexicon& lexicon) {
    std::vector<Violation> out;
    auto hard = [&](const std::string& msg) { out.push_back({entry.lexeme, msg, false}); };
    auto lint = [&](const std::string& msg) { out.push_back({entry.lexeme, msg, true}); };

    if (entry.written_form.empty()) hard("written_form is empty");

    auto check_slot = [&](const char* name, bool populated) {
        if (!populated) return;
        const SlotDef* def = slot_def(name);
        if (def && !slot_allowed(*def, entry.category))
            hard(std::string("slot '") + name + "' is not used with category " +
                 to_string(entry.category));
    };
    check_slot("vowel_start", entry.vowel_start.has_value());
    check_slot("countable", entry.countable.has_value());
    check_slot("second", entry.second.has_value());
    check_slot("third", entry.third.has_value());
    check_slot("comp_lex", !entry.comp_lex.empty());
    for (const auto& [rel, value] : entry.sem_lexemes) check_slot(to_string(rel).c_str(), true);
    for (const auto& [rel, value] : entry.sem_chunks) check_slot(to_string(rel).c_str(), true);

    if (entry.category == Category::Np) {
        if (entry.comp_lex.empty()) hard("np entry lacks comp_lex");
        if (!entry.countable) hard("np entry lacks countable");
        if (!entry.vowel_start) hard("np entry lacks vowel_start");
    }
    if (!entry.comp_lex.empty() && entry.comp_lex.size() < 2)
        hard("comp_lex must list at least two lexemes");

    // Referential closure.
    auto check_ref = [&](const LexemeId& id, const std::string& via) {
        if (!lexicon.contains(id)) hard("dangling reference to '" + id + "' via " + via);
    };
    for (const auto& id : entry.comp_lex) check_ref(id, "comp_lex");
    for (const auto& [rel, id] : entry.sem_lexemes) check_ref(id, to_string(rel));

    // A lexeme's synonym's synonym is itself.
    for (const auto& id : entry.values_of(Relation::Synonym)) {
        const LexicalEntry* other = lexicon.find(id);
        if (!other) continue;  // reported above
        auto back = other->values_of(Relation::Synonym);
        if (std::find(back.begin(), back.end(), entry.lexeme) == back.end())
            hard("synonym with '" + id + "' is not symmetric");
    }

    if (!entry.comp_lex.empty()) {
        Chunk spelled;
        bool resolvable = true;
        for (const auto& id : entry.comp_lex) {
            const LexicalEntry* part = lexicon.find(id);
            if (!part) {
                resolvable = false;
                break;
            }
            spelled.insert(spelled.end(), part->written_form.begin(), part->written_form.end());
        }
        if (resolvable && spelled != entry.written_form)
            lint("comp_lex written forms do not spell the phrase's written_form");
    }

    if ((entry.category == Category::Noun || entry.category == Category::Adj) &&
        !entry.vowel_start)
        lint("missing vowel_start");
    if (entry.category == Category::Verb && (!entry.second || !entry.third))
        lint("verb lacks second/third person forms");

    return out;
}

std::vector<Binding> relation_values(const Lexicon& lexicon, const LexemeId& lexeme,
                                     Relation relation) {
    const LexicalEntry& entry = lexicon.at(lexeme);
    std::vector<Binding> out;
    if (relation == Relation::SpecIsClass) {
        auto specs = entry.values_of(Relation::SpecIs);
        auto classes = entry.values_of(Relation::Class);
        for (const auto& s : specs)
            for (const auto& c : classes) out.push_back(Binding::lexemes({s, c}));
        return out;
    }
    if (relation_is_chunk_valued(relation)) {
        for (const auto& c : entry.chunks_of(relation)) out.push_back(Binding::chunk(c));
        return out;
    }
    for (const auto& id : entry.values_of(relation)) out.push_back(Binding::lexeme(id));
    return out;
}

std::vector<Binding> relation_values(const Lexicon& lexicon, const LexemeId& lexeme,
                                     const std::string& relation) {
    auto rel = relation_from_string(relation);
    if (!rel) throw std::invalid_argument("unknown relation label: " + relation);
    return relation_values(lexicon, lexeme, *rel);
}

bool is_genuine_np(const Chunk& tokens, const Lexicon& lexicon) {
    return lexicon.np_index().count(tokens) != 0;
}

}  // namespace punforge
