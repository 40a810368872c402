#include "punforge/realizer.hpp"

#include <cctype>
#include <sstream>

namespace punforge {

namespace {

const LexicalEntry& entry_for(const Lexicon& lexicon, const LexemeId& id) {
    const LexicalEntry* e = lexicon.find(id);
    if (!e) throw RealizeError("unknown lexeme '" + id + "'");
    return *e;
}

struct NounPhrasePart {
    Chunk tokens;
    LexemeId first_lexeme;  // supplies vowel_start for the determiner
    LexemeId head_lexeme;   // supplies countability
};

// Noun-phrase core without a determiner: a single noun/np lexeme, or a
// modifier + noun sequence (from spec_is_class). Adjectives alone do not
// head a noun phrase.
NounPhrasePart entity_core(const Binding& binding, const Lexicon& lexicon) {
    if (binding.is_chunk() || binding.items.empty())
        throw RealizeError("entity fragment wants a lexeme sequence");
    if (binding.items.size() > 2)
        throw RealizeError("entity fragment wants at most two lexemes");
    NounPhrasePart part;
    part.first_lexeme = binding.items.front();
    part.head_lexeme = binding.items.back();
    const LexicalEntry& head = entry_for(lexicon, part.head_lexeme);
    if (head.category != Category::Noun && head.category != Category::Np)
        throw RealizeError("entity fragment head '" + part.head_lexeme + "' is not a noun");
    for (const auto& id : binding.items) {
        const LexicalEntry& e = entry_for(lexicon, id);
        if (e.category == Category::Verb)
            throw RealizeError("verb '" + id + "' cannot modify an entity fragment");
        part.tokens.insert(part.tokens.end(), e.written_form.begin(), e.written_form.end());
    }
    return part;
}

const LexicalEntry& single_lexeme(const Binding& binding, Category wanted, const char* role,
                                  const Lexicon& lexicon) {
    if (binding.is_chunk() || binding.items.size() != 1)
        throw RealizeError(std::string(role) + " fragment wants a single lexeme");
    const LexicalEntry& e = entry_for(lexicon, binding.items[0]);
    if (e.category != wanted)
        throw RealizeError(std::string(role) + " fragment wants a " + to_string(wanted) +
                           ", got '" + e.lexeme + "'");
    return e;
}

DeterminerChoice determiner_for(const NounPhrasePart& part, const Lexicon& lexicon) {
    const LexicalEntry& head = entry_for(lexicon, part.head_lexeme);
    const LexicalEntry& first = entry_for(lexicon, part.first_lexeme);
    if (!head.countable)
        throw RealizeError("countability of '" + head.lexeme + "' is unknown");
    DeterminerChoice choice;
    choice.first_lexeme = first.lexeme;
    if (!*head.countable) return choice;  // uncountable: no determiner
    if (!first.vowel_start)
        throw RealizeError("missing vowel_start on '" + first.lexeme + "'");
    choice.vowel_start = *first.vowel_start;
    choice.determiner = choice.vowel_start ? "an" : "a";
    return choice;
}

}  // namespace

Chunk realize_fragment(const Binding& binding, FragmentRole role, const Lexicon& lexicon) {
    switch (role) {
        case FragmentRole::Entity: {
            NounPhrasePart part = entity_core(binding, lexicon);
            DeterminerChoice det = determiner_for(part, lexicon);
            Chunk out;
            if (!det.determiner.empty()) out.push_back(det.determiner);
            out.insert(out.end(), part.tokens.begin(), part.tokens.end());
            return out;
        }
        case FragmentRole::EntityBare:
            return entity_core(binding, lexicon).tokens;
        case FragmentRole::Adjective:
            return single_lexeme(binding, Category::Adj, "adjective", lexicon).written_form;
        case FragmentRole::VerbCan: {
            const auto& verb = single_lexeme(binding, Category::Verb, "verb_can", lexicon);
            Chunk out{"that", "can"};
            out.insert(out.end(), verb.written_form.begin(), verb.written_form.end());
            return out;
        }
        case FragmentRole::VerbYou: {
            const auto& verb = single_lexeme(binding, Category::Verb, "verb_you", lexicon);
            if (!verb.second)
                throw RealizeError("verb '" + verb.lexeme + "' lacks a second-person form");
            Chunk out{"you"};
            out.insert(out.end(), verb.second->begin(), verb.second->end());
            return out;
        }
        case FragmentRole::VerbInf:
            return single_lexeme(binding, Category::Verb, "verb_inf", lexicon).written_form;
        case FragmentRole::ChunkText:
            if (!binding.is_chunk()) throw RealizeError("chunk fragment wants a chunk value");
            return binding.items;
    }
    throw RealizeError("unhandled fragment role");
}

FillResult fill(const Template& tpl, const Instantiation& inst, const Schema& schema,
                const Lexicon& lexicon) {
    if (inst.template_name != tpl.name)
        throw std::invalid_argument("instantiation was specialized for template '" +
                                    inst.template_name + "'");

    auto slot_binding = [&](std::size_t slot) -> const Binding& {
        const auto& var = schema.question_slots.at(slot);
        auto it = inst.bindings.find(var);
        if (it == inst.bindings.end())
            throw RealizeError("characteristic variable '" + var + "' is unbound");
        return it->second;
    };
    auto placeholder_of = [](const std::string& token) -> int {
        if (token.size() < 3 || token.front() != '{' || token.back() != '}') return 0;
        int value = 0;
        for (std::size_t i = 1; i + 1 < token.size(); ++i) {
            if (!isdigit(static_cast<unsigned char>(token[i]))) return 0;
            value = value * 10 + (token[i] - '0');
        }
        return value;
    };

    FillResult result;
    Chunk& q = result.nsf.question;
    for (std::size_t i = 0; i < tpl.question_skeleton.size(); ++i) {
        const std::string& token = tpl.question_skeleton[i];
        int idx = placeholder_of(token);
        if (idx == 0) {
            q.push_back(token);
            continue;
        }
        const SlotSpec& spec = tpl.slots[idx - 1];
        if (spec.role == FragmentRole::Adjective) {
            // Adjective + entity realize together as one noun phrase with a
            // single determiner chosen from the adjective's vowel_start and
            // the entity head's countability.
            int next_idx = i + 1 < tpl.question_skeleton.size()
                               ? placeholder_of(tpl.question_skeleton[i + 1])
                               : 0;
            if (next_idx == 0 || tpl.slots[next_idx - 1].role != FragmentRole::Entity)
                throw RealizeError("adjective fragment is not followed by an entity");
            const auto& adj =
                single_lexeme(slot_binding(idx - 1), Category::Adj, "adjective", lexicon);
            NounPhrasePart part = entity_core(slot_binding(next_idx - 1), lexicon);
            part.first_lexeme = adj.lexeme;
            DeterminerChoice det = determiner_for(part, lexicon);
            result.determiners.push_back(det);
            if (!det.determiner.empty()) q.push_back(det.determiner);
            q.insert(q.end(), adj.written_form.begin(), adj.written_form.end());
            q.insert(q.end(), part.tokens.begin(), part.tokens.end());
            ++i;  // the entity placeholder is consumed
            continue;
        }
        if (spec.role == FragmentRole::Entity) {
            NounPhrasePart part = entity_core(slot_binding(idx - 1), lexicon);
            DeterminerChoice det = determiner_for(part, lexicon);
            result.determiners.push_back(det);
            if (!det.determiner.empty()) q.push_back(det.determiner);
            q.insert(q.end(), part.tokens.begin(), part.tokens.end());
            continue;
        }
        Chunk fragment = realize_fragment(slot_binding(idx - 1), spec.role, lexicon);
        q.insert(q.end(), fragment.begin(), fragment.end());
    }

    // Punchline: concatenated written forms of the recipe variables, with a
    // determiner agreed to the head's countability and the first word's
    // vowel_start (the substituted homophone's, where one was substituted).
    NounPhrasePart punch;
    for (std::size_t i = 0; i < schema.punchline_recipe.size(); ++i) {
        auto it = inst.bindings.find(schema.punchline_recipe[i]);
        if (it == inst.bindings.end() || it->second.is_chunk() || it->second.items.size() != 1)
            throw RealizeError("punchline variable '" + schema.punchline_recipe[i] +
                               "' is not bound to a single lexeme");
        const LexicalEntry& e = entry_for(lexicon, it->second.items[0]);
        if (i == 0) punch.first_lexeme = e.lexeme;
        punch.head_lexeme = e.lexeme;
        punch.tokens.insert(punch.tokens.end(), e.written_form.begin(), e.written_form.end());
    }
    result.punchline = punch.tokens;
    DeterminerChoice det = determiner_for(punch, lexicon);
    result.determiners.push_back(det);
    Chunk& a = result.nsf.answer;
    if (!det.determiner.empty()) a.push_back(det.determiner);
    a.insert(a.end(), punch.tokens.begin(), punch.tokens.end());
    a.push_back(".");
    return result;
}

std::string to_surface(const NearSurfaceForm& nsf) {
    auto render = [](const Chunk& tokens) {
        std::string out;
        for (const auto& tok : tokens) {
            bool punct = (tok == "?" || tok == "." || tok == "," || tok == "!");
            if (!out.empty() && !punct) out += ' ';
            out += tok;
        }
        if (!out.empty()) out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
        return out;
    };
    std::string q = render(nsf.question);
    std::string a = render(nsf.answer);
    if (q.empty()) return a;
    if (a.empty()) return q;
    return q + " " + a;
}

}  // namespace punforge
