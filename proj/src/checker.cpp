#include "punforge/checker.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace punforge {

namespace {

// Union-find over identity-linked variables; only variables in the same
// class may share a binding.
std::map<std::string, std::string> identity_classes(const Schema& schema) {
    std::map<std::string, std::string> parent;
    for (const auto& v : schema.variables) parent[v] = v;
    std::function<std::string(const std::string&)> root = [&](const std::string& v) {
        return parent[v] == v ? v : parent[v] = root(parent[v]);
    };
    for (const auto& [u, v] : schema.identity_links) parent[root(u)] = root(v);
    std::map<std::string, std::string> out;
    for (const auto& v : schema.variables) out[v] = root(v);
    return out;
}

}  // namespace

bool check_identity(const Instantiation& inst, const Schema& schema) {
    auto cls = identity_classes(schema);
    std::vector<std::pair<std::string, Binding>> bound(inst.bindings.begin(), inst.bindings.end());
    for (std::size_t i = 0; i < bound.size(); ++i) {
        for (std::size_t j = i + 1; j < bound.size(); ++j) {
            if (!(bound[i].second == bound[j].second)) continue;
            auto ci = cls.find(bound[i].first);
            auto cj = cls.find(bound[j].first);
            bool exempt = ci != cls.end() && cj != cls.end() && ci->second == cj->second;
            if (!exempt) return false;
        }
    }
    return true;
}

Chunk punchline_tokens(const Instantiation& inst, const Schema& schema, const Lexicon& lexicon) {
    Chunk out;
    for (const auto& var : schema.punchline_recipe) {
        auto it = inst.bindings.find(var);
        if (it == inst.bindings.end() || it->second.is_chunk() || it->second.items.size() != 1)
            throw std::invalid_argument("punchline variable '" + var + "' is unbound");
        const auto& wf = lexicon.at(it->second.items[0]).written_form;
        out.insert(out.end(), wf.begin(), wf.end());
    }
    return out;
}

bool check_sensible(const Instantiation& inst, const Schema& schema, const Lexicon& lexicon) {
    Chunk tokens = punchline_tokens(inst, schema, lexicon);
    if (!is_genuine_np(tokens, lexicon)) return true;

    // A genuine spelling is still a joke when the construction swapped in
    // alternate-meaning lexemes: same text, different entries. Anything
    // else (no substitution, or a homonym landing on a real phrase) is a
    // sensible question-answer pair.
    auto np_it = inst.bindings.find(schema.np_var);
    if (np_it == inst.bindings.end() || np_it->second.items.size() != 1) return false;
    const LexicalEntry& np = lexicon.at(np_it->second.items[0]);
    if (np.comp_lex.size() != schema.punchline_recipe.size()) return false;

    int alternate_subs = 0;
    for (std::size_t i = 0; i < schema.punchline_recipe.size(); ++i) {
        const auto& var = schema.punchline_recipe[i];
        const LexemeId& bound = inst.bindings.at(var).items[0];
        if (bound == np.comp_lex[i]) continue;
        bool alternate = false;
        for (const auto& sub : inst.substitutions) {
            if (sub.var == var && sub.original == np.comp_lex[i] && sub.substitute == bound &&
                sub.kind == PairKind::Alternate)
                alternate = true;
        }
        if (!alternate) return false;
        ++alternate_subs;
    }
    return alternate_subs >= 1;
}

CheckVerdict run_checks(const Instantiation& inst, const Schema& schema, const Lexicon& lexicon) {
    CheckVerdict verdict;
    verdict.identity_ok = check_identity(inst, schema);
    if (!verdict.identity_ok)
        verdict.reasons.push_back("distinct variables bind the same lexeme without an identity link");
    verdict.sensible_ok = check_sensible(inst, schema, lexicon);
    if (!verdict.sensible_ok)
        verdict.reasons.push_back("punchline builds a genuine noun phrase");
    return verdict;
}

}  // namespace punforge
