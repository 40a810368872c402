#include "punforge/homophones.hpp"

#include <algorithm>
#include <sstream>

#include "textio.hpp"

namespace punforge {

namespace {

const std::vector<std::pair<LexemeId, PairKind>> kNoPartners;

// Semantic slot values of an entry, flattened for overlap comparison.
std::vector<std::pair<Relation, std::string>> semantic_values(const LexicalEntry& e) {
    std::vector<std::pair<Relation, std::string>> out;
    for (const auto& [rel, id] : e.sem_lexemes) out.emplace_back(rel, id);
    for (const auto& [rel, chunk] : e.sem_chunks) out.emplace_back(rel, join_tokens(chunk));
    return out;
}

}  // namespace

const std::string& to_string(PairKind k) {
    static const std::string homonym = "homonym";
    static const std::string alternate = "alternate";
    return k == PairKind::Homonym ? homonym : alternate;
}

void HomophoneBase::add(HomophonePair pair) {
    if (pair.a == pair.b)
        throw std::invalid_argument("homophone pair links '" + pair.a + "' to itself");
    for (const auto& existing : pairs_) {
        bool same = (existing.a == pair.a && existing.b == pair.b) ||
                    (existing.a == pair.b && existing.b == pair.a);
        if (same)
            throw std::invalid_argument("duplicate homophone pair (" + pair.a + ", " + pair.b + ")");
    }
    index_[pair.a].emplace_back(pair.b, pair.kind);
    index_[pair.b].emplace_back(pair.a, pair.kind);
    for (auto* side : {&index_[pair.a], &index_[pair.b]}) std::sort(side->begin(), side->end());
    pairs_.push_back(std::move(pair));
}

const std::vector<std::pair<LexemeId, PairKind>>& HomophoneBase::homophones_of(
    const LexemeId& lexeme) const {
    auto it = index_.find(lexeme);
    return it == index_.end() ? kNoPartners : it->second;
}

HomophoneBase parse_homophone_base(const std::string& text, const Lexicon& lexicon,
                                   const std::string& source) {
    HomophoneBase base;
    for (const auto& line : textio::read_lines(text)) {
        if (line.text.empty()) continue;
        auto f = textio::fields(line, source);
        if (f[0] != "pair" || f.size() != 4)
            throw ParseError(source, line.number, "expected 'pair <homonym|alternate> <a> <b>'");
        HomophonePair pair;
        if (f[1] == "homonym") pair.kind = PairKind::Homonym;
        else if (f[1] == "alternate") pair.kind = PairKind::Alternate;
        else throw ParseError(source, line.number, "unknown pair kind '" + f[1] + "'");
        pair.a = f[2];
        pair.b = f[3];
        for (const auto& id : {pair.a, pair.b})
            if (!lexicon.contains(id))
                throw ParseError(source, line.number, "unknown lexeme '" + id + "'");
        const auto& wa = lexicon.at(pair.a).written_form;
        const auto& wb = lexicon.at(pair.b).written_form;
        if (pair.kind == PairKind::Homonym && wa == wb)
            throw ParseError(source, line.number,
                             "homonym pair members share a written form; use 'alternate'");
        if (pair.kind == PairKind::Alternate && wa != wb)
            throw ParseError(source, line.number,
                             "alternate pair members differ in written form; use 'homonym'");
        try {
            base.add(std::move(pair));
        } catch (const std::invalid_argument& e) {
            throw ParseError(source, line.number, e.what());
        }
    }
    return base;
}

std::string serialize_homophone_base(const HomophoneBase& base) {
    std::ostringstream os;
    for (const auto& pair : base.pairs())
        os << "pair " << to_string(pair.kind) << ' ' << pair.a << ' ' << pair.b << '\n';
    return os.str();
}

std::vector<Violation> lint_pair(const HomophonePair& pair, const Lexicon& lexicon) {
    std::vector<Violation> out;
    std::string where = "(" + pair.a + ", " + pair.b + ")";
    auto lint = [&](const std::string& msg) { out.push_back({where, msg, true}); };

    const LexicalEntry* ea = lexicon.find(pair.a);
    const LexicalEntry* eb = lexicon.find(pair.b);
    if (!ea || !eb) {
        out.push_back({where, "pair references a lexeme missing from the lexicon", false});
        return out;
    }
    for (const auto* e : {ea, eb}) {
        if (e->category != Category::Noun && e->category != Category::Adj)
            lint("member '" + e->lexeme + "' is neither a noun nor an adjective");
        if (e->abstract_tag.value_or(false))
            lint("member '" + e->lexeme + "' is flagged abstract");
    }
    auto va = semantic_values(*ea);
    auto vb = semantic_values(*eb);
    if (pair.kind == PairKind::Alternate) {
        for (const auto& value : va)
            if (std::find(vb.begin(), vb.end(), value) != vb.end())
                lint("alternate pair entries share a " + to_string(value.first) +
                     " value; entries must be completely different");
    } else if (!va.empty() && va == vb && ea->category == eb->category) {
        lint("entries are identical; likely spelling variants, not homonyms");
    }
    return out;
}

}  // namespace punforge
