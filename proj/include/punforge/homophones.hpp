#ifndef PUNFORGE_HOMOPHONES_HPP
#define PUNFORGE_HOMOPHONES_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "punforge/types.hpp"
#include "punforge/lexicon.hpp"

namespace punforge {

// homonym: same sound, different spelling. alternate: same spelling,
// disjoint meanings. Schema instantiation treats both alike; the kind is
// kept and surfaced in output records.
enum class PairKind { Homonym, Alternate };

const std::string& to_string(PairKind k);

struct HomophonePair {
    LexemeId a;
    LexemeId b;
    PairKind kind = PairKind::Homonym;

    bool operator==(const HomophonePair& o) const { return a == o.a && b == o.b && kind == o.kind; }
};

// Curated list of phonologically identical lexeme pairs. No phonetics are
// computed; identity is asserted by the data.
class HomophoneBase {
public:
    void add(HomophonePair pair);  // throws on a==b or duplicate in either orientation

    const std::vector<HomophonePair>& pairs() const { return pairs_; }

    // Symmetric: y in homophones_of(x) iff x in homophones_of(y). Unknown or
    // unpaired lexemes yield the empty list. Partners are sorted by id.
    const std::vector<std::pair<LexemeId, PairKind>>& homophones_of(const LexemeId& lexeme) const;

    bool empty() const { return pairs_.empty(); }

private:
    std::vector<HomophonePair> pairs_;
    std::map<LexemeId, std::vector<std::pair<LexemeId, PairKind>>> index_;
};

// Parses `pair <homonym|alternate> <a> <b>` lines. Hard errors: unknown
// lexeme, identical members, duplicate pair, and kind/written-form mismatch
// (homonym members must differ in spelling, alternate members must not).
HomophoneBase parse_homophone_base(const std::string& text, const Lexicon& lexicon,
                                   const std::string& source = "<homophones>");

std::string serialize_homophone_base(const HomophoneBase& base);

// Advisory curation lint: members should be nouns or adjectives, not flagged
// abstract; homonym members with identical semantics are spelling variants;
// alternate members must share no populated semantic slot value.
std::vector<Violation> lint_pair(const HomophonePair& pair, const Lexicon& lexicon);

}  // namespace punforge

#endif
