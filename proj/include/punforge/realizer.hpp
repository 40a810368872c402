#ifndef PUNFORGE_REALIZER_HPP
#define PUNFORGE_REALIZER_HPP

#include <string>
#include <vector>

#include "punforge/lexicon.hpp"
#include "punforge/templates.hpp"
#include "punforge/types.hpp"

namespace punforge {

// A candidate that cannot be put into grammatical near-surface form (wrong
// category for the role, missing vowel_start or verb form, unknown
// countability). The pipeline drops such candidates with a trace.
class RealizeError : public std::runtime_error {
public:
    explicit RealizeError(const std::string& message) : std::runtime_error(message) {}
};

struct NearSurfaceForm {
    Chunk question;  // ends with "?"
    Chunk answer;    // ends with "."

    bool operator==(const NearSurfaceForm& o) const {
        return question == o.question && answer == o.answer;
    }
};

// Record of one a/an decision, kept for agreement checks.
struct DeterminerChoice {
    std::string determiner;   // "a", "an", or "" when none
    LexemeId first_lexeme;    // lexeme whose written form starts the fragment
    bool vowel_start = false;
};

Chunk realize_fragment(const Binding& binding, FragmentRole role, const Lexicon& lexicon);

struct FillResult {
    NearSurfaceForm nsf;
    Chunk punchline;  // bare punchline tokens, no determiner
    std::vector<DeterminerChoice> determiners;
};

// Replaces skeleton placeholders with realized fragments and builds the
// answer as determiner + punchline + ".". Adjacent adjective+entity
// placeholders realize as a single noun phrase.
FillResult fill(const Template& tpl, const Instantiation& inst, const Schema& schema,
                const Lexicon& lexicon);

// Pretty-prints a near-surface form: sentence-initial capitals, punctuation
// attached, question and answer separated by one space.
std::string to_surface(const NearSurfaceForm& nsf);

}  // namespace punforge

#endif
