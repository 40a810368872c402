#ifndef PUNFORGE_CHECKER_HPP
#define PUNFORGE_CHECKER_HPP

#include <string>
#include <vector>

#include "punforge/lexicon.hpp"
#include "punforge/schema.hpp"
#include "punforge/templates.hpp"

namespace punforge {

struct CheckVerdict {
    bool identity_ok = true;
    bool sensible_ok = true;
    std::vector<std::string> reasons;  // non-empty iff a check failed

    bool ok() const { return identity_ok && sensible_ok; }
};

// True iff no two distinct variables bind equal values unless an identity
// link (transitively) joins them. Rejects "cross a sheep and a jumper".
bool check_identity(const Instantiation& inst, const Schema& schema);

// True unless the punchline builds a genuine noun phrase. A punchline that
// matches the original comp_lex up to alternate-meaning substitutions (at
// least one) is exempt: textually identical, semantically distinct.
bool check_sensible(const Instantiation& inst, const Schema& schema, const Lexicon& lexicon);

CheckVerdict run_checks(const Instantiation& inst, const Schema& schema, const Lexicon& lexicon);

// Bare punchline tokens implied by the instantiation's recipe bindings.
Chunk punchline_tokens(const Instantiation& inst, const Schema& schema, const Lexicon& lexicon);

}  // namespace punforge

#endif
