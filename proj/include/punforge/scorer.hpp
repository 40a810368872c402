#ifndef PUNFORGE_SCORER_HPP
#define PUNFORGE_SCORER_HPP

#include <string>
#include <vector>

#include "punforge/checker.hpp"
#include "punforge/realizer.hpp"
#include "punforge/templates.hpp"
#include "punforge/types.hpp"

namespace punforge {

struct ScoreWeights {
    double w_alliteration = 1.0;
    double w_rhyme = 1.0;
    double w_funny_letters = 0.5;
    double w_length_penalty = 0.25;
    int question_len_lo = 6;
    int question_len_hi = 14;
};

struct ScoreRecord {
    int question_length_penalty = 0;
    double alliteration = 0.0;  // in [0,1]
    bool rhyme = false;
    int funny_letters = 0;
    double total = 0.0;
};

struct Riddle {
    Instantiation inst;
    NearSurfaceForm nsf;
    std::string surface;
    Chunk punchline;
    CheckVerdict verdicts;
    ScoreRecord scores;
    std::vector<DeterminerChoice> determiners;
    int generation_index = 0;
};

// Heuristic quality features: length penalty outside [len_lo, len_hi]
// (counting every question token), alliteration share of the punchline,
// rhyme of its last two words, and occurrences of k/q/v/w/z. Never rejects.
ScoreRecord score(const Riddle& riddle, const ScoreWeights& weights);

// Stable descending sort by total; ties keep generation order.
void rank(std::vector<Riddle>& riddles);

}  // namespace punforge

#endif
