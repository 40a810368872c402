#include "punforge/scorer.hpp"

#include <algorithm>
#include <map>

namespace punforge {

namespace {

int common_suffix_length(const std::string& a, const std::string& b) {
    int n = 0;
    while (n < static_cast<int>(std::min(a.size(), b.size())) &&
           a[a.size() - 1 - n] == b[b.size() - 1 - n])
        ++n;
    return n;
}

}  // namespace

ScoreRecord score(const Riddle& riddle, const ScoreWeights& weights) {
    ScoreRecord record;

    int len = static_cast<int>(riddle.nsf.question.size());
    record.question_length_penalty = std::max(0, len - weights.question_len_hi) +
                                     std::max(0, weights.question_len_lo - len);

    const Chunk& words = riddle.punchline;
    if (!words.empty()) {
        std::map<char, int> initials;
        for (const auto& w : words) ++initials[w[0]];
        int best = 0;
        for (const auto& [letter, count] : initials) best = std::max(best, count);
        record.alliteration = static_cast<double>(best) / static_cast<double>(words.size());
    }
    if (words.size() >= 2)
        record.rhyme = common_suffix_length(words[words.size() - 2], words.back()) >= 2;
    for (const auto& w : words)
        for (char c : w)
            if (c == 'k' || c == 'q' || c == 'v' || c == 'w' || c == 'z') ++record.funny_letters;

    record.total = weights.w_alliteration * record.alliteration +
                   weights.w_rhyme * (record.rhyme ? 1.0 : 0.0) +
                   weights.w_funny_letters * record.funny_letters -
                   weights.w_length_penalty * record.question_length_penalty;
    return record;
}

void rank(std::vector<Riddle>& riddles) {
    std::stable_sort(riddles.begin(), riddles.end(),
                     [](const Riddle& a, const Riddle& b) { return a.scores.total > b.scores.total; });
}

}  // namespace punforge
