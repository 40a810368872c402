#ifndef PUNFORGE_PIPELINE_HPP
#define PUNFORGE_PIPELINE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "punforge/homophones.hpp"
#include "punforge/lexicon.hpp"
#include "punforge/schema.hpp"
#include "punforge/scorer.hpp"
#include "punforge/templates.hpp"

namespace punforge {

struct GenerationConfig {
    std::optional<LexemeId> np_filter;
    std::optional<std::string> schema_filter;
    std::optional<std::string> template_filter;
    std::uint64_t seed = 0;
    bool sample = false;
    std::optional<int> max_riddles;
    std::optional<double> score_threshold;
    bool show_rejected = false;
    ScoreWeights weights;
};

struct RejectedCandidate {
    Instantiation inst;
    std::string reason;  // "identity", "sensible", or "unrealizable"
    std::string detail;
};

struct GenerationResult {
    std::vector<Riddle> riddles;              // ranked
    std::vector<RejectedCandidate> rejected;  // only populated with show_rejected
};

// Runs the whole pipeline: iterate noun phrases in id order (then schemata
// and templates in file order), fit, specialize, check, realize, score,
// rank, filter. Deterministic: equal inputs give identical output.
GenerationResult generate(const GenerationConfig& config, const Lexicon& lexicon,
                          const HomophoneBase& base, const SchemaSet& schemata,
                          const TemplateSet& templates);

// Human-readable derivation trace: bindings, chosen relations, check
// verdicts, score components, provenance.
std::string explain(const Riddle& riddle);
std::string explain(const RejectedCandidate& rejected);

// Output renderers used by the CLI. `records` is one JSON object per line.
std::string render_text(const GenerationResult& result, bool show_rejected);
std::string render_records(const GenerationResult& result, bool show_rejected);

}  // namespace punforge

#endif
