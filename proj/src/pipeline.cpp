#include "punforge/pipeline.hpp"

#include <random>
#include <sstream>

#include <json.hpp>

#include "punforge/checker.hpp"
#include "punforge/realizer.hpp"

namespace punforge {

namespace {

using nlohmann::json;

json binding_to_json(const Binding& b) {
    json j;
    j["kind"] = b.is_chunk() ? "chunk" : "lexemes";
    j["items"] = b.items;
    return j;
}

json instantiation_to_json(const Instantiation& inst) {
    json j;
    j["schema"] = inst.schema;
    j["template"] = inst.template_name;
    j["provenance"] =
        (inst.schema_extrapolated || inst.template_extrapolated) ? "extrapolated" : "paper";
    j["schema_provenance"] = inst.schema_extrapolated ? "extrapolated" : "paper";
    j["template_provenance"] = inst.template_extrapolated ? "extrapolated" : "paper";
    json bindings = json::object();
    for (const auto& [var, b] : inst.bindings) bindings[var] = binding_to_json(b);
    j["bindings"] = bindings;
    json relations = json::object();
    for (const auto& [var, rel] : inst.specialized) relations[var] = to_string(rel);
    j["relations"] = relations;
    json subs = json::array();
    for (const auto& s : inst.substitutions)
        subs.push_back({{"var", s.var},
                        {"original", s.original},
                        {"substitute", s.substitute},
                        {"kind", to_string(s.kind)}});
    j["substitutions"] = subs;
    return j;
}

json riddle_to_json(const Riddle& r, std::size_t position) {
    json j = instantiation_to_json(r.inst);
    j["status"] = "accepted";
    j["index"] = position;  // position in the ranked output, as used by explain --id
    j["surface"] = r.surface;
    j["question"] = r.nsf.question;
    j["answer"] = r.nsf.answer;
    j["punchline"] = r.punchline;
    j["scores"] = {{"question_length_penalty", r.scores.question_length_penalty},
                   {"alliteration", r.scores.alliteration},
                   {"rhyme", r.scores.rhyme},
                   {"funny_letters", r.scores.funny_letters},
                   {"total", r.scores.total}};
    return j;
}

json rejected_to_json(const RejectedCandidate& r) {
    json j = instantiation_to_json(r.inst);
    j["status"] = "rejected";
    j["reason"] = r.reason;
    j["detail"] = r.detail;
    return j;
}

}  // namespace

GenerationResult generate(const GenerationConfig& config, const Lexicon& lexicon,
                          const HomophoneBase& base, const SchemaSet& schemata,
                          const TemplateSet& templates) {
    GenerationResult result;
    int candidate_index = 0;

    for (const auto& np : lexicon.noun_phrases()) {
        if (config.np_filter && np != *config.np_filter) continue;
        const LexicalEntry& np_entry = lexicon.at(np);
        for (const auto& schema : schemata.all()) {
            if (config.schema_filter && schema.name != *config.schema_filter) continue;
            if (np_entry.comp_lex.size() != schema.constituents.size()) continue;
            auto partials = fit_np(schema, np, lexicon, base);
            for (const auto& partial : partials) {
                for (const auto& tpl : templates.all()) {
                    if (config.template_filter && tpl.name != *config.template_filter) continue;
                    if (!template_compatible(tpl, schema)) continue;
                    for (auto& inst : specialize_and_complete(partial, tpl, schema, lexicon)) {
                        CheckVerdict verdict = run_checks(inst, schema, lexicon);
                        if (!verdict.ok()) {
                            if (config.show_rejected) {
                                const std::string reason =
                                    verdict.identity_ok ? "sensible" : "identity";
                                result.rejected.push_back(
                                    {std::move(inst), reason, verdict.reasons.front()});
                            }
                            continue;
                        }
                        Riddle riddle;
                        riddle.inst = std::move(inst);
                        riddle.verdicts = verdict;
                        riddle.generation_index = candidate_index++;
                        try {
                            FillResult filled = fill(tpl, riddle.inst, schema, lexicon);
                            riddle.nsf = std::move(filled.nsf);
                            riddle.punchline = std::move(filled.punchline);
                            riddle.determiners = std::move(filled.determiners);
                        } catch (const RealizeError& e) {
                            if (config.show_rejected)
                                result.rejected.push_back(
                                    {std::move(riddle.inst), "unrealizable", e.what()});
                            continue;
                        }
                        riddle.surface = to_surface(riddle.nsf);
                        riddle.scores = score(riddle, config.weights);
                        result.riddles.push_back(std::move(riddle));
                    }
                }
            }
        }
    }

    rank(result.riddles);
    if (config.score_threshold) {
        std::vector<Riddle> kept;
        for (auto& r : result.riddles)
            if (r.scores.total >= *config.score_threshold) kept.push_back(std::move(r));
        result.riddles = std::move(kept);
    }
    if (config.sample) {
        std::mt19937_64 rng(config.seed);
        std::size_t draws = static_cast<std::size_t>(std::max(1, config.max_riddles.value_or(1)));
        std::vector<Riddle> drawn;
        std::vector<Riddle> pool = std::move(result.riddles);
        while (!pool.empty() && drawn.size() < draws) {
            std::uniform_int_distribution<std::size_t> dist(0, pool.size() - 1);
            std::size_t pick = dist(rng);
            drawn.push_back(std::move(pool[pick]));
            pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
        }
        result.riddles = std::move(drawn);
    } else if (config.max_riddles &&
               result.riddles.size() > static_cast<std::size_t>(*config.max_riddles)) {
        result.riddles.resize(static_cast<std::size_t>(*config.max_riddles));
    }
    return result;
}

std::string explain(const Riddle& riddle) {
    std::ostringstream os;
    os << "riddle: " << riddle.surface << '\n';
    os << "  schema: " << riddle.inst.schema
       << (riddle.inst.schema_extrapolated ? " (extrapolated)" : " (paper)") << '\n';
    os << "  template: " << riddle.inst.template_name
       << (riddle.inst.template_extrapolated ? " (extrapolated)" : " (paper)") << '\n';
    os << "  bindings:\n";
    for (const auto& [var, b] : riddle.inst.bindings)
        os << "    " << var << " = " << b.display() << '\n';
    os << "  relations:\n";
    for (const auto& [var, rel] : riddle.inst.specialized)
        os << "    " << var << " via " << to_string(rel) << '\n';
    for (const auto& s : riddle.inst.substitutions)
        os << "  substitution: " << s.original << " -> " << s.substitute << " ("
           << to_string(s.kind) << ") at " << s.var << '\n';
    os << "  checks: identity " << (riddle.verdicts.identity_ok ? "ok" : "failed")
       << ", sensible " << (riddle.verdicts.sensible_ok ? "ok" : "failed") << '\n';
    os << "  scores: total " << riddle.scores.total << " (alliteration "
       << riddle.scores.alliteration << ", rhyme " << (riddle.scores.rhyme ? "yes" : "no")
       << ", funny_letters " << riddle.scores.funny_letters << ", length_penalty "
       << riddle.scores.question_length_penalty << ")\n";
    return os.str();
}

std::string explain(const RejectedCandidate& rejected) {
    std::ostringstream os;
    os << "rejected (" << rejected.reason << "): " << rejected.detail << '\n';
    os << "  schema: " << rejected.inst.schema << ", template: " << rejected.inst.template_name
       << '\n';
    for (const auto& [var, b] : rejected.inst.bindings)
        os << "    " << var << " = " << b.display() << '\n';
    return os.str();
}

std::string render_text(const GenerationResult& result, bool show_rejected) {
    std::ostringstream os;
    for (const auto& r : result.riddles) os << r.surface << '\n';
    if (show_rejected)
        for (const auto& rej : result.rejected)
            os << "# rejected (" << rej.reason << "): schema " << rej.inst.schema << ", template "
               << rej.inst.template_name << ": " << rej.detail << '\n';
    return os.str();
}

std::string render_records(const GenerationResult& result, bool show_rejected) {
    std::ostringstream os;
    for (std::size_t i = 0; i < result.riddles.size(); ++i)
        os << riddle_to_json(result.riddles[i], i).dump() << '\n';
    if (show_rejected)
        for (const auto& rej : result.rejected) os << rejected_to_json(rej).dump() << '\n';
    return os.str();
}

}  // namespace punforge
