#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "punforge/checker.hpp"
#include "punforge/homophones.hpp"
#include "punforge/lexicon.hpp"
#include "punforge/pipeline.hpp"
#include "punforge/realizer.hpp"
#include "punforge/report.hpp"
#include "punforge/schema.hpp"
#include "punforge/templates.hpp"

namespace py = pybind11;
using namespace punforge;

namespace {

py::dict binding_dict(const Binding& b) {
    py::dict d;
    d["kind"] = b.is_chunk() ? "chunk" : "lexemes";
    d["items"] = b.items;
    return d;
}

py::dict riddle_dict(const Riddle& r) {
    py::dict d;
    d["surface"] = r.surface;
    d["question"] = r.nsf.question;
    d["answer"] = r.nsf.answer;
    d["punchline"] = r.punchline;
    d["schema"] = r.inst.schema;
    d["template"] = r.inst.template_name;
    d["provenance"] = (r.inst.schema_extrapolated || r.inst.template_extrapolated)
                          ? "extrapolated"
                          : "paper";
    py::dict bindings;
    for (const auto& [var, b] : r.inst.bindings) bindings[py::str(var)] = binding_dict(b);
    d["bindings"] = bindings;
    py::dict relations;
    for (const auto& [var, rel] : r.inst.specialized) relations[py::str(var)] = to_string(rel);
    d["relations"] = relations;
    py::dict scores;
    scores["total"] = r.scores.total;
    scores["alliteration"] = r.scores.alliteration;
    scores["rhyme"] = r.scores.rhyme;
    scores["funny_letters"] = r.scores.funny_letters;
    scores["question_length_penalty"] = r.scores.question_length_penalty;
    d["scores"] = scores;
    return d;
}

py::dict rejected_dict(const RejectedCandidate& r) {
    py::dict d;
    d["schema"] = r.inst.schema;
    d["template"] = r.inst.template_name;
    d["reason"] = r.reason;
    d["detail"] = r.detail;
    py::dict bindings;
    for (const auto& [var, b] : r.inst.bindings) bindings[py::str(var)] = binding_dict(b);
    d["bindings"] = bindings;
    return d;
}

}  // namespace

PYBIND11_MODULE(punforge, m) {
    m.doc() = "Schema-driven punning riddle generation";

    py::class_<Lexicon>(m, "Lexicon")
        .def("__len__", &Lexicon::size)
        .def("contains", &Lexicon::contains)
        .def("noun_phrases", &Lexicon::noun_phrases)
        .def("is_genuine_np",
             [](const Lexicon& lex, const std::vector<std::string>& tokens) {
                 return is_genuine_np(tokens, lex);
             })
        .def("relation_values",
             [](const Lexicon& lex, const std::string& id, const std::string& rel) {
                 py::list out;
                 for (const auto& b : relation_values(lex, id, rel)) out.append(binding_dict(b));
                 return out;
             });

    py::class_<HomophoneBase>(m, "HomophoneBase")
        .def("homophones_of", [](const HomophoneBase& base, const std::string& id) {
            py::list out;
            for (const auto& [partner, kind] : base.homophones_of(id))
                out.append(py::make_tuple(partner, to_string(kind)));
            return out;
        });

    py::class_<SchemaSet>(m, "SchemaSet").def("names", [](const SchemaSet& s) {
        std::vector<std::string> out;
        for (const auto& schema : s.all()) out.push_back(schema.name);
        return out;
    });
    py::class_<TemplateSet>(m, "TemplateSet").def("names", [](const TemplateSet& t) {
        std::vector<std::string> out;
        for (const auto& tpl : t.all()) out.push_back(tpl.name);
        return out;
    });

    m.def("parse_lexicon",
          [](const std::string& text) { return parse_lexicon(text); });
    m.def("parse_homophone_base", [](const std::string& text, const Lexicon& lexicon) {
        return parse_homophone_base(text, lexicon);
    });
    m.def("parse_schemata", [](const std::string& text) { return parse_schemata(text); });
    m.def("parse_templates", [](const std::string& text) { return parse_templates(text); });
    m.def("serialize_lexicon", &serialize_lexicon);

    m.def(
        "generate",
        [](const Lexicon& lexicon, const HomophoneBase& base, const SchemaSet& schemata,
           const TemplateSet& templates, py::object np, py::object schema, py::object tpl,
           std::uint64_t seed, bool sample, py::object max_riddles, py::object threshold,
           bool show_rejected) {
            GenerationConfig config;
            if (!np.is_none()) config.np_filter = np.cast<std::string>();
            if (!schema.is_none()) config.schema_filter = schema.cast<std::string>();
            if (!tpl.is_none()) config.template_filter = tpl.cast<std::string>();
            config.seed = seed;
            config.sample = sample;
            if (!max_riddles.is_none()) config.max_riddles = max_riddles.cast<int>();
            if (!threshold.is_none()) config.score_threshold = threshold.cast<double>();
            config.show_rejected = show_rejected;
            auto result = generate(config, lexicon, base, schemata, templates);
            py::list riddles, rejected;
            for (const auto& r : result.riddles) riddles.append(riddle_dict(r));
            for (const auto& r : result.rejected) rejected.append(rejected_dict(r));
            py::dict out;
            out["riddles"] = riddles;
            out["rejected"] = rejected;
            return out;
        },
        py::arg("lexicon"), py::arg("homophones"), py::arg("schemata"), py::arg("templates"),
        py::arg("np") = py::none(), py::arg("schema") = py::none(),
        py::arg("template") = py::none(), py::arg("seed") = 0, py::arg("sample") = false,
        py::arg("max_riddles") = py::none(), py::arg("threshold") = py::none(),
        py::arg("show_rejected") = false);

    m.def(
        "aggregate_ratings",
        [](const std::string& text, const std::string& by,
           const std::vector<std::string>& universe) {
            auto grouping = grouping_from_string(by);
            if (!grouping) throw std::invalid_argument("unknown grouping: " + by);
            auto table = aggregate(parse_ratings(text), *grouping, universe);
            py::list rows;
            for (const auto& row : table.rows)
                rows.append(py::make_tuple(row.key, row.joke_count, round1(row.mean)));
            py::dict out;
            out["rows"] = rows;
            out["total_count"] = table.total_count;
            out["total_mean"] = round1(table.total_mean);
            return out;
        },
        py::arg("text"), py::arg("by"), py::arg("universe") = std::vector<std::string>{});

    m.def(
        "apply_trim",
        [](const std::string& ratings_text, const std::string& rules_text) {
            auto records = parse_ratings(ratings_text);
            auto outcome = apply_trim(records, parse_trim_rules(rules_text));
            py::dict out;
            out["surviving"] = static_cast<int>(outcome.surviving.size());
            out["mean_before"] = outcome.mean_before;
            if (outcome.mean_after)
                out["mean_after"] = *outcome.mean_after;
            else
                out["mean_after"] = py::none();
            return out;
        },
        py::arg("ratings_text"), py::arg("rules_text"));
}
