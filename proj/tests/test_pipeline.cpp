#include <doctest.h>

#include <json.hpp>
#include <set>

#include "punforge/pipeline.hpp"
#include "support.hpp"

using namespace punforge;
using tests::load_fixture;

namespace {

GenerationConfig pinned(const std::string& np, const std::string& schema,
                        const std::string& tpl) {
    GenerationConfig config;
    config.np_filter = np;
    config.schema_filter = schema;
    config.template_filter = tpl;
    return config;
}

}  // namespace

TEST_CASE("pinned generation reproduces the worked example") {
    auto kb = load_fixture("tests/fixtures/worked_example.lex", "tests/fixtures/worked_example.hom");
    auto result = generate(pinned("woolly_jumper", "jumper", "syn_syn"), kb.lexicon,
                           kb.homophones, kb.schemata, kb.templates);
    REQUIRE(result.riddles.size() == 1);
    CHECK(result.riddles[0].surface ==
          "What do you get when you cross a sheep with a kangaroo? A woolly jumper.");

    result = generate(pinned("woolly_jumper", "jumper", "syn_verb"), kb.lexicon, kb.homophones,
                      kb.schemata, kb.templates);
    REQUIRE(result.riddles.size() == 1);
    CHECK(result.riddles[0].surface == "What do you call a sheep that can leap? A woolly jumper.");
}

TEST_CASE("chunk slots pass through to the question verbatim") {
    auto kb = load_fixture("tests/fixtures/oracle.lex", "tests/fixtures/oracle.hom");
    auto result = generate(pinned("bridal_shower", "lotus", "class_has"), kb.lexicon,
                           kb.homophones, kb.schemata, kb.templates);
    REQUIRE(result.riddles.size() == 1);
    CHECK(result.riddles[0].surface == "What kind of harness has presents? A bridle shower.");
}

TEST_CASE("an empty lexicon generates nothing") {
    Lexicon lexicon;
    HomophoneBase base;
    auto schemata = parse_schemata(tests::read_file("data/schemata.def"));
    auto templates = parse_templates(tests::read_file("data/templates.def"));
    auto result = generate(GenerationConfig{}, lexicon, base, schemata, templates);
    CHECK(result.riddles.empty());
    CHECK(result.rejected.empty());
}

TEST_CASE("every emitted riddle passed both checks; rejected ones carry reasons") {
    auto kb = load_fixture("tests/fixtures/checker.lex", "tests/fixtures/checker.hom");
    GenerationConfig config;
    config.show_rejected = true;
    auto result = generate(config, kb.lexicon, kb.homophones, kb.schemata, kb.templates);
    for (const auto& r : result.riddles) {
        CHECK(r.verdicts.identity_ok);
        CHECK(r.verdicts.sensible_ok);
    }
    bool identity_seen = false, sensible_seen = false;
    for (const auto& rej : result.rejected) {
        identity_seen |= (rej.reason == "identity");
        sensible_seen |= (rej.reason == "sensible");
    }
    CHECK(identity_seen);
    CHECK(sensible_seen);
}

TEST_CASE("thresholds and max filter the ranked output") {
    auto kb = load_fixture("tests/fixtures/oracle.lex", "tests/fixtures/oracle.hom");
    GenerationConfig all;
    auto everything = generate(all, kb.lexicon, kb.homophones, kb.schemata, kb.templates);
    REQUIRE(everything.riddles.size() > 3);

    GenerationConfig capped;
    capped.max_riddles = 3;
    auto top = generate(capped, kb.lexicon, kb.homophones, kb.schemata, kb.templates);
    REQUIRE(top.riddles.size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(top.riddles[i].surface == everything.riddles[i].surface);

    GenerationConfig thresholded;
    thresholded.score_threshold = 1.0;
    auto good = generate(thresholded, kb.lexicon, kb.homophones, kb.schemata, kb.templates);
    for (const auto& r : good.riddles) CHECK(r.scores.total >= 1.0);
    std::size_t at_least = 0;
    for (const auto& r : everything.riddles) at_least += (r.scores.total >= 1.0);
    CHECK(good.riddles.size() == at_least);
}

TEST_CASE("ranking is descending and stable") {
    auto kb = load_fixture("tests/fixtures/oracle.lex", "tests/fixtures/oracle.hom");
    auto result = generate(GenerationConfig{}, kb.lexicon, kb.homophones, kb.schemata,
                           kb.templates);
    for (std::size_t i = 1; i < result.riddles.size(); ++i) {
        CHECK(result.riddles[i - 1].scores.total >= result.riddles[i].scores.total);
        if (result.riddles[i - 1].scores.total == result.riddles[i].scores.total)
            CHECK(result.riddles[i - 1].generation_index < result.riddles[i].generation_index);
    }
}

TEST_CASE("pinning filters shrink the output without inventing members") {
    auto kb = load_fixture("tests/fixtures/oracle.lex", "tests/fixtures/oracle.hom");
    auto everything = generate(GenerationConfig{}, kb.lexicon, kb.homophones, kb.schemata,
                               kb.templates);
    std::set<std::string> all_keys;
    for (const auto& r : everything.riddles) all_keys.insert(r.inst.canonical_key());

    for (const std::string np : {"tea_time", "odd_number"}) {
        GenerationConfig config;
        config.np_filter = np;
        auto subset = generate(config, kb.lexicon, kb.homophones, kb.schemata, kb.templates);
        CHECK(subset.riddles.size() < everything.riddles.size());
        for (const auto& r : subset.riddles) CHECK(all_keys.count(r.inst.canonical_key()) == 1);
    }

    GenerationConfig config;
    config.schema_filter = "double";
    auto doubles = generate(config, kb.lexicon, kb.homophones, kb.schemata, kb.templates);
    CHECK(!doubles.riddles.empty());
    for (const auto& r : doubles.riddles) {
        CHECK(r.inst.schema == "double");
        CHECK(all_keys.count(r.inst.canonical_key()) == 1);
    }
}

TEST_CASE("generation is deterministic across runs") {
    auto kb = load_fixture("tests/fixtures/oracle.lex", "tests/fixtures/oracle.hom");
    auto a = generate(GenerationConfig{}, kb.lexicon, kb.homophones, kb.schemata, kb.templates);
    auto b = generate(GenerationConfig{}, kb.lexicon, kb.homophones, kb.schemata, kb.templates);
    CHECK(render_records(a, false) == render_records(b, false));

    GenerationConfig sampled;
    sampled.sample = true;
    sampled.seed = 42;
    sampled.max_riddles = 5;
    auto s1 = generate(sampled, kb.lexicon, kb.homophones, kb.schemata, kb.templates);
    auto s2 = generate(sampled, kb.lexicon, kb.homophones, kb.schemata, kb.templates);
    CHECK(render_records(s1, false) == render_records(s2, false));
    CHECK(s1.riddles.size() == 5);

    GenerationConfig other = sampled;
    other.seed = 43;
    auto s3 = generate(other, kb.lexicon, kb.homophones, kb.schemata, kb.templates);
    CHECK(render_records(s1, false) != render_records(s3, false));
}

TEST_CASE("record output is one json object per line with provenance") {
    auto kb = load_fixture("tests/fixtures/worked_example.lex", "tests/fixtures/worked_example.hom");
    GenerationConfig config;
    config.np_filter = "woolly_jumper";
    auto result = generate(config, kb.lexicon, kb.homophones, kb.schemata, kb.templates);
    REQUIRE(!result.riddles.empty());
    std::istringstream lines(render_records(result, false));
    std::string line;
    bool saw_paper = false, saw_extrapolated = false;
    while (std::getline(lines, line)) {
        auto record = nlohmann::json::parse(line);
        CHECK(record.contains("surface"));
        CHECK(record.contains("bindings"));
        CHECK(record["status"] == "accepted");
        if (record["schema"] == "jumper" && record["template"] == "syn_syn")
            saw_paper = (record["provenance"] == "paper");
        if (record["schema"] == "elan") saw_extrapolated = (record["provenance"] == "extrapolated");
    }
    CHECK(saw_paper);
    CHECK(saw_extrapolated);
}

TEST_CASE("explain lists bindings, relations and scores") {
    auto kb = load_fixture("tests/fixtures/worked_example.lex", "tests/fixtures/worked_example.hom");
    auto result = generate(pinned("woolly_jumper", "jumper", "syn_syn"), kb.lexicon,
                           kb.homophones, kb.schemata, kb.templates);
    REQUIRE(result.riddles.size() == 1);
    std::string trace = explain(result.riddles[0]);
    CHECK(trace.find("woolly_jumper") != std::string::npos);
    CHECK(trace.find("jumper_2") != std::string::npos);
    CHECK(trace.find("describes_all") != std::string::npos);
    CHECK(trace.find("identity ok") != std::string::npos);
    CHECK(trace.find("(paper)") != std::string::npos);

    // riddles built on a reconstructed schema carry the flag in their trace
    auto elan = generate(pinned("woolly_jumper", "elan", "use_syn"), kb.lexicon, kb.homophones,
                         kb.schemata, kb.templates);
    REQUIRE(!elan.riddles.empty());
    CHECK(explain(elan.riddles[0]).find("elan (extrapolated)") != std::string::npos);
}

TEST_CASE("rejected candidates explain themselves") {
    auto kb = load_fixture("tests/fixtures/checker.lex", "tests/fixtures/checker.hom");
    GenerationConfig config = pinned("coak_can", "woolly", "syn_syn");
    config.show_rejected = true;
    auto result = generate(config, kb.lexicon, kb.homophones, kb.schemata, kb.templates);
    REQUIRE(!result.rejected.empty());
    std::string trace = explain(result.rejected[0]);
    CHECK(trace.find("rejected (sensible)") != std::string::npos);
    CHECK(trace.find("coak_can") != std::string::npos);
}
