#include <doctest.h>

#include "punforge/checker.hpp"
#include "punforge/scorer.hpp"
#include "support.hpp"

using namespace punforge;
using tests::load_fixture;
using tests::read_file;

namespace {

Instantiation jumper_instantiation(const tests::Bases& kb, const Binding& c1, const Binding& c2) {
    const Schema& jumper = kb.schemata.at("jumper");
    auto partials = fit_np(jumper, "woolly_jumper", kb.lexicon, kb.homophones);
    REQUIRE(partials.size() == 1);
    Instantiation inst;
    inst.schema = "jumper";
    inst.template_name = "syn_syn";
    inst.bindings = partials[0].bindings;
    inst.substitutions = partials[0].substitutions;
    inst.bindings["C1"] = c1;
    inst.bindings["C2"] = c2;
    inst.specialized = {{"C1", Relation::DescribesAll}, {"C2", Relation::DescribesAll}};
    return inst;
}

Riddle riddle_with(Chunk question, Chunk punchline) {
    Riddle r;
    r.nsf.question = std::move(question);
    r.nsf.answer = punchline;
    r.nsf.answer.push_back(".");
    r.punchline = std::move(punchline);
    return r;
}

}  // namespace

TEST_CASE("check_identity accepts the worked example and rejects the loop case") {
    auto kb = load_fixture("tests/fixtures/worked_example.lex", "tests/fixtures/worked_example.hom");
    const Schema& jumper = kb.schemata.at("jumper");

    auto good = jumper_instantiation(kb, Binding::lexeme("sheep"), Binding::lexeme("kangaroo"));
    CHECK(check_identity(good, jumper));

    // "cross a sheep and a jumper": the characteristic lexeme duplicates W2
    auto looped = jumper_instantiation(kb, Binding::lexeme("sheep"), Binding::lexeme("jumper_1"));
    CHECK_FALSE(check_identity(looped, jumper));
    CHECK_FALSE(run_checks(looped, jumper, kb.lexicon).ok());
}

TEST_CASE("identity-linked variables may share a binding") {
    SchemaSet set = parse_schemata(
        "schema twin\nvar NP key\nvar W1 key\nvar W2 key\nvar E key\nvar C1 char\n"
        "constituents NP -> W1 W2\nlink identity W2 E\nchar C1 from E\n"
        "punchline W1 W2\nquestion_slots C1\n");
    Instantiation inst;
    inst.schema = "twin";
    inst.bindings["NP"] = Binding::lexeme("a_b");
    inst.bindings["W1"] = Binding::lexeme("a");
    inst.bindings["W2"] = Binding::lexeme("b");
    inst.bindings["E"] = Binding::lexeme("b");  // same as W2, joined by identity
    inst.bindings["C1"] = Binding::lexeme("c");
    CHECK(check_identity(inst, set.at("twin")));
}

TEST_CASE("check_identity is invariant under variable renaming") {
    auto make_schema = [](const std::string& np, const std::string& w1, const std::string& w2,
                          const std::string& h, const std::string& c) {
        std::ostringstream os;
        os << "schema s\nvar " << np << " key\nvar " << w1 << " key\nvar " << w2
           << " key\nvar " << h << " key\nvar " << c << " char\nconstituents " << np << " -> "
           << w1 << ' ' << w2 << "\nlink homophone " << w2 << ' ' << h << "\nchar " << c
           << " from " << h << "\npunchline " << w1 << ' ' << h << "\nquestion_slots " << c
           << '\n';
        return parse_schemata(os.str()).at("s");
    };
    Schema plain = make_schema("NP", "W1", "W2", "H", "C1");
    Schema renamed = make_schema("phrase", "first", "second", "partner", "meaning");
    auto bind = [](const Schema& s, const std::string& c_value) {
        Instantiation inst;
        inst.schema = "s";
        inst.bindings[s.np_var] = Binding::lexeme("woolly_jumper");
        inst.bindings[s.constituents[0]] = Binding::lexeme("woolly");
        inst.bindings[s.constituents[1]] = Binding::lexeme("jumper_1");
        inst.bindings[s.homophone_links[0].second] = Binding::lexeme("jumper_2");
        inst.bindings[s.question_slots[0]] = Binding::lexeme(c_value);
        return inst;
    };
    for (const std::string value : {"sheep", "jumper_1"}) {
        CHECK(check_identity(bind(plain, value), plain) ==
              check_identity(bind(renamed, value), renamed));
    }
    CHECK_FALSE(check_identity(bind(renamed, "jumper_1"), renamed));
}

TEST_CASE("check_sensible keys on the lexemes behind the punchline") {
    auto kb = load_fixture("tests/fixtures/worked_example.lex", "tests/fixtures/worked_example.hom");
    const Schema& jumper = kb.schemata.at("jumper");

    // textually identical to a real phrase, but via an alternate sense: a joke
    auto flagship = jumper_instantiation(kb, Binding::lexeme("sheep"), Binding::lexeme("kangaroo"));
    CHECK(check_sensible(flagship, jumper, kb.lexicon));
    CHECK(punchline_tokens(flagship, jumper, kb.lexicon) == Chunk{"woolly", "jumper"});

    // the same tokens built with no substitution at all: sensible, rejected
    Instantiation unsubstituted = flagship;
    unsubstituted.bindings["H"] = Binding::lexeme("jumper_1");
    unsubstituted.substitutions.clear();
    CHECK_FALSE(check_sensible(unsubstituted, jumper, kb.lexicon));
}

TEST_CASE("a homonym landing on a genuine phrase is sensible, not a joke") {
    auto kb = load_fixture("tests/fixtures/checker.lex", "tests/fixtures/checker.hom");
    const Schema& woolly = kb.schemata.at("woolly");
    auto partials = fit_np(woolly, "coak_can", kb.lexicon, kb.homophones);
    REQUIRE(partials.size() == 1);
    auto insts = specialize_and_complete(partials[0], kb.templates.at("syn_syn"), woolly,
                                         kb.lexicon);
    REQUIRE(insts.size() == 1);
    CHECK(punchline_tokens(insts[0], woolly, kb.lexicon) == Chunk{"coke", "can"});
    CHECK_FALSE(check_sensible(insts[0], woolly, kb.lexicon));
}

TEST_CASE("a punchline absent from the np index passes the sensible check") {
    auto kb = load_fixture("tests/fixtures/oracle.lex", "tests/fixtures/oracle.hom");
    const Schema& woolly = kb.schemata.at("woolly");
    auto partials = fit_np(woolly, "serial_killer", kb.lexicon, kb.homophones);
    REQUIRE(partials.size() == 1);
    auto insts =
        specialize_and_complete(partials[0], kb.templates.at("syn_verb"), woolly, kb.lexicon);
    REQUIRE(!insts.empty());
    CHECK(punchline_tokens(insts[0], woolly, kb.lexicon) == Chunk{"cereal", "killer"});
    CHECK(check_sensible(insts[0], woolly, kb.lexicon));
}

TEST_CASE("score counts funny letters in the punchline") {
    Riddle r = riddle_with({"what", "do", "you", "call", "a", "ferocious", "nude", "?"},
                           {"grizzly", "bare"});
    ScoreRecord s = score(r, ScoreWeights{});
    CHECK(s.funny_letters == 2);  // two z's, no k/q/v/w
    CHECK(s.question_length_penalty == 0);
    CHECK(s.alliteration == doctest::Approx(0.5));
    CHECK_FALSE(s.rhyme);
}

TEST_CASE("alliteration is the largest shared-initial share") {
    Riddle r = riddle_with({"what", "do", "you", "call", "a", "quirky", "quantifier", "?"},
                           {"quirky", "quantifier"});
    CHECK(score(r, ScoreWeights{}).alliteration == doctest::Approx(1.0));

    Riddle three = riddle_with({"q", "b", "c", "d", "e", "f", "?"}, {"big", "bad", "wolf"});
    CHECK(score(three, ScoreWeights{}).alliteration == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("rhyme needs a two-letter common suffix on the last two words") {
    Riddle rhyming = riddle_with({"a", "b", "c", "d", "e", "f", "?"}, {"funny", "bunny"});
    CHECK(score(rhyming, ScoreWeights{}).rhyme);
    Riddle flat = riddle_with({"a", "b", "c", "d", "e", "f", "?"}, {"battered", "tanner"});
    CHECK_FALSE(score(flat, ScoreWeights{}).rhyme);
    Riddle single = riddle_with({"a", "b", "c", "d", "e", "f", "?"}, {"spooktacles"});
    CHECK_FALSE(score(single, ScoreWeights{}).rhyme);
}

TEST_CASE("question length is penalized outside the comfortable band") {
    ScoreWeights w;
    Riddle shorty = riddle_with({"who", "?"}, {"me"});
    CHECK(score(shorty, w).question_length_penalty == 4);  // 6 - 2
    Chunk long_q(20, "very");
    long_q.push_back("?");
    Riddle longy = riddle_with(long_q, {"patience"});
    CHECK(score(longy, w).question_length_penalty == 7);  // 21 - 14
}

TEST_CASE("zero weights zero every total") {
    ScoreWeights zero;
    zero.w_alliteration = zero.w_rhyme = zero.w_funny_letters = zero.w_length_penalty = 0;
    Riddle r = riddle_with({"a", "?"}, {"quizzical", "wizard"});
    CHECK(score(r, zero).total == doctest::Approx(0.0));
}

TEST_CASE("rank sorts by total, stable on ties") {
    auto mk = [](double total, int index) {
        Riddle r;
        r.scores.total = total;
        r.generation_index = index;
        return r;
    };
    std::vector<Riddle> riddles{mk(1, 0), mk(3, 1), mk(1, 2)};
    rank(riddles);
    REQUIRE(riddles.size() == 3);
    CHECK(riddles[0].generation_index == 1);
    CHECK(riddles[1].generation_index == 0);  // tie keeps original order
    CHECK(riddles[2].generation_index == 2);

    std::vector<Riddle> one{mk(0.5, 7)};
    rank(one);
    CHECK(one[0].generation_index == 7);
}
