#include <doctest.h>

#include <algorithm>

#include "punforge/homophones.hpp"
#include "support.hpp"

using namespace punforge;
using tests::read_file;

namespace {

Lexicon worked_lexicon() {
    return parse_lexicon(tests::read_file("tests/fixtures/worked_example.lex"));
}

}  // namespace

TEST_CASE("the worked-example pair parses as one alternate pair") {
    Lexicon lex = worked_lexicon();
    HomophoneBase base = parse_homophone_base("pair alternate jumper_1 jumper_2\n", lex);
    REQUIRE(base.pairs().size() == 1);
    CHECK(base.pairs()[0].kind == PairKind::Alternate);

    auto partners = base.homophones_of("jumper_1");
    REQUIRE(partners.size() == 1);
    CHECK(partners[0] == std::pair<LexemeId, PairKind>{"jumper_2", PairKind::Alternate});
    partners = base.homophones_of("jumper_2");
    REQUIRE(partners.size() == 1);
    CHECK(partners[0].first == "jumper_1");
    CHECK(base.homophones_of("woolly").empty());
    CHECK(base.homophones_of("never_entered").empty());
}

TEST_CASE("empty document gives an empty base") {
    Lexicon lex = worked_lexicon();
    CHECK(parse_homophone_base("", lex).empty());
    CHECK(parse_homophone_base("# nothing here\n\n", lex).empty());
}

TEST_CASE("kind must agree with the written forms") {
    Lexicon lex = worked_lexicon();
    CHECK_THROWS_WITH_AS(parse_homophone_base("pair homonym jumper_1 jumper_2\n", lex),
                         doctest::Contains("alternate"), ParseError);
    CHECK_THROWS_WITH_AS(parse_homophone_base("pair alternate woolly jumper_1\n", lex),
                         doctest::Contains("homonym"), ParseError);
}

TEST_CASE("unknown lexemes, duplicates and self-pairs are errors") {
    Lexicon lex = worked_lexicon();
    CHECK_THROWS_AS(parse_homophone_base("pair homonym jumper_1 gumper\n", lex), ParseError);
    CHECK_THROWS_AS(parse_homophone_base("pair alternate jumper_1 jumper_2\n"
                                         "pair alternate jumper_2 jumper_1\n",
                                         lex),
                    ParseError);
    CHECK_THROWS_AS(parse_homophone_base("pair alternate jumper_1 jumper_1\n", lex), ParseError);
}

TEST_CASE("serialization round-trips the pair set") {
    Lexicon lex = parse_lexicon(read_file("tests/fixtures/oracle.lex"));
    HomophoneBase base = parse_homophone_base(read_file("tests/fixtures/oracle.hom"), lex);
    HomophoneBase again = parse_homophone_base(serialize_homophone_base(base), lex);
    REQUIRE(base.pairs().size() == again.pairs().size());
    for (const auto& p : base.pairs())
        CHECK(std::find(again.pairs().begin(), again.pairs().end(), p) != again.pairs().end());
}

TEST_CASE("lint flags categories, abstractness and overlapping entries") {
    Lexicon lex = parse_lexicon(
        "lexeme flee\ncategory verb\nwritten_form \"flee\"\nsecond \"flee\"\nthird \"flees\"\n\n"
        "lexeme flea\ncategory noun\nwritten_form \"flea\"\ncountable yes\nvowel_start no\n\n"
        "lexeme idea_1\ncategory noun\nwritten_form \"idea\"\ncountable yes\nvowel_start yes\n"
        "abstract yes\nclass thought\n\n"
        "lexeme idea_2\ncategory noun\nwritten_form \"idea\"\ncountable yes\nvowel_start yes\n"
        "class thought\n\n"
        "lexeme thought\ncategory noun\nwritten_form \"thought\"\ncountable yes\nvowel_start no\n\n"
        "lexeme grey\ncategory adj\nwritten_form \"grey\"\nvowel_start no\nsynonym dull\n\n"
        "lexeme gray\ncategory adj\nwritten_form \"gray\"\nvowel_start no\nsynonym dull\n\n"
        "lexeme dull\ncategory adj\nwritten_form \"dull\"\nvowel_start no\nsynonym grey\n"
        "synonym gray\n");

    // verb member
    auto v = lint_pair({"flee", "flea", PairKind::Homonym}, lex);
    REQUIRE(v.size() == 1);
    CHECK(v[0].advisory);
    CHECK(v[0].message.find("neither a noun nor an adjective") != std::string::npos);

    // abstract member + shared class value on an alternate pair
    v = lint_pair({"idea_1", "idea_2", PairKind::Alternate}, lex);
    REQUIRE(v.size() == 2);
    CHECK(v[0].message.find("abstract") != std::string::npos);
    CHECK(v[1].message.find("completely different") != std::string::npos);

    // identical entries across spellings are likely variants, not homonyms
    v = lint_pair({"grey", "gray", PairKind::Homonym}, lex);
    REQUIRE(v.size() == 1);
    CHECK(v[0].message.find("spelling variants") != std::string::npos);

    // the worked-example pair is clean
    Lexicon worked = worked_lexicon();
    CHECK(lint_pair({"jumper_1", "jumper_2", PairKind::Alternate}, worked).empty());
}
