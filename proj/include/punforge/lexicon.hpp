#ifndef PUNFORGE_LEXICON_HPP
#define PUNFORGE_LEXICON_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "punforge/types.hpp"

namespace punforge {

// One lexicon record. Semantic slots may repeat (multi-valued relations);
// values keep record order.
struct LexicalEntry {
    LexemeId lexeme;
    Category category = Category::Noun;
    Chunk written_form;

    std::optional<bool> vowel_start;           // np, noun, adj
    std::optional<bool> countable;             // np, noun
    std::optional<bool> abstract_tag;          // lint tag, any category
    std::optional<Chunk> second;               // verb
    std::optional<Chunk> third;                // verb
    std::vector<LexemeId> comp_lex;            // np; length >= 2

    std::vector<std::pair<Relation, LexemeId>> sem_lexemes;  // lexeme-valued slots
    std::vector<std::pair<Relation, Chunk>> sem_chunks;      // chunk-valued slots

    std::vector<LexemeId> values_of(Relation r) const;
    std::vector<Chunk> chunks_of(Relation r) const;
    bool operator==(const LexicalEntry& o) const;
};

// The humour-independent lexical network. Immutable once parsed; queries are
// read-only and thread-safe.
class Lexicon {
public:
    void add(LexicalEntry entry);  // throws on duplicate id

    bool contains(const LexemeId& id) const { return entries_.count(id) != 0; }
    const LexicalEntry& at(const LexemeId& id) const;  // throws on unknown id
    const LexicalEntry* find(const LexemeId& id) const;
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    const std::map<LexemeId, LexicalEntry>& entries() const { return entries_; }
    const std::set<Chunk>& np_index() const { return np_index_; }

    // Lexeme ids of all np entries, in id order.
    std::vector<LexemeId> noun_phrases() const;

    bool operator==(const Lexicon& o) const { return entries_ == o.entries_; }

private:
    std::map<LexemeId, LexicalEntry> entries_;
    std::set<Chunk> np_index_;
};

// Parses the block-record lexicon format. Hard violations (unknown slot,
// slot/category mismatch, dangling reference, duplicate id, asymmetric
// synonyms) throw ParseError with the offending record's location.
Lexicon parse_lexicon(const std::string& text, const std::string& source = "<lexicon>");

std::string serialize_lexicon(const Lexicon& lexicon);

// Per-entry invariant checks plus advisory lint (missing vowel_start on
// noun/adj, verb lacking second/third forms). Cross-entry reference checks
// run against `lexicon`.
std::vector<Violation> validate_entry(const LexicalEntry& entry, const Lexicon& lexicon);

// Values of one relation for one lexeme, in slot-line order. The derived
// label SpecIsClass yields [spec_is, class] two-lexeme sequences, or nothing
// when either side is missing. Throws on an unknown lexeme.
std::vector<Binding> relation_values(const Lexicon& lexicon, const LexemeId& lexeme, Relation relation);

// String-label variant; throws on an unknown relation label.
std::vector<Binding> relation_values(const Lexicon& lexicon, const LexemeId& lexeme,
                                     const std::string& relation);

// True iff the tokens equal the written form of some np entry.
bool is_genuine_np(const Chunk& tokens, const Lexicon& lexicon);

}  // namespace punforge

#endif
