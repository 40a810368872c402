#ifndef PUNFORGE_REPORT_HPP
#define PUNFORGE_REPORT_HPP

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "punforge/types.hpp"

namespace punforge {

// One judged joke: integer ratings on the 0..5 scale, one per judge.
struct RatingRecord {
    std::string joke_id;
    std::string schema;
    std::string template_name;
    std::string phrase;
    std::vector<int> judge_scores;

    double joke_mean() const;
};

std::vector<RatingRecord> parse_ratings(const std::string& text,
                                        const std::string& source = "<ratings>");

enum class Grouping { Schema, Template, Pair, Phrase };

std::optional<Grouping> grouping_from_string(const std::string& name);

struct ReportRow {
    std::string key;
    int joke_count = 0;
    double mean = 0.0;  // mean over jokes of each joke's judge mean
};

struct ReportTable {
    Grouping grouping = Grouping::Schema;
    std::vector<ReportRow> rows;
    int total_count = 0;
    double total_mean = 0.0;
};

// Groups records and averages per-joke means. Keys from `universe` always
// appear (zero rows included), in universe order; other keys follow
// lexicographically. Pair keys render as "<schema> + <template>".
ReportTable aggregate(const std::vector<RatingRecord>& records, Grouping grouping,
                      const std::vector<std::string>& universe = {});

struct TrimRules {
    std::set<std::string> schemata;
    std::set<std::string> templates;
    std::set<std::pair<std::string, std::string>> pairs;

    bool matches(const RatingRecord& r) const;
    bool empty() const { return schemata.empty() && templates.empty() && pairs.empty(); }
};

TrimRules parse_trim_rules(const std::string& text, const std::string& source = "<trim>");

struct TrimOutcome {
    std::vector<RatingRecord> surviving;
    double mean_before = 0.0;
    std::optional<double> mean_after;  // absent when nothing survives
};

// Drops records matching any rule. Rule names must be known: present in the
// records or among `known_*` (the shipped schema/template names).
TrimOutcome apply_trim(const std::vector<RatingRecord>& records, const TrimRules& rules,
                       const std::vector<std::string>& known_schemata = {},
                       const std::vector<std::string>& known_templates = {});

// Aligned-column table with a Total row for schema/template groupings.
std::string render_table(const ReportTable& table);

double round1(double x);

}  // namespace punforge

#endif
