#include "punforge/report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>

#include "textio.hpp"

namespace punforge {

namespace {

std::string key_of(const RatingRecord& r, Grouping g) {
    switch (g) {
        case Grouping::Schema: return r.schema;
        case Grouping::Template: return r.template_name;
        case Grouping::Pair: return r.schema + " + " + r.template_name;
        case Grouping::Phrase: return r.phrase;
    }
    return {};
}

double mean_of(const std::vector<RatingRecord>& records) {
    if (records.empty()) return 0.0;
    double sum = 0.0;
    for (const auto& r : records) sum += r.joke_mean();
    return sum / static_cast<double>(records.size());
}

}  // namespace

double RatingRecord::joke_mean() const {
    if (judge_scores.empty()) return 0.0;
    double sum = 0.0;
    for (int s : judge_scores) sum += s;
    return sum / static_cast<double>(judge_scores.size());
}

std::vector<RatingRecord> parse_ratings(const std::string& text, const std::string& source) {
    std::vector<RatingRecord> out;
    for (const auto& line : textio::read_lines(text)) {
        if (line.text.empty()) continue;
        auto f = textio::fields(line, source);
        if (f.size() != 5)
            throw ParseError(source, line.number,
                             "expected '<joke_id> <schema> <template> <phrase> <scores>'");
        RatingRecord record;
        record.joke_id = f[0];
        record.schema = f[1];
        record.template_name = f[2];
        record.phrase = f[3];
        std::istringstream scores(f[4]);
        std::string piece;
        while (std::getline(scores, piece, ',')) {
            int value = 0;
            try {
                value = std::stoi(piece);
            } catch (...) {
                throw ParseError(source, line.number, "bad score '" + piece + "'");
            }
            if (value < 0 || value > 5)
                throw ParseError(source, line.number, "score " + piece + " outside 0..5");
            record.judge_scores.push_back(value);
        }
        if (record.judge_scores.empty())
            throw ParseError(source, line.number, "record has no judge scores");
        out.push_back(std::move(record));
    }
    return out;
}

std::optional<Grouping> grouping_from_string(const std::string& name) {
    if (name == "schema") return Grouping::Schema;
    if (name == "template") return Grouping::Template;
    if (name == "pair") return Grouping::Pair;
    if (name == "phrase") return Grouping::Phrase;
    return std::nullopt;
}

ReportTable aggregate(const std::vector<RatingRecord>& records, Grouping grouping,
                      const std::vector<std::string>& universe) {
    std::map<std::string, std::pair<int, double>> sums;  // key -> (count, sum of joke means)
    for (const auto& r : records) {
        auto& cell = sums[key_of(r, grouping)];
        cell.first += 1;
        cell.second += r.joke_mean();
    }

    ReportTable table;
    table.grouping = grouping;
    std::vector<std::string> order = universe;
    for (const auto& [key, cell] : sums)
        if (std::find(order.begin(), order.end(), key) == order.end()) order.push_back(key);
    for (const auto& key : order) {
        ReportRow row;
        row.key = key;
        auto it = sums.find(key);
        if (it != sums.end()) {
            row.joke_count = it->second.first;
            row.mean = it->second.second / it->second.first;
        }
        table.rows.push_back(std::move(row));
    }
    table.total_count = static_cast<int>(records.size());
    table.total_mean = mean_of(records);
    return table;
}

bool TrimRules::matches(const RatingRecord& r) const {
    return schemata.count(r.schema) != 0 || templates.count(r.template_name) != 0 ||
           pairs.count({r.schema, r.template_name}) != 0;
}

TrimRules parse_trim_rules(const std::string& text, const std::string& source) {
    TrimRules rules;
    for (const auto& line : textio::read_lines(text)) {
        if (line.text.empty()) continue;
        auto f = textio::fields(line, source);
        if (f[0] == "schema" && f.size() == 2) rules.schemata.insert(f[1]);
        else if (f[0] == "template" && f.size() == 2) rules.templates.insert(f[1]);
        else if (f[0] == "pair" && f.size() == 3) rules.pairs.emplace(f[1], f[2]);
        else
            throw ParseError(source, line.number,
                             "expected 'schema <name>', 'template <name>' or 'pair <s> <t>'");
    }
    return rules;
}

TrimOutcome apply_trim(const std::vector<RatingRecord>& records, const TrimRules& rules,
                       const std::vector<std::string>& known_schemata,
                       const std::vector<std::string>& known_templates) {
    std::set<std::string> schemata(known_schemata.begin(), known_schemata.end());
    std::set<std::string> templates(known_templates.begin(), known_templates.end());
    for (const auto& r : records) {
        schemata.insert(r.schema);
        templates.insert(r.template_name);
    }
    for (const auto& name : rules.schemata)
        if (!schemata.count(name)) throw std::invalid_argument("unknown schema in trim rules: " + name);
    for (const auto& name : rules.templates)
        if (!templates.count(name))
            throw std::invalid_argument("unknown template in trim rules: " + name);
    for (const auto& [s, t] : rules.pairs) {
        if (!schemata.count(s)) throw std::invalid_argument("unknown schema in trim rules: " + s);
        if (!templates.count(t)) throw std::invalid_argument("unknown template in trim rules: " + t);
    }

    TrimOutcome outcome;
    outcome.mean_before = mean_of(records);
    for (const auto& r : records)
        if (!rules.matches(r)) outcome.surviving.push_back(r);
    if (!outcome.surviving.empty()) outcome.mean_after = mean_of(outcome.surviving);
    return outcome;
}

double round1(double x) { return std::round(x * 10.0) / 10.0; }

std::string render_table(const ReportTable& table) {
    std::size_t key_width = std::string("Aspect").size();
    for (const auto& row : table.rows) key_width = std::max(key_width, row.key.size());
    key_width = std::max(key_width, std::string("Total").size());

    std::ostringstream os;
    os << std::left << std::setw(static_cast<int>(key_width + 2)) << "Aspect"
       << std::setw(17) << "Number of Jokes" << "Average Score\n";
    auto emit = [&](const std::string& key, int count, double mean) {
        os << std::left << std::setw(static_cast<int>(key_width + 2)) << key
           << std::setw(17) << count << std::fixed << std::setprecision(1) << round1(mean)
           << '\n';
        os.unsetf(std::ios::fixed);
    };
    for (const auto& row : table.rows) emit(row.key, row.joke_count, row.mean);
    if (table.grouping == Grouping::Schema || table.grouping == Grouping::Template)
        emit("Total", table.total_count, table.total_mean);
    return os.str();
}

}  // namespace punforge
