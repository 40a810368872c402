#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "punforge/homophones.hpp"
#include "punforge/lexicon.hpp"
#include "punforge/pipeline.hpp"
#include "punforge/report.hpp"
#include "punforge/schema.hpp"
#include "punforge/templates.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct KnowledgeBasePaths {
    std::string lexicon, homophones, schemata, templates;
};

struct LoadedBases {
    punforge::Lexicon lexicon;
    punforge::HomophoneBase homophones;
    punforge::SchemaSet schemata;
    punforge::TemplateSet templates;
};

LoadedBases load_bases(const KnowledgeBasePaths& paths) {
    LoadedBases kb;
    kb.lexicon = punforge::parse_lexicon(slurp(paths.lexicon), paths.lexicon);
    kb.homophones =
        punforge::parse_homophone_base(slurp(paths.homophones), kb.lexicon, paths.homophones);
    kb.schemata = punforge::parse_schemata(slurp(paths.schemata), paths.schemata);
    kb.templates = punforge::parse_templates(slurp(paths.templates), paths.templates);
    return kb;
}

void add_kb_options(CLI::App* cmd, KnowledgeBasePaths& paths) {
    cmd->add_option("--lexicon", paths.lexicon, "lexicon file")->required();
    cmd->add_option("--homophones", paths.homophones, "homophone pair file")->required();
    cmd->add_option("--schemata", paths.schemata, "schema definitions file")->required();
    cmd->add_option("--templates", paths.templates, "template definitions file")->required();
}

void add_gen_options(CLI::App* cmd, punforge::GenerationConfig& config, std::string& np,
                     std::string& schema, std::string& tpl) {
    cmd->add_option("--np", np, "pin the noun phrase");
    cmd->add_option("--schema", schema, "pin the schema");
    cmd->add_option("--template", tpl, "pin the template");
    cmd->add_option("--seed", config.seed, "seed for --sample draws");
    cmd->add_flag("--sample", config.sample, "draw uniformly instead of exhaustive output");
    cmd->add_option("--max", [&config](const CLI::results_t& r) {
        config.max_riddles = std::stoi(r[0]);
        return true;
    }, "emit at most N riddles")->expected(1);
    cmd->add_option("--threshold", [&config](const CLI::results_t& r) {
        config.score_threshold = std::stod(r[0]);
        return true;
    }, "drop riddles scoring below X")->expected(1);
    cmd->add_flag("--show-rejected", config.show_rejected, "also emit rejected candidates");
    cmd->add_option("--w-allit", config.weights.w_alliteration, "alliteration weight");
    cmd->add_option("--w-rhyme", config.weights.w_rhyme, "rhyme weight");
    cmd->add_option("--w-funny", config.weights.w_funny_letters, "funny-letter weight");
    cmd->add_option("--w-length", config.weights.w_length_penalty, "length-penalty weight");
    cmd->add_option("--len-lo", config.weights.question_len_lo, "shortest comfortable question");
    cmd->add_option("--len-hi", config.weights.question_len_hi, "longest comfortable question");
}

void apply_filters(punforge::GenerationConfig& config, const std::string& np,
                   const std::string& schema, const std::string& tpl) {
    if (!np.empty()) config.np_filter = np;
    if (!schema.empty()) config.schema_filter = schema;
    if (!tpl.empty()) config.template_filter = tpl;
}

void check_filters(const punforge::GenerationConfig& config, const LoadedBases& kb) {
    if (config.np_filter && !kb.lexicon.contains(*config.np_filter))
        throw std::runtime_error("--np names an unknown lexeme: " + *config.np_filter);
    if (config.schema_filter && !kb.schemata.find(*config.schema_filter))
        throw std::runtime_error("--schema names an unknown schema: " + *config.schema_filter);
    if (config.template_filter && !kb.templates.find(*config.template_filter))
        throw std::runtime_error("--template names an unknown template: " + *config.template_filter);
}

int run_validate(const std::vector<std::string>& paths) {
    // Files are recognized by their first directive.
    std::vector<std::pair<std::string, std::string>> docs;
    for (const auto& path : paths) docs.emplace_back(path, slurp(path));
    auto kind_of = [](const std::string& text) -> std::string {
        std::istringstream is(text);
        std::string line;
        while (std::getline(is, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream ls(line);
            std::string first;
            if (ls >> first) {
                if (first == "lexeme") return "lexicon";
                if (first == "pair") return "homophones";
                if (first == "schema") return "schemata";
                if (first == "template") return "templates";
                return "unknown";
            }
        }
        return "empty";
    };

    int violations = 0;
    punforge::Lexicon lexicon;
    bool have_lexicon = false;

    auto report = [&](const std::string& where, const std::string& msg, bool advisory) {
        std::cout << (advisory ? "warning: " : "error: ") << where << ": " << msg << '\n';
        ++violations;
    };

    for (const auto& [path, text] : docs) {
        if (kind_of(text) != "lexicon") continue;
        try {
            lexicon = punforge::parse_lexicon(text, path);
            have_lexicon = true;
            for (const auto& [id, entry] : lexicon.entries())
                for (const auto& v : punforge::validate_entry(entry, lexicon))
                    if (v.advisory) report(path + ": " + v.where, v.message, true);
        } catch (const punforge::ParseError& e) {
            report(path, e.what(), false);
        }
    }
    for (const auto& [path, text] : docs) {
        const std::string kind = kind_of(text);
        try {
            if (kind == "homophones") {
                if (!have_lexicon) throw std::runtime_error("homophone file needs a lexicon");
                auto base = punforge::parse_homophone_base(text, lexicon, path);
                for (const auto& pair : base.pairs())
                    for (const auto& v : punforge::lint_pair(pair, lexicon))
                        report(path + ": " + v.where, v.message, v.advisory);
            } else if (kind == "schemata") {
                punforge::parse_schemata(text, path);
            } else if (kind == "templates") {
                punforge::parse_templates(text, path);
            } else if (kind == "unknown") {
                throw std::runtime_error("unrecognized file format");
            }
        } catch (const std::exception& e) {
            report(path, e.what(), false);
        }
    }
    if (violations == 0) std::cout << "all inputs clean\n";
    return std::min(violations, 125);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"punforge: schema-driven punning riddle generator"};
    app.require_subcommand(1);

    KnowledgeBasePaths paths;
    punforge::GenerationConfig config;
    std::string np_pin, schema_pin, template_pin, format = "text";

    auto* gen = app.add_subcommand("gen", "generate riddles");
    add_kb_options(gen, paths);
    add_gen_options(gen, config, np_pin, schema_pin, template_pin);
    gen->add_option("--format", format, "text or records")
        ->check(CLI::IsMember({"text", "records"}));

    auto* validate = app.add_subcommand("validate", "parse and lint knowledge bases");
    std::vector<std::string> validate_paths;
    validate->add_option("paths", validate_paths, "files to check")->required();

    auto* explain_cmd = app.add_subcommand("explain", "trace one generated riddle");
    KnowledgeBasePaths explain_paths;
    punforge::GenerationConfig explain_config;
    std::string enp, eschema, etpl;
    int explain_id = 0;
    add_kb_options(explain_cmd, explain_paths);
    add_gen_options(explain_cmd, explain_config, enp, eschema, etpl);
    explain_cmd->add_option("--id", explain_id, "riddle index in the gen output")->required();

    auto* report_cmd = app.add_subcommand("report", "aggregate judged ratings");
    std::string ratings_path, by = "schema", trim_path, uni_schemata, uni_templates;
    report_cmd->add_option("--ratings", ratings_path, "ratings file")->required();
    report_cmd->add_option("--by", by, "grouping: schema|template|pair|phrase")
        ->check(CLI::IsMember({"schema", "template", "pair", "phrase"}));
    report_cmd->add_option("--trim", trim_path, "trim rules file");
    report_cmd->add_option("--schemata", uni_schemata, "schema definitions for zero rows");
    report_cmd->add_option("--templates", uni_templates, "template definitions for zero rows");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            apply_filters(config, np_pin, schema_pin, template_pin);
            if (config.max_riddles && *config.max_riddles < 1)
                throw std::runtime_error("--max wants a count of at least 1");
            LoadedBases kb = load_bases(paths);
            check_filters(config, kb);
            auto result =
                punforge::generate(config, kb.lexicon, kb.homophones, kb.schemata, kb.templates);
            std::cout << (format == "records"
                              ? punforge::render_records(result, config.show_rejected)
                              : punforge::render_text(result, config.show_rejected));
            return 0;
        }
        if (validate->parsed()) return run_validate(validate_paths);
        if (explain_cmd->parsed()) {
            apply_filters(explain_config, enp, eschema, etpl);
            LoadedBases kb = load_bases(explain_paths);
            check_filters(explain_config, kb);
            explain_config.show_rejected = false;
            auto result = punforge::generate(explain_config, kb.lexicon, kb.homophones,
                                             kb.schemata, kb.templates);
            if (explain_id < 0 || explain_id >= static_cast<int>(result.riddles.size())) {
                std::cerr << "no riddle with index " << explain_id << " (run produced "
                          << result.riddles.size() << ")\n";
                return 1;
            }
            std::cout << punforge::explain(result.riddles[explain_id]);
            return 0;
        }
        if (report_cmd->parsed()) {
            auto records = punforge::parse_ratings(slurp(ratings_path), ratings_path);
            std::vector<std::string> known_schemata, known_templates;
            if (!uni_schemata.empty()) {
                auto set = punforge::parse_schemata(slurp(uni_schemata), uni_schemata);
                for (const auto& s : set.all()) known_schemata.push_back(s.name);
            }
            if (!uni_templates.empty()) {
                auto set = punforge::parse_templates(slurp(uni_templates), uni_templates);
                for (const auto& t : set.all()) known_templates.push_back(t.name);
            }
            auto grouping = punforge::grouping_from_string(by);
            std::optional<punforge::TrimOutcome> trimmed;
            const std::vector<punforge::RatingRecord>* view = &records;
            if (!trim_path.empty()) {
                auto rules = punforge::parse_trim_rules(slurp(trim_path), trim_path);
                trimmed = punforge::apply_trim(records, rules, known_schemata, known_templates);
                view = &trimmed->surviving;
            }
            std::vector<std::string> universe;
            if (*grouping == punforge::Grouping::Schema) universe = known_schemata;
            else if (*grouping == punforge::Grouping::Template) universe = known_templates;
            std::cout << punforge::render_table(punforge::aggregate(*view, *grouping, universe));
            if (trimmed) {
                std::cout << "Mean before trimming: " << punforge::round1(trimmed->mean_before)
                          << '\n';
                if (trimmed->mean_after)
                    std::cout << "Mean after trimming: " << punforge::round1(*trimmed->mean_after)
                              << '\n';
                else
                    std::cout << "Mean after trimming: (no surviving jokes)\n";
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "punforge: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
