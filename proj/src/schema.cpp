#include "punforge/schema.hpp"

#include <algorithm>
#include <functional>

#include "textio.hpp"

namespace punforge {

namespace {

using textio::fields;
using textio::is_identifier;

void validate_schema(const Schema& s, const std::string& source, int line) {
    auto fail = [&](const std::string& msg) { throw ParseError(source, line, msg); };
    auto declared = [&](const std::string& v) {
        return std::find(s.variables.begin(), s.variables.end(), v) != s.variables.end();
    };

    if (s.np_var.empty()) fail("schema '" + s.name + "' lacks a constituents line");
    for (const auto& v : s.variables)
        if (!is_identifier(v) && v.find_first_of(" \t") != std::string::npos)
            fail("bad variable name '" + v + "'");

    auto check_declared = [&](const std::string& v, const std::string& where) {
        if (!declared(v)) fail("undeclared variable '" + v + "' in " + where);
    };
    check_declared(s.np_var, "constituents");
    for (const auto& v : s.constituents) check_declared(v, "constituents");
    for (const auto& [u, v] : s.homophone_links) {
        check_declared(u, "homophone link");
        check_declared(v, "homophone link");
    }
    for (const auto& [u, v] : s.identity_links) {
        check_declared(u, "identity link");
        check_declared(v, "identity link");
    }
    for (const auto& link : s.char_links) {
        check_declared(link.char_var, "char link");
        check_declared(link.source_var, "char link");
        if (!s.char_vars.count(link.char_var))
            fail("char link target '" + link.char_var + "' is not a characteristic variable");
        if (s.char_vars.count(link.source_var))
            fail("char link source '" + link.source_var + "' must be a key variable");
    }
    for (const auto& v : s.punchline_recipe) {
        check_declared(v, "punchline");
        if (s.char_vars.count(v)) fail("punchline variable '" + v + "' must be a key variable");
    }
    if (s.punchline_recipe.empty()) fail("schema '" + s.name + "' lacks a punchline recipe");

    // Each characteristic variable carries exactly one characteristic link
    // and appears exactly once among the question slots.
    for (const auto& cv : s.char_vars) {
        int links = 0;
        for (const auto& link : s.char_links) links += (link.char_var == cv);
        if (links != 1)
            fail("characteristic variable '" + cv + "' has " + std::to_string(links) +
                 " characteristic links (wants exactly 1)");
        int slots = 0;
        for (const auto& q : s.question_slots) slots += (q == cv);
        if (slots != 1)
            fail("characteristic variable '" + cv + "' must fill exactly one question slot");
    }
    for (const auto& q : s.question_slots) {
        check_declared(q, "question_slots");
        if (!s.char_vars.count(q))
            fail("question slot '" + q + "' is not a characteristic variable");
    }

    // Key variables must be reachable from the np variable without using
    // characteristic links; otherwise they can never be bound.
    std::set<std::string> reached{s.np_var};
    bool grew = true;
    while (grew) {
        grew = false;
        auto reach = [&](const std::string& v) {
            if (!reached.count(v)) {
                reached.insert(v);
                grew = true;
            }
        };
        if (reached.count(s.np_var))
            for (const auto& v : s.constituents) reach(v);
        for (const auto& [u, v] : s.homophone_links) {
            if (reached.count(u)) reach(v);
            if (reached.count(v)) reach(u);
        }
        for (const auto& [u, v] : s.identity_links) {
            if (reached.count(u)) reach(v);
            if (reached.count(v)) reach(u);
        }
    }
    for (const auto& v : s.variables)
        if (!s.char_vars.count(v) && !reached.count(v))
            fail("key variable '" + v + "' is unreachable from the np variable");
}

}  // namespace

const Schema::CharLink& Schema::char_link_for(const std::string& char_var) const {
    for (const auto& link : char_links)
        if (link.char_var == char_var) return link;
    throw std::invalid_argument("no characteristic link for variable " + char_var);
}

void SchemaSet::add(Schema schema) {
    if (find(schema.name)) throw std::invalid_argument("duplicate schema: " + schema.name);
    schemata_.push_back(std::move(schema));
}

const Schema& SchemaSet::at(const std::string& name) const {
    const Schema* s = find(name);
    if (!s) throw std::invalid_argument("unknown schema: " + name);
    return *s;
}

const Schema* SchemaSet::find(const std::string& name) const {
    for (const auto& s : schemata_)
        if (s.name == name) return &s;
    return nullptr;
}

SchemaSet parse_schemata(const std::string& text, const std::string& source) {
    SchemaSet set;
    Schema current;
    bool open = false;
    int open_line = 0;

    auto finish = [&]() {
        if (!open) return;
        validate_schema(current, source, open_line);
        try {
            set.add(std::move(current));
        } catch (const std::invalid_argument& e) {
            throw ParseError(source, open_line, e.what());
        }
        current = Schema{};
        open = false;
    };

    for (const auto& line : textio::read_lines(text)) {
        if (line.text.empty()) continue;
        auto f = fields(line, source);
        const std::string& key = f[0];
        if (key == "schema") {
            finish();
            if (f.size() != 2) throw ParseError(source, line.number, "expected 'schema <name>'");
            current.name = f[1];
            open = true;
            open_line = line.number;
            continue;
        }
        if (!open) throw ParseError(source, line.number, "expected 'schema <name>' first");
        if (key == "var") {
            if (f.size() != 3 || (f[2] != "key" && f[2] != "char"))
                throw ParseError(source, line.number, "expected 'var <name> key|char'");
            if (std::find(current.variables.begin(), current.variables.end(), f[1]) !=
                current.variables.end())
                throw ParseError(source, line.number, "duplicate variable '" + f[1] + "'");
            current.variables.push_back(f[1]);
            if (f[2] == "char") current.char_vars.insert(f[1]);
        } else if (key == "constituents") {
            if (f.size() < 5 || f[2] != "->")
                throw ParseError(source, line.number,
                                 "expected 'constituents <np> -> <v1> <v2> ...'");
            if (!current.np_var.empty())
                throw ParseError(source, line.number, "duplicate constituents line");
            current.np_var = f[1];
            current.constituents.assign(f.begin() + 3, f.end());
        } else if (key == "link") {
            if (f.size() != 4 || (f[1] != "homophone" && f[1] != "identity"))
                throw ParseError(source, line.number, "expected 'link homophone|identity <u> <v>'");
            if (f[1] == "homophone")
                current.homophone_links.emplace_back(f[2], f[3]);
            else
                current.identity_links.emplace_back(f[2], f[3]);
        } else if (key == "char") {
            if (f.size() != 4 || f[2] != "from")
                throw ParseError(source, line.number, "expected 'char <cv> from <kv>'");
            current.char_links.push_back({f[1], f[3]});
        } else if (key == "punchline") {
            if (f.size() < 2) throw ParseError(source, line.number, "empty punchline recipe");
            current.punchline_recipe.assign(f.begin() + 1, f.end());
        } else if (key == "question_slots") {
            if (f.size() < 2) throw ParseError(source, line.number, "empty question_slots");
            current.question_slots.assign(f.begin() + 1, f.end());
        } else if (key == "provenance") {
            if (f.size() != 2 || (f[1] != "paper" && f[1] != "extrapolated"))
                throw ParseError(source, line.number, "expected 'provenance paper|extrapolated'");
            current.extrapolated = (f[1] == "extrapolated");
        } else {
            throw ParseError(source, line.number, "unknown schema directive '" + key + "'");
        }
    }
    finish();
    return set;
}

std::vector<PartialInstantiation> fit_np(const Schema& schema, const LexemeId& np,
                                         const Lexicon& lexicon, const HomophoneBase& base) {
    const LexicalEntry& entry = lexicon.at(np);
    if (entry.category != Category::Np)
        throw std::invalid_argument("lexeme '" + np + "' is not a noun phrase entry");
    if (entry.comp_lex.size() != schema.constituents.size())
        throw std::invalid_argument("comp_lex arity " + std::to_string(entry.comp_lex.size()) +
                                    " does not match schema '" + schema.name + "' (wants " +
                                    std::to_string(schema.constituents.size()) + ")");

    using Bindings = std::map<std::string, Binding>;
    Bindings seed;
    seed[schema.np_var] = Binding::lexeme(np);
    for (std::size_t i = 0; i < schema.constituents.size(); ++i)
        seed[schema.constituents[i]] = Binding::lexeme(entry.comp_lex[i]);

    std::vector<PartialInstantiation> out;
    std::function<void(Bindings, std::vector<PartialInstantiation::Substitution>)> search =
        [&](Bindings bindings, std::vector<PartialInstantiation::Substitution> subs) {
            // Propagate identity links to a fixed point.
            bool grew = true;
            while (grew) {
                grew = false;
                for (const auto& [u, v] : schema.identity_links) {
                    bool bu = bindings.count(u), bv = bindings.count(v);
                    if (bu && bv) {
                        if (!(bindings[u] == bindings[v])) return;  // unsatisfiable
                    } else if (bu) {
                        bindings[v] = bindings[u];
                        grew = true;
                    } else if (bv) {
                        bindings[u] = bindings[v];
                        grew = true;
                    }
                }
            }
            // First homophone link not yet settled decides the branch.
            for (const auto& [u, v] : schema.homophone_links) {
                bool bu = bindings.count(u), bv = bindings.count(v);
                if (bu && bv) {
                    const auto& lu = bindings[u].items;
                    const auto& lv = bindings[v].items;
                    if (lu.size() != 1 || lv.size() != 1) return;
                    bool paired = false;
                    for (const auto& [partner, kind] : base.homophones_of(lu[0]))
                        paired |= (partner == lv[0]);
                    if (!paired) return;
                    continue;
                }
                if (!bu && !bv) continue;  // settled on a later pass
                const std::string& bound = bu ? u : v;
                const std::string& free = bu ? v : u;
                const auto& lexs = bindings[bound].items;
                if (lexs.size() != 1) return;
                for (const auto& [partner, kind] : base.homophones_of(lexs[0])) {
                    Bindings next = bindings;
                    next[free] = Binding::lexeme(partner);
                    auto next_subs = subs;
                    next_subs.push_back({free, lexs[0], partner, kind});
                    search(std::move(next), std::move(next_subs));
                }
                return;
            }
            // All links settled; require every key variable bound.
            for (const auto& v : schema.variables)
                if (!schema.char_vars.count(v) && !bindings.count(v)) return;
            PartialInstantiation partial;
            partial.schema = schema.name;
            partial.bindings = std::move(bindings);
            partial.substitutions = std::move(subs);
            out.push_back(std::move(partial));
        };
    search(std::move(seed), {});
    return out;
}

}  // namespace punforge
