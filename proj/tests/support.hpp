#ifndef PUNFORGE_TESTS_SUPPORT_HPP
#define PUNFORGE_TESTS_SUPPORT_HPP

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "punforge/homophones.hpp"
#include "punforge/lexicon.hpp"
#include "punforge/schema.hpp"
#include "punforge/templates.hpp"

namespace punforge::tests {

inline std::string repo_root() {
    const char* env = std::getenv("PUNFORGE_ROOT");
    return env ? env : ".";
}

inline std::string read_file(const std::string& relative) {
    std::string path = repo_root() + "/" + relative;
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("missing test input: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct Bases {
    Lexicon lexicon;
    HomophoneBase homophones;
    SchemaSet schemata;
    TemplateSet templates;
};

inline Bases load_fixture(const std::string& lex, const std::string& hom) {
    Bases b;
    b.lexicon = parse_lexicon(read_file(lex), lex);
    b.homophones = parse_homophone_base(read_file(hom), b.lexicon, hom);
    b.schemata = parse_schemata(read_file("data/schemata.def"));
    b.templates = parse_templates(read_file("data/templates.def"));
    return b;
}

}  // namespace punforge::tests

#endif
