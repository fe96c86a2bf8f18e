#include "lhom/scx.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace lhom {

namespace {

struct Token {
    std::string text;
    int column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        size_t j = i;
        while (j < line.size() && line[j] != '#' &&
               !std::isspace(static_cast<unsigned char>(line[j])))
            ++j;
        out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

}  // namespace

Complex parse_scx(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool saw_content = false;
    std::optional<std::vector<std::string>> declared;
    std::vector<std::vector<std::string>> maximal;

    while (std::getline(in, line)) {
        ++lineno;
        std::vector<Token> toks = tokenize(line);
        if (toks.empty()) continue;
        if (!saw_content && toks[0].text == "vertices") {
            saw_content = true;
            std::vector<std::string> names;
            std::set<std::string> seen;
            for (size_t k = 1; k < toks.size(); ++k) {
                if (!seen.insert(toks[k].text).second)
                    throw ScxError(lineno, toks[k].column,
                                   "duplicate vertex '" + toks[k].text +
                                       "' in vertices header");
                names.push_back(toks[k].text);
            }
            declared = std::move(names);
            continue;
        }
        saw_content = true;
        std::vector<std::string> simplex;
        std::set<std::string> seen;
        for (const Token& t : toks) {
            if (!seen.insert(t.text).second)
                throw ScxError(lineno, t.column,
                               "duplicate vertex '" + t.text + "' in simplex");
            if (declared &&
                std::find(declared->begin(), declared->end(), t.text) == declared->end())
                throw ScxError(lineno, t.column,
                               "unknown vertex '" + t.text + "' not in vertices header");
            simplex.push_back(t.text);
        }
        maximal.push_back(std::move(simplex));
    }
    return build_complex(maximal, declared);
}

std::string emit_scx(const Complex& K) {
    std::ostringstream out;
    out << "vertices";
    for (const std::string& n : K.names()) out << " " << n;
    out << "\n";
    std::vector<Simplex> maxs = K.maximal_simplices();
    std::sort(maxs.begin(), maxs.end());
    for (const Simplex& s : maxs) {
        if (s.empty()) continue;  // phi is implicit
        for (size_t i = 0; i < s.size(); ++i)
            out << (i ? " " : "") << K.name(s[i]);
        out << "\n";
    }
    return out.str();
}

}  // namespace lhom
