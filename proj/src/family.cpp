#include "ucf/family.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace ucf {

Family Family::parse(std::istream& in) {
    std::vector<ElementSet> sets;
    int k = -1;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;

        std::istringstream ls(line);
        ElementSet s;
        int label = 0;
        int count = 0;
        while (ls >> label) {
            if (label < 1 || label > ElementSet::max_label)
                throw ParseError(lineno, "element label " + std::to_string(label) + " outside [1,64]");
            if (s.contains(label))
                throw ParseError(lineno, "repeated element " + std::to_string(label) + " within a set");
            s.add(label);
            ++count;
        }
        if (!ls.eof()) throw ParseError(lineno, "malformed element label");
        if (count == 0) continue;

        if (k == -1) k = count;
        if (count != k)
            throw ParseError(lineno, "set of size " + std::to_string(count) +
                                         " in a family of " + std::to_string(k) + "-sets");
        for (const ElementSet& t : sets)
            if (t == s) throw ParseError(lineno, "duplicate set " + s.to_string());
        sets.push_back(s);
    }
    if (k == -1) throw ParseError(lineno, "no sets found");
    return Family(k, std::move(sets));
}

Family Family::parse_string(const std::string& text) {
    std::istringstream in(text);
    return parse(in);
}

std::string Family::format() const {
    std::string out;
    for (const ElementSet& s : sets_) {
        bool first = true;
        for (int x : s.elements()) {
            if (!first) out += ' ';
            out += std::to_string(x);
            first = false;
        }
        out += '\n';
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Family& f) { return os << f.format(); }

}  // namespace ucf
