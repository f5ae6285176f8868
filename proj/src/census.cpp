#include "ulink/census.hpp"

#include <fstream>

namespace ulink {

namespace {

std::vector<std::string> split_csv(const std::string& line, int lineno) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char ch = line[i];
        if (quoted) {
            if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (ch == '"') {
                quoted = false;
            } else {
                cur += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            out.push_back(std::move(cur));
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    if (quoted) throw DiagramError("census line " + std::to_string(lineno) + ": unterminated quote");
    out.push_back(std::move(cur));
    return out;
}

}  // namespace

std::vector<CensusEntry> parse_census(std::istream& in) {
    std::vector<CensusEntry> out;
    std::string line;
    int lineno = 0;
    bool header = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto fields = split_csv(line, lineno);
        if (!header) {
            if (fields.size() != 2 || fields[0] != "name" || fields[1] != "code")
                throw DiagramError("census header must be name,code");
            header = true;
            continue;
        }
        if (fields.size() != 2) throw DiagramError("census line " + std::to_string(lineno) + ": expected 2 fields");
        try {
            out.push_back({fields[0], fields[1], parse_diagram(fields[1])});
        } catch (const DiagramError& e) {
            throw DiagramError("census line " + std::to_string(lineno) + " (" + fields[0] + "): " + e.what());
        }
    }
    if (!header) throw DiagramError("census file is empty");
    return out;
}

std::vector<CensusEntry> load_census(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    return parse_census(in);
}

std::string default_census_path() { return std::string(ULINK_CENSUS_DIR) + "/knots7.csv"; }

}  // namespace ulink
