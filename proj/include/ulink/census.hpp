#pragma once

#include <istream>
#include <string>
#include <vector>

#include "ulink/diagram.hpp"

namespace ulink {

struct CensusEntry {
    std::string name;
    std::string code;
    LinkDiagram diagram;
};

// CSV with header `name,code`; fields may be double-quoted.
std::vector<CensusEntry> parse_census(std::istream& in);
std::vector<CensusEntry> load_census(const std::string& path);

// The bundled knots7.csv.
std::string default_census_path();

}  // namespace ulink
