#pragma once

#include <iosfwd>

#include "arrlat/blowup.hpp"
#include "arrlat/compare.hpp"

namespace arrlat {

struct ParseError : std::runtime_error {
    ParseError(int line_, const std::string& what) : std::runtime_error(what), line(line_) {}
    int line;  // 1-based source line, 0 when the whole file is at fault
};

struct ParsedFile {
    std::vector<Triple> raw;
    std::vector<int> source_lines;  // 1-based file line of each triple
};

// Grammar: '#' starts a comment, non-blank lines hold three integers.
ParsedFile parse_arr_text(const std::string& text);

// Parse plus build_arrangement; duplicate reports name 1-based file lines.
Arrangement arrangement_from_text(const std::string& text);
Arrangement parse_file(const std::string& path);

std::string emit_dot(const WeightedIncidenceGraph& g);

// Exit codes: 0 success (isomorphic for compare), 1 not isomorphic, 2 input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args);

}  // namespace arrlat
