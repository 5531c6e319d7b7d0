#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "dilates/pointset.hpp"

namespace dilates {

// Text format: one point per line, whitespace-separated integers, '#' starts
// a comment line, blank lines ignored. The first data line fixes the
// dimension. Duplicate points are dropped with a warning naming the line.
struct ParsedPointSet {
    PointSet set;
    std::vector<std::string> warnings;
};

ParsedPointSet parse_point_set(std::istream& in);
ParsedPointSet parse_point_set_file(const std::string& path);

void write_point_set(std::ostream& out, const PointSet& a);

// FNV-1a over the canonical serialization; identifies the set independent of
// comment layout or point order in the source file.
std::string point_set_digest(const PointSet& a);

std::string fnv1a64_hex(std::string_view bytes);

}  // namespace dilates
