#include "dilates/pointset_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "dilates/errors.hpp"

namespace dilates {

namespace {

bool parse_int(std::string_view tok, Int& out) {
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc{} && ptr == tok.data() + tok.size();
}

}  // namespace

ParsedPointSet parse_point_set(std::istream& in) {
    std::vector<Point> pts;
    std::vector<std::string> warnings;
    std::map<Point, std::size_t> seen;  // point -> first line
    std::size_t dim = 0;
    std::size_t line_no = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream fields(line);
        Point p;
        std::string tok;
        while (fields >> tok) {
            if (tok.front() == '#') break;
            Int value;
            if (!parse_int(tok, value))
                throw ParseError("'" + tok + "' is not a 64-bit integer", line_no);
            p.push_back(value);
        }
        if (p.empty()) continue;
        if (dim == 0) {
            dim = p.size();
        } else if (p.size() != dim) {
            throw ParseError("expected " + std::to_string(dim) + " coordinates, got " +
                                 std::to_string(p.size()),
                             line_no);
        }
        auto [it, inserted] = seen.emplace(p, line_no);
        if (!inserted) {
            warnings.push_back("line " + std::to_string(line_no) +
                               ": duplicate point, first seen on line " +
                               std::to_string(it->second));
        } else {
            pts.push_back(std::move(p));
        }
    }
    if (pts.empty()) throw ParseError("no data lines", line_no == 0 ? 1 : line_no);
    ParsedPointSet out;
    out.set = PointSet(static_cast<int>(dim), std::move(pts));
    out.warnings = std::move(warnings);
    return out;
}

ParsedPointSet parse_point_set_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_point_set(in);
}

void write_point_set(std::ostream& out, const PointSet& a) {
    for (const Point& p : a.points()) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i) out << ' ';
            out << p[i];
        }
        out << '\n';
    }
}

std::string fnv1a64_hex(std::string_view bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

std::string point_set_digest(const PointSet& a) {
    std::ostringstream buf;
    buf << a.dim() << ';';
    write_point_set(buf, a);
    return fnv1a64_hex(buf.str());
}

}  // namespace dilates
