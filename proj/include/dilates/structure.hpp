#pragma once

#include <cstddef>
#include <vector>

#include "dilates/pointset.hpp"

namespace dilates {

// Primitive integer vector: coordinate gcd 1, first nonzero coordinate
// positive. Serves both as a line direction and as a hyperplane normal.
struct Direction {
    Point v;

    bool operator==(const Direction&) const = default;
};

// Normalizes an arbitrary nonzero vector to the conventions above.
Direction make_direction(Point v);

enum class CoverKind { lines, hyperplanes };

struct CoverReport {
    CoverKind kind = CoverKind::lines;
    std::size_t count = 0;
    Direction witness;               // direction of the lines / normal of the hyperplanes
    std::vector<PointSet> classes;   // the partition realizing the count
};

// Least number of parallel lines covering A, |A| >= 2. The minimum over all
// directions is attained on a pairwise-difference direction, so those are the
// candidates; ties resolve to the lexicographically least direction.
CoverReport line_cover_number(const PointSet& a);

// Number of parallel hyperplanes orthogonal to `normal` needed to cover A,
// i.e. the number of distinct values of <normal, a>.
std::size_t hyperplane_cover_count(const PointSet& a, const Direction& normal);

// Least hyperplane cover over all normals, dim >= 2 and affine_rank = dim.
// Candidate normals come from (d-1)-subsets of linearly independent pairwise
// differences; every optimal normal arises that way.
CoverReport min_hyperplane_cover(const PointSet& a);

}  // namespace dilates
