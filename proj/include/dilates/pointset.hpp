#pragma once

#include <cstddef>
#include <vector>

#include "dilates/checked.hpp"
#include "dilates/matrix.hpp"

namespace dilates {

using Point = std::vector<Int>;

// Finite subset of Z^d. Points are kept lexicographically sorted and
// deduplicated, so equality, iteration order and serialization are canonical.
class PointSet {
public:
    PointSet() = default;
    PointSet(int dim, std::vector<Point> pts);

    int dim() const { return dim_; }
    std::size_t size() const { return pts_.size(); }
    bool empty() const { return pts_.empty(); }
    const std::vector<Point>& points() const { return pts_; }
    bool contains(const Point& p) const;

    bool operator==(const PointSet&) const = default;

private:
    int dim_ = 0;
    std::vector<Point> pts_;
};

struct PointHash {
    std::size_t operator()(const Point& p) const;
};

struct PointSetHash {
    std::size_t operator()(const PointSet& s) const;
};

PointSet translate(const PointSet& a, const Point& x);

// {q*a : a in A}, q != 0.
PointSet dilate(const PointSet& a, Int q);

// {a + b : a in A, b in B}. Deduplication is hash-based; the sorted-merge
// route lives in the test oracles so the two can check each other.
PointSet sumset(const PointSet& a, const PointSet& b);

// A + q*A for |q| > 1, the quantity everything else bounds.
PointSet sum_of_dilates(const PointSet& a, Int q);

// Dimension of the affine hull over Q. Exact, no floating point.
std::size_t affine_rank(const PointSet& a);

// Image under a nonsingular d x d integer matrix.
PointSet apply_linear(const PointSet& a, const IntMatrix& m);

// Representative of the orbit of A under translation, coordinate permutation
// and per-axis reflection: min corner at the origin, lexicographically least
// point list over the whole symmetry group. Idempotent, and |A + q*A| is
// invariant under every map involved.
PointSet canonical_form(const PointSet& a);

}  // namespace dilates
