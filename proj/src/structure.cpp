#include "dilates/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "dilates/errors.hpp"

namespace dilates {

namespace {

Int vec_gcd(const Point& v) {
    Int g = 0;
    for (Int c : v) g = std::gcd(g, checked_abs(c));
    return g;
}

// Lexicographically ordered set of primitive pairwise-difference directions.
std::set<Point> difference_directions(const PointSet& a) {
    std::set<Point> dirs;
    const auto& pts = a.points();
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            Point d(pts[i].size());
            for (std::size_t k = 0; k < d.size(); ++k)
                d[k] = checked_sub(pts[j][k], pts[i][k]);
            dirs.insert(make_direction(std::move(d)).v);
        }
    return dirs;
}

// Key constant along direction v and distinct across parallel lines: the 2x2
// minors of (p | v) against v's leading coordinate.
Point line_class_key(const Point& p, const Point& v, std::size_t lead) {
    Point key;
    key.reserve(p.size() - 1);
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (j == lead) continue;
        key.push_back(checked_sub(checked_mul(p[j], v[lead]), checked_mul(p[lead], v[j])));
    }
    return key;
}

std::size_t leading_index(const Point& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) return i;
    throw std::invalid_argument("direction is zero");
}

// Signed maximal minors of a (d-1) x d matrix: orthogonal to every row,
// nonzero iff the rows are linearly independent.
Point generalized_cross(const IntMatrix& m) {
    const std::size_t d = m.cols;
    Point normal(d, 0);
    for (std::size_t drop = 0; drop < d; ++drop) {
        IntMatrix minor(d - 1, d - 1);
        for (std::size_t i = 0; i < d - 1; ++i) {
            std::size_t jj = 0;
            for (std::size_t j = 0; j < d; ++j) {
                if (j == drop) continue;
                minor(i, jj++) = m(i, j);
            }
        }
        Int det = bareiss_det(std::move(minor));
        normal[drop] = (drop % 2 == 0) ? det : (det == 0 ? Int{0} : checked_neg(det));
    }
    return normal;
}

}  // namespace

Direction make_direction(Point v) {
    Int g = vec_gcd(v);
    if (g == 0) throw std::invalid_argument("make_direction: zero vector");
    for (Int& c : v) c = exact_div(c, g);
    for (Int c : v) {
        if (c > 0) break;
        if (c < 0) {
            for (Int& x : v) x = checked_neg(x);
            break;
        }
    }
    return Direction{std::move(v)};
}

CoverReport line_cover_number(const PointSet& a) {
    if (a.size() < 2) throw std::invalid_argument("line_cover_number: needs at least 2 points");
    std::set<Point> dirs = difference_directions(a);
    std::size_t best_count = a.size() + 1;
    Point best_dir;
    for (const Point& v : dirs) {
        std::size_t lead = leading_index(v);
        std::set<Point> keys;
        for (const Point& p : a.points()) keys.insert(line_class_key(p, v, lead));
        if (keys.size() < best_count) {  // ties keep the lex-least direction
            best_count = keys.size();
            best_dir = v;
        }
    }
    CoverReport rep;
    rep.kind = CoverKind::lines;
    rep.count = best_count;
    rep.witness = Direction{best_dir};
    std::size_t lead = leading_index(best_dir);
    std::map<Point, std::vector<Point>> classes;
    for (const Point& p : a.points()) classes[line_class_key(p, best_dir, lead)].push_back(p);
    for (auto& [key, pts] : classes) rep.classes.emplace_back(a.dim(), std::move(pts));
    return rep;
}

std::size_t hyperplane_cover_count(const PointSet& a, const Direction& normal) {
    if (a.empty()) throw std::invalid_argument("hyperplane_cover_count: empty set");
    if (static_cast<int>(normal.v.size()) != a.dim())
        throw std::invalid_argument("hyperplane_cover_count: dimension mismatch");
    std::set<Int> values;
    for (const Point& p : a.points()) {
        Int dot = 0;
        for (std::size_t i = 0; i < p.size(); ++i)
            dot = checked_add(dot, checked_mul(normal.v[i], p[i]));
        values.insert(dot);
    }
    return values.size();
}

CoverReport min_hyperplane_cover(const PointSet& a) {
    const std::size_t d = static_cast<std::size_t>(a.dim());
    if (d < 2) throw std::invalid_argument("min_hyperplane_cover: requires dimension >= 2");
    if (affine_rank(a) != d)
        throw HypothesisError("min_hyperplane_cover: affine rank below dimension");

    std::set<Point> dirset = difference_directions(a);
    std::vector<Point> diffs(dirset.begin(), dirset.end());

    // Every optimal normal is orthogonal to some d-1 linearly independent
    // pairwise differences, so these candidates suffice.
    std::set<Point> normals;
    std::vector<std::size_t> pick(d - 1);
    std::iota(pick.begin(), pick.end(), 0);
    if (diffs.size() >= d - 1) {
        while (true) {
            IntMatrix m(d - 1, d);
            for (std::size_t i = 0; i < d - 1; ++i)
                for (std::size_t j = 0; j < d; ++j) m(i, j) = diffs[pick[i]][j];
            Point n = generalized_cross(m);
            if (std::any_of(n.begin(), n.end(), [](Int c) { return c != 0; }))
                normals.insert(make_direction(std::move(n)).v);
            // next (d-1)-combination
            std::size_t i = d - 1;
            while (i > 0 && pick[i - 1] == diffs.size() - (d - 1) + (i - 1)) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < d - 1; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    if (normals.empty())
        throw HypothesisError("min_hyperplane_cover: no independent difference family");

    std::size_t best_count = a.size() + 1;
    Point best_normal;
    for (const Point& n : normals) {
        std::size_t c = hyperplane_cover_count(a, Direction{n});
        if (c < best_count) {
            best_count = c;
            best_normal = n;
        }
    }
    CoverReport rep;
    rep.kind = CoverKind::hyperplanes;
    rep.count = best_count;
    rep.witness = Direction{best_normal};
    std::map<Int, std::vector<Point>> classes;
    for (const Point& p : a.points()) {
        Int dot = 0;
        for (std::size_t i = 0; i < p.size(); ++i)
            dot = checked_add(dot, checked_mul(best_normal[i], p[i]));
        classes[dot].push_back(p);
    }
    for (auto& [value, pts] : classes) rep.classes.emplace_back(a.dim(), std::move(pts));
    return rep;
}

}  // namespace dilates
