#include "dilates/pointset.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace dilates {

PointSet::PointSet(int dim, std::vector<Point> pts) : dim_(dim), pts_(std::move(pts)) {
    if (dim_ < 1) throw std::invalid_argument("PointSet: dimension must be >= 1");
    for (const Point& p : pts_)
        if (static_cast<int>(p.size()) != dim_)
            throw std::invalid_argument("PointSet: point dimension mismatch");
    std::sort(pts_.begin(), pts_.end());
    pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
}

bool PointSet::contains(const Point& p) const {
    return std::binary_search(pts_.begin(), pts_.end(), p);
}

std::size_t PointHash::operator()(const Point& p) const {
    std::size_t h = 1469598103934665603ULL;
    for (Int c : p) {
        auto u = static_cast<std::uint64_t>(c);
        for (int k = 0; k < 8; ++k) {
            h ^= (u >> (8 * k)) & 0xff;
            h *= 1099511628211ULL;
        }
    }
    return h;
}

std::size_t PointSetHash::operator()(const PointSet& s) const {
    std::size_t h = static_cast<std::size_t>(s.dim()) * 0x9E3779B97F4A7C15ULL;
    PointHash ph;
    for (const Point& p : s.points()) h = h * 1099511628211ULL ^ ph(p);
    return h;
}

PointSet translate(const PointSet& a, const Point& x) {
    if (static_cast<int>(x.size()) != a.dim())
        throw std::invalid_argument("translate: dimension mismatch");
    std::vector<Point> out;
    out.reserve(a.size());
    for (const Point& p : a.points()) {
        Point q(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) q[i] = checked_add(p[i], x[i]);
        out.push_back(std::move(q));
    }
    PointSet r(a.dim(), std::move(out));
    if (r.size() != a.size()) throw std::logic_error("translate: cardinality changed");
    return r;
}

PointSet dilate(const PointSet& a, Int q) {
    if (q == 0) throw std::invalid_argument("dilate: q must be nonzero");
    std::vector<Point> out;
    out.reserve(a.size());
    for (const Point& p : a.points()) {
        Point s(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) s[i] = checked_mul(q, p[i]);
        out.push_back(std::move(s));
    }
    PointSet r(a.dim(), std::move(out));
    if (r.size() != a.size()) throw std::logic_error("dilate: cardinality changed");
    return r;
}

PointSet sumset(const PointSet& a, const PointSet& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("sumset: dimension mismatch");
    if (a.empty() || b.empty()) throw std::invalid_argument("sumset: empty operand");
    std::unordered_set<Point, PointHash> acc;
    acc.reserve(a.size() * b.size());
    const std::size_t d = static_cast<std::size_t>(a.dim());
    Point s(d);
    for (const Point& p : a.points())
        for (const Point& q : b.points()) {
            for (std::size_t i = 0; i < d; ++i) s[i] = checked_add(p[i], q[i]);
            acc.insert(s);
        }
    std::vector<Point> out(acc.begin(), acc.end());
    return PointSet(a.dim(), std::move(out));
}

PointSet sum_of_dilates(const PointSet& a, Int q) {
    if (checked_abs(q) <= 1) throw std::invalid_argument("sum_of_dilates: requires |q| > 1");
    return sumset(a, dilate(a, q));
}

std::size_t affine_rank(const PointSet& a) {
    if (a.empty()) throw std::invalid_argument("affine_rank: empty set");
    const std::size_t n = a.size();
    if (n == 1) return 0;
    const std::size_t d = static_cast<std::size_t>(a.dim());
    const Point& base = a.points().front();
    IntMatrix m(n - 1, d);
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 0; j < d; ++j)
            m(i - 1, j) = checked_sub(a.points()[i][j], base[j]);
    return bareiss_rank(std::move(m));
}

PointSet apply_linear(const PointSet& a, const IntMatrix& m) {
    if (m.rows != m.cols || m.rows != static_cast<std::size_t>(a.dim()))
        throw std::invalid_argument("apply_linear: matrix must be d x d");
    if (bareiss_det(m) == 0) throw std::invalid_argument("apply_linear: singular matrix");
    std::vector<Point> out;
    out.reserve(a.size());
    for (const Point& p : a.points()) out.push_back(mat_vec(m, p));
    PointSet r(a.dim(), std::move(out));
    if (r.size() != a.size()) throw std::logic_error("apply_linear: cardinality changed");
    return r;
}

namespace {

// Applies y[k] = sign_k * x[perm[k]], then shifts the min corner to 0 and
// sorts. Translation normalization makes the result independent of any
// translation of the input.
std::vector<Point> box_image(const std::vector<Point>& pts, const std::vector<std::size_t>& perm,
                             unsigned mask) {
    const std::size_t d = perm.size();
    std::vector<Point> out;
    out.reserve(pts.size());
    for (const Point& p : pts) {
        Point y(d);
        for (std::size_t k = 0; k < d; ++k) {
            Int c = p[perm[k]];
            y[k] = (mask >> k) & 1u ? checked_neg(c) : c;
        }
        out.push_back(std::move(y));
    }
    Point lo = out.front();
    for (const Point& p : out)
        for (std::size_t k = 0; k < d; ++k) lo[k] = std::min(lo[k], p[k]);
    for (Point& p : out)
        for (std::size_t k = 0; k < d; ++k) p[k] = checked_sub(p[k], lo[k]);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

PointSet canonical_form(const PointSet& a) {
    if (a.empty()) throw std::invalid_argument("canonical_form: empty set");
    const std::size_t d = static_cast<std::size_t>(a.dim());
    std::vector<std::size_t> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Point> best;
    bool have = false;
    do {
        for (unsigned mask = 0; mask < (1u << d); ++mask) {
            std::vector<Point> cand = box_image(a.points(), perm, mask);
            if (!have || cand < best) {
                best = std::move(cand);
                have = true;
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return PointSet(a.dim(), std::move(best));
}

}  // namespace dilates
