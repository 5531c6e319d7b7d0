#include "dilates/lattice.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "dilates/errors.hpp"
#include "dilates/report.hpp"

namespace dilates {

namespace {

struct XGcd {
    Int g, p, q;  // p*a + q*b = g > 0
};

XGcd xgcd(Int a, Int b) {
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        Int quo = old_r / r;
        Int tmp = checked_sub(old_r, checked_mul(quo, r));
        old_r = r; r = tmp;
        tmp = checked_sub(old_s, checked_mul(quo, s));
        old_s = s; s = tmp;
        tmp = checked_sub(old_t, checked_mul(quo, t));
        old_t = t; t = tmp;
    }
    if (old_r < 0) {
        old_r = checked_neg(old_r);
        old_s = checked_neg(old_s);
        old_t = checked_neg(old_t);
    }
    return {old_r, old_s, old_t};
}

void negate_col(IntMatrix& m, std::size_t c) {
    for (std::size_t r = 0; r < m.rows; ++r) m(r, c) = checked_neg(m(r, c));
}

// col_k -= t * col_piv
void col_axpy(IntMatrix& m, std::size_t k, std::size_t piv, Int t) {
    if (t == 0) return;
    for (std::size_t r = 0; r < m.rows; ++r)
        m(r, k) = checked_sub(m(r, k), checked_mul(t, m(r, piv)));
}

}  // namespace

Int LatticeBasis::det() const {
    Int d = 1;
    for (std::size_t i = 0; i < basis.rows; ++i) d = checked_mul(d, basis(i, i));
    return d;
}

// Forward substitution down the lower triangle; membership iff every step
// divides exactly.
bool LatticeBasis::contains(const Point& v) const {
    if (static_cast<int>(v.size()) != dim) throw std::invalid_argument("contains: dimension mismatch");
    const std::size_t d = static_cast<std::size_t>(dim);
    std::vector<Int> y(d, 0);
    for (std::size_t i = 0; i < d; ++i) {
        Int rhs = v[i];
        for (std::size_t j = 0; j < i; ++j)
            rhs = checked_sub(rhs, checked_mul(basis(i, j), y[j]));
        if (rhs % basis(i, i) != 0) return false;
        y[i] = rhs / basis(i, i);
    }
    return true;
}

LatticeBasis hnf(const IntMatrix& gen) {
    if (gen.rows == 0) throw std::invalid_argument("hnf: empty matrix");
    IntMatrix m = gen;
    const std::size_t d = m.rows;
    if (m.cols < d) throw HypothesisError("hnf: generator columns have rank < d");
    for (std::size_t i = 0; i < d; ++i) {
        const std::size_t piv = i;
        std::size_t l = piv;
        while (l < m.cols && m(i, l) == 0) ++l;
        if (l == m.cols) throw HypothesisError("hnf: generator columns have rank < d");
        m.swap_cols(piv, l);
        if (m(i, piv) < 0) negate_col(m, piv);
        // Fold every column to the right into the pivot via gcd; the 2x2
        // column operation is unimodular so the lattice is unchanged.
        for (std::size_t k = piv + 1; k < m.cols; ++k) {
            if (m(i, k) == 0) continue;
            auto [g, p, q] = xgcd(m(i, piv), m(i, k));
            Int u = exact_div(m(i, piv), g);
            Int v = exact_div(m(i, k), g);
            for (std::size_t r = 0; r < m.rows; ++r) {
                Int cp = m(r, piv), ck = m(r, k);
                m(r, piv) = checked_add(checked_mul(p, cp), checked_mul(q, ck));
                m(r, k) = checked_sub(checked_mul(u, ck), checked_mul(v, cp));
            }
        }
        // Reduce this row's earlier entries into [0, pivot).
        for (std::size_t k = 0; k < piv; ++k)
            col_axpy(m, k, piv, floor_div(m(i, k), m(i, piv)));
    }
    LatticeBasis out;
    out.dim = static_cast<int>(d);
    out.basis = IntMatrix(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) out.basis(i, j) = m(i, j);
    return out;
}

LatticeBasis difference_lattice(const PointSet& a) {
    const std::size_t d = static_cast<std::size_t>(a.dim());
    if (affine_rank(a) != d)
        throw HypothesisError("difference_lattice: affine rank below dimension");
    const Point& anchor = a.points().front();
    IntMatrix gen(d, a.size() - 1);
    for (std::size_t c = 1; c < a.size(); ++c)
        for (std::size_t i = 0; i < d; ++i)
            gen(i, c - 1) = checked_sub(a.points()[c][i], anchor[i]);
    return hnf(gen);
}

bool is_reduced(const PointSet& a) { return difference_lattice(a).det() == 1; }

ReductionRecord reduce(const PointSet& a) {
    LatticeBasis lat = difference_lattice(a);
    const std::size_t d = static_cast<std::size_t>(a.dim());
    const Point anchor = a.points().front();
    std::vector<Point> out;
    out.reserve(a.size());
    for (const Point& p : a.points()) {
        // Solve L*y = p - anchor; the difference lies in the lattice by
        // construction, so every division is exact.
        Point y(d);
        for (std::size_t i = 0; i < d; ++i) {
            Int rhs = checked_sub(p[i], anchor[i]);
            for (std::size_t j = 0; j < i; ++j)
                rhs = checked_sub(rhs, checked_mul(lat.basis(i, j), y[j]));
            y[i] = exact_div(rhs, lat.basis(i, i));
        }
        out.push_back(std::move(y));
    }
    ReductionRecord rec;
    rec.input = a;
    rec.output = PointSet(a.dim(), std::move(out));
    rec.anchor = anchor;
    rec.transform = lat.basis;
    rec.det = lat.det();
    if (rec.output.size() != a.size()) throw std::logic_error("reduce: cardinality changed");
    return rec;
}

CosetPartition coset_partition(const PointSet& a, Int q) {
    if (checked_abs(q) <= 1) throw std::invalid_argument("coset_partition: requires |q| > 1");
    if (a.empty()) throw std::invalid_argument("coset_partition: empty set");
    const Int m = checked_abs(q);
    const std::size_t d = static_cast<std::size_t>(a.dim());
    std::map<Point, std::vector<Point>> groups;
    for (const Point& p : a.points()) {
        Point res(d);
        for (std::size_t i = 0; i < d; ++i) res[i] = euclid_mod(p[i], m);
        groups[res].push_back(p);
    }
    CosetPartition part;
    part.q = q;
    part.parts.reserve(groups.size());
    for (auto& [res, pts] : groups) {
        CosetPart cp;
        cp.residue = res;
        std::vector<Point> quo;
        quo.reserve(pts.size());
        for (const Point& p : pts) {
            Point y(d);
            for (std::size_t i = 0; i < d; ++i) y[i] = exact_div(checked_sub(p[i], res[i]), q);
            quo.push_back(std::move(y));
        }
        cp.part = PointSet(a.dim(), std::move(pts));
        cp.quotient = PointSet(a.dim(), std::move(quo));
        if (cp.quotient.size() != cp.part.size())
            throw std::logic_error("coset_partition: quotient cardinality changed");
        part.parts.push_back(std::move(cp));
    }
    return part;
}

bool is_fully_distributed(const PointSet& a, Int q) {
    if (checked_abs(q) <= 1) throw std::invalid_argument("is_fully_distributed: requires |q| > 1");
    auto part = coset_partition(a, q);
    auto total = checked_pow(checked_abs(q), a.dim());
    // |q|^d beyond the integer range cannot be met by a finite set anyway.
    if (!total) return false;
    return static_cast<Int>(part.parts.size()) == *total;
}

DichotomyVerdict coset_part_dichotomy(const PointSet& a, Int q, std::size_t part_index) {
    if (!is_reduced(a)) throw HypothesisError("coset_part_dichotomy: set is not reduced");
    CosetPartition parts = coset_partition(a, q);
    if (part_index >= parts.parts.size())
        throw std::invalid_argument("coset_part_dichotomy: part index out of range");

    const CosetPart& cp = parts.parts[part_index];
    DichotomyVerdict v;
    v.part_index = part_index;
    v.residue = cp.residue;
    v.part_size = cp.part.size();
    v.quotient_fully_distributed = is_fully_distributed(cp.quotient, q);
    v.sum_part_with_all = sumset(cp.part, dilate(a, q)).size();
    v.sum_part_with_self = sumset(cp.part, dilate(cp.part, q)).size();
    v.min_part_size = parts.parts.front().part.size();
    for (const CosetPart& w : parts.parts) v.min_part_size = std::min(v.min_part_size, w.part.size());
    v.growth_inequality = v.sum_part_with_all >= v.sum_part_with_self + v.min_part_size;

    if (!v.holds()) {
        Json extra;
        extra["q"] = q;
        extra["part_index"] = part_index;
        extra["residue"] = json_point(v.residue);
        extra["sum_part_with_all"] = v.sum_part_with_all;
        extra["sum_part_with_self"] = v.sum_part_with_self;
        extra["min_part_size"] = v.min_part_size;
        throw TheoremViolation("coset_part_dichotomy: neither arm holds", witness_json(a, extra));
    }
    return v;
}

}  // namespace dilates
