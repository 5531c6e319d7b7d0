#pragma once

// Shared generators and independent oracles. The oracles deliberately take
// different routes than the library (sorted-merge instead of hashing, minor
// expansion instead of elimination) so agreement means something.

#include <algorithm>
#include <numeric>
#include <vector>

#include "dilates/lattice.hpp"
#include "dilates/matrix.hpp"
#include "dilates/pointset.hpp"
#include "dilates/rng.hpp"

namespace testsupport {

using namespace dilates;

// Nested loop, sort, unique. No hashing anywhere.
inline std::vector<Point> sumset_sorted_oracle(const PointSet& a, const PointSet& b) {
    std::vector<Point> all;
    all.reserve(a.size() * b.size());
    for (const Point& p : a.points())
        for (const Point& q : b.points()) {
            Point s(p.size());
            for (std::size_t i = 0; i < p.size(); ++i) s[i] = checked_add(p[i], q[i]);
            all.push_back(std::move(s));
        }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

inline std::size_t sum_dilates_card_oracle(const PointSet& a, Int q) {
    std::vector<Point> all;
    all.reserve(a.size() * a.size());
    for (const Point& p : a.points())
        for (const Point& r : a.points()) {
            Point s(p.size());
            for (std::size_t i = 0; i < p.size(); ++i)
                s[i] = checked_add(p[i], checked_mul(q, r[i]));
            all.push_back(std::move(s));
        }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all.size();
}

// Determinant by Laplace expansion; independent of the elimination code.
inline Int laplace_det(const IntMatrix& m, std::vector<std::size_t> rows,
                       std::vector<std::size_t> cols) {
    if (rows.empty()) return 1;
    if (rows.size() == 1) return m(rows[0], cols[0]);
    Int det = 0;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        Int entry = m(rows[0], cols[k]);
        if (entry == 0) continue;
        std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
        std::vector<std::size_t> sub_cols;
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != k) sub_cols.push_back(cols[j]);
        Int minor = laplace_det(m, sub_rows, sub_cols);
        Int term = checked_mul(entry, minor);
        det = (k % 2 == 0) ? checked_add(det, term) : checked_sub(det, term);
    }
    return det;
}

// Rank = largest k admitting a nonzero k x k minor, checked exhaustively.
inline std::size_t minor_rank_oracle(const IntMatrix& m) {
    std::size_t cap = std::min(m.rows, m.cols);
    for (std::size_t k = cap; k >= 1; --k) {
        std::vector<std::size_t> rsel(k), csel(k);
        std::iota(rsel.begin(), rsel.end(), 0);
        bool more_rows = true;
        while (more_rows) {
            std::iota(csel.begin(), csel.end(), 0);
            bool more_cols = true;
            while (more_cols) {
                if (laplace_det(m, rsel, csel) != 0) return k;
                more_cols = false;
                for (std::size_t i = k; i-- > 0;) {
                    if (csel[i] != m.cols - k + i) {
                        ++csel[i];
                        for (std::size_t j = i + 1; j < k; ++j) csel[j] = csel[j - 1] + 1;
                        more_cols = true;
                        break;
                    }
                }
            }
            more_rows = false;
            for (std::size_t i = k; i-- > 0;) {
                if (rsel[i] != m.rows - k + i) {
                    ++rsel[i];
                    for (std::size_t j = i + 1; j < k; ++j) rsel[j] = rsel[j - 1] + 1;
                    more_rows = true;
                    break;
                }
            }
        }
    }
    return 0;
}

inline Point random_point(SplitMix64& rng, int d, Int lo, Int hi) {
    Point p(d);
    for (int i = 0; i < d; ++i)
        p[i] = lo + static_cast<Int>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
    return p;
}

// n distinct points in the box, any rank.
inline PointSet random_point_set(SplitMix64& rng, int d, std::size_t n, Int lo, Int hi) {
    std::vector<Point> pts;
    while (pts.size() < n) {
        Point p = random_point(rng, d, lo, hi);
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(std::move(p));
    }
    return PointSet(d, std::move(pts));
}

inline PointSet random_rank_d_set(SplitMix64& rng, int d, std::size_t n, Int lo, Int hi) {
    while (true) {
        PointSet a = random_point_set(rng, d, n, lo, hi);
        if (affine_rank(a) == static_cast<std::size_t>(d)) return a;
    }
}

// Product of random elementary row operations applied to the identity.
inline IntMatrix random_unimodular(SplitMix64& rng, int d, int ops) {
    IntMatrix m = IntMatrix::identity(static_cast<std::size_t>(d));
    for (int k = 0; k < ops; ++k) {
        std::size_t i = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(d)));
        std::size_t j = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(d)));
        switch (rng.below(3)) {
            case 0:
                if (i != j) {
                    Int c = static_cast<Int>(rng.below(5)) - 2;
                    for (std::size_t col = 0; col < m.cols; ++col)
                        m(i, col) = checked_add(m(i, col), checked_mul(c, m(j, col)));
                }
                break;
            case 1:
                m.swap_rows(i, j);
                break;
            default:
                for (std::size_t col = 0; col < m.cols; ++col) m(i, col) = checked_neg(m(i, col));
                break;
        }
    }
    return m;
}

}  // namespace testsupport
