#pragma once

#include <cstddef>
#include <vector>

#include "dilates/checked.hpp"

namespace dilates {

// Dense row-major integer matrix. Everything downstream assumes exact
// arithmetic, so elimination routines are fraction-free.
struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Int> a;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

    Int& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    Int operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    bool operator==(const IntMatrix&) const = default;

    static IntMatrix identity(std::size_t n);
    bool is_identity() const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
};

// Rank over the rationals via Bareiss elimination; intermediate divisions are
// exact by construction and any overflow throws.
std::size_t bareiss_rank(IntMatrix m);

// Exact determinant of a square matrix, same elimination scheme.
Int bareiss_det(IntMatrix m);

std::vector<Int> mat_vec(const IntMatrix& m, const std::vector<Int>& x);
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);

}  // namespace dilates
