#include "dilates/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace dilates {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool IntMatrix::is_identity() const {
    if (rows != cols) return false;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < rows; ++k) std::swap((*this)(k, i), (*this)(k, j));
}

// Fraction-free elimination. After each pivot step every entry is a minor of
// the input, so dividing by the previous pivot is exact; exact_div enforces
// that instead of trusting it.
std::size_t bareiss_rank(IntMatrix m) {
    std::size_t r = 0;
    Int prev = 1;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t p = r;
        while (p < m.rows && m(p, c) == 0) ++p;
        if (p == m.rows) continue;
        m.swap_rows(p, r);
        for (std::size_t i = r + 1; i < m.rows; ++i) {
            for (std::size_t j = c + 1; j < m.cols; ++j)
                m(i, j) = exact_div(checked_sub(checked_mul(m(i, j), m(r, c)),
                                                checked_mul(m(i, c), m(r, j))),
                                    prev);
            m(i, c) = 0;
        }
        prev = m(r, c);
        ++r;
    }
    return r;
}

Int bareiss_det(IntMatrix m) {
    if (m.rows != m.cols) throw std::invalid_argument("bareiss_det: matrix not square");
    const std::size_t n = m.rows;
    if (n == 0) return 1;
    int sign = 1;
    Int prev = 1;
    for (std::size_t c = 0; c + 1 < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            m.swap_rows(p, c);
            sign = -sign;
        }
        for (std::size_t i = c + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < n; ++j)
                m(i, j) = exact_div(checked_sub(checked_mul(m(i, j), m(c, c)),
                                                checked_mul(m(i, c), m(c, j))),
                                    prev);
            m(i, c) = 0;
        }
        prev = m(c, c);
    }
    Int d = m(n - 1, n - 1);
    return sign > 0 ? d : checked_neg(d);
}

std::vector<Int> mat_vec(const IntMatrix& m, const std::vector<Int>& x) {
    if (m.cols != x.size()) throw std::invalid_argument("mat_vec: dimension mismatch");
    std::vector<Int> y(m.rows, 0);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            y[i] = checked_add(y[i], checked_mul(m(i, j), x[j]));
    return y;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("mat_mul: dimension mismatch");
    IntMatrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            Int aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                c(i, j) = checked_add(c(i, j), checked_mul(aik, b(k, j)));
        }
    return c;
}

}  // namespace dilates
