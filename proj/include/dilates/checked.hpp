#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>

namespace dilates {

using Int = std::int64_t;

// All coordinate arithmetic is exact 64-bit. Overflow throws, never wraps.

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in add");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in sub");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in mul");
    return r;
}

inline Int checked_neg(Int a) {
    if (a == std::numeric_limits<Int>::min()) throw std::overflow_error("int64 overflow in neg");
    return -a;
}

inline Int checked_abs(Int a) { return a < 0 ? checked_neg(a) : a; }

// Quotient a/b, requiring b != 0 and b | a exactly.
inline Int exact_div(Int a, Int b) {
    if (b == 0) throw std::invalid_argument("exact_div: division by zero");
    if (a == std::numeric_limits<Int>::min() && b == -1) throw std::overflow_error("int64 overflow in div");
    if (a % b != 0) throw std::logic_error("exact_div: inexact division");
    return a / b;
}

// Floor quotient; with b > 0 the remainder a - b*floor_div(a,b) lies in [0, b).
inline Int floor_div(Int a, Int b) {
    Int q = a / b;
    Int r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

// Nonnegative residue of a modulo |m|, m != 0.
inline Int euclid_mod(Int a, Int m) {
    if (m == 0) throw std::invalid_argument("euclid_mod: zero modulus");
    Int mm = checked_abs(m);
    Int r = a % mm;
    return r < 0 ? r + mm : r;
}

// base^exp when representable, nullopt on overflow. exp >= 0.
inline std::optional<Int> checked_pow(Int base, int exp) {
    Int r = 1;
    for (int i = 0; i < exp; ++i) {
        if (__builtin_mul_overflow(r, base, &r)) return std::nullopt;
    }
    return r;
}

}  // namespace dilates
