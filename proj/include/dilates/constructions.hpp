#pragma once

#include <cstddef>
#include <optional>

#include "dilates/pointset.hpp"

namespace dilates {

// The extremal family: {e_1, ..., e_d} plus {n*e_1 : 0 < n < N}. Cardinality
// N + d - 2 (e_1 is counted once). d >= 2, N >= 2. For N >= 3 the set has
// affine rank d; at N = 2 it degenerates to the basis simplex of rank d - 1.
PointSet construct_an(int d, Int n_param);

// Exact upper bound for |A_N + q*A_N|, |q| > 1:
// (|q| + 2d - 1)(N + d - 2) - (d - 1)(|q| - 2(d - 1) + 1).
Int an_upper_bound(int d, Int n_param, Int q);

struct ConstructionCheck {
    int d = 0;
    Int n_param = 0;
    Int q = 0;
    std::size_t cardinality = 0;
    std::size_t rank = 0;
    std::size_t computed = 0;          // brute-force |A_N + q*A_N|
    Int upper_bound = 0;
    std::optional<Int> exact_expected; // (2d+1)|A| - d(d+1), set when |q| = 2
    bool ok = false;
};

// Builds A_N, computes |A_N + q*A_N| by brute force and checks it against
// the closed forms: always <= the upper bound, and equal to
// (2d+1)|A| - d(d+1) when |q| = 2. A failed check would contradict a proven
// identity, so it throws with the witness serialized.
ConstructionCheck verify_construction(int d, Int n_param, Int q);

}  // namespace dilates
