#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dilates/bounds.hpp"
#include "dilates/pointset.hpp"

namespace dilates {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

enum class SearchMode { exhaustive, random };

struct SearchTask {
    int d = 2;
    Int q = 2;
    std::size_t n = 0;        // subset size
    Int grid = 0;             // coordinates range over {0, ..., grid}
    SearchMode mode = SearchMode::exhaustive;
    std::uint64_t samples = 0;  // random mode only
    std::uint64_t seed = 0;     // random mode only, always explicit
    std::uint64_t budget = kDefaultBudget;
    int workers = 1;            // execution detail; never affects the result
};

struct EnumerationStats {
    std::uint64_t subsets = 0;        // subsets visited
    std::uint64_t rank_deficient = 0; // skipped for affine rank < d
    std::uint64_t classes = 0;        // canonical classes yielded
};

// Streams exactly one representative (the canonical form) per canonical class
// of rank-d n-subsets of {0..grid}^d. Refuses to start if the subset count
// exceeds the budget, reporting the exact count required.
EnumerationStats enumerate_canonical(int d, std::size_t n, Int grid, std::uint64_t budget,
                                     const std::function<void(const PointSet&)>& yield);

struct SlackRow {
    std::string name;
    Int slope = 0;
    Int slack = 0;  // min_value - slope*n
    bool conjectured = false;
};

struct ExtremalRecord {
    SearchTask task;
    std::size_t min_value = 0;
    PointSet witness;                 // canonical form
    std::string witness_source;       // "enumeration" or "construction"
    std::size_t witness_rank = 0;
    std::size_t witness_coset_count = 0;
    std::vector<SlackRow> slack;
    std::uint64_t subsets_examined = 0;
    std::uint64_t rank_deficient = 0;
    std::uint64_t classes_examined = 0;
    std::uint64_t injected_candidates = 0;
};

// Minimum of |A + q*A| over rank-d n-subsets of the grid (all of them, or a
// seeded sample). The known extremal construction of matching size is always
// injected as a candidate, so the reported minimum never exceeds its value.
// Work is split into chunks fixed by the enumeration itself and merged with
// an associative, commutative rule, so the record is byte-for-byte identical
// for any worker count. A minimum below a proven floor throws with the
// witness serialized.
ExtremalRecord search_min(const SearchTask& task);

struct ConstantFit {
    Int constant = 0;     // max over records of slope*n - min_value
    std::size_t at_n = 0; // cardinality attaining the max
};

// Fits the best additive constant c such that slope*n - c lower-bounds every
// record; records must share d and q.
ConstantFit fit_additive_constant(const std::vector<ExtremalRecord>& records, Int slope);

}  // namespace dilates
