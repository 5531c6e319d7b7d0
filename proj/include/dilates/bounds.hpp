#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dilates/pointset.hpp"

namespace dilates {

// Explicit lower bounds for |A + q*A|, n = |A|. Each returns the exact floor;
// the half-integer terms divide exactly and that is asserted, not assumed.

// |A + B| >= n_a + d*n_b - d(d+1)/2 for rank-d sumsets with n_a >= n_b.
Int ruzsa_bound(Int n_a, Int n_b, int d);

// |A + q*A| >= (d + r)*n - r*d(d+1)/2 when A meets r residue classes mod q.
Int coset_count_bound(Int n, Int r, int d);

// |A + q*A| >= (2d+1)*n - d(d+1)^2/2 for rank-d sets, any |q| > 1. Sharp at
// |q| = 2. Requires n >= d+1, which rank d already forces.
Int two_d_plus_one_bound(Int n, int d);

// Leading coefficients: |A + q*A| >= slope*|A| - O(1) on rank-d sets.
struct SlopeSpec {
    std::string name;
    Int slope = 0;
    bool conjectured = false;
    std::string hypothesis;
};

// The slopes applicable in dimension d for this q, weakest first.
std::vector<SlopeSpec> slope_catalog(Int q, int d);

enum class Verdict { pass, fail, slack, not_applicable };

// One evaluated bound. Explicit bounds carry `required` and PASS/FAIL;
// slope-only bounds carry `slope` and report slack = computed - slope*n,
// which no theorem pins down and therefore never fails.
struct BoundRow {
    std::string name;
    Verdict verdict = Verdict::not_applicable;
    std::optional<Int> required;
    std::optional<Int> slope;
    std::optional<Int> slack;
    bool conjectured = false;
    std::string note;
};

struct BoundReport {
    Int q = 0;
    int dim = 0;
    std::size_t rank = 0;
    std::size_t cardinality = 0;
    std::size_t coset_count = 0;
    std::size_t computed = 0;  // |A + q*A|, or the claimed value under audit

    std::optional<std::size_t> line_cover;
    std::optional<Point> line_direction;
    std::optional<std::size_t> hyperplane_cover;
    std::optional<Point> hyperplane_normal;

    std::vector<BoundRow> rows;

    bool any_fail() const;
};

// Evaluates every applicable bound against the brute-force |A + q*A|.
// Bounds whose hypothesis fails are reported not-applicable, never skipped.
BoundReport evaluate_bounds(const PointSet& a, Int q);

// Same evaluation against a claimed cardinality instead of the computed one;
// lets recorded results be re-audited (and the failure path be exercised).
BoundReport evaluate_bounds_against(const PointSet& a, Int q, std::size_t claimed);

const char* verdict_name(Verdict v);

}  // namespace dilates
