#include "dilates/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "dilates/lattice.hpp"
#include "dilates/structure.hpp"

namespace dilates {

namespace {

Int triangle(int d) {
    // d(d+1)/2 is integral; exact_div asserts rather than assumes.
    return exact_div(checked_mul(Int{d}, Int{d} + 1), 2);
}

}  // namespace

Int ruzsa_bound(Int n_a, Int n_b, int d) {
    if (d < 1) throw std::invalid_argument("ruzsa_bound: d must be >= 1");
    if (n_b < 1 || n_a < n_b) throw std::invalid_argument("ruzsa_bound: requires n_a >= n_b >= 1");
    return checked_sub(checked_add(n_a, checked_mul(Int{d}, n_b)), triangle(d));
}

Int coset_count_bound(Int n, Int r, int d) {
    if (d < 1) throw std::invalid_argument("coset_count_bound: d must be >= 1");
    if (r < 1 || r > n) throw std::invalid_argument("coset_count_bound: requires 1 <= r <= n");
    return checked_sub(checked_mul(checked_add(Int{d}, r), n), checked_mul(r, triangle(d)));
}

Int two_d_plus_one_bound(Int n, int d) {
    if (d < 1) throw std::invalid_argument("two_d_plus_one_bound: d must be >= 1");
    if (n < d + 1) throw std::invalid_argument("two_d_plus_one_bound: requires n >= d+1");
    // d(d+1)^2/2 = triangle(d)*(d+1), so the halving stays exact.
    return checked_sub(checked_mul(2 * Int{d} + 1, n), checked_mul(triangle(d), Int{d} + 1));
}

std::vector<SlopeSpec> slope_catalog(Int q, int d) {
    if (checked_abs(q) <= 1) throw std::invalid_argument("slope_catalog: requires |q| > 1");
    if (d < 1) throw std::invalid_argument("slope_catalog: d must be >= 1");
    const Int aq = checked_abs(q);
    std::vector<SlopeSpec> out;
    out.push_back({"slope_q_plus_1", checked_add(aq, 1), false, "rank 1 baseline"});
    if (d >= 2)
        out.push_back({"slope_q_plus_d_plus_1", checked_add(aq, Int{d} + 1), false, "rank d >= 2"});
    if (d == 3) out.push_back({"slope_q_plus_5_dim3", checked_add(aq, 5), false, "rank 3"});
    if (d >= 2)
        out.push_back({"slope_q_plus_2d_minus_1", checked_add(aq, 2 * Int{d} - 1), true,
                       "rank d >= 2; proven when the set lies in d parallel lines"});
    return out;
}

bool BoundReport::any_fail() const {
    return std::any_of(rows.begin(), rows.end(),
                       [](const BoundRow& r) { return r.verdict == Verdict::fail; });
}

BoundReport evaluate_bounds_against(const PointSet& a, Int q, std::size_t claimed) {
    if (a.empty()) throw std::invalid_argument("evaluate_bounds: empty set");
    if (checked_abs(q) <= 1) throw std::invalid_argument("evaluate_bounds: requires |q| > 1");

    BoundReport rep;
    rep.q = q;
    rep.dim = a.dim();
    rep.rank = affine_rank(a);
    rep.cardinality = a.size();
    rep.coset_count = coset_partition(a, q).coset_count();
    rep.computed = claimed;

    const int d = a.dim();
    const bool full_rank = rep.rank == static_cast<std::size_t>(d);
    const Int n = static_cast<Int>(a.size());
    const Int r = static_cast<Int>(rep.coset_count);
    const Int computed = static_cast<Int>(claimed);

    if (a.size() >= 2) {
        CoverReport lines = line_cover_number(a);
        rep.line_cover = lines.count;
        rep.line_direction = lines.witness.v;
    }
    if (full_rank && d >= 2) {
        CoverReport planes = min_hyperplane_cover(a);
        rep.hyperplane_cover = planes.count;
        rep.hyperplane_normal = planes.witness.v;
    }

    auto explicit_row = [&](const std::string& name, Int required, bool applicable,
                            const std::string& why_na) {
        BoundRow row;
        row.name = name;
        if (!applicable) {
            row.verdict = Verdict::not_applicable;
            row.note = why_na;
        } else {
            row.required = required;
            row.verdict = computed >= required ? Verdict::pass : Verdict::fail;
        }
        rep.rows.push_back(std::move(row));
    };

    const std::string na_rank = "affine rank below dimension";
    explicit_row("ruzsa_sumset", full_rank ? ruzsa_bound(n, n, d) : 0, full_rank, na_rank);
    explicit_row("coset_count", full_rank ? coset_count_bound(n, r, d) : 0, full_rank, na_rank);
    explicit_row("two_d_plus_one", full_rank ? two_d_plus_one_bound(n, d) : 0, full_rank, na_rank);

    for (const SlopeSpec& spec : slope_catalog(q, d)) {
        BoundRow row;
        row.name = spec.name;
        row.slope = spec.slope;
        row.conjectured = spec.conjectured;
        if (!full_rank) {
            row.verdict = Verdict::not_applicable;
            row.note = na_rank;
        } else {
            row.verdict = Verdict::slack;
            row.slack = checked_sub(computed, checked_mul(spec.slope, n));
            if (spec.conjectured && rep.line_cover && static_cast<int>(*rep.line_cover) <= d)
                row.note = "covered by " + std::to_string(*rep.line_cover) +
                           " parallel lines; slope proven for such sets";
            if (spec.name == "slope_q_plus_5_dim3" && rep.hyperplane_cover &&
                *rep.hyperplane_cover <= 2)
                row.note = "covered by 2 parallel hyperplanes";
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

BoundReport evaluate_bounds(const PointSet& a, Int q) {
    return evaluate_bounds_against(a, q, sum_of_dilates(a, q).size());
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "PASS";
        case Verdict::fail: return "FAIL";
        case Verdict::slack: return "SLACK";
        case Verdict::not_applicable: return "N/A";
    }
    return "?";
}

}  // namespace dilates
