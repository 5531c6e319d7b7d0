#include "dilates/constructions.hpp"

#include <stdexcept>

#include "dilates/errors.hpp"
#include "dilates/report.hpp"

namespace dilates {

PointSet construct_an(int d, Int n_param) {
    if (d < 2) throw std::invalid_argument("construct_an: requires d >= 2");
    if (n_param < 2) throw std::invalid_argument("construct_an: requires N >= 2");
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(n_param) + d - 2);
    for (int i = 0; i < d; ++i) {
        Point e(d, 0);
        e[i] = 1;
        pts.push_back(std::move(e));
    }
    for (Int n = 2; n < n_param; ++n) {
        Point p(d, 0);
        p[0] = n;
        pts.push_back(std::move(p));
    }
    PointSet a(d, std::move(pts));
    if (a.size() != static_cast<std::size_t>(n_param + d - 2))
        throw std::logic_error("construct_an: unexpected cardinality");
    return a;
}

Int an_upper_bound(int d, Int n_param, Int q) {
    if (d < 2) throw std::invalid_argument("an_upper_bound: requires d >= 2");
    if (n_param < 2) throw std::invalid_argument("an_upper_bound: requires N >= 2");
    if (checked_abs(q) <= 1) throw std::invalid_argument("an_upper_bound: requires |q| > 1");
    const Int aq = checked_abs(q);
    Int slope = checked_add(aq, 2 * Int{d} - 1);
    Int card = checked_add(n_param, Int{d} - 2);
    Int corr = checked_mul(Int{d} - 1, checked_add(checked_sub(aq, 2 * (Int{d} - 1)), 1));
    return checked_sub(checked_mul(slope, card), corr);
}

ConstructionCheck verify_construction(int d, Int n_param, Int q) {
    if (checked_abs(q) <= 1) throw std::invalid_argument("verify_construction: requires |q| > 1");
    PointSet a = construct_an(d, n_param);

    ConstructionCheck check;
    check.d = d;
    check.n_param = n_param;
    check.q = q;
    check.cardinality = a.size();
    check.rank = affine_rank(a);
    check.computed = sum_of_dilates(a, q).size();
    check.upper_bound = an_upper_bound(d, n_param, q);

    bool ok = static_cast<Int>(check.computed) <= check.upper_bound;
    if (checked_abs(q) == 2) {
        Int n = static_cast<Int>(check.cardinality);
        check.exact_expected =
            checked_sub(checked_mul(2 * Int{d} + 1, n), checked_mul(Int{d}, Int{d} + 1));
        ok = ok && static_cast<Int>(check.computed) == *check.exact_expected;
    }
    check.ok = ok;
    if (!ok) {
        Json extra;
        extra["d"] = d;
        extra["N"] = n_param;
        extra["q"] = q;
        extra["computed"] = check.computed;
        extra["upper_bound"] = check.upper_bound;
        if (check.exact_expected) extra["exact_expected"] = *check.exact_expected;
        throw TheoremViolation("verify_construction: closed form contradicted",
                               witness_json(a, extra));
    }
    return check;
}

}  // namespace dilates
