#include "dilates/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <optional>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "dilates/constructions.hpp"
#include "dilates/errors.hpp"
#include "dilates/lattice.hpp"
#include "dilates/report.hpp"
#include "dilates/rng.hpp"

namespace dilates {

namespace {

using U128 = unsigned __int128;

std::string u128_str(U128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

struct BinomCount {
    U128 value = 0;
    bool saturated = false;

    std::string str() const { return saturated ? "more than " + u128_str(value) : u128_str(value); }
    bool exceeds(std::uint64_t budget) const { return saturated || value > budget; }
};

// C(p, n); the running value after step i is C(p-k+i, i), so each division
// is exact. Saturates instead of overflowing.
BinomCount binom(std::uint64_t p, std::uint64_t n) {
    if (n > p) return {0, false};
    std::uint64_t k = std::min(n, p - n);
    U128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        U128 mul = p - k + i;
        if (r > ~U128{0} / mul) return {~U128{0}, true};
        r = r * mul / i;
    }
    return {r, false};
}

// Points of {0..g}^d in lexicographic order.
std::vector<Point> grid_points(int d, Int g) {
    std::vector<Point> pts;
    Point cur(d, 0);
    while (true) {
        pts.push_back(cur);
        int i = d - 1;
        while (i >= 0 && cur[i] == g) {
            cur[i] = 0;
            --i;
        }
        if (i < 0) break;
        ++cur[i];
    }
    return pts;
}

// n-combinations of {0..p-1} in lexicographic order, first index pinned.
// The pinning is what makes work chunks independent of the worker count.
template <typename F>
void combos_with_first(std::size_t p, std::size_t n, std::size_t first, F&& fn) {
    if (n == 0 || first + n > p) return;
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = first + i;
    while (true) {
        fn(idx);
        std::size_t i = n;
        while (--i > 0)
            if (idx[i] != p - n + i) break;
        if (i == 0) break;
        ++idx[i];
        for (std::size_t j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::vector<std::size_t> floyd_sample(SplitMix64& rng, std::size_t p, std::size_t n) {
    std::unordered_set<std::size_t> seen;
    std::vector<std::size_t> out;
    out.reserve(n);
    for (std::size_t j = p - n; j < p; ++j) {
        std::size_t t = static_cast<std::size_t>(rng.below(j + 1));
        if (seen.insert(t).second) {
            out.push_back(t);
        } else {
            seen.insert(j);
            out.push_back(j);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

constexpr int kSourceEnumeration = 0;
constexpr int kSourceConstruction = 1;

struct Candidate {
    std::size_t value = 0;
    PointSet witness;  // canonical form
    int source = kSourceEnumeration;
};

bool better(const Candidate& a, const Candidate& b) {
    if (a.value != b.value) return a.value < b.value;
    if (a.witness.points() != b.witness.points()) return a.witness.points() < b.witness.points();
    return a.source < b.source;
}

// Per-worker accumulator. The merge is associative and commutative, so the
// final aggregate does not depend on how chunks were assigned to workers.
struct Agg {
    std::optional<Candidate> best;
    std::unordered_set<PointSet, PointSetHash> classes;
    std::uint64_t subsets = 0;
    std::uint64_t rank_def = 0;

    void consider(Candidate c) {
        if (!best || better(c, *best)) best = std::move(c);
    }
    void merge(Agg&& o) {
        if (o.best) consider(std::move(*o.best));
        classes.merge(o.classes);
        subsets += o.subsets;
        rank_def += o.rank_def;
    }
};

void visit_subset(const std::vector<Point>& grid, const std::vector<std::size_t>& idx, int d,
                  Int q, Agg& agg) {
    ++agg.subsets;
    std::vector<Point> pts;
    pts.reserve(idx.size());
    for (std::size_t k : idx) pts.push_back(grid[k]);
    PointSet ps(d, std::move(pts));
    if (affine_rank(ps) != static_cast<std::size_t>(d)) {
        ++agg.rank_def;
        return;
    }
    PointSet canon = canonical_form(ps);
    auto [it, inserted] = agg.classes.insert(std::move(canon));
    if (!inserted) return;  // class already evaluated by this worker
    agg.consider({sum_of_dilates(*it, q).size(), *it, kSourceEnumeration});
}

constexpr std::uint64_t kSampleBlock = 1024;

Agg run_chunks(std::size_t nchunks, int workers,
               const std::function<void(std::size_t, Agg&)>& chunk_fn) {
    Agg total;
    if (nchunks == 0) return total;
    workers = std::max(1, workers);
    std::atomic<std::size_t> next{0};
    std::vector<Agg> partial(static_cast<std::size_t>(workers));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                while (true) {
                    std::size_t c = next.fetch_add(1);
                    if (c >= nchunks) break;
                    chunk_fn(c, partial[static_cast<std::size_t>(w)]);
                }
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    for (auto& p : partial) total.merge(std::move(p));
    return total;
}

std::uint64_t grid_cardinality(int d, Int g) {
    auto p = checked_pow(checked_add(g, 1), d);
    if (!p) throw BudgetError("search grid larger than the representable range",
                              "more than 9223372036854775807");
    return static_cast<std::uint64_t>(*p);
}

void validate_common(int d, std::size_t n, Int grid) {
    if (d < 1) throw std::invalid_argument("search: d must be >= 1");
    if (n < 1) throw std::invalid_argument("search: n must be >= 1");
    if (grid < 0) throw std::invalid_argument("search: grid must be >= 0");
}

}  // namespace

EnumerationStats enumerate_canonical(int d, std::size_t n, Int grid, std::uint64_t budget,
                                     const std::function<void(const PointSet&)>& yield) {
    validate_common(d, n, grid);
    const std::uint64_t p = grid_cardinality(d, grid);
    BinomCount total = binom(p, n);
    if (total.exceeds(budget))
        throw BudgetError("enumeration needs " + total.str() + " subsets, budget is " +
                              std::to_string(budget),
                          total.str());
    std::vector<Point> pts = grid_points(d, grid);
    EnumerationStats stats;
    std::unordered_set<PointSet, PointSetHash> seen;
    for (std::size_t first = 0; first + n <= pts.size(); ++first) {
        combos_with_first(pts.size(), n, first, [&](const std::vector<std::size_t>& idx) {
            ++stats.subsets;
            std::vector<Point> sub;
            sub.reserve(n);
            for (std::size_t k : idx) sub.push_back(pts[k]);
            PointSet ps(d, std::move(sub));
            if (affine_rank(ps) != static_cast<std::size_t>(d)) {
                ++stats.rank_deficient;
                return;
            }
            PointSet canon = canonical_form(ps);
            auto [it, inserted] = seen.insert(std::move(canon));
            if (!inserted) return;
            ++stats.classes;
            yield(*it);
        });
    }
    return stats;
}

ExtremalRecord search_min(const SearchTask& task) {
    validate_common(task.d, task.n, task.grid);
    if (checked_abs(task.q) <= 1) throw std::invalid_argument("search: requires |q| > 1");
    if (task.mode == SearchMode::random && task.samples == 0)
        throw std::invalid_argument("search: random mode needs samples >= 1");

    const std::uint64_t p = grid_cardinality(task.d, task.grid);
    const std::vector<Point> grid = grid_points(task.d, task.grid);

    Agg total;
    if (task.mode == SearchMode::exhaustive) {
        BinomCount count = binom(p, task.n);
        if (count.exceeds(task.budget))
            throw BudgetError("exhaustive search needs " + count.str() + " subsets, budget is " +
                                  std::to_string(task.budget),
                              count.str());
        std::size_t nchunks = p >= task.n ? static_cast<std::size_t>(p - task.n + 1) : 0;
        total = run_chunks(nchunks, task.workers, [&](std::size_t first, Agg& agg) {
            combos_with_first(grid.size(), task.n, first,
                              [&](const std::vector<std::size_t>& idx) {
                                  visit_subset(grid, idx, task.d, task.q, agg);
                              });
        });
    } else {
        if (task.samples > task.budget)
            throw BudgetError("random search needs " + std::to_string(task.samples) +
                                  " samples, budget is " + std::to_string(task.budget),
                              std::to_string(task.samples));
        if (p < task.n) throw HypothesisError("search: grid smaller than the subset size");
        std::size_t nblocks = static_cast<std::size_t>((task.samples + kSampleBlock - 1) / kSampleBlock);
        total = run_chunks(nblocks, task.workers, [&](std::size_t block, Agg& agg) {
            SplitMix64 rng = derive_stream(task.seed, block);
            std::uint64_t begin = static_cast<std::uint64_t>(block) * kSampleBlock;
            std::uint64_t count = std::min(kSampleBlock, task.samples - begin);
            for (std::uint64_t s = 0; s < count; ++s) {
                auto idx = floyd_sample(rng, grid.size(), task.n);
                visit_subset(grid, idx, task.d, task.q, agg);
            }
        });
    }

    const bool enumerated_any = !total.classes.empty();

    std::uint64_t injected = 0;
    const Int n_param = static_cast<Int>(task.n) - task.d + 2;
    if (task.d >= 2 && n_param >= 3) {
        // The known extremal family of matching cardinality always competes,
        // whether or not it fits in the grid.
        PointSet canon = canonical_form(construct_an(task.d, n_param));
        total.consider({sum_of_dilates(canon, task.q).size(), canon, kSourceConstruction});
        injected = 1;
    }

    if (!enumerated_any)
        throw HypothesisError("search: no rank-" + std::to_string(task.d) +
                              " subset of size " + std::to_string(task.n) + " encountered");

    const Candidate& best = *total.best;
    ExtremalRecord rec;
    rec.task = task;
    rec.min_value = best.value;
    rec.witness = best.witness;
    rec.witness_source = best.source == kSourceConstruction ? "construction" : "enumeration";
    rec.witness_rank = affine_rank(best.witness);
    rec.witness_coset_count = coset_partition(best.witness, task.q).coset_count();
    rec.subsets_examined = total.subsets;
    rec.rank_deficient = total.rank_def;
    rec.classes_examined = total.classes.size();
    rec.injected_candidates = injected;

    const Int n = static_cast<Int>(task.n);
    Int floor_rank = two_d_plus_one_bound(n, task.d);
    Int floor_coset = coset_count_bound(n, static_cast<Int>(rec.witness_coset_count), task.d);
    if (static_cast<Int>(rec.min_value) < floor_rank ||
        static_cast<Int>(rec.min_value) < floor_coset) {
        Json extra;
        extra["q"] = task.q;
        extra["min_value"] = rec.min_value;
        extra["floor_two_d_plus_one"] = floor_rank;
        extra["floor_coset_count"] = floor_coset;
        throw TheoremViolation("search: minimum below a proven floor",
                               witness_json(best.witness, extra));
    }

    for (const SlopeSpec& spec : slope_catalog(task.q, task.d)) {
        rec.slack.push_back({spec.name, spec.slope,
                             checked_sub(static_cast<Int>(rec.min_value),
                                         checked_mul(spec.slope, n)),
                             spec.conjectured});
    }
    return rec;
}

ConstantFit fit_additive_constant(const std::vector<ExtremalRecord>& records, Int slope) {
    if (records.empty()) throw std::invalid_argument("fit_additive_constant: no records");
    if (slope < 1) throw std::invalid_argument("fit_additive_constant: slope must be >= 1");
    for (const ExtremalRecord& r : records)
        if (r.task.d != records.front().task.d || r.task.q != records.front().task.q)
            throw std::invalid_argument("fit_additive_constant: records mix d or q");
    ConstantFit fit;
    bool have = false;
    for (const ExtremalRecord& r : records) {
        Int c = checked_sub(checked_mul(slope, static_cast<Int>(r.task.n)),
                            static_cast<Int>(r.min_value));
        if (!have || c > fit.constant) {
            fit.constant = c;
            fit.at_n = r.task.n;
            have = true;
        }
    }
    return fit;
}

}  // namespace dilates
