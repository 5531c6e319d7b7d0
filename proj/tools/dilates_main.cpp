// Command line front end: compute / reduce / verify / construct / search.
//
// Exit codes: 0 success, 1 internal assertion or theorem violation (witness
// on stderr), 2 parse error, 3 invalid parameter, 4 hypothesis violation,
// 5 budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dilates/bounds.hpp"
#include "dilates/constructions.hpp"
#include "dilates/errors.hpp"
#include "dilates/lattice.hpp"
#include "dilates/pointset_io.hpp"
#include "dilates/report.hpp"
#include "dilates/search.hpp"
#include "dilates/version.hpp"

namespace {

using namespace dilates;

PointSet read_input(const std::string& path, std::string* digest) {
    ParsedPointSet parsed =
        (path.empty() || path == "-") ? parse_point_set(std::cin) : parse_point_set_file(path);
    for (const std::string& w : parsed.warnings) std::cerr << "warning: " << w << "\n";
    if (digest) *digest = point_set_digest(parsed.set);
    return parsed.set;
}

void write_text(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

std::uint64_t resolve_budget(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("DILATE_BUDGET")) {
        std::string s(env);
        try {
            std::size_t pos = 0;
            unsigned long long v = std::stoull(s, &pos);
            if (pos != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw std::invalid_argument("DILATE_BUDGET is not an unsigned integer: " + s);
        }
    }
    return kDefaultBudget;
}

struct ComputeArgs {
    std::string input;
    Int q = 2;
    std::string out;
    bool json = false;
};

int cmd_compute(const ComputeArgs& args) {
    std::string digest;
    PointSet a = read_input(args.input, &digest);
    std::size_t rank = affine_rank(a);
    std::size_t r = coset_partition(a, args.q).coset_count();
    std::size_t computed = sum_of_dilates(a, args.q).size();

    std::string line = "|A|=" + std::to_string(a.size()) + " rank=" + std::to_string(rank) +
                       " r=" + std::to_string(r) + " |A+qA|=" + std::to_string(computed) + "\n";
    Json params;
    params["q"] = args.q;
    Json results;
    results["cardinality"] = a.size();
    results["dim"] = a.dim();
    results["rank"] = rank;
    results["coset_count"] = r;
    results["computed"] = computed;
    Json doc = make_report("compute", digest, std::move(params), std::move(results));

    if (args.json) {
        write_text(args.out, render_report(doc));
    } else {
        std::cout << line;
        if (!args.out.empty()) write_text(args.out, render_report(doc));
    }
    return 0;
}

struct ReduceArgs {
    std::string input;
    std::string out;
    bool json = false;
};

int cmd_reduce(const ReduceArgs& args) {
    std::string digest;
    PointSet a = read_input(args.input, &digest);
    ReductionRecord rec = reduce(a);
    if (args.json) {
        Json doc = make_report("reduce", digest, Json::object(), json_reduction(rec));
        write_text(args.out, render_report(doc));
    } else {
        std::ostringstream buf;
        write_point_set(buf, rec.output);
        write_text(args.out, buf.str());
        std::cerr << "det=" << rec.det << "\n";
    }
    return 0;
}

struct VerifyArgs {
    std::string input;
    Int q = 2;
    std::string out;
    bool json = false;
    std::optional<std::uint64_t> override_cardinality;  // audit/failure-path hook
};

int cmd_verify(const VerifyArgs& args) {
    std::string digest;
    PointSet a = read_input(args.input, &digest);
    BoundReport rep = args.override_cardinality
                          ? evaluate_bounds_against(a, args.q, *args.override_cardinality)
                          : evaluate_bounds(a, args.q);

    Json dichotomy;
    const bool full_rank = rep.rank == static_cast<std::size_t>(rep.dim);
    const bool reduced = full_rank && is_reduced(a);
    dichotomy["applicable"] = reduced;
    dichotomy["note"] = reduced ? "" : (full_rank ? "set is not reduced" : "affine rank below dimension");
    Json parts = Json::array();
    if (reduced) {
        std::size_t count = coset_partition(a, args.q).coset_count();
        for (std::size_t i = 0; i < count; ++i)
            parts.push_back(json_dichotomy(coset_part_dichotomy(a, args.q, i)));
    }
    dichotomy["parts"] = std::move(parts);

    Json params;
    params["q"] = args.q;
    Json results;
    results["bounds"] = json_bound_report(rep);
    results["dichotomy"] = std::move(dichotomy);
    const bool failed = rep.any_fail();
    if (failed) results["witness"] = json_points(a);
    Json doc = make_report("verify", digest, std::move(params), std::move(results));

    if (args.json) {
        write_text(args.out, render_report(doc));
    } else {
        std::cout << "|A|=" << rep.cardinality << " rank=" << rep.rank << " r=" << rep.coset_count
                  << " |A+qA|=" << rep.computed << "\n";
        for (const BoundRow& row : rep.rows) {
            std::cout << "  " << row.name << ": " << verdict_name(row.verdict);
            if (row.required) std::cout << " required=" << *row.required;
            if (row.slope) std::cout << " slope=" << *row.slope;
            if (row.slack) std::cout << " slack=" << *row.slack;
            if (!row.note.empty()) std::cout << " (" << row.note << ")";
            std::cout << "\n";
        }
        if (!args.out.empty()) write_text(args.out, render_report(doc));
    }
    if (failed) {
        std::cerr << "bound check failed; witness:\n" << witness_json(a, Json::object()) << "\n";
        return 1;
    }
    return 0;
}

struct ConstructArgs {
    std::string family;
    int d = 2;
    Int n_param = 2;
    std::optional<Int> q;
    std::string out;
    std::string report;
};

int cmd_construct(const ConstructArgs& args) {
    if (args.family != "AN")
        throw std::invalid_argument("unknown family '" + args.family + "' (supported: AN)");
    PointSet a = construct_an(args.d, args.n_param);
    std::ostringstream buf;
    write_point_set(buf, a);
    write_text(args.out, buf.str());
    if (args.q) {
        ConstructionCheck check = verify_construction(args.d, args.n_param, *args.q);
        Json params;
        params["family"] = args.family;
        params["d"] = args.d;
        params["N"] = args.n_param;
        params["q"] = *args.q;
        Json doc = make_report("construct", point_set_digest(a), std::move(params),
                               json_construction(check));
        if (!args.report.empty()) {
            write_text(args.report, render_report(doc));
        } else {
            std::cerr << "verified: |A+qA|=" << check.computed << " <= " << check.upper_bound
                      << "\n";
        }
    }
    return 0;
}

struct SearchArgs {
    int d = 2;
    Int q = 2;
    std::size_t n = 0;
    Int grid = 0;
    std::optional<std::uint64_t> samples;
    std::uint64_t seed = 0;
    int workers = 1;
    std::optional<std::uint64_t> budget;
    std::string out;
};

int cmd_search(const SearchArgs& args) {
    SearchTask task;
    task.d = args.d;
    task.q = args.q;
    task.n = args.n;
    task.grid = args.grid;
    task.mode = args.samples ? SearchMode::random : SearchMode::exhaustive;
    task.samples = args.samples.value_or(0);
    task.seed = args.seed;
    task.budget = resolve_budget(args.budget);
    task.workers = args.workers;

    ExtremalRecord rec = search_min(task);

    // Worker count is an execution detail: equal tasks must render equal
    // reports no matter how the work was split.
    Json params;
    params["d"] = task.d;
    params["q"] = task.q;
    params["n"] = task.n;
    params["grid"] = task.grid;
    params["mode"] = task.mode == SearchMode::random ? "random" : "exhaustive";
    params["budget"] = task.budget;
    if (task.mode == SearchMode::random) {
        params["samples"] = task.samples;
        params["seed"] = task.seed;
    }
    Json doc = make_report("search", "", std::move(params), json_extremal(rec));
    write_text(args.out, render_report(doc));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations for sums of dilates in Z^d"};
    app.set_version_flag("--version", dilates::kToolVersion);
    app.require_subcommand(1);

    ComputeArgs compute_args;
    auto* compute = app.add_subcommand("compute", "cardinality, rank and residue statistics");
    compute->add_option("-i,--input", compute_args.input, "point file, '-' or absent for stdin");
    compute->add_option("-q,--q", compute_args.q, "dilation factor, |q| > 1")->required();
    compute->add_option("-o,--out", compute_args.out, "write a JSON report here");
    compute->add_flag("--json", compute_args.json, "JSON report to stdout instead of the summary line");

    ReduceArgs reduce_args;
    auto* reduce_cmd = app.add_subcommand("reduce", "normalize the difference lattice to Z^d");
    reduce_cmd->add_option("-i,--input", reduce_args.input, "point file, '-' or absent for stdin");
    reduce_cmd->add_option("-o,--out", reduce_args.out, "output file (default stdout)");
    reduce_cmd->add_flag("--json", reduce_args.json, "emit the full reduction record as JSON");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "evaluate every applicable bound");
    verify->add_option("-i,--input", verify_args.input, "point file, '-' or absent for stdin");
    verify->add_option("-q,--q", verify_args.q, "dilation factor, |q| > 1")->required();
    verify->add_option("-o,--out", verify_args.out, "write the JSON report here");
    verify->add_flag("--json", verify_args.json, "JSON report to stdout instead of the table");
    verify->add_option("--override-cardinality", verify_args.override_cardinality)->group("");

    ConstructArgs construct_args;
    auto* construct = app.add_subcommand("construct", "emit a named extremal family");
    construct->add_option("--family", construct_args.family, "family name (AN)")->required();
    construct->add_option("--d", construct_args.d, "dimension, >= 2")->required();
    construct->add_option("--N", construct_args.n_param, "family parameter, >= 2")->required();
    construct->add_option("-q,--q", construct_args.q, "also verify against the closed forms");
    construct->add_option("-o,--out", construct_args.out, "output file (default stdout)");
    construct->add_option("--report", construct_args.report, "write the verification report here");

    SearchArgs search_args;
    auto* search = app.add_subcommand("search", "minimize |A+qA| over grid subsets");
    search->add_option("--d", search_args.d, "dimension")->required();
    search->add_option("-q,--q", search_args.q, "dilation factor, |q| > 1")->required();
    search->add_option("--n", search_args.n, "subset size")->required();
    search->add_option("--grid", search_args.grid, "coordinates range over 0..grid")->required();
    auto* samples_opt =
        search->add_option("--random", search_args.samples, "sample this many subsets instead");
    search->add_option("--seed", search_args.seed, "seed for random mode")->needs(samples_opt);
    samples_opt->needs("--seed");
    search->add_option("--workers", search_args.workers, "worker threads (result-neutral)")
        ->check(CLI::PositiveNumber);
    search->add_option("--budget", search_args.budget,
                       "max subsets/samples (default 100000000, env DILATE_BUDGET)");
    search->add_option("-o,--out", search_args.out, "write the JSON report here (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 3;
    }

    try {
        if (compute->parsed()) return cmd_compute(compute_args);
        if (reduce_cmd->parsed()) return cmd_reduce(reduce_args);
        if (verify->parsed()) return cmd_verify(verify_args);
        if (construct->parsed()) return cmd_construct(construct_args);
        if (search->parsed()) return cmd_search(search_args);
        std::cerr << "no command\n";
        return 3;
    } catch (const dilates::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const dilates::BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 5;
    } catch (const dilates::HypothesisError& e) {
        std::cerr << "hypothesis violated: " << e.what() << "\n";
        return 4;
    } catch (const dilates::TheoremViolation& e) {
        std::cerr << "theorem violation: " << e.what() << "\nwitness:\n" << e.witness_json << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid parameter: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
