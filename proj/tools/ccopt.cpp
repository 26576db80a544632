// ccopt: exact convex maximization over combinatorial set families.
//
// Subcommands:
//   solve     run the zonotope reduction on an instance file
//   zonotope  enumerate zonotope vertices of a generator set
//   check     cross-check the solver against exhaustive enumeration
//   bench     repeat a solve and report wall-clock times
//
// Exit codes: 0 ok, 1 mismatch/internal, 2 parse, 3 infeasible, 4 budget.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ccopt/bruteforce.hpp"
#include "ccopt/clustering.hpp"
#include "ccopt/errors.hpp"
#include "ccopt/instance.hpp"
#include "ccopt/reduce.hpp"
#include "ccopt/zonotope.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace ccopt;

json vec_json(const RatVector& v) {
    json a = json::array();
    for (const auto& x : v)
        a.push_back(x.str());
    return a;
}

json subset_json(const Subset& f) {
    json a = json::array();
    for (std::size_t j : f.members)
        a.push_back(j);
    return a;
}

std::string bracket_list(const std::vector<std::size_t>& xs) {
    std::string s = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i)
            s += ", ";
        s += std::to_string(xs[i]);
    }
    return s + "]";
}

const char* family_name(InstanceFile::FamilyKind k) {
    switch (k) {
    case InstanceFile::FamilyKind::PowerSet:
        return "powerset";
    case InstanceFile::FamilyKind::Matroid:
        return "matroid";
    case InstanceFile::FamilyKind::ShapedPartition:
        return "shaped_partition";
    case InstanceFile::FamilyKind::Clustering:
        return "clustering";
    }
    return "?";
}

// ---------------------------------------------------------------- solve

struct SolveFlags {
    std::string path;
    bool json_out = false;
    bool brute = false;
    bool linear_shortcut = false;
    bool unrestricted = false;
    unsigned jobs = 0;        // 0 = take from the instance
    std::size_t budget = 0;   // 0 = take from the instance (brute path only)
};

int run_solve(const SolveFlags& flags) {
    InstanceFile file = load_instance(flags.path);
    if (flags.unrestricted)
        file.unrestricted = true;
    if (flags.jobs > 0)
        file.jobs = flags.jobs;
    if (flags.budget > 0)
        file.budget.max_n = flags.budget;
    BuiltProblem built = build_problem(file);
    const Problem& prob = built.problem;

    json out;
    out["command"] = "solve";
    out["family"] = family_name(built.kind);
    out["n"] = prob.family.n;

    Subset optimum;
    RatVector weight;
    Rational value;
    const char* method = "zonotope-reduction";

    if (flags.brute) {
        method = "brute-force";
        auto [f, val] = brute_convex_max(prob.family, prob.weighting, prob.objective,
                                         file.budget);
        optimum = std::move(f);
        value = std::move(val);
        weight = subset_weight(prob.weighting, optimum);
        out["method"] = method;
    } else if (flags.linear_shortcut) {
        if (file.objective != ConvexObjective::Kind::Linear)
            throw ParseError("--linear requires a linear objective block");
        method = "linear-shortcut";
        std::vector<Rational> b(prob.family.n);
        for (std::size_t j = 0; j < prob.family.n; ++j)
            b[j] = inner_product(file.objective_coeffs, prob.weighting.rows[j]);
        optimum = linear_optimize(prob.family, ScalarWeighting(prob.family.n, std::move(b)));
        weight = subset_weight(prob.weighting, optimum);
        value = evaluate_objective(prob.objective, weight);
        out["method"] = method;
    } else {
        SolveOptions opts;
        opts.jobs = file.jobs;
        SolveReport report = convex_maximize(prob.family, prob.weighting, prob.objective,
                                             opts);
        optimum = report.optimum;
        weight = report.optimum_weight;
        value = report.value;
        out["method"] = method;
        out["degenerate"] = report.degenerate;
        out["zonotope_vertices"] = report.zonotope_vertices;
        out["oracle_queries"] = report.oracle_queries;
        out["evaluation_queries"] = report.evaluation_queries;
        out["augmentation"] = json{{"membership_calls", report.augmentation.membership_calls},
                                   {"augmentations", report.augmentation.augmentations},
                                   {"phases", report.augmentation.phases}};
    }

    out["optimum"] = subset_json(optimum);
    out["weight"] = vec_json(weight);
    out["value"] = value.str();

    std::vector<std::size_t> part_of;
    Rational variance;
    bool have_partition = false, have_variance = false;
    if (built.partition) {
        auto part = partition_from_subset(*built.partition, optimum);
        if (part) {
            have_partition = true;
            part_of = part->part_of;
            out["partition"] = part_of;
            if (built.kind == InstanceFile::FamilyKind::Clustering) {
                have_variance = true;
                variance = cluster_variance(built.partition->points, *part);
                out["cluster_variance"] = variance.str();
            }
        }
    }

    if (flags.json_out) {
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "family: " << family_name(built.kind) << ", ground set " << prob.family.n
              << "\n";
    std::cout << "method: " << method << "\n";
    std::cout << "optimum member: " << optimum.str() << "\n";
    std::cout << "optimum weight: " << weight.str() << "\n";
    std::cout << "value = " << value.str() << "\n";
    if (have_partition)
        std::cout << "partition = " << bracket_list(part_of) << "\n";
    if (have_variance)
        std::cout << "cluster variance = " << variance.str() << "\n";
    if (!flags.brute && !flags.linear_shortcut) {
        std::cout << "zonotope vertices: " << out["zonotope_vertices"].get<std::size_t>()
                  << "\n";
        std::cout << "oracle queries: " << out["oracle_queries"].get<std::size_t>() << "\n";
        if (out["degenerate"].get<bool>())
            std::cout << "note: all projected edge directions vanish; the weight image is a"
                         " single point\n";
    }
    return 0;
}

// ---------------------------------------------------------------- zonotope

struct ZonotopeFlags {
    std::string path;
    std::vector<std::string> inline_gens;
    bool brute = false;
    bool json_out = false;
};

GeneratorSet parse_generator_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    json root;
    try {
        root = json::parse(buf.str());
    } catch (const json::exception& e) {
        throw ParseError(path + ": invalid JSON: " + e.what());
    }
    if (!root.is_object() || !root.contains("generators"))
        throw ParseError(path + ": expected an object with a \"generators\" array");
    const json& gens = root["generators"];
    if (!gens.is_array() || gens.empty())
        throw ParseError(path + ": \"generators\" must be a nonempty array");
    std::vector<RatVector> rows;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const json& g = gens[i];
        if (!g.is_array() || g.empty())
            throw ParseError(path + ": generator " + std::to_string(i + 1) +
                             " must be a nonempty array of rational strings");
        RatVector v(g.size());
        for (std::size_t j = 0; j < g.size(); ++j) {
            const json& x = g[j];
            if (x.is_number())
                throw ParseError(path + ": rationals must be strings like \"3\" or"
                                        " \"1/2\", never numbers");
            if (!x.is_string())
                throw ParseError(path + ": expected a rational string");
            v[j] = Rational::parse(x.get<std::string>());
        }
        if (!rows.empty() && v.dim() != rows.front().dim())
            throw ParseError(path + ": generators of unequal dimension");
        rows.push_back(std::move(v));
    }
    const std::size_t dim = rows.front().dim();
    return GeneratorSet(dim, std::move(rows));
}

GeneratorSet parse_inline_generators(const std::vector<std::string>& specs) {
    std::vector<RatVector> rows;
    for (const std::string& s : specs) {
        std::vector<Rational> entries;
        std::string token;
        std::istringstream in(s);
        while (std::getline(in, token, ','))
            entries.push_back(Rational::parse(token));
        if (entries.empty())
            throw ParseError("empty generator \"" + s + "\"");
        if (!rows.empty() && entries.size() != rows.front().dim())
            throw ParseError("inline generators of unequal dimension");
        rows.push_back(RatVector(std::move(entries)));
    }
    const std::size_t dim = rows.front().dim();
    return GeneratorSet(dim, std::move(rows));
}

int run_zonotope(const ZonotopeFlags& flags) {
    if (flags.path.empty() == flags.inline_gens.empty())
        throw ParseError("zonotope needs either an input file or --gen entries, not both");
    GeneratorSet gens = flags.path.empty() ? parse_inline_generators(flags.inline_gens)
                                           : parse_generator_file(flags.path);
    json out;
    out["command"] = "zonotope";
    out["m"] = gens.size();
    out["dim"] = gens.dim;

    if (flags.brute) {
        std::vector<RatVector> pts = brute_force_vertices(gens);
        out["method"] = "brute-force";
        out["count"] = pts.size();
        json arr = json::array();
        for (const auto& p : pts)
            arr.push_back(json{{"point", vec_json(p)}});
        out["vertices"] = std::move(arr);
        if (flags.json_out) {
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        std::cout << gens.size() << " generators in dimension " << gens.dim << "\n";
        std::cout << "vertices: " << pts.size() << " (brute force)\n";
        for (const auto& p : pts)
            std::cout << "  " << p.str() << "\n";
        return 0;
    }

    ZonotopeVertexList list = enumerate_vertices(gens);
    out["method"] = "arrangement";
    out["count"] = list.vertices.size();
    json arr = json::array();
    for (const auto& v : list.vertices)
        arr.push_back(json{{"point", vec_json(v.point)},
                           {"witness", vec_json(v.witness)},
                           {"signs", v.signs.str()}});
    out["vertices"] = std::move(arr);
    if (flags.json_out) {
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << gens.size() << " generators in dimension " << gens.dim << "\n";
    std::cout << "vertices: " << list.vertices.size() << "\n";
    for (const auto& v : list.vertices)
        std::cout << "  point " << v.point.str() << "  witness " << v.witness.str()
                  << "  signs " << v.signs.str() << "\n";
    return 0;
}

// ---------------------------------------------------------------- check

struct CheckFlags {
    std::string path;
    bool json_out = false;
    bool unrestricted = false;
    std::size_t budget = 0; // 0 = take from the instance
    bool corrupt_oracle = false;
};

int run_check(const CheckFlags& flags) {
    InstanceFile file = load_instance(flags.path);
    if (flags.unrestricted)
        file.unrestricted = true;
    if (flags.budget > 0)
        file.budget.max_n = flags.budget;
    BuiltProblem built = build_problem(file);
    Problem& prob = built.problem;

    if (flags.corrupt_oracle) {
        // Test hook: break the native linear oracle so it always claims the
        // initial member is optimal.  (Merely negating queries would go
        // unnoticed: the witness set is centrally symmetric.)
        if (!prob.family.presentation.linear)
            throw std::invalid_argument("--corrupt-oracle needs a native linear oracle");
        const Subset stuck = prob.family.f0;
        prob.family.presentation.linear = [stuck](const ScalarWeighting&) {
            return stuck;
        };
    }

    SolveOptions opts;
    opts.jobs = file.jobs;
    SolveReport report = convex_maximize(prob.family, prob.weighting, prob.objective, opts);
    auto [brute_member, brute_value] =
        brute_convex_max(prob.family, prob.weighting, prob.objective, file.budget);

    const bool match = report.value == brute_value;
    if (flags.json_out) {
        json out;
        out["command"] = "check";
        out["match"] = match;
        out["solver_value"] = report.value.str();
        out["brute_value"] = brute_value.str();
        out["solver_member"] = subset_json(report.optimum);
        out["brute_member"] = subset_json(brute_member);
        std::cout << out.dump(2) << "\n";
        return match ? 0 : 1;
    }
    if (match) {
        std::cout << "MATCH value=" << report.value.str() << "\n";
        return 0;
    }
    std::cout << "MISMATCH solver value = " << report.value.str() << " (member "
              << report.optimum.str() << "), brute force value = " << brute_value.str()
              << " (member " << brute_member.str() << ")\n";
    return 1;
}

// ---------------------------------------------------------------- bench

struct BenchFlags {
    std::string path;
    unsigned repeat = 5;
    bool json_out = false;
};

int run_bench(const BenchFlags& flags) {
    InstanceFile file = load_instance(flags.path);
    BuiltProblem built = build_problem(file);
    const Problem& prob = built.problem;
    SolveOptions opts;
    opts.jobs = file.jobs;

    const unsigned repeat = flags.repeat == 0 ? 1 : flags.repeat;
    std::vector<double> ms;
    Rational value;
    for (unsigned r = 0; r < repeat; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        SolveReport report = convex_maximize(prob.family, prob.weighting, prob.objective,
                                             opts);
        const auto t1 = std::chrono::steady_clock::now();
        ms.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
        value = report.value;
    }
    double best = ms[0], total = 0;
    for (double x : ms) {
        best = std::min(best, x);
        total += x;
    }
    if (flags.json_out) {
        json out;
        out["command"] = "bench";
        out["repeat"] = repeat;
        out["value"] = value.str();
        out["min_ms"] = best;
        out["mean_ms"] = total / repeat;
        out["runs_ms"] = ms;
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "runs: " << repeat << ", value = " << value.str() << "\n";
    std::cout << "min " << best << " ms, mean " << total / repeat << " ms\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact convex maximization over combinatorial set families"};
    app.require_subcommand(1);

    SolveFlags solve;
    CLI::App* cmd_solve = app.add_subcommand("solve", "maximize the objective over an instance");
    cmd_solve->add_option("path", solve.path, "instance file")->required();
    cmd_solve->add_flag("--json", solve.json_out, "machine-readable report");
    cmd_solve->add_flag("--brute", solve.brute, "solve by exhaustive enumeration instead");
    cmd_solve->add_flag("--linear", solve.linear_shortcut,
                        "linear objective: single oracle call, no zonotope");
    cmd_solve->add_flag("--unrestricted", solve.unrestricted, "drop shape bounds");
    cmd_solve->add_option("--jobs", solve.jobs, "concurrent oracle queries");
    cmd_solve->add_option("--budget", solve.budget, "ground-set cap for --brute");

    ZonotopeFlags zono;
    CLI::App* cmd_zonotope =
        app.add_subcommand("zonotope", "enumerate zonotope vertices with witnesses");
    cmd_zonotope->add_option("path", zono.path, "generator file");
    cmd_zonotope->add_option("--gen", zono.inline_gens,
                             "inline generator, comma-separated rationals (repeatable)");
    cmd_zonotope->add_flag("--brute", zono.brute, "sign-enumeration oracle instead");
    cmd_zonotope->add_flag("--json", zono.json_out, "machine-readable report");

    CheckFlags check;
    CLI::App* cmd_check =
        app.add_subcommand("check", "cross-check the solver against brute force");
    cmd_check->add_option("path", check.path, "instance file")->required();
    cmd_check->add_flag("--json", check.json_out, "machine-readable report");
    cmd_check->add_flag("--unrestricted", check.unrestricted, "drop shape bounds");
    cmd_check->add_option("--budget", check.budget, "ground-set cap for enumeration");
    cmd_check->add_flag("--corrupt-oracle", check.corrupt_oracle, "")->group("");

    BenchFlags bench;
    CLI::App* cmd_bench = app.add_subcommand("bench", "time repeated solves");
    cmd_bench->add_option("path", bench.path, "instance file")->required();
    cmd_bench->add_option("--repeat", bench.repeat, "number of runs (default 5)");
    cmd_bench->add_flag("--json", bench.json_out, "machine-readable report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(cmd_solve))
            return run_solve(solve);
        if (app.got_subcommand(cmd_zonotope))
            return run_zonotope(zono);
        if (app.got_subcommand(cmd_check))
            return run_check(check);
        if (app.got_subcommand(cmd_bench))
            return run_bench(bench);
    } catch (const ccopt::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ccopt::InfeasibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ccopt::BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
