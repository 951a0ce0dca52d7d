// Copyright 2026 The dgsp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"

#include "dgsp/bench.h"
#include "dgsp/errors.h"
#include "dgsp/gsp_algorithms.h"
#include "dgsp/hsp_instance.h"
#include "dgsp/io.h"

namespace dgsp::cli {

namespace {

std::string join(const std::vector<BitVector>& vs) {
    std::string out = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ", ";
        out += vs[i].str();
    }
    return out + "}";
}

int cmd_generate(const ProblemParams& params, const std::string& out_path, std::ostream& out) {
    const auto inst = generate(params);
    save_instance(inst, out_path);
    out << "wrote " << out_path << ": n=" << params.n << " t=" << params.t << " m=" << params.m << " k=" << params.k
        << " k_l=" << inst.k_l() << " seed=" << params.seed << '\n';
    return kOk;
}

struct SolveArgs {
    std::string instance_path;
    std::uint64_t seed = 0;
    std::string algorithm = "full";
    std::string out_path;
    int rounds = -1;
    bool perturb_sl = false;
    double tolerance = 1e-9;
};

int cmd_solve(const SolveArgs& a, std::ostream& out) {
    const auto inst = load_instance(a.instance_path);
    SolveOptions options;
    options.algorithm = parse_algorithm(a.algorithm);
    options.seed = a.seed;
    if (a.rounds >= 0) options.dsl_rounds = a.rounds;
    options.perturb_sl = a.perturb_sl;
    const auto trace = solve(inst, options);

    const auto json = trace_to_json(trace).dump(2) + "\n";
    if (!a.out_path.empty()) {
        std::ofstream f(a.out_path);
        if (!f) throw UsageError("cannot write " + a.out_path);
        f << json;
    }

    out << "algorithm: " << a.algorithm << '\n';
    if (trace.final_d_l) out << "iterations: " << trace.iterations.size() << " (final d_l = " << *trace.final_d_l << ")\n";
    if (!trace.dsl_samples.empty()) out << "samples: " << join(trace.dsl_samples) << '\n';
    if (trace.sl_basis) out << "S_l basis: " << join(trace.sl_basis->vectors()) << '\n';
    if (trace.k_hat) out << "k_hat: " << *trace.k_hat << '\n';
    if (trace.subgroup) out << "recovered subgroup: " << join(*trace.subgroup) << '\n';
    out << "quantum queries per node: " << trace.max_quantum_queries_per_node() << '\n';
    out << "classical queries: " << trace.total_classical_queries() << '\n';
    if (trace.final_d_l) out << "max bad probability (final d_l): " << trace.max_bad_probability_final << '\n';

    bool exact = true;
    if (trace.exact) {
        exact = *trace.exact;
    } else if (trace.sl_exact) {
        exact = *trace.sl_exact;
    }
    if (trace.final_d_l && trace.max_bad_probability_final >= a.tolerance) exact = false;
    out << "exact: " << (exact ? "true" : "false") << '\n';
    if (trace.witness) out << "witness (in S, not recovered): " << trace.witness->str() << '\n';

    const bool gated = options.algorithm == Algorithm::kEdsl || options.algorithm == Algorithm::kEds ||
                       options.algorithm == Algorithm::kFull;
    return gated && !exact ? kInexact : kOk;
}

struct BenchArgs {
    std::string ns = "4..8";
    std::string ts = "1,2";
    int m = 0;
    int trials = 50;
    std::uint64_t seed = 1;
    std::string out_path;
    unsigned workers = 0;
    double tolerance = 1e-9;
};

int cmd_bench(const BenchArgs& a, std::ostream& out) {
    const auto grid = feasible_grid(parse_int_list(a.ns), parse_int_list(a.ts),
                                    a.m > 0 ? std::optional<int>(a.m) : std::nullopt);
    if (grid.empty()) throw UsageError("bench grid is empty");
    const auto rows = run_bench(grid, a.trials, a.seed, a.workers);
    if (!a.out_path.empty()) {
        std::ofstream f(a.out_path);
        if (!f) throw UsageError("cannot write " + a.out_path);
        f << std::setprecision(17);
        write_csv(f, rows);
    } else {
        write_csv(out, rows);
    }
    const auto s = summarize(rows);
    out << "rows: " << s.rows << '\n'
        << "success rate: " << s.success_rate << '\n'
        << "max iterations: " << s.max_iterations << '\n'
        << "mean iterations: " << s.mean_iterations << '\n'
        << "mean quantum queries per node: " << s.mean_quantum_queries_per_node << '\n'
        << "mean classical queries: " << s.mean_classical_queries << '\n'
        << "max bad probability: " << s.max_bad_probability << '\n'
        << "iterations <= n-t: " << (s.iterations_within_bound ? "yes" : "no") << '\n'
        << "quantum queries <= 6(n-t): " << (s.queries_within_bound ? "yes" : "no") << '\n';
    const bool pass = s.success_rate == 1.0 && s.max_bad_probability < a.tolerance && s.iterations_within_bound &&
                      s.queries_within_bound;
    return pass ? kOk : kInexact;
}

int cmd_verify(const std::string& path, std::ostream& out) {
    const auto inst = load_instance(path);
    const auto report = verify_instance(inst);
    auto line = [&](const char* name, const CheckResult& r) {
        out << name << ": " << (r.passed ? "pass" : "FAIL");
        if (!r.passed) out << " - " << r.detail;
        out << '\n';
    };
    line("promise", report.promise);
    line("coset count", report.coset_count);
    line("signature classes", report.signature_classes);
    return report.all_passed() ? kOk : kPromise;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    try {
        if (auto dots = text.find(".."); dots != std::string::npos) {
            const int lo = std::stoi(text.substr(0, dots));
            const int hi = std::stoi(text.substr(dots + 2));
            if (lo > hi) throw UsageError("empty range '" + text + "'");
            for (int v = lo; v <= hi; ++v) out.push_back(v);
            return out;
        }
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    } catch (const std::logic_error& e) {
        if (dynamic_cast<const UsageError*>(&e)) throw;
        throw UsageError("bad integer list '" + text + "'");
    }
    if (out.empty()) throw UsageError("empty integer list");
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Simulator for the exact distributed algorithm for the generalized Simon problem"};
    app.require_subcommand(1);

    ProblemParams params;
    std::string gen_out;
    auto* gen = app.add_subcommand("generate", "generate an instance with a planted hidden subgroup");
    gen->add_option("--n", params.n, "input bits")->required();
    gen->add_option("--t", params.t, "node-index bits (2^t nodes)")->required();
    gen->add_option("--m", params.m, "output bits")->required();
    gen->add_option("--k", params.k, "rank of the hidden subgroup")->required();
    gen->add_option("--seed", params.seed, "RNG seed");
    gen->add_option("--out", gen_out, "instance JSON path")->required();

    SolveArgs solve_args;
    auto* sol = app.add_subcommand("solve", "run a solver pipeline on an instance");
    sol->add_option("instance", solve_args.instance_path, "instance JSON")->required();
    sol->add_option("--seed", solve_args.seed, "measurement RNG seed");
    sol->add_option("--algorithm", solve_args.algorithm, "dsl | ds | edsl | eds | full");
    sol->add_option("--out", solve_args.out_path, "trace JSON path");
    sol->add_option("--rounds", solve_args.rounds, "sampling rounds for dsl/ds (default n-t)");
    sol->add_flag("--perturb-sl", solve_args.perturb_sl, "ds: use the whole space as S'_l");
    sol->add_option("--tolerance", solve_args.tolerance, "bad-probability tolerance");

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "exact pipeline over a parameter grid, CSV output");
    bench->add_option("--n", bench_args.ns, "n values: 4..8 or 4,5,6");
    bench->add_option("--t", bench_args.ts, "t values");
    bench->add_option("--m", bench_args.m, "fixed m (default: smallest feasible per k)");
    bench->add_option("--trials", bench_args.trials, "seeds per grid point");
    bench->add_option("--seed", bench_args.seed, "master seed");
    bench->add_option("--out", bench_args.out_path, "CSV path (default stdout)");
    bench->add_option("--workers", bench_args.workers, "worker threads (0 = hardware)");
    bench->add_option("--tolerance", bench_args.tolerance, "bad-probability tolerance");

    std::string verify_path;
    auto* ver = app.add_subcommand("verify", "exhaustively check an instance");
    ver->add_option("instance", verify_path, "instance JSON")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*gen) return cmd_generate(params, gen_out, out);
        if (*sol) return cmd_solve(solve_args, out);
        if (*bench) return cmd_bench(bench_args, out);
        if (*ver) return cmd_verify(verify_path, out);
    } catch (const InfeasibleParams& e) {
        err << "infeasible: " << e.what() << '\n';
        return kPromise;
    } catch (const PromiseViolation& e) {
        err << "promise violation: " << e.what() << '\n';
        return kPromise;
    } catch (const InvariantViolation& e) {
        err << "invariant violation: " << e.what() << '\n';
        return kInexact;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace dgsp::cli
