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

#include "dgsp/bench.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "dgsp/errors.h"
#include "dgsp/gsp_algorithms.h"

namespace dgsp {

const char* const kBenchCsvHeader =
    "n,t,m,k,k_l,seed,iterations,quantum_queries_per_node,classical_queries_total,exact_success,"
    "max_bad_probability,wall_time_ms";

std::vector<GridPoint> feasible_grid(const std::vector<int>& ns, const std::vector<int>& ts, std::optional<int> m) {
    std::vector<GridPoint> grid;
    for (int n : ns) {
        for (int t : ts) {
            for (int k = 0; k <= n; ++k) {
                GridPoint point{n, t, m.value_or(std::max(n - k, 1)), k};
                try {
                    ProblemParams{point.n, point.t, point.m, point.k, 0}.validate();
                } catch (const std::exception&) {
                    continue;
                }
                grid.push_back(point);
            }
        }
    }
    return grid;
}

std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

BenchRow run_trial(const GridPoint& point, std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    const auto inst = generate(ProblemParams{point.n, point.t, point.m, point.k, seed});
    SolveOptions options;
    options.algorithm = Algorithm::kFull;
    options.seed = mix_seed(seed);
    const auto trace = solve(inst, options);
    const auto stop = std::chrono::steady_clock::now();

    BenchRow row;
    row.n = point.n;
    row.t = point.t;
    row.m = point.m;
    row.k = point.k;
    row.k_l = inst.k_l();
    row.seed = seed;
    row.iterations = static_cast<int>(trace.iterations.size());
    row.quantum_queries_per_node = trace.max_quantum_queries_per_node();
    row.classical_queries_total = trace.total_classical_queries();
    row.exact_success = trace.exact.value_or(false) && trace.sl_exact.value_or(false);
    row.max_bad_probability = trace.max_bad_probability_final;
    row.wall_time_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return row;
}

std::vector<BenchRow> run_bench(const std::vector<GridPoint>& grid, int trials, std::uint64_t master_seed,
                                unsigned workers) {
    if (trials < 1) throw UsageError("trials must be at least 1");
    const std::size_t total = grid.size() * static_cast<std::size_t>(trials);
    std::vector<BenchRow> rows(total);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < total; i = next++) {
            rows[i] = run_trial(grid[i / static_cast<std::size_t>(trials)], trial_seed(master_seed, i));
        }
    };
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(total, 1)));
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    return rows;
}

void write_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
    out << kBenchCsvHeader << '\n';
    for (const auto& r : rows) {
        out << r.n << ',' << r.t << ',' << r.m << ',' << r.k << ',' << r.k_l << ',' << r.seed << ','
            << r.iterations << ',' << r.quantum_queries_per_node << ',' << r.classical_queries_total << ','
            << (r.exact_success ? "true" : "false") << ',' << r.max_bad_probability << ',' << r.wall_time_ms
            << '\n';
    }
}

BenchSummary summarize(const std::vector<BenchRow>& rows) {
    BenchSummary s;
    s.rows = rows.size();
    if (rows.empty()) return s;
    std::size_t successes = 0;
    double iterations = 0, queries = 0, classical = 0;
    for (const auto& r : rows) {
        successes += r.exact_success;
        iterations += r.iterations;
        queries += static_cast<double>(r.quantum_queries_per_node);
        classical += static_cast<double>(r.classical_queries_total);
        s.max_iterations = std::max(s.max_iterations, r.iterations);
        s.max_bad_probability = std::max(s.max_bad_probability, r.max_bad_probability);
        s.iterations_within_bound = s.iterations_within_bound && r.iterations <= r.n - r.t;
        s.queries_within_bound =
            s.queries_within_bound && r.quantum_queries_per_node <= static_cast<std::uint64_t>(6 * (r.n - r.t));
    }
    const double count = static_cast<double>(rows.size());
    s.success_rate = static_cast<double>(successes) / count;
    s.mean_iterations = iterations / count;
    s.mean_quantum_queries_per_node = queries / count;
    s.mean_classical_queries = classical / count;
    return s;
}

}  // namespace dgsp
