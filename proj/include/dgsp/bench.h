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

#ifndef DGSP_BENCH_H
#define DGSP_BENCH_H

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "dgsp/hsp_instance.h"

namespace dgsp {

struct GridPoint {
    int n = 0, t = 0, m = 0, k = 0;
};

/// Every (n, t, k) combination, k = 0..n, that passes ProblemParams::validate.
/// m is fixed when given, otherwise the smallest feasible max(n-k, 1).
std::vector<GridPoint> feasible_grid(const std::vector<int>& ns, const std::vector<int>& ts,
                                     std::optional<int> m = std::nullopt);

struct BenchRow {
    int n = 0, t = 0, m = 0, k = 0, k_l = 0;
    std::uint64_t seed = 0;
    int iterations = 0;
    std::uint64_t quantum_queries_per_node = 0;
    std::uint64_t classical_queries_total = 0;
    bool exact_success = false;
    double max_bad_probability = 0;
    double wall_time_ms = 0;
};

/// splitmix64 finalizer.
std::uint64_t mix_seed(std::uint64_t x);

/// Seed of row `row_index` (= grid_index * trials + trial) under `master_seed`.
inline std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t row_index) {
    return mix_seed(master_seed + row_index);
}

/// Generates an instance from `seed`, runs the exact pipeline with solver
/// seed mix_seed(seed) and checks it against brute force.
BenchRow run_trial(const GridPoint& point, std::uint64_t seed);

/// Rows come back in grid order regardless of which worker ran them.
std::vector<BenchRow> run_bench(const std::vector<GridPoint>& grid, int trials, std::uint64_t master_seed,
                                unsigned workers = 0);

void write_csv(std::ostream& out, const std::vector<BenchRow>& rows);
extern const char* const kBenchCsvHeader;

struct BenchSummary {
    std::size_t rows = 0;
    double success_rate = 0;
    int max_iterations = 0;
    double mean_iterations = 0;
    double mean_quantum_queries_per_node = 0;
    double mean_classical_queries = 0;
    double max_bad_probability = 0;
    bool iterations_within_bound = true;  // iterations <= n-t on every row
    bool queries_within_bound = true;     // quantum queries per node <= 6(n-t)
};

BenchSummary summarize(const std::vector<BenchRow>& rows);

}  // namespace dgsp

#endif
