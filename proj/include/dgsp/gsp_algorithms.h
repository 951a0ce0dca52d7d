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

#ifndef DGSP_GSP_ALGORITHMS_H
#define DGSP_GSP_ALGORITHMS_H

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dgsp/gf2.h"
#include "dgsp/hsp_instance.h"

namespace dgsp {

/// Phases of the one-shot exact amplitude amplification for the current
/// |Y| = r + 1 and assumed rank d_l.
struct PhasePair {
    double phi = 0;     // R_0 phase
    double varphi = 0;  // R_A phase
    int r = 0;
    int d_l = 0;
};

/// Requires n - t - r - d_l >= 1; throws UsageError otherwise.
PhasePair compute_phases(int n, int t, int r, int d_l);

/// |e^{i varphi}(1 - e^{i phi}) b - ((1 - e^{i phi}) b + e^{i phi})| with
/// b = 1 - 2^{r + d_l + t - n}. Zero when the phases cancel the bad amplitude.
double phase_residual(const PhasePair& phases, int n, int t);

struct DslRound {
    BitVector z;
    bool extended = false;
    Gf2Basis Y;  // independent non-zero samples so far
};

/// One round of the sampling algorithm: prepare A|0>, measure, grow Y.
DslRound dsl_round(Network& net, const Gf2Basis& Y, std::mt19937_64& rng);

struct QaaRound {
    BitVector z;
    PhasePair phases;
    double bad_probability = 0;  // first-register mass in span(Y) just before measuring
};

/// Prepares A|0>, applies Q once with the phases for (|Y| - 1, d_l), measures.
/// Y holds only the non-zero vectors; |Y| counts the implicit zero vector.
QaaRound qaa_round(Network& net, const Gf2Basis& Y, int d_l, std::mt19937_64& rng);

enum class Branch { kExtend, kIncrement };
std::string to_string(Branch b);

struct IterationRecord {
    int d_l = 0;     // value used for this round's phases
    int y_size = 0;  // |Y| including the zero vector, before the update
    BitVector z;
    Branch branch = Branch::kExtend;
    double bad_probability = 0;
};

struct EdslResult {
    Gf2Basis sl_basis;  // perp of the final Y
    Gf2Basis Y;
    int d_l = 0;
    std::vector<IterationRecord> iterations;
};

/// Exact finder for S_l. Runs exactly n - t rounds; throws
/// InvariantViolation if the loop fails to terminate within that bound.
EdslResult edsl(Network& net, std::mt19937_64& rng);

/// Exact assembly of S from a basis of the true S_l using 2^t + k_l classical
/// queries. Throws PromiseViolation if some basis vector has no partner v_i.
std::vector<BitVector> eds(Network& net, const Gf2Basis& sl_basis);

struct DsResult {
    std::vector<BitVector> subgroup;
    /// E_l: the basis vectors e'_i of S'_l that found a partner v_i, i.e. lie in S_l.
    std::vector<BitVector> matched;
    int k_hat() const { return static_cast<int>(matched.size()); }
};

/// Non-exact assembly driven by an arbitrary candidate S'_l. The result is a
/// subgroup of S but may be a proper one.
DsResult ds(Network& net, const Gf2Basis& sl_prime_basis);

struct DslSampling {
    Gf2Basis Y;
    std::vector<BitVector> samples;
    Gf2Basis sl_prime;  // perp(Y)
};

/// Repeats dsl_round `rounds` times starting from Y = {0}.
DslSampling dsl_sample(Network& net, int rounds, std::mt19937_64& rng);

enum class Algorithm { kDsl, kDs, kEdsl, kEds, kFull };
Algorithm parse_algorithm(const std::string& name);
std::string to_string(Algorithm a);

struct SolveOptions {
    Algorithm algorithm = Algorithm::kFull;
    std::uint64_t seed = 0;
    /// Rounds of sampling for dsl/ds; n - t when unset.
    std::optional<int> dsl_rounds;
    /// ds only: replace S'_l by the whole space {0,1}^{n-t}.
    bool perturb_sl = false;
};

struct NodeCounters {
    BitVector w;
    std::uint64_t quantum = 0;
    std::uint64_t classical = 0;
};

/// Everything a solver run produced, plus post-hoc checks against the instance.
struct SolverTrace {
    Algorithm algorithm = Algorithm::kFull;
    std::uint64_t seed = 0;
    std::vector<IterationRecord> iterations;
    std::vector<BitVector> dsl_samples;
    std::vector<NodeCounters> nodes;
    std::optional<Gf2Basis> sl_basis;
    std::optional<std::vector<BitVector>> subgroup;
    std::optional<int> final_d_l;
    std::optional<int> k_hat;

    // Diagnostics.
    double max_bad_probability_final = 0;  // over rounds run with the final d_l
    bool samples_in_sl_perp = true;        // every measured z lies in S_l^perp
    std::optional<bool> sl_exact;          // recovered S_l spans the planted S_l
    std::optional<bool> exact;             // recovered subgroup equals brute force
    std::optional<BitVector> witness;      // element of S missing from the result

    std::uint64_t max_quantum_queries_per_node() const;
    std::uint64_t total_classical_queries() const;
};

/// Runs the selected pipeline on a fresh Network. Only kEds reads the planted
/// S_l (it runs the classical assembly in isolation); every other pipeline
/// sees the instance only through its node oracles. The instance is used
/// afterwards to fill in the diagnostics.
SolverTrace solve(const HspInstance& inst, const SolveOptions& options);

}  // namespace dgsp

#endif
