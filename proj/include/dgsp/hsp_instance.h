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

#ifndef DGSP_HSP_INSTANCE_H
#define DGSP_HSP_INSTANCE_H

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dgsp/gf2.h"

namespace dgsp {

struct ProblemParams {
    int n = 0;  // input bits
    int t = 0;  // node-index bits; 2^t nodes
    int m = 0;  // output bits
    int k = 0;  // rank of the hidden subgroup
    std::uint64_t seed = 0;

    int u_bits() const { return n - t; }
    int node_count() const { return 1 << t; }

    /// Throws InfeasibleParams when m < n-k, GuardError on desk-scale guard
    /// violations and UsageError for out-of-range fields.
    void validate() const;
};

/// A generalized Simon function f: {0,1}^n -> {0,1}^m with a planted subgroup S,
/// together with the projections S_l (left n-t coordinates) and S_r (right t).
///
/// f is stored densely; f_table()[x] is f at the input whose big-endian value
/// is x. Instances are immutable once built.
class HspInstance {
   public:
    /// Builds from raw parts. Derived bases are recomputed; the promise is not
    /// checked here (see verify_instance), so corrupted tables can be loaded.
    HspInstance(ProblemParams params, Gf2Basis s_basis, std::vector<std::uint64_t> f_table);

    const ProblemParams& params() const { return params_; }
    const Gf2Basis& s_basis() const { return s_basis_; }
    const Gf2Basis& sl_basis() const { return sl_basis_; }
    const Gf2Basis& sr_basis() const { return sr_basis_; }
    int k_l() const { return sl_basis_.rank(); }
    const std::vector<std::uint64_t>& f_table() const { return f_table_; }

    std::uint64_t f_eval(BitVector x) const;
    /// f_w(u) = f(uw).
    std::uint64_t f_w_eval(BitVector u, BitVector w) const;

   private:
    ProblemParams params_;
    Gf2Basis s_basis_;
    std::vector<std::uint64_t> f_table_;
    Gf2Basis sl_basis_;
    Gf2Basis sr_basis_;
};

/// Draws a uniformly random rank-k subgroup and assigns each coset a distinct
/// uniformly random m-bit value.
HspInstance generate(const ProblemParams& params);

/// Uniform integer in [0, bound) by rejection; reproducible across platforms.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// The multiset G(u) = {f_w(u) : w}, returned sorted ascending.
std::vector<std::uint64_t> multiset_G(const HspInstance& inst, BitVector u);

/// N(u, z): the nodes w with f_w(u) = z, ascending. Empty when z is not in G(u).
std::vector<BitVector> matching_nodes_N(const HspInstance& inst, BitVector u, std::uint64_t z);

/// S(u): the 2^t values f_w(u) sorted ascending and concatenated, smallest
/// value in the most significant position.
std::uint64_t sorted_signature(const HspInstance& inst, BitVector u);

/// Concatenation of already-sorted m-bit values, first value most significant.
std::uint64_t pack_sorted(std::vector<std::uint64_t> values, int m);

/// {s : f(0^n) = f(s)}, sorted. Requires n <= 12.
std::vector<BitVector> brute_force_solve(const HspInstance& inst);

/// One party of the distributed setting: it can evaluate f_w(u) = f(uw) for
/// its own w and nothing else. Counters are owned by a single solver run.
class NodeOracle {
   public:
    NodeOracle(const HspInstance& inst, BitVector w);

    BitVector w() const { return w_; }
    /// BI(w): the node's integer index.
    int index() const { return static_cast<int>(w_.value()); }

    /// Classical query; counts one classical query.
    std::uint64_t query(BitVector u);

    /// Handle for one superposed application of O_{f_w}. Creating it counts
    /// one quantum query; it then evaluates f_w on every basis state.
    class QuantumQuery {
       public:
        std::uint64_t operator()(std::uint32_t u) const;

       private:
        friend class NodeOracle;
        QuantumQuery(const NodeOracle& node) : node_(&node) {}
        const NodeOracle* node_;
    };
    QuantumQuery quantum_query();

    std::uint64_t quantum_queries() const { return quantum_queries_; }
    std::uint64_t classical_queries() const { return classical_queries_; }

   private:
    const HspInstance* inst_;
    BitVector w_;
    std::uint64_t quantum_queries_ = 0;
    std::uint64_t classical_queries_ = 0;
};

/// The 2^t node oracles of one instance. Solvers only see this interface, so
/// they cannot read the planted subgroup.
class Network {
   public:
    explicit Network(const HspInstance& inst);

    int n() const { return n_; }
    int t() const { return t_; }
    int m() const { return m_; }
    int u_bits() const { return n_ - t_; }
    int node_count() const { return static_cast<int>(nodes_.size()); }

    NodeOracle& node(int index) { return nodes_.at(static_cast<std::size_t>(index)); }
    const NodeOracle& node(int index) const { return nodes_.at(static_cast<std::size_t>(index)); }
    std::vector<NodeOracle>& nodes() { return nodes_; }
    const std::vector<NodeOracle>& nodes() const { return nodes_; }

    std::uint64_t max_quantum_queries_per_node() const;
    std::uint64_t total_classical_queries() const;

   private:
    int n_, t_, m_;
    std::vector<NodeOracle> nodes_;
};

struct CheckResult {
    bool passed = true;
    std::string detail;  // counterexample when failed
};

struct VerifyReport {
    CheckResult promise;        // f(x) = f(y) iff x^y in S
    CheckResult coset_count;    // 2^(n-k) distinct values
    CheckResult signature_classes;  // S(u) = S(v) iff u^v in S_l
    bool all_passed() const { return promise.passed && coset_count.passed && signature_classes.passed; }
};

/// Exhaustive checks of an instance. Each check runs independently.
VerifyReport verify_instance(const HspInstance& inst);

}  // namespace dgsp

#endif
