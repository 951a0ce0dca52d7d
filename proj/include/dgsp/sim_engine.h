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

#ifndef DGSP_SIM_ENGINE_H
#define DGSP_SIM_ENGINE_H

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "dgsp/gf2.h"
#include "dgsp/hsp_instance.h"

namespace dgsp {

using Amplitude = std::complex<double>;

inline constexpr double kPruneThreshold = 1e-12;

/// Register structure |u>|slot_0 ... slot_{2^t-1}>|sorted>.
struct RegisterLayout {
    int u_bits = 0;      // n - t
    int slot_count = 0;  // 2^t
    int slot_bits = 0;   // m

    static RegisterLayout for_network(const Network& net);

    int sorted_bits() const { return slot_count * slot_bits; }
    int total_qubits() const { return u_bits + 2 * sorted_bits(); }
    /// Slot for node index i sits at bit offset i*m of the packed slot word.
    int slot_offset(int node_index) const { return node_index * slot_bits; }
    std::uint64_t slot_mask() const { return (std::uint64_t{1} << slot_bits) - 1; }

    friend bool operator==(const RegisterLayout&, const RegisterLayout&) = default;
};

struct BasisKey {
    std::uint32_t u = 0;
    std::uint64_t slots = 0;  // packed, see RegisterLayout::slot_offset
    std::uint64_t sorted = 0;

    bool is_zero() const { return u == 0 && slots == 0 && sorted == 0; }
    friend auto operator<=>(const BasisKey&, const BasisKey&) = default;
};

struct StateEntry {
    BasisKey key;
    Amplitude amp;
};

/// Sparse state over the register layout. Each basis key appears at most
/// once; entries with |amp| below kPruneThreshold are dropped by the
/// Hadamard layer, the only operation that can create cancellations.
class QuantumState {
   public:
    QuantumState(RegisterLayout layout, std::vector<StateEntry> entries);

    const RegisterLayout& layout() const { return layout_; }
    const std::vector<StateEntry>& entries() const { return entries_; }
    std::vector<StateEntry>& mutable_entries() { return entries_; }
    std::size_t size() const { return entries_.size(); }

    Amplitude amplitude(const BasisKey& key) const;
    double norm_squared() const;

    /// Entries sorted by key; two states compare equal when their canonical
    /// forms match.
    std::vector<StateEntry> canonical() const;

   private:
    RegisterLayout layout_;
    std::vector<StateEntry> entries_;
};

/// |0^{n-t}>|0^{2^{t+1}m}>.
QuantumState zero_state(const RegisterLayout& layout);

/// H^{(n-t)} on the first register.
void hadamard_u(QuantumState& state);

/// O'_{f_w}: slot BI(w) ^= f_w(u). Costs the node one quantum query.
void apply_node_oracle(QuantumState& state, NodeOracle& node);

/// sorted ^= sorted concatenation of the slot values.
void apply_usort(QuantumState& state);

/// Hadamard, oracles for w = 0^t..1^t, U_sort, oracles for w = 1^t..0^t,
/// Hadamard. Two quantum queries per node.
void apply_A(QuantumState& state, Network& net);
/// Exact reverse sequence of apply_A.
void apply_A_dagger(QuantumState& state, Network& net);

/// e^{i phi} on the all-zero basis key.
void apply_R0(QuantumState& state, double phi);

/// e^{i varphi} on every key whose first register lies outside span(Y).
void apply_RA(QuantumState& state, double varphi, const Gf2Basis& Y);

/// -A R0(phi) A^dagger (R_A(varphi, Y) (x) I). Four quantum queries per node.
void apply_Q(QuantumState& state, double phi, double varphi, const Gf2Basis& Y, Network& net);

/// Marginal distribution of the first register, ascending by value.
std::map<BitVector, double> first_register_distribution(const QuantumState& state);

/// Samples the first register. Consumes exactly one draw from rng.
BitVector measure_first_register(const QuantumState& state, std::mt19937_64& rng);

/// Total probability that the first register lies in span(Y).
double probability_in_span(const QuantumState& state, const Gf2Basis& Y);

/// Keeps only entries whose first register satisfies `keep` (not renormalized).
QuantumState project_first_register(const QuantumState& state, const std::function<bool(BitVector)>& keep);

/// <a|b>.
Amplitude inner_product(const QuantumState& a, const QuantumState& b);

/// Max over keys of |a - b| per amplitude, missing keys read as zero.
double max_amplitude_distance(const QuantumState& a, const QuantumState& b);

/// a*x + b*y as a new state on x's layout.
QuantumState linear_combination(Amplitude a, const QuantumState& x, Amplitude b, const QuantumState& y);

/// One line per key, sorted: "u|slot0,slot1,...|sorted : re,im".
std::string dump(const QuantumState& state);

}  // namespace dgsp

#endif
