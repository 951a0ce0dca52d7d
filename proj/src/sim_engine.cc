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

#include "dgsp/sim_engine.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <tuple>
#include <unordered_map>

#include "dgsp/errors.h"

namespace dgsp {

namespace {

std::string bits_str(std::uint64_t value, int width) {
    std::string s(static_cast<std::size_t>(width), '0');
    for (int i = 0; i < width; ++i) {
        if ((value >> (width - 1 - i)) & 1u) s[static_cast<std::size_t>(i)] = '1';
    }
    return s;
}

// Rounds values that would print as -0.000000000000.
double printable(double x) { return std::abs(x) < 5e-13 ? 0.0 : x; }

std::uint64_t slot_value(const RegisterLayout& layout, std::uint64_t slots, int index) {
    return (slots >> layout.slot_offset(index)) & layout.slot_mask();
}

struct KeyHash {
    std::size_t operator()(const BasisKey& k) const {
        std::uint64_t h = k.u * 0x9e3779b97f4a7c15ull;
        h ^= k.slots + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h ^= k.sorted + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

// In-place unnormalized Walsh-Hadamard transform: out[z] = sum_u (-1)^{u.z} in[u].
void walsh_hadamard(std::vector<Amplitude>& a) {
    for (std::size_t len = 1; len < a.size(); len <<= 1) {
        for (std::size_t i = 0; i < a.size(); i += len << 1) {
            for (std::size_t j = i; j < i + len; ++j) {
                const Amplitude x = a[j], y = a[j + len];
                a[j] = x + y;
                a[j + len] = x - y;
            }
        }
    }
}

void require_layout(const QuantumState& state, const Network& net) {
    if (!(state.layout() == RegisterLayout::for_network(net))) {
        throw UsageError("state layout does not match the network");
    }
}

}  // namespace

RegisterLayout RegisterLayout::for_network(const Network& net) {
    return RegisterLayout{net.u_bits(), net.node_count(), net.m()};
}

QuantumState::QuantumState(RegisterLayout layout, std::vector<StateEntry> entries)
    : layout_(layout), entries_(std::move(entries)) {}

Amplitude QuantumState::amplitude(const BasisKey& key) const {
    for (const auto& e : entries_) {
        if (e.key == key) return e.amp;
    }
    return {0.0, 0.0};
}

double QuantumState::norm_squared() const {
    double total = 0;
    for (const auto& e : entries_) total += std::norm(e.amp);
    return total;
}

std::vector<StateEntry> QuantumState::canonical() const {
    auto out = entries_;
    std::sort(out.begin(), out.end(), [](const StateEntry& a, const StateEntry& b) { return a.key < b.key; });
    return out;
}

QuantumState zero_state(const RegisterLayout& layout) {
    if (layout.u_bits < 1 || layout.slot_count < 2 || layout.slot_bits < 1 || layout.sorted_bits() > 64) {
        throw UsageError("invalid register layout");
    }
    return QuantumState(layout, {StateEntry{BasisKey{}, Amplitude{1.0, 0.0}}});
}

void hadamard_u(QuantumState& state) {
    auto& entries = state.mutable_entries();
    std::sort(entries.begin(), entries.end(), [](const StateEntry& a, const StateEntry& b) {
        return std::tie(a.key.slots, a.key.sorted, a.key.u) < std::tie(b.key.slots, b.key.sorted, b.key.u);
    });
    const std::size_t dim = std::size_t{1} << state.layout().u_bits;
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));

    std::vector<StateEntry> out;
    out.reserve(entries.size());
    std::vector<Amplitude> buf(dim);
    for (std::size_t begin = 0; begin < entries.size();) {
        std::size_t end = begin;
        const auto slots = entries[begin].key.slots;
        const auto sorted = entries[begin].key.sorted;
        while (end < entries.size() && entries[end].key.slots == slots && entries[end].key.sorted == sorted) ++end;

        if (end - begin == 1) {
            const auto u0 = entries[begin].key.u;
            const Amplitude a = entries[begin].amp * scale;
            for (std::uint32_t z = 0; z < dim; ++z) {
                out.push_back({BasisKey{z, slots, sorted}, (std::popcount(u0 & z) & 1) ? -a : a});
            }
        } else {
            std::fill(buf.begin(), buf.end(), Amplitude{});
            for (std::size_t i = begin; i < end; ++i) buf[entries[i].key.u] = entries[i].amp;
            walsh_hadamard(buf);
            for (std::uint32_t z = 0; z < dim; ++z) {
                const Amplitude a = buf[z] * scale;
                if (std::abs(a) >= kPruneThreshold) out.push_back({BasisKey{z, slots, sorted}, a});
            }
        }
        begin = end;
    }
    entries = std::move(out);
}

void apply_node_oracle(QuantumState& state, NodeOracle& node) {
    const auto& layout = state.layout();
    if (node.index() >= layout.slot_count) throw UsageError("node index outside the register layout");
    const auto f_w = node.quantum_query();
    const int offset = layout.slot_offset(node.index());
    for (auto& e : state.mutable_entries()) e.key.slots ^= f_w(e.key.u) << offset;
}

void apply_usort(QuantumState& state) {
    const auto& layout = state.layout();
    std::vector<std::uint64_t> values(static_cast<std::size_t>(layout.slot_count));
    for (auto& e : state.mutable_entries()) {
        for (int i = 0; i < layout.slot_count; ++i) values[static_cast<std::size_t>(i)] = slot_value(layout, e.key.slots, i);
        std::sort(values.begin(), values.end());
        e.key.sorted ^= pack_sorted(values, layout.slot_bits);
    }
}

void apply_A(QuantumState& state, Network& net) {
    require_layout(state, net);
    hadamard_u(state);
    for (int w = 0; w < net.node_count(); ++w) apply_node_oracle(state, net.node(w));
    apply_usort(state);
    for (int w = net.node_count() - 1; w >= 0; --w) apply_node_oracle(state, net.node(w));
    hadamard_u(state);
}

void apply_A_dagger(QuantumState& state, Network& net) {
    require_layout(state, net);
    hadamard_u(state);
    for (int w = 0; w < net.node_count(); ++w) apply_node_oracle(state, net.node(w));
    apply_usort(state);
    for (int w = net.node_count() - 1; w >= 0; --w) apply_node_oracle(state, net.node(w));
    hadamard_u(state);
}

void apply_R0(QuantumState& state, double phi) {
    const Amplitude phase = std::polar(1.0, phi);
    for (auto& e : state.mutable_entries()) {
        if (e.key.is_zero()) e.amp *= phase;
    }
}

void apply_RA(QuantumState& state, double varphi, const Gf2Basis& Y) {
    const int ub = state.layout().u_bits;
    if (Y.ambient_width() != ub) throw UsageError("apply_RA: Y width must equal n-t");
    std::vector<char> inside(std::size_t{1} << ub);
    for (std::uint32_t u = 0; u < inside.size(); ++u) inside[u] = in_span(BitVector(ub, u), Y);
    const Amplitude phase = std::polar(1.0, varphi);
    for (auto& e : state.mutable_entries()) {
        if (!inside[e.key.u]) e.amp *= phase;
    }
}

void apply_Q(QuantumState& state, double phi, double varphi, const Gf2Basis& Y, Network& net) {
    apply_RA(state, varphi, Y);
    apply_A_dagger(state, net);
    apply_R0(state, phi);
    apply_A(state, net);
    for (auto& e : state.mutable_entries()) e.amp = -e.amp;
}

std::map<BitVector, double> first_register_distribution(const QuantumState& state) {
    const int ub = state.layout().u_bits;
    std::map<BitVector, double> dist;
    for (const auto& e : state.entries()) dist[BitVector(ub, e.key.u)] += std::norm(e.amp);
    return dist;
}

BitVector measure_first_register(const QuantumState& state, std::mt19937_64& rng) {
    const auto dist = first_register_distribution(state);
    if (dist.empty()) throw UsageError("cannot measure an empty state");
    double total = 0;
    for (const auto& [u, p] : dist) total += p;
    const double r = static_cast<double>(rng() >> 11) * 0x1.0p-53 * total;
    double acc = 0;
    for (const auto& [u, p] : dist) {
        acc += p;
        if (r < acc) return u;
    }
    return dist.rbegin()->first;
}

double probability_in_span(const QuantumState& state, const Gf2Basis& Y) {
    const int ub = state.layout().u_bits;
    double total = 0;
    for (const auto& e : state.entries()) {
        if (in_span(BitVector(ub, e.key.u), Y)) total += std::norm(e.amp);
    }
    return total;
}

QuantumState project_first_register(const QuantumState& state, const std::function<bool(BitVector)>& keep) {
    const int ub = state.layout().u_bits;
    std::vector<StateEntry> out;
    for (const auto& e : state.entries()) {
        if (keep(BitVector(ub, e.key.u))) out.push_back(e);
    }
    return QuantumState(state.layout(), std::move(out));
}

Amplitude inner_product(const QuantumState& a, const QuantumState& b) {
    std::unordered_map<BasisKey, Amplitude, KeyHash> lookup;
    for (const auto& e : b.entries()) lookup.emplace(e.key, e.amp);
    Amplitude total{};
    for (const auto& e : a.entries()) {
        if (auto it = lookup.find(e.key); it != lookup.end()) total += std::conj(e.amp) * it->second;
    }
    return total;
}

QuantumState linear_combination(Amplitude a, const QuantumState& x, Amplitude b, const QuantumState& y) {
    std::unordered_map<BasisKey, Amplitude, KeyHash> acc;
    std::vector<BasisKey> order;
    for (const auto& e : x.entries()) {
        if (acc.emplace(e.key, a * e.amp).second) order.push_back(e.key);
    }
    for (const auto& e : y.entries()) {
        auto [it, inserted] = acc.emplace(e.key, b * e.amp);
        if (inserted) {
            order.push_back(e.key);
        } else {
            it->second += b * e.amp;
        }
    }
    std::vector<StateEntry> out;
    out.reserve(order.size());
    for (const auto& key : order) out.push_back({key, acc[key]});
    return QuantumState(x.layout(), std::move(out));
}

double max_amplitude_distance(const QuantumState& a, const QuantumState& b) {
    const auto diff = linear_combination(1.0, a, -1.0, b);
    double worst = 0;
    for (const auto& e : diff.entries()) worst = std::max(worst, std::abs(e.amp));
    return worst;
}

std::string dump(const QuantumState& state) {
    const auto& layout = state.layout();
    std::string out;
    char num[64];
    for (const auto& e : state.canonical()) {
        out += bits_str(e.key.u, layout.u_bits);
        out += '|';
        for (int i = 0; i < layout.slot_count; ++i) {
            if (i) out += ',';
            out += bits_str(slot_value(layout, e.key.slots, i), layout.slot_bits);
        }
        out += '|';
        out += bits_str(e.key.sorted, layout.sorted_bits());
        std::snprintf(num, sizeof num, " : %.12f,%.12f\n", printable(e.amp.real()), printable(e.amp.imag()));
        out += num;
    }
    return out;
}

}  // namespace dgsp
