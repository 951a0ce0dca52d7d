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

#include "dgsp/hsp_instance.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "dgsp/errors.h"

namespace dgsp {

namespace {

constexpr int kMaxInputBits = 16;
constexpr int kMaxUBits = 12;
constexpr int kMaxRegisterBits = 64;
constexpr int kMaxBruteForceBits = 12;

std::string pair_str(BitVector x, BitVector y) { return "(" + x.str() + ", " + y.str() + ")"; }

// Gathers the bits of `value` selected by `mask` into the low bits, keeping order.
std::uint32_t compress_bits(std::uint32_t value, std::uint32_t mask) {
    std::uint32_t out = 0;
    int pos = 0;
    for (int b = 0; b < 32; ++b) {
        if ((mask >> b) & 1u) {
            out |= ((value >> b) & 1u) << pos;
            ++pos;
        }
    }
    return out;
}

std::uint32_t pivot_mask(const Gf2Basis& basis) {
    std::uint32_t mask = 0;
    for (auto row : basis.echelon()) mask |= std::bit_floor(row.value());
    return mask;
}

}  // namespace

void ProblemParams::validate() const {
    if (n < 2 || n > kMaxInputBits) {
        throw GuardError("n must lie in 2.." + std::to_string(kMaxInputBits) + ", got " + std::to_string(n));
    }
    if (t < 1 || t >= n) throw UsageError("t must satisfy 1 <= t < n");
    if (m < 1) throw UsageError("m must be at least 1");
    if (k < 0 || k > n) throw UsageError("k must satisfy 0 <= k <= n");
    if (n - t > kMaxUBits) throw GuardError("n-t <= 12 violated (n-t=" + std::to_string(n - t) + ")");
    if ((1 << t) * m > kMaxRegisterBits) {
        throw GuardError("2^t*m <= 64 violated (2^t*m=" + std::to_string((1 << t) * m) + ")");
    }
    if (m < n - k) {
        throw InfeasibleParams("m >= n-k violated (m=" + std::to_string(m) + ", n-k=" + std::to_string(n - k) +
                               "): 2^(n-k) cosets need distinct m-bit values");
    }
}

HspInstance::HspInstance(ProblemParams params, Gf2Basis s_basis, std::vector<std::uint64_t> f_table)
    : params_(params),
      s_basis_(std::move(s_basis)),
      f_table_(std::move(f_table)),
      sl_basis_(std::max(params.n - params.t, 1)),
      sr_basis_(std::max(params.t, 1)) {
    params_.validate();
    if (s_basis_.ambient_width() != params_.n) throw UsageError("s_basis width must equal n");
    if (s_basis_.rank() != params_.k) throw UsageError("s_basis rank must equal k");
    if (f_table_.size() != (std::size_t{1} << params_.n)) throw UsageError("f_table must have 2^n entries");
    const std::uint64_t limit = std::uint64_t{1} << params_.m;
    for (auto v : f_table_) {
        if (v >= limit) throw UsageError("f_table value does not fit in m bits");
    }
    std::vector<BitVector> lefts, rights;
    for (auto s : s_basis_.vectors()) {
        lefts.push_back(left_part(s, params_.u_bits()));
        rights.push_back(right_part(s, params_.t));
    }
    sl_basis_ = Gf2Basis::spanning(params_.u_bits(), lefts);
    sr_basis_ = Gf2Basis::spanning(params_.t, rights);
}

std::uint64_t HspInstance::f_eval(BitVector x) const {
    if (x.width() != params_.n) throw UsageError("f_eval: input width must equal n");
    return f_table_[x.value()];
}

std::uint64_t HspInstance::f_w_eval(BitVector u, BitVector w) const {
    if (u.width() != params_.u_bits() || w.width() != params_.t) throw UsageError("f_w_eval: bad widths");
    return f_table_[concat(u, w).value()];
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw UsageError("uniform_below: empty range");
    // Largest multiple of bound representable; reject draws above it.
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = kMax - (kMax % bound);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

HspInstance generate(const ProblemParams& params) {
    params.validate();
    std::mt19937_64 rng(params.seed);
    const int n = params.n;
    const std::uint32_t space = 1u << n;

    Gf2Basis s_basis(n);
    while (s_basis.rank() < params.k) {
        BitVector candidate(n, static_cast<std::uint32_t>(uniform_below(rng, space)));
        if (auto grown = extend_if_independent(s_basis, candidate)) s_basis = std::move(*grown);
    }
    s_basis = s_basis.reduced();

    // Partial Fisher-Yates over the virtual array {0, ..., 2^m - 1}.
    const std::uint64_t codomain = std::uint64_t{1} << params.m;
    const std::uint64_t cosets = std::uint64_t{1} << (n - params.k);
    std::unordered_map<std::uint64_t, std::uint64_t> swapped;
    auto slot = [&](std::uint64_t i) {
        auto it = swapped.find(i);
        return it == swapped.end() ? i : it->second;
    };
    std::vector<std::uint64_t> coset_value(cosets);
    for (std::uint64_t i = 0; i < cosets; ++i) {
        const std::uint64_t j = i + uniform_below(rng, codomain - i);
        const std::uint64_t vi = slot(i), vj = slot(j);
        swapped[i] = vj;
        swapped[j] = vi;
        coset_value[i] = vj;
    }

    const std::uint32_t free_mask = (space - 1) & ~pivot_mask(s_basis);
    std::vector<std::uint64_t> table(space);
    for (std::uint32_t x = 0; x < space; ++x) {
        const auto rep = reduce(BitVector(n, x), s_basis);
        table[x] = coset_value[compress_bits(rep.value(), free_mask)];
    }
    return HspInstance(params, std::move(s_basis), std::move(table));
}

std::vector<std::uint64_t> multiset_G(const HspInstance& inst, BitVector u) {
    const int t = inst.params().t;
    std::vector<std::uint64_t> values;
    values.reserve(std::size_t{1} << t);
    for (std::uint32_t w = 0; w < (1u << t); ++w) values.push_back(inst.f_w_eval(u, BitVector(t, w)));
    std::sort(values.begin(), values.end());
    return values;
}

std::vector<BitVector> matching_nodes_N(const HspInstance& inst, BitVector u, std::uint64_t z) {
    const int t = inst.params().t;
    std::vector<BitVector> out;
    for (std::uint32_t w = 0; w < (1u << t); ++w) {
        if (inst.f_w_eval(u, BitVector(t, w)) == z) out.emplace_back(t, w);
    }
    return out;
}

std::uint64_t pack_sorted(std::vector<std::uint64_t> values, int m) {
    std::uint64_t out = 0;
    for (auto v : values) out = (out << m) | v;
    return out;
}

std::uint64_t sorted_signature(const HspInstance& inst, BitVector u) {
    return pack_sorted(multiset_G(inst, u), inst.params().m);
}

std::vector<BitVector> brute_force_solve(const HspInstance& inst) {
    const int n = inst.params().n;
    if (n > kMaxBruteForceBits) throw GuardError("brute_force_solve requires n <= 12");
    const auto f0 = inst.f_table()[0];
    std::vector<BitVector> out;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        if (inst.f_table()[s] == f0) out.emplace_back(n, s);
    }
    return out;
}

NodeOracle::NodeOracle(const HspInstance& inst, BitVector w) : inst_(&inst), w_(w) {
    if (w.width() != inst.params().t) throw UsageError("node index width must equal t");
}

std::uint64_t NodeOracle::query(BitVector u) {
    ++classical_queries_;
    return inst_->f_w_eval(u, w_);
}

NodeOracle::QuantumQuery NodeOracle::quantum_query() {
    ++quantum_queries_;
    return QuantumQuery(*this);
}

std::uint64_t NodeOracle::QuantumQuery::operator()(std::uint32_t u) const {
    const auto& inst = *node_->inst_;
    return inst.f_table()[(u << inst.params().t) | node_->w_.value()];
}

Network::Network(const HspInstance& inst) : n_(inst.params().n), t_(inst.params().t), m_(inst.params().m) {
    for (std::uint32_t w = 0; w < (1u << t_); ++w) nodes_.emplace_back(inst, BitVector(t_, w));
}

std::uint64_t Network::max_quantum_queries_per_node() const {
    std::uint64_t best = 0;
    for (const auto& node : nodes_) best = std::max(best, node.quantum_queries());
    return best;
}

std::uint64_t Network::total_classical_queries() const {
    std::uint64_t total = 0;
    for (const auto& node : nodes_) total += node.classical_queries();
    return total;
}

VerifyReport verify_instance(const HspInstance& inst) {
    const auto& p = inst.params();
    const std::uint32_t space = 1u << p.n;
    VerifyReport report;

    // Promise, part 1: constant on cosets of S.
    for (std::uint32_t x = 0; x < space && report.promise.passed; ++x) {
        const BitVector bx(p.n, x);
        for (auto s : inst.s_basis().echelon()) {
            const auto y = bx ^ s;
            if (inst.f_eval(bx) != inst.f_eval(y)) {
                report.promise = {false, "x^y in S but f(x) != f(y) at " + pair_str(bx, y)};
                break;
            }
        }
    }
    // Promise, part 2: distinct across cosets.
    std::unordered_map<std::uint64_t, BitVector> seen;
    for (std::uint32_t x = 0; x < space && report.promise.passed; ++x) {
        const BitVector bx(p.n, x);
        auto [it, inserted] = seen.emplace(inst.f_eval(bx), bx);
        if (!inserted && !in_span(it->second ^ bx, inst.s_basis())) {
            report.promise = {false, "f(x) = f(y) but x^y not in S at " + pair_str(it->second, bx)};
        }
    }

    std::unordered_set<std::uint64_t> distinct(inst.f_table().begin(), inst.f_table().end());
    const std::size_t expected = std::size_t{1} << (p.n - p.k);
    if (distinct.size() != expected) {
        report.coset_count = {false, "found " + std::to_string(distinct.size()) + " distinct values, expected " +
                                         std::to_string(expected)};
    }

    // Signature classes must be exactly the cosets of S_l.
    const int ub = p.u_bits();
    const auto& sl = inst.sl_basis();
    std::map<std::uint64_t, BitVector> class_rep;
    for (std::uint32_t u = 0; u < (1u << ub) && report.signature_classes.passed; ++u) {
        const BitVector bu(ub, u);
        const auto sig = sorted_signature(inst, bu);
        for (auto e : sl.echelon()) {
            if (sorted_signature(inst, bu ^ e) != sig) {
                report.signature_classes = {false, "u^v in S_l but S(u) != S(v) at " + pair_str(bu, bu ^ e)};
                break;
            }
        }
        auto [it, inserted] = class_rep.emplace(sig, bu);
        if (report.signature_classes.passed && !inserted && !in_span(it->second ^ bu, sl)) {
            report.signature_classes = {false, "S(u) = S(v) but u^v not in S_l at " + pair_str(it->second, bu)};
        }
    }
    return report;
}

}  // namespace dgsp
