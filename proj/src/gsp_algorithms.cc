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

#include "dgsp/gsp_algorithms.h"

#include <algorithm>
#include <cmath>
#include <complex>

#include "dgsp/errors.h"
#include "dgsp/sim_engine.h"

namespace dgsp {

namespace {

Gf2Basis full_space(int width) {
    std::vector<BitVector> unit;
    for (int i = width - 1; i >= 0; --i) unit.emplace_back(width, 1u << i);
    return Gf2Basis(width, std::move(unit));
}

// Shared tail of the two assembly procedures: given pairs (e_i, v_i) with
// f(e_i 0^t) = f(0^{n-t} v_i), returns the union over all combinations gamma of
// {(sum gamma_i e_i) v : f(0^{n-t} v) = f(0^{n-t} sum gamma_i v_i)}.
std::vector<BitVector> assemble(const std::vector<std::uint64_t>& column, const std::vector<BitVector>& lefts,
                                const std::vector<std::uint32_t>& partners, int u_bits, int t) {
    std::vector<BitVector> out;
    const std::uint32_t combos = 1u << lefts.size();
    for (std::uint32_t j = 0; j < combos; ++j) {
        std::uint32_t e_sum = 0, v_sum = 0;
        for (std::size_t i = 0; i < lefts.size(); ++i) {
            if ((j >> i) & 1u) {
                e_sum ^= lefts[i].value();
                v_sum ^= partners[i];
            }
        }
        const auto target = column[v_sum];
        for (std::uint32_t v = 0; v < column.size(); ++v) {
            if (column[v] == target) out.push_back(concat(BitVector(u_bits, e_sum), BitVector(t, v)));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// f(0^{n-t} w) for every w, one classical query per node.
std::vector<std::uint64_t> query_zero_column(Network& net) {
    std::vector<std::uint64_t> column;
    const auto zero = BitVector::zero(net.u_bits());
    for (auto& node : net.nodes()) column.push_back(node.query(zero));
    return column;
}

std::optional<std::uint32_t> find_partner(const std::vector<std::uint64_t>& column, std::uint64_t value) {
    auto it = std::find(column.begin(), column.end(), value);
    if (it == column.end()) return std::nullopt;
    return static_cast<std::uint32_t>(it - column.begin());
}

}  // namespace

PhasePair compute_phases(int n, int t, int r, int d_l) {
    const int x = n - t - r - d_l;
    if (x < 1) {
        throw UsageError("compute_phases: n-t-r-d_l must be >= 1, got " + std::to_string(x));
    }
    const double p = std::ldexp(1.0, x);  // 2^{n-t-r-d_l}
    PhasePair out;
    out.phi = 2.0 * std::atan(std::sqrt(p / (3.0 * p - 4.0)));
    out.varphi = std::acos((p / 2.0 - 1.0) / (p - 1.0));
    out.r = r;
    out.d_l = d_l;
    return out;
}

double phase_residual(const PhasePair& phases, int n, int t) {
    const double b = 1.0 - std::ldexp(1.0, phases.r + phases.d_l + t - n);
    const std::complex<double> e_phi = std::polar(1.0, phases.phi);
    const std::complex<double> e_varphi = std::polar(1.0, phases.varphi);
    const auto lhs = e_varphi * (1.0 - e_phi) * b;
    const auto rhs = (1.0 - e_phi) * b + e_phi;
    return std::abs(lhs - rhs);
}

DslRound dsl_round(Network& net, const Gf2Basis& Y, std::mt19937_64& rng) {
    if (Y.ambient_width() != net.u_bits()) throw UsageError("dsl_round: Y width must equal n-t");
    auto state = zero_state(RegisterLayout::for_network(net));
    apply_A(state, net);
    const auto z = measure_first_register(state, rng);
    if (auto grown = extend_if_independent(Y, z)) return DslRound{z, true, std::move(*grown)};
    return DslRound{z, false, Y};
}

QaaRound qaa_round(Network& net, const Gf2Basis& Y, int d_l, std::mt19937_64& rng) {
    if (Y.ambient_width() != net.u_bits()) throw UsageError("qaa_round: Y width must equal n-t");
    const auto phases = compute_phases(net.n(), net.t(), Y.rank(), d_l);
    auto state = zero_state(RegisterLayout::for_network(net));
    apply_A(state, net);
    apply_Q(state, phases.phi, phases.varphi, Y, net);
    const double bad = probability_in_span(state, Y);
    return QaaRound{measure_first_register(state, rng), phases, bad};
}

std::string to_string(Branch b) { return b == Branch::kExtend ? "extend" : "increment"; }

EdslResult edsl(Network& net, std::mt19937_64& rng) {
    const int u_bits = net.u_bits();
    Gf2Basis Y(u_bits);
    int d_l = 0;
    std::vector<IterationRecord> iterations;
    // |Y| = n-t+1-d_l, i.e. rank(Y) + d_l = n-t, with |Y| counting 0^{n-t}.
    while (Y.rank() + 1 != u_bits + 1 - d_l) {
        if (static_cast<int>(iterations.size()) >= u_bits) {
            throw InvariantViolation("edsl exceeded n-t iterations");
        }
        const auto round = qaa_round(net, Y, d_l, rng);
        IterationRecord rec{d_l, Y.rank() + 1, round.z, Branch::kExtend, round.bad_probability};
        if (auto grown = extend_if_independent(Y, round.z)) {
            Y = std::move(*grown);
        } else {
            rec.branch = Branch::kIncrement;
            ++d_l;
        }
        iterations.push_back(rec);
    }
    return EdslResult{perp(Y), std::move(Y), d_l, std::move(iterations)};
}

std::vector<BitVector> eds(Network& net, const Gf2Basis& sl_basis) {
    if (sl_basis.ambient_width() != net.u_bits()) throw UsageError("eds: basis width must equal n-t");
    const auto column = query_zero_column(net);
    std::vector<std::uint32_t> partners;
    for (auto e : sl_basis.vectors()) {
        const auto value = net.node(0).query(e);
        const auto v = find_partner(column, value);
        if (!v) {
            throw PromiseViolation("no v with f(0^{n-t} v) = f(e 0^t) for e = " + e.str() +
                                   "; the basis is not inside S_l or f breaks the promise");
        }
        partners.push_back(*v);
    }
    return assemble(column, sl_basis.vectors(), partners, net.u_bits(), net.t());
}

DsResult ds(Network& net, const Gf2Basis& sl_prime_basis) {
    if (sl_prime_basis.ambient_width() != net.u_bits()) throw UsageError("ds: basis width must equal n-t");
    const auto column = query_zero_column(net);
    DsResult out;
    std::vector<std::uint32_t> partners;
    for (auto e : sl_prime_basis.vectors()) {
        const auto value = net.node(0).query(e);
        if (auto v = find_partner(column, value)) {
            out.matched.push_back(e);
            partners.push_back(*v);
        }
    }
    out.subgroup = assemble(column, out.matched, partners, net.u_bits(), net.t());
    return out;
}

DslSampling dsl_sample(Network& net, int rounds, std::mt19937_64& rng) {
    Gf2Basis Y(net.u_bits());
    std::vector<BitVector> samples;
    for (int i = 0; i < rounds; ++i) {
        auto round = dsl_round(net, Y, rng);
        samples.push_back(round.z);
        Y = std::move(round.Y);
    }
    auto sl_prime = perp(Y);
    return DslSampling{std::move(Y), std::move(samples), std::move(sl_prime)};
}

Algorithm parse_algorithm(const std::string& name) {
    if (name == "dsl") return Algorithm::kDsl;
    if (name == "ds") return Algorithm::kDs;
    if (name == "edsl") return Algorithm::kEdsl;
    if (name == "eds") return Algorithm::kEds;
    if (name == "full") return Algorithm::kFull;
    throw UsageError("unknown algorithm '" + name + "' (expected dsl, ds, edsl, eds or full)");
}

std::string to_string(Algorithm a) {
    switch (a) {
        case Algorithm::kDsl: return "dsl";
        case Algorithm::kDs: return "ds";
        case Algorithm::kEdsl: return "edsl";
        case Algorithm::kEds: return "eds";
        case Algorithm::kFull: return "full";
    }
    return "?";
}

std::uint64_t SolverTrace::max_quantum_queries_per_node() const {
    std::uint64_t best = 0;
    for (const auto& c : nodes) best = std::max(best, c.quantum);
    return best;
}

std::uint64_t SolverTrace::total_classical_queries() const {
    std::uint64_t total = 0;
    for (const auto& c : nodes) total += c.classical;
    return total;
}

SolverTrace solve(const HspInstance& inst, const SolveOptions& options) {
    Network net(inst);
    std::mt19937_64 rng(options.seed);
    SolverTrace trace;
    trace.algorithm = options.algorithm;
    trace.seed = options.seed;
    const int rounds = options.dsl_rounds.value_or(net.u_bits());

    switch (options.algorithm) {
        case Algorithm::kDsl: {
            auto sampling = dsl_sample(net, rounds, rng);
            trace.dsl_samples = std::move(sampling.samples);
            trace.sl_basis = std::move(sampling.sl_prime);
            break;
        }
        case Algorithm::kDs: {
            auto sampling = dsl_sample(net, rounds, rng);
            trace.dsl_samples = std::move(sampling.samples);
            trace.sl_basis = options.perturb_sl ? full_space(net.u_bits()) : std::move(sampling.sl_prime);
            auto result = ds(net, *trace.sl_basis);
            trace.k_hat = result.k_hat();
            trace.subgroup = std::move(result.subgroup);
            break;
        }
        case Algorithm::kEdsl:
        case Algorithm::kFull: {
            auto result = edsl(net, rng);
            trace.iterations = std::move(result.iterations);
            trace.final_d_l = result.d_l;
            trace.sl_basis = std::move(result.sl_basis);
            if (options.algorithm == Algorithm::kFull) trace.subgroup = eds(net, *trace.sl_basis);
            break;
        }
        case Algorithm::kEds:
            trace.sl_basis = inst.sl_basis();
            trace.subgroup = eds(net, *trace.sl_basis);
            break;
    }

    for (const auto& node : net.nodes()) {
        trace.nodes.push_back(NodeCounters{node.w(), node.quantum_queries(), node.classical_queries()});
    }

    const auto& sl = inst.sl_basis();
    auto in_sl_perp = [&](BitVector z) {
        return std::all_of(sl.vectors().begin(), sl.vectors().end(), [&](BitVector e) { return dot(z, e) == 0; });
    };
    for (const auto& rec : trace.iterations) {
        trace.samples_in_sl_perp = trace.samples_in_sl_perp && in_sl_perp(rec.z);
        if (trace.final_d_l && rec.d_l == *trace.final_d_l) {
            trace.max_bad_probability_final = std::max(trace.max_bad_probability_final, rec.bad_probability);
        }
    }
    for (auto z : trace.dsl_samples) trace.samples_in_sl_perp = trace.samples_in_sl_perp && in_sl_perp(z);
    if (trace.sl_basis) trace.sl_exact = same_span(*trace.sl_basis, sl);
    if (trace.subgroup) {
        const auto truth = inst.params().n <= 12 ? brute_force_solve(inst) : enumerate_span(inst.s_basis());
        trace.exact = (*trace.subgroup == truth);
        for (auto s : truth) {
            if (!std::binary_search(trace.subgroup->begin(), trace.subgroup->end(), s)) {
                trace.witness = s;
                break;
            }
        }
    }
    return trace;
}

}  // namespace dgsp
