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

#include <map>
#include <set>

#include "gtest/gtest.h"

#include "dgsp/errors.h"
#include "dgsp/io.h"
#include "test_util.h"

using namespace dgsp;

namespace {

BitVector bv(const char* s) { return BitVector::parse(s); }

std::vector<HspInstance> sample_instances(int n_lo, int n_hi, std::vector<int> ts, int seeds_per_point) {
    std::vector<HspInstance> out;
    for (auto p : dgsp::testing::param_sweep(n_lo, n_hi, ts)) {
        for (int s = 0; s < seeds_per_point; ++s) {
            p.seed = 1000u * static_cast<std::uint64_t>(p.n) + 37u * static_cast<std::uint64_t>(p.k) + static_cast<std::uint64_t>(s);
            out.push_back(generate(p));
        }
    }
    return out;
}

}  // namespace

TEST(problem_params, validation) {
    EXPECT_NO_THROW((ProblemParams{4, 1, 3, 1, 7}.validate()));
    EXPECT_THROW((ProblemParams{4, 1, 1, 1, 7}.validate()), InfeasibleParams);
    // 2^(n-k) = 16 cosets cannot get distinct 3-bit values.
    EXPECT_THROW((ProblemParams{4, 1, 3, 0, 7}.validate()), InfeasibleParams);
    EXPECT_THROW((ProblemParams{4, 4, 4, 0, 7}.validate()), UsageError);
    EXPECT_THROW((ProblemParams{14, 1, 14, 0, 7}.validate()), GuardError);
    EXPECT_THROW((ProblemParams{8, 3, 9, 0, 7}.validate()), GuardError);
    EXPECT_THROW((ProblemParams{4, 1, 4, 5, 7}.validate()), UsageError);
    try {
        ProblemParams{4, 1, 1, 1, 7}.validate();
    } catch (const InfeasibleParams& e) {
        EXPECT_NE(std::string(e.what()).find("m >= n-k violated"), std::string::npos);
    }
}

TEST(generate, rank_zero_is_injective) {
    auto inst = generate({2, 1, 2, 0, 3});
    std::set<std::uint64_t> values(inst.f_table().begin(), inst.f_table().end());
    EXPECT_EQ(values.size(), 4u);
    EXPECT_EQ(brute_force_solve(inst), std::vector<BitVector>{bv("00")});
    EXPECT_EQ(inst.k_l(), 0);
}

TEST(generate, planted_diagonal_subgroup) {
    auto found = dgsp::testing::find_instance({2, 1, 1, 1, 0}, [](const HspInstance& inst) {
        return inst.s_basis().vectors() == std::vector<BitVector>{BitVector::parse("11")};
    });
    ASSERT_TRUE(found);
    const auto& inst = *found;
    EXPECT_EQ(inst.f_eval(bv("00")), inst.f_eval(bv("11")));
    EXPECT_EQ(inst.f_eval(bv("01")), inst.f_eval(bv("10")));
    EXPECT_NE(inst.f_eval(bv("00")), inst.f_eval(bv("01")));
    EXPECT_EQ(inst.k_l(), 1);
    EXPECT_EQ(enumerate_span(inst.sl_basis()), (std::vector<BitVector>{bv("0"), bv("1")}));
    EXPECT_EQ(brute_force_solve(inst), (std::vector<BitVector>{bv("00"), bv("11")}));
}

TEST(generate, deterministic_in_seed) {
    auto a = generate({6, 2, 4, 2, 99});
    auto b = generate({6, 2, 4, 2, 99});
    auto c = generate({6, 2, 4, 2, 100});
    EXPECT_EQ(a.f_table(), b.f_table());
    EXPECT_EQ(a.s_basis(), b.s_basis());
    EXPECT_TRUE(a.f_table() != c.f_table() || !(a.s_basis() == c.s_basis()));
}

TEST(generate, large_codomain) {
    auto inst = generate({6, 1, 32, 0, 1});
    std::set<std::uint64_t> values(inst.f_table().begin(), inst.f_table().end());
    EXPECT_EQ(values.size(), 64u);
    EXPECT_TRUE(verify_instance(inst).all_passed());
}

TEST(hsp_instance_property, promise_and_structure) {
    for (const auto& inst : sample_instances(2, 8, {1, 2, 3}, 3)) {
        const auto& p = inst.params();
        SCOPED_TRACE("n=" + std::to_string(p.n) + " t=" + std::to_string(p.t) + " k=" + std::to_string(p.k));
        const auto span = enumerate_span(inst.s_basis());
        EXPECT_EQ(brute_force_solve(inst), span);
        EXPECT_EQ(static_cast<int>(span.size()), 1 << p.k);

        // f(x) = f(y) iff x^y in S, all pairs.
        const std::uint32_t space = 1u << p.n;
        for (std::uint32_t x = 0; x < space; ++x) {
            for (std::uint32_t y = 0; y < space; ++y) {
                const bool same = inst.f_table()[x] == inst.f_table()[y];
                ASSERT_EQ(same, std::binary_search(span.begin(), span.end(), BitVector(p.n, x ^ y)));
            }
        }
        std::set<std::uint64_t> values(inst.f_table().begin(), inst.f_table().end());
        EXPECT_EQ(values.size(), std::size_t{1} << (p.n - p.k));

        // S_l is the set of left parts of S.
        std::set<std::uint32_t> lefts;
        for (auto s : span) lefts.insert(s.value() >> p.t);
        EXPECT_EQ(dgsp::testing::brute_span(inst.sl_basis()), std::vector<std::uint32_t>(lefts.begin(), lefts.end()));
        EXPECT_LE(inst.k_l(), std::min(p.k, p.n - p.t));
        std::set<std::uint32_t> rights;
        for (auto s : span) rights.insert(s.value() & ((1u << p.t) - 1));
        EXPECT_EQ(dgsp::testing::brute_span(inst.sr_basis()), std::vector<std::uint32_t>(rights.begin(), rights.end()));
    }
}

TEST(f_eval, determinism_and_coset_constancy) {
    auto inst = generate({5, 1, 3, 2, 8});
    EXPECT_EQ(inst.f_eval(BitVector::zero(5)), inst.f_eval(BitVector::zero(5)));
    for (std::uint32_t x = 0; x < 32; ++x) {
        for (auto s : enumerate_span(inst.s_basis())) {
            EXPECT_EQ(inst.f_eval(BitVector(5, x)), inst.f_eval(BitVector(5, x) ^ s));
        }
    }
    EXPECT_THROW(inst.f_eval(BitVector::zero(4)), UsageError);
}

TEST(f_w_eval, matches_concatenation) {
    auto inst = generate({6, 2, 4, 2, 21});
    Network net(inst);
    EXPECT_EQ(net.node(0).query(BitVector::zero(4)), inst.f_eval(BitVector::zero(6)));
    for (std::uint32_t w = 0; w < 4; ++w) {
        for (std::uint32_t u = 0; u < 16; ++u) {
            EXPECT_EQ(inst.f_w_eval(BitVector(4, u), BitVector(2, w)), inst.f_table()[(u << 2) | w]);
            EXPECT_EQ(net.node(static_cast<int>(w)).query(BitVector(4, u)), inst.f_eval(concat(BitVector(4, u), BitVector(2, w))));
        }
    }
    EXPECT_EQ(net.node(0).classical_queries(), 17u);
    for (int w = 1; w < 4; ++w) EXPECT_EQ(net.node(w).classical_queries(), 16u);
    EXPECT_EQ(net.total_classical_queries(), 65u);
    EXPECT_EQ(net.max_quantum_queries_per_node(), 0u);
}

TEST(f_w_eval, single_node_bit) {
    auto inst = generate({4, 1, 3, 1, 2});
    for (std::uint32_t u = 0; u < 8; ++u) {
        EXPECT_EQ(inst.f_w_eval(BitVector(3, u), BitVector::parse("1")), inst.f_eval(BitVector(4, (u << 1) | 1u)));
    }
}

TEST(sorted_signature, sorts_two_values) {
    // n=2, t=1, m=2, k=0 with f(00)=10 and f(01)=01.
    HspInstance inst({2, 1, 2, 0, 0}, Gf2Basis(2), {0b10, 0b01, 0b00, 0b11});
    EXPECT_EQ(sorted_signature(inst, bv("0")), 0b0110u);
    EXPECT_EQ(multiset_G(inst, bv("0")), (std::vector<std::uint64_t>{0b01, 0b10}));
    EXPECT_EQ(matching_nodes_N(inst, bv("0"), 0b10), std::vector<BitVector>{bv("0")});
    EXPECT_TRUE(matching_nodes_N(inst, bv("0"), 0b11).empty());
}

TEST(sorted_signature, keeps_duplicates) {
    // S = {000, 001}: both nodes see the same value, so the multiset has a repeat.
    auto found = dgsp::testing::find_instance({3, 1, 2, 1, 0}, [](const HspInstance& inst) {
        return inst.s_basis().vectors() == std::vector<BitVector>{BitVector::parse("001")};
    });
    ASSERT_TRUE(found);
    for (std::uint32_t u = 0; u < 4; ++u) {
        auto g = multiset_G(*found, BitVector(2, u));
        ASSERT_EQ(g.size(), 2u);
        EXPECT_EQ(g[0], g[1]);
        EXPECT_EQ(sorted_signature(*found, BitVector(2, u)), (g[0] << 2) | g[1]);
    }
}

TEST(signature_classes, exhaustive_equivalence) {
    for (const auto& inst : sample_instances(2, 9, {1, 2, 3}, 2)) {
        const auto& p = inst.params();
        const int ub = p.u_bits();
        if (ub > 8) continue;
        const auto sl_span = enumerate_span(inst.sl_basis());
        std::vector<std::uint64_t> sig(std::size_t{1} << ub);
        for (std::uint32_t u = 0; u < sig.size(); ++u) sig[u] = sorted_signature(inst, BitVector(ub, u));
        for (std::uint32_t u = 0; u < sig.size(); ++u) {
            for (std::uint32_t v = 0; v < sig.size(); ++v) {
                const bool in_sl = std::binary_search(sl_span.begin(), sl_span.end(), BitVector(ub, u ^ v));
                ASSERT_EQ(sig[u] == sig[v], in_sl) << "u=" << u << " v=" << v;
                ASSERT_EQ(multiset_G(inst, BitVector(ub, u)) == multiset_G(inst, BitVector(ub, v)), sig[u] == sig[v]);
            }
        }
        std::set<std::uint64_t> distinct(sig.begin(), sig.end());
        EXPECT_EQ(distinct.size(), std::size_t{1} << (ub - inst.k_l()));
    }
}

TEST(multiset_g, node_partition) {
    auto inst = generate({7, 2, 5, 2, 4});
    for (std::uint32_t u = 0; u < 32; ++u) {
        const BitVector bu(5, u);
        auto g = multiset_G(inst, bu);
        EXPECT_EQ(g.size(), 4u);
        std::set<std::uint64_t> distinct(g.begin(), g.end());
        std::size_t total = 0;
        for (auto z : distinct) total += matching_nodes_N(inst, bu, z).size();
        EXPECT_EQ(total, 4u);
    }
}

TEST(hsp_instance_property, left_basis_has_right_partner) {
    for (const auto& inst : sample_instances(3, 8, {1, 2}, 2)) {
        const int ub = inst.params().u_bits(), t = inst.params().t;
        for (auto e : inst.sl_basis().vectors()) {
            bool found = false;
            for (std::uint32_t v = 0; v < (1u << t); ++v) {
                found = found || inst.f_eval(concat(BitVector::zero(ub), BitVector(t, v))) ==
                                     inst.f_eval(concat(e, BitVector::zero(t)));
            }
            EXPECT_TRUE(found) << e.str();
        }
    }
}

TEST(brute_force_solve, subgroup_closure) {
    for (const auto& inst : sample_instances(2, 7, {1, 2}, 2)) {
        auto s = brute_force_solve(inst);
        for (auto a : s) {
            for (auto b : s) EXPECT_TRUE(std::binary_search(s.begin(), s.end(), a ^ b));
        }
    }
    EXPECT_THROW(brute_force_solve(generate({13, 2, 13, 0, 0})), GuardError);
}

TEST(verify_instance, generated_passes) {
    for (const auto& inst : sample_instances(2, 7, {1, 2}, 1)) EXPECT_TRUE(verify_instance(inst).all_passed());
}

TEST(verify_instance, corrupted_entry_reports_pair) {
    auto inst = generate({5, 1, 4, 2, 12});
    auto table = inst.f_table();
    // Give x = 00011 the value of x = 00000's coset partner-free value: break constancy.
    const std::uint64_t fresh = [&] {
        for (std::uint64_t v = 0;; ++v) {
            if (std::find(table.begin(), table.end(), v) == table.end()) return v;
        }
    }();
    table[3] = fresh;
    HspInstance bad(inst.params(), inst.s_basis(), table);
    auto report = verify_instance(bad);
    EXPECT_FALSE(report.promise.passed);
    EXPECT_NE(report.promise.detail.find("00011"), std::string::npos) << report.promise.detail;
    EXPECT_FALSE(report.coset_count.passed);

    // Copy a value from another coset instead: constancy breaks and two cosets collide.
    auto table2 = inst.f_table();
    std::uint32_t other = 0;
    while (in_span(BitVector(5, other ^ 3u), inst.s_basis())) ++other;
    table2[3] = table2[other];
    auto report2 = verify_instance(HspInstance(inst.params(), inst.s_basis(), table2));
    EXPECT_FALSE(report2.promise.passed);
}

TEST(verify_instance, checks_are_independent) {
    // Swap the values of two whole cosets: the promise still holds, as does
    // the signature structure, so every check passes.
    auto inst = generate({4, 1, 3, 1, 5});
    auto table = inst.f_table();
    const auto a = table[0];
    const auto b = *std::find_if(table.begin(), table.end(), [&](auto v) { return v != a; });
    for (auto& v : table) v = v == a ? b : (v == b ? a : v);
    EXPECT_TRUE(verify_instance(HspInstance(inst.params(), inst.s_basis(), table)).all_passed());

    // Declaring the wrong subgroup breaks the promise check; the signature
    // check is judged against the declared S_l and is reported separately.
    auto wrong = generate({4, 1, 3, 1, 6});
    HspInstance mislabeled(inst.params(), wrong.s_basis(), inst.f_table());
    auto report = verify_instance(mislabeled);
    if (!same_span(wrong.s_basis(), inst.s_basis())) {
        EXPECT_FALSE(report.promise.passed);
        EXPECT_EQ(report.signature_classes.passed, same_span(wrong.sl_basis(), inst.sl_basis()));
    }
}

TEST(instance_json, round_trip) {
    auto inst = generate({4, 1, 3, 1, 7});
    auto j = instance_to_json(inst);
    EXPECT_EQ(j["n"], 4);
    EXPECT_EQ(j["f_table"].size(), 16u);
    EXPECT_EQ(j["f_table"][0].get<std::string>().size(), 1u);
    auto back = instance_from_json(Json::parse(j.dump()));
    EXPECT_EQ(back.f_table(), inst.f_table());
    EXPECT_EQ(back.s_basis(), inst.s_basis());
    EXPECT_EQ(instance_to_json(back).dump(), j.dump());
}

TEST(instance_json, wide_values_and_errors) {
    auto inst = generate({5, 1, 13, 0, 3});
    auto j = instance_to_json(inst);
    EXPECT_EQ(j["f_table"][0].get<std::string>().size(), 4u);
    EXPECT_EQ(instance_from_json(j).f_table(), inst.f_table());
    EXPECT_EQ(hex_word(0xab, 8), "ab");
    EXPECT_EQ(parse_hex_word("00Ff"), 255u);
    EXPECT_THROW(parse_hex_word("xyz"), UsageError);

    auto broken = j;
    broken.erase("f_table");
    EXPECT_THROW(instance_from_json(broken), UsageError);
    broken = j;
    broken["f_table"].erase(0);
    EXPECT_THROW(instance_from_json(broken), UsageError);
    broken = j;
    broken["s_basis"] = {"101"};
    EXPECT_THROW(instance_from_json(broken), UsageError);
}
