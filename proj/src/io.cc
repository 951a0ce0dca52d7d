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

#include "dgsp/io.h"

#include <cstdio>
#include <fstream>

#include "dgsp/errors.h"

namespace dgsp {

namespace {

Json bitstrings(const std::vector<BitVector>& vectors) {
    Json arr = Json::array();
    for (auto v : vectors) arr.push_back(v.str());
    return arr;
}

template <typename T>
Json optional_json(const std::optional<T>& value) {
    return value ? Json(*value) : Json(nullptr);
}

}  // namespace

std::string hex_word(std::uint64_t value, int m) {
    const int digits = std::max(1, (m + 3) / 4);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%0*llx", digits, static_cast<unsigned long long>(value));
    return buf;
}

std::uint64_t parse_hex_word(const std::string& text) {
    if (text.empty() || text.size() > 16) throw UsageError("bad hex word '" + text + "'");
    std::uint64_t value = 0;
    for (char c : text) {
        int d;
        if (c >= '0' && c <= '9') {
            d = c - '0';
        } else if (c >= 'a' && c <= 'f') {
            d = c - 'a' + 10;
        } else if (c >= 'A' && c <= 'F') {
            d = c - 'A' + 10;
        } else {
            throw UsageError("bad hex word '" + text + "'");
        }
        value = (value << 4) | static_cast<std::uint64_t>(d);
    }
    return value;
}

Json instance_to_json(const HspInstance& inst) {
    const auto& p = inst.params();
    Json j;
    j["n"] = p.n;
    j["t"] = p.t;
    j["m"] = p.m;
    j["k"] = p.k;
    j["seed"] = p.seed;
    j["s_basis"] = bitstrings(inst.s_basis().vectors());
    Json table = Json::array();
    for (auto v : inst.f_table()) table.push_back(hex_word(v, p.m));
    j["f_table"] = std::move(table);
    return j;
}

HspInstance instance_from_json(const Json& j) {
    try {
        ProblemParams p;
        p.n = j.at("n").get<int>();
        p.t = j.at("t").get<int>();
        p.m = j.at("m").get<int>();
        p.k = j.at("k").get<int>();
        p.seed = j.at("seed").get<std::uint64_t>();
        std::vector<BitVector> basis;
        for (const auto& s : j.at("s_basis")) {
            auto v = BitVector::parse(s.get<std::string>());
            if (v.width() != p.n) throw UsageError("s_basis entry has the wrong width");
            basis.push_back(v);
        }
        std::vector<std::uint64_t> table;
        for (const auto& h : j.at("f_table")) table.push_back(parse_hex_word(h.get<std::string>()));
        return HspInstance(p, Gf2Basis(p.n, std::move(basis)), std::move(table));
    } catch (const Json::exception& e) {
        throw UsageError(std::string("malformed instance JSON: ") + e.what());
    }
}

void save_instance(const HspInstance& inst, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write " + path);
    out << instance_to_json(inst).dump(2) << '\n';
}

HspInstance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
    return instance_from_json(j);
}

Json trace_to_json(const SolverTrace& trace) {
    Json j;
    j["algorithm"] = to_string(trace.algorithm);
    j["seed"] = trace.seed;
    Json iterations = Json::array();
    for (const auto& rec : trace.iterations) {
        iterations.push_back({{"d_l", rec.d_l},
                              {"y_size", rec.y_size},
                              {"z", rec.z.str()},
                              {"branch", to_string(rec.branch)},
                              {"bad_probability", rec.bad_probability}});
    }
    j["iterations"] = std::move(iterations);
    j["dsl_samples"] = bitstrings(trace.dsl_samples);
    Json nodes = Json::array();
    for (const auto& c : trace.nodes) {
        nodes.push_back({{"w", c.w.str()}, {"quantum_queries", c.quantum}, {"classical_queries", c.classical}});
    }
    j["nodes"] = std::move(nodes);
    j["sl_basis"] = trace.sl_basis ? bitstrings(trace.sl_basis->vectors()) : Json(nullptr);
    j["subgroup"] = trace.subgroup ? bitstrings(*trace.subgroup) : Json(nullptr);
    j["final_d_l"] = optional_json(trace.final_d_l);
    j["k_hat"] = optional_json(trace.k_hat);
    j["diagnostics"] = {{"max_bad_probability_final", trace.max_bad_probability_final},
                        {"samples_in_sl_perp", trace.samples_in_sl_perp},
                        {"sl_exact", optional_json(trace.sl_exact)},
                        {"exact", optional_json(trace.exact)},
                        {"witness", trace.witness ? Json(trace.witness->str()) : Json(nullptr)}};
    return j;
}

}  // namespace dgsp
