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

#include "dgsp/gf2.h"

#include <algorithm>
#include <bit>

#include "dgsp/errors.h"

namespace dgsp {

namespace {

constexpr int kMaxEnumerationRank = 20;

std::uint32_t width_mask(int width) { return width >= 32 ? ~0u : ((1u << width) - 1u); }

void require_same_width(BitVector x, BitVector y, const char* op) {
    if (x.width() != y.width()) {
        throw UsageError(std::string(op) + ": width mismatch (" + std::to_string(x.width()) + " vs " +
                         std::to_string(y.width()) + ")");
    }
}

// Reduced row echelon form. The pivot of a row is its highest set bit, i.e.
// its lowest-index coordinate; rows come out ordered by that coordinate.
std::vector<std::uint32_t> rref(std::vector<std::uint32_t> rows, int width) {
    std::size_t next = 0;
    for (int col = width - 1; col >= 0 && next < rows.size(); --col) {
        const std::uint32_t pivot_bit = 1u << col;
        auto it = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(next), rows.end(),
                               [&](std::uint32_t r) { return (r & pivot_bit) != 0; });
        if (it == rows.end()) continue;
        std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(next), it);
        const std::uint32_t pivot_row = rows[next];
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != next && (rows[i] & pivot_bit)) rows[i] ^= pivot_row;
        }
        ++next;
    }
    rows.resize(next);
    return rows;
}

std::vector<std::uint32_t> values_of(std::span<const BitVector> vectors) {
    std::vector<std::uint32_t> out;
    out.reserve(vectors.size());
    for (auto v : vectors) out.push_back(v.value());
    return out;
}

std::vector<BitVector> to_vectors(const std::vector<std::uint32_t>& rows, int width) {
    std::vector<BitVector> out;
    out.reserve(rows.size());
    for (auto r : rows) out.emplace_back(width, r);
    return out;
}

std::uint32_t reduce(std::uint32_t z, const std::vector<BitVector>& echelon) {
    for (auto row : echelon) {
        const std::uint32_t pivot_bit = std::bit_floor(row.value());
        if (z & pivot_bit) z ^= row.value();
    }
    return z;
}

}  // namespace

BitVector::BitVector(int width, std::uint32_t value) : width_(width), value_(value) {
    if (width < 1 || width > kMaxWidth) {
        throw UsageError("BitVector width must lie in 1..24, got " + std::to_string(width));
    }
    if ((value & ~width_mask(width)) != 0) {
        throw UsageError("BitVector value " + std::to_string(value) + " does not fit in " +
                         std::to_string(width) + " bits");
    }
}

BitVector BitVector::parse(std::string_view bits) {
    if (bits.empty() || bits.size() > static_cast<std::size_t>(kMaxWidth)) {
        throw UsageError("bit string must have 1..24 characters: '" + std::string(bits) + "'");
    }
    std::uint32_t value = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') throw UsageError("not a bit string: '" + std::string(bits) + "'");
        value = (value << 1) | static_cast<std::uint32_t>(c == '1');
    }
    return BitVector(static_cast<int>(bits.size()), value);
}

bool BitVector::coord(int i) const {
    if (i < 1 || i > width_) throw UsageError("coordinate index out of range");
    return (value_ >> (width_ - i)) & 1u;
}

std::string BitVector::str() const {
    std::string s(static_cast<std::size_t>(width_), '0');
    for (int i = 0; i < width_; ++i) {
        if ((value_ >> (width_ - 1 - i)) & 1u) s[static_cast<std::size_t>(i)] = '1';
    }
    return s;
}

BitVector xor_add(BitVector x, BitVector y) {
    require_same_width(x, y, "xor_add");
    return BitVector(x.width(), x.value() ^ y.value());
}

int dot(BitVector x, BitVector y) {
    require_same_width(x, y, "dot");
    return std::popcount(x.value() & y.value()) & 1;
}

BitVector concat(BitVector left, BitVector right) {
    return BitVector(left.width() + right.width(), (left.value() << right.width()) | right.value());
}

BitVector left_part(BitVector x, int width) {
    if (width < 1 || width > x.width()) throw UsageError("left_part: bad width");
    return BitVector(width, x.value() >> (x.width() - width));
}

BitVector right_part(BitVector x, int width) {
    if (width < 1 || width > x.width()) throw UsageError("right_part: bad width");
    return BitVector(width, x.value() & width_mask(width));
}

Gf2Basis::Gf2Basis(int ambient_width) : width_(ambient_width) {
    if (ambient_width < 1 || ambient_width > BitVector::kMaxWidth) {
        throw UsageError("basis ambient width must lie in 1..24");
    }
}

Gf2Basis::Gf2Basis(int ambient_width, std::vector<BitVector> vectors) : Gf2Basis(ambient_width) {
    for (auto v : vectors) {
        if (v.width() != width_) throw UsageError("basis vector width does not match ambient width");
    }
    auto rows = rref(values_of(vectors), width_);
    if (rows.size() != vectors.size()) throw UsageError("basis vectors are linearly dependent");
    vectors_ = std::move(vectors);
    echelon_ = to_vectors(rows, width_);
}

Gf2Basis Gf2Basis::spanning(int ambient_width, std::span<const BitVector> vectors) {
    Gf2Basis out(ambient_width);
    for (auto v : vectors) {
        if (v.width() != ambient_width) throw UsageError("vector width does not match ambient width");
    }
    out.echelon_ = to_vectors(rref(values_of(vectors), ambient_width), ambient_width);
    out.vectors_ = out.echelon_;
    return out;
}

Gf2Basis Gf2Basis::reduced() const { return spanning(width_, echelon_); }

bool in_span(BitVector z, const Gf2Basis& basis) {
    if (z.width() != basis.ambient_width()) throw UsageError("in_span: width mismatch");
    return reduce(z.value(), basis.echelon()) == 0;
}

BitVector reduce(BitVector z, const Gf2Basis& basis) {
    if (z.width() != basis.ambient_width()) throw UsageError("reduce: width mismatch");
    return BitVector(z.width(), reduce(z.value(), basis.echelon()));
}

std::optional<Gf2Basis> extend_if_independent(const Gf2Basis& basis, BitVector z) {
    if (in_span(z, basis)) return std::nullopt;
    auto vectors = basis.vectors();
    vectors.push_back(z);
    return Gf2Basis(basis.ambient_width(), std::move(vectors));
}

int rank(std::span<const BitVector> vectors) {
    if (vectors.empty()) return 0;
    const int width = vectors.front().width();
    for (auto v : vectors) require_same_width(v, vectors.front(), "rank");
    return static_cast<int>(rref(values_of(vectors), width).size());
}

Gf2Basis perp(const Gf2Basis& basis) {
    const int width = basis.ambient_width();
    std::uint32_t pivots = 0;
    for (auto row : basis.echelon()) pivots |= std::bit_floor(row.value());

    // One nullspace vector per free coordinate f: set x_f = 1 and fix each
    // pivot coordinate so the corresponding row's dot product vanishes.
    std::vector<std::uint32_t> null_rows;
    for (int col = width - 1; col >= 0; --col) {
        const std::uint32_t free_bit = 1u << col;
        if (pivots & free_bit) continue;
        std::uint32_t v = free_bit;
        for (auto row : basis.echelon()) {
            if (row.value() & free_bit) v |= std::bit_floor(row.value());
        }
        null_rows.push_back(v);
    }
    return Gf2Basis::spanning(width, to_vectors(null_rows, width));
}

std::vector<BitVector> enumerate_span(const Gf2Basis& basis) {
    if (basis.rank() > kMaxEnumerationRank) {
        throw GuardError("enumerate_span: rank " + std::to_string(basis.rank()) + " exceeds 20");
    }
    const auto& gens = basis.vectors();
    const std::uint32_t count = 1u << gens.size();
    std::vector<BitVector> out;
    out.reserve(count);
    std::uint32_t acc = 0;
    out.emplace_back(basis.ambient_width(), acc);
    // Gray-code walk: step i flips generator ctz(i).
    for (std::uint32_t i = 1; i < count; ++i) {
        acc ^= gens[static_cast<std::size_t>(std::countr_zero(i))].value();
        out.emplace_back(basis.ambient_width(), acc);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool same_span(const Gf2Basis& a, const Gf2Basis& b) {
    return a.ambient_width() == b.ambient_width() && a.echelon() == b.echelon();
}

}  // namespace dgsp
