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

#ifndef DGSP_GF2_H
#define DGSP_GF2_H

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dgsp {

/// A fixed-width vector over GF(2).
///
/// Coordinates are numbered x_1..x_width from the left, and the stored integer
/// is big-endian: x_1 is the most significant bit. So the textual form
/// "x_1...x_n" is just the binary representation of value(), and the
/// concatenation uw of u (left) and w (right) is (u << |w|) | w.
class BitVector {
   public:
    static constexpr int kMaxWidth = 24;

    BitVector(int width, std::uint32_t value);

    static BitVector zero(int width) { return BitVector(width, 0); }
    static BitVector parse(std::string_view bits);

    int width() const { return width_; }
    std::uint32_t value() const { return value_; }
    bool is_zero() const { return value_ == 0; }
    /// Coordinate x_i, 1-based from the left.
    bool coord(int i) const;
    std::string str() const;

    friend bool operator==(BitVector, BitVector) = default;
    friend std::strong_ordering operator<=>(BitVector a, BitVector b) {
        if (auto c = a.width_ <=> b.width_; c != 0) return c;
        return a.value_ <=> b.value_;
    }

   private:
    std::int32_t width_;
    std::uint32_t value_;
};

/// Coordinatewise sum mod 2. Throws UsageError on width mismatch.
BitVector xor_add(BitVector x, BitVector y);
inline BitVector operator^(BitVector x, BitVector y) { return xor_add(x, y); }

/// Parity of the coordinatewise AND.
int dot(BitVector x, BitVector y);

/// uw: u occupies the leftmost coordinates.
BitVector concat(BitVector left, BitVector right);
/// The leftmost `width` coordinates of x.
BitVector left_part(BitVector x, int width);
/// The rightmost `width` coordinates of x.
BitVector right_part(BitVector x, int width);

/// An ordered, linearly independent list of vectors sharing one width.
///
/// The insertion order of vectors() is preserved. A reduced row echelon form
/// of the same span is kept alongside for membership tests; its rows are
/// ordered by pivot coordinate, lowest coordinate index first.
class Gf2Basis {
   public:
    explicit Gf2Basis(int ambient_width);
    /// Throws UsageError if the vectors are dependent or of the wrong width.
    Gf2Basis(int ambient_width, std::vector<BitVector> vectors);

    /// The reduced echelon basis of span(vectors); vectors may be dependent.
    static Gf2Basis spanning(int ambient_width, std::span<const BitVector> vectors);

    int ambient_width() const { return width_; }
    int rank() const { return static_cast<int>(vectors_.size()); }
    bool empty() const { return vectors_.empty(); }
    const std::vector<BitVector>& vectors() const { return vectors_; }
    const std::vector<BitVector>& echelon() const { return echelon_; }

    /// Same span, expressed by its reduced echelon basis.
    Gf2Basis reduced() const;

    friend bool operator==(const Gf2Basis&, const Gf2Basis&) = default;

   private:
    std::int32_t width_;
    std::vector<BitVector> vectors_;
    std::vector<BitVector> echelon_;
};

bool in_span(BitVector z, const Gf2Basis& basis);

/// Canonical representative of the coset z + span(basis): z with every pivot
/// coordinate of the echelon basis cleared.
BitVector reduce(BitVector z, const Gf2Basis& basis);

/// Appends z when it is outside the span; nullopt means "unchanged".
std::optional<Gf2Basis> extend_if_independent(const Gf2Basis& basis, BitVector z);

/// GF(2) rank of a list of equal-width vectors.
int rank(std::span<const BitVector> vectors);

/// Basis of {g : g.h = 0 for every h in span(basis)}, in reduced echelon form.
Gf2Basis perp(const Gf2Basis& basis);

/// All 2^rank elements of the span, sorted ascending. Rank is capped at 20.
std::vector<BitVector> enumerate_span(const Gf2Basis& basis);

bool same_span(const Gf2Basis& a, const Gf2Basis& b);

}  // namespace dgsp

#endif
