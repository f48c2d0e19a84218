// Copyright 2026 The modalq Authors
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

#ifndef MODALQ_BIT_VECTOR_H
#define MODALQ_BIT_VECTOR_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace modalq {

/// Packed GF(2) vector: one bit per coefficient, 64 coefficients per word.
/// Bit i lives in word i / 64 at position i % 64. Bits at positions >= size()
/// are always zero.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(size_t num_bits);

    size_t size() const noexcept {
        return num_bits_;
    }
    size_t num_words() const noexcept {
        return words_.size();
    }

    bool get(size_t i) const noexcept {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    void set(size_t i, bool value) noexcept {
        uint64_t m = uint64_t{1} << (i & 63);
        if (value) {
            words_[i >> 6] |= m;
        } else {
            words_[i >> 6] &= ~m;
        }
    }
    void flip(size_t i) noexcept {
        words_[i >> 6] ^= uint64_t{1} << (i & 63);
    }

    std::span<uint64_t> words() noexcept {
        return words_;
    }
    std::span<const uint64_t> words() const noexcept {
        return words_;
    }

    size_t popcount() const noexcept;
    bool none() const noexcept;

    /// Indices of the set bits, ascending.
    std::vector<uint64_t> set_bits() const;
    /// Index of the k-th set bit (0-based). Requires k < popcount().
    uint64_t nth_set_bit(size_t k) const;

    BitVector &operator^=(const BitVector &other);
    BitVector &operator&=(const BitVector &other);
    BitVector &operator|=(const BitVector &other);
    BitVector operator~() const;

    bool operator==(const BitVector &other) const = default;

   private:
    void clear_padding() noexcept;

    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace modalq

#endif
