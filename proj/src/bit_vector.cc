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

#include "modalq/bit_vector.h"

#include <bit>
#include <cassert>

#include "modalq/error.h"

namespace modalq {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotPrime:
            return "NotPrime";
        case ErrorKind::MixedFields:
            return "MixedFields";
        case ErrorKind::DivisionByZero:
            return "DivisionByZero";
        case ErrorKind::IndexOutOfRange:
            return "IndexOutOfRange";
        case ErrorKind::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorKind::RegisterTooLarge:
            return "RegisterTooLarge";
        case ErrorKind::ZeroVector:
            return "ZeroVector";
        case ErrorKind::UnsupportedField:
            return "UnsupportedField";
        case ErrorKind::NonInvertibleGate:
            return "NonInvertibleGate";
        case ErrorKind::ControlInTargets:
            return "ControlInTargets";
        case ErrorKind::LengthMismatch:
            return "LengthMismatch";
        case ErrorKind::InvalidArity:
            return "InvalidArity";
        case ErrorKind::TooManyVariables:
            return "TooManyVariables";
        case ErrorKind::InvalidCnf:
            return "InvalidCnf";
        case ErrorKind::PromiseViolated:
            return "PromiseViolated";
        case ErrorKind::InternalContradiction:
            return "InternalContradiction";
        case ErrorKind::MissingHeader:
            return "MissingHeader";
        case ErrorKind::BadHeader:
            return "BadHeader";
        case ErrorKind::BadToken:
            return "BadToken";
        case ErrorKind::LiteralOutOfRange:
            return "LiteralOutOfRange";
        case ErrorKind::UnterminatedClause:
            return "UnterminatedClause";
        case ErrorKind::ClauseCountMismatch:
            return "ClauseCountMismatch";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {
}

BitVector::BitVector(size_t num_bits) : num_bits_(num_bits), words_((num_bits + 63) / 64, 0) {
}

void BitVector::clear_padding() noexcept {
    if (num_bits_ & 63) {
        words_.back() &= (uint64_t{1} << (num_bits_ & 63)) - 1;
    }
}

size_t BitVector::popcount() const noexcept {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitVector::none() const noexcept {
    for (uint64_t w : words_) {
        if (w) {
            return false;
        }
    }
    return true;
}

std::vector<uint64_t> BitVector::set_bits() const {
    std::vector<uint64_t> out;
    out.reserve(popcount());
    for (size_t k = 0; k < words_.size(); k++) {
        uint64_t w = words_[k];
        while (w) {
            out.push_back((uint64_t{k} << 6) | std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

uint64_t BitVector::nth_set_bit(size_t k) const {
    for (size_t i = 0; i < words_.size(); i++) {
        uint64_t w = words_[i];
        size_t c = std::popcount(w);
        if (k < c) {
            for (size_t j = 0; j < k; j++) {
                w &= w - 1;
            }
            return (uint64_t{i} << 6) | std::countr_zero(w);
        }
        k -= c;
    }
    assert(false && "nth_set_bit past popcount");
    return 0;
}

BitVector &BitVector::operator^=(const BitVector &other) {
    assert(num_bits_ == other.num_bits_);
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

BitVector &BitVector::operator&=(const BitVector &other) {
    assert(num_bits_ == other.num_bits_);
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] &= other.words_[k];
    }
    return *this;
}

BitVector &BitVector::operator|=(const BitVector &other) {
    assert(num_bits_ == other.num_bits_);
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] |= other.words_[k];
    }
    return *this;
}

BitVector BitVector::operator~() const {
    BitVector out = *this;
    for (auto &w : out.words_) {
        w = ~w;
    }
    out.clear_padding();
    return out;
}

}  // namespace modalq
