// Copyright 2026 The cavity-gates Authors
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

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "cavity/compass.hpp"

namespace cavity::compass {

BitVec::BitVec(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

void BitVec::set(std::size_t i, bool v) {
    std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (v) {
        words_[i >> 6] |= m;
    } else {
        words_[i >> 6] &= ~m;
    }
}

BitVec &BitVec::operator^=(const BitVec &o) {
    if (o.nbits_ != nbits_) {
        throw std::invalid_argument("bit vector length mismatch");
    }
    for (std::size_t w = 0; w < words_.size(); ++w) {
        words_[w] ^= o.words_[w];
    }
    return *this;
}

BitVec BitVec::operator^(const BitVec &o) const {
    BitVec r = *this;
    r ^= o;
    return r;
}

BitVec BitVec::operator&(const BitVec &o) const {
    if (o.nbits_ != nbits_) {
        throw std::invalid_argument("bit vector length mismatch");
    }
    BitVec r = *this;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        r.words_[w] &= o.words_[w];
    }
    return r;
}

bool BitVec::operator<(const BitVec &o) const {
    // Lexicographic in bit index order: the first differing bit decides.
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t d = words_[w] ^ o.words_[w];
        if (d != 0) {
            return (o.words_[w] >> std::countr_zero(d)) & 1U;
        }
    }
    return false;
}

std::size_t BitVec::popcount() const {
    std::size_t c = 0;
    for (auto w : words_) {
        c += static_cast<std::size_t>(std::popcount(w));
    }
    return c;
}

bool BitVec::any() const {
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t BitVec::lowest() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] != 0) {
            return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
        }
    }
    return nbits_;
}

bool BitVec::dot(const BitVec &o) const {
    unsigned acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        acc ^= static_cast<unsigned>(std::popcount(words_[w] & o.words_[w])) & 1U;
    }
    return acc != 0;
}

BitVec BitVec::concat(const BitVec &o) const {
    BitVec r(nbits_ + o.nbits_);
    for (std::size_t i = 0; i < nbits_; ++i) {
        if (get(i)) r.set(i);
    }
    for (std::size_t i = 0; i < o.nbits_; ++i) {
        if (o.get(i)) r.set(nbits_ + i);
    }
    return r;
}

BitVec BitVec::slice(std::size_t begin, std::size_t len) const {
    BitVec r(len);
    for (std::size_t i = 0; i < len; ++i) {
        if (get(begin + i)) r.set(i);
    }
    return r;
}

BitVec Gf2Span::reduce(BitVec v) const {
    if (v.size() != nbits_) {
        throw std::invalid_argument("vector width does not match span");
    }
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (v.get(pivots_[r])) {
            v ^= rows_[r];
        }
    }
    return v;
}

bool Gf2Span::add(const BitVec &v) {
    BitVec red = reduce(v);
    std::size_t p = red.lowest();
    if (p == nbits_) {
        return false;
    }
    // Rows are reduced against earlier pivots, so insertion order is a valid elimination order.
    rows_.push_back(std::move(red));
    pivots_.push_back(p);
    return true;
}

bool Gf2Span::contains(const BitVec &v) const { return !reduce(v).any(); }

}  // namespace cavity::compass
