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

#ifndef CAVITY_COMMON_HPP
#define CAVITY_COMMON_HPP

#include <compare>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cavity {

using cd = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

/// Raised when arguments fall outside an operation's domain.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised when a request exceeds what an oracle or search can handle.
struct CapabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A half-integer held as twice its value, so that J and M_J compare exactly.
class HalfInt {
   public:
    constexpr HalfInt() = default;

    static constexpr HalfInt from_twice(int twice) {
        HalfInt h;
        h.twice_ = twice;
        return h;
    }
    static constexpr HalfInt from_int(int v) {
        return from_twice(2 * v);
    }

    constexpr int twice() const {
        return twice_;
    }
    constexpr double value() const {
        return 0.5 * twice_;
    }
    constexpr bool is_integer() const {
        return twice_ % 2 == 0;
    }

    constexpr HalfInt operator-() const {
        return from_twice(-twice_);
    }
    constexpr HalfInt operator+(HalfInt o) const {
        return from_twice(twice_ + o.twice_);
    }
    constexpr HalfInt operator-(HalfInt o) const {
        return from_twice(twice_ - o.twice_);
    }

    constexpr auto operator<=>(const HalfInt &) const = default;

    std::string str() const;

   private:
    int twice_ = 0;
};

/// Deterministic stream derivation: seed for item `index` of a run seeded by `master`.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace cavity

#endif
