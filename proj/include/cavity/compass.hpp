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

#ifndef CAVITY_COMPASS_HPP
#define CAVITY_COMPASS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cavity/common.hpp"

namespace cavity::compass {

/// Fixed-length bit vector over GF(2).
class BitVec {
   public:
    BitVec() = default;
    explicit BitVec(std::size_t nbits);

    std::size_t size() const { return nbits_; }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i, bool v = true);
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    BitVec &operator^=(const BitVec &o);
    BitVec operator^(const BitVec &o) const;
    BitVec operator&(const BitVec &o) const;
    bool operator==(const BitVec &o) const = default;
    bool operator<(const BitVec &o) const;

    std::size_t popcount() const;
    bool any() const;
    /// Index of the lowest set bit, or size() when empty.
    std::size_t lowest() const;
    /// Parity of popcount(*this & o).
    bool dot(const BitVec &o) const;

    /// Concatenation [this, o].
    BitVec concat(const BitVec &o) const;
    BitVec slice(std::size_t begin, std::size_t len) const;

    const std::vector<std::uint64_t> &words() const { return words_; }

   private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

/// i^phase_exp X^x Z^z on n^3 qubits; qubit (i,j,k) sits at i + n j + n^2 k.
class PauliString {
   public:
    PauliString() = default;
    explicit PauliString(int n);

    static std::size_t index(int n, int i, int j, int k) {
        return static_cast<std::size_t>(i + n * j + n * n * k);
    }

    int n() const { return n_; }
    std::size_t num_qubits() const { return x_.size(); }
    const BitVec &x() const { return x_; }
    const BitVec &z() const { return z_; }
    int phase_exp() const { return phase_; }

    void set_x(std::size_t q, bool v = true) { x_.set(q, v); }
    void set_z(std::size_t q, bool v = true) { z_.set(q, v); }
    void set_phase_exp(int r) { phase_ = ((r % 4) + 4) % 4; }

    std::size_t weight() const;
    /// Symplectic product, 0 for commuting operators.
    bool anticommutes(const PauliString &o) const;
    bool commutes(const PauliString &o) const { return !anticommutes(o); }

    /// Operator product this * o with phase tracking.
    PauliString operator*(const PauliString &o) const;
    bool operator==(const PauliString &o) const = default;

    /// (x | z) as one 2 n^3 bit vector, phase dropped.
    BitVec symplectic() const { return x_.concat(z_); }

    /// Letters I, X, Y(=XZ up to phase), Z per qubit with a sign prefix.
    std::string str() const;

   private:
    int n_ = 0;
    BitVec x_;
    BitVec z_;
    int phase_ = 0;
};

/// Row span over GF(2) with a cached echelon form, grown incrementally.
class Gf2Span {
   public:
    explicit Gf2Span(std::size_t nbits) : nbits_(nbits) {}

    /// Returns true when v enlarged the span.
    bool add(const BitVec &v);
    bool contains(const BitVec &v) const;
    BitVec reduce(BitVec v) const;
    std::size_t rank() const { return rows_.size(); }
    std::size_t width() const { return nbits_; }

   private:
    std::size_t nbits_;
    std::vector<BitVec> rows_;
    std::vector<std::size_t> pivots_;
};

struct CodeSpec {
    int n = 0;
    std::vector<PauliString> vx;  // V^X_i on planes i, i+1 for i = 0..n-2
    std::vector<PauliString> vz;  // V^Z_k on planes k, k+1 for k = 0..n-2
    PauliString lx;  // X on the plane i = 0
    PauliString lz;  // Z on the plane k = 0
    std::vector<PauliString> gauge;  // XX along i and j, ZZ along j and k

    std::vector<PauliString> stabilizers() const;
};

/// Throws DomainError unless n is odd and >= 3.
CodeSpec build_code(int n);

/// n-1 V^X bits followed by n-1 V^Z bits.
BitVec syndrome(const PauliString &error, const CodeSpec &code);

/// Minimum-weight plane pattern consistent with one syndrome half; ties go to the lexicographically
/// smaller pattern.
std::vector<bool> decode_planes(const BitVec &half, int n);

/// Z on (i,0,0) for every flagged x-plane, X on (0,0,k) for every flagged z-plane.
PauliString decode(const BitVec &syndrome_bits, const CodeSpec &code);

/// Shared stabilizer-gauge span of a code, built once.
class HarmlessChecker {
   public:
    explicit HarmlessChecker(const CodeSpec &code);
    bool in_span(const PauliString &p) const { return span_.contains(p.symplectic()); }
    bool operator()(const PauliString &residual) const;
    const Gf2Span &span() const { return span_; }

   private:
    const CodeSpec *code_;
    Gf2Span span_;
};

bool is_harmless(const PauliString &residual, const CodeSpec &code);

/// Nontrivial logical of weight <= max_weight (exhaustive), if any.
std::optional<PauliString> find_logical_up_to_weight(const CodeSpec &code, int max_weight);

/// Exhaustive distance; CapabilityError for n > 3.
int verify_distance(int n);

/// Smallest weight seen over `samples` random dressed logicals: an upper bound on the distance.
struct DistanceEstimate {
    int upper_bound;
    PauliString witness;
};
DistanceEstimate randomized_distance_search(const CodeSpec &code, int samples, std::uint64_t seed);

/// Minimum-weight operator equal to `p` modulo the stabilizer-gauge span, phase dropped.
PauliString reduce_weight(const PauliString &p, const CodeSpec &code);

/// Conjugation by CNOT on every qubit pair (control block a, target block b).
std::pair<PauliString, PauliString> transversal_cnot(const PauliString &a, const PauliString &b);

bool transversal_cnot_check(int n);

/// K = prod_q X_q Z_q equals -(prod V^Z_{2k}) L^Z (prod V^X_{2i}) L^X (1-based even indices).
bool k_identity_holds(int n);

enum class ErrorType { X, Z };

/// Pauli `type` on `length` consecutive qubits starting at plane `start` along the axis the
/// matching syndrome detects (i for Z, k for X), at the transverse position (a, b).
PauliString string_error(const CodeSpec &code, ErrorType type, int start, int length, int a = 0, int b = 0);

struct LogicalRate {
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    double rate = 0.0;
    double lower = 0.0;
    double upper = 0.0;
};

/// Wilson score interval at z standard deviations.
std::pair<double, double> wilson_interval(std::uint64_t failures, std::uint64_t trials, double z = 1.959963984540054);

/// i.i.d. X flips with px and Z flips with pz on every qubit, decoded; trial t uses derive_seed(seed, t).
LogicalRate logical_error_rate(const CodeSpec &code, double px, double pz, std::uint64_t trials, std::uint64_t seed);

namespace serial {
LogicalRate logical_error_rate(const CodeSpec &code, double px, double pz, std::uint64_t trials, std::uint64_t seed);
}

}  // namespace cavity::compass

#endif
