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

#include <stdexcept>

#include "cavity/compass.hpp"

namespace cavity::compass {

PauliString::PauliString(int n)
    : n_(n), x_(static_cast<std::size_t>(n) * n * n), z_(static_cast<std::size_t>(n) * n * n) {}

std::size_t PauliString::weight() const {
    // |x or z| = |x xor z| + |x and z|
    return (x_ ^ z_).popcount() + (x_ & z_).popcount();
}

bool PauliString::anticommutes(const PauliString &o) const { return x_.dot(o.z_) != z_.dot(o.x_); }

PauliString PauliString::operator*(const PauliString &o) const {
    if (o.n_ != n_) {
        throw std::invalid_argument("Pauli strings act on different lattices");
    }
    PauliString r(n_);
    r.x_ = x_ ^ o.x_;
    r.z_ = z_ ^ o.z_;
    // Z^z1 X^x2 = (-1)^{|z1 & x2|} X^x2 Z^z1
    int flips = static_cast<int>((z_ & o.x_).popcount() % 2);
    r.set_phase_exp(phase_ + o.phase_ + 2 * flips);
    return r;
}

std::string PauliString::str() const {
    static const char *kPhase[] = {"+", "+i", "-", "-i"};
    std::string s = kPhase[phase_];
    for (std::size_t q = 0; q < num_qubits(); ++q) {
        bool xb = x_.get(q);
        bool zb = z_.get(q);
        s += xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
    }
    return s;
}

}  // namespace cavity::compass
