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

#include <cmath>

#include "cavity/lindblad.hpp"

namespace cavity::lindblad {

namespace {

constexpr cd I{0.0, 1.0};

}  // namespace

void DecayParams::validate() const {
    if (!(kappa >= 0.0) || !(t >= 0.0) || !std::isfinite(g)) {
        throw DomainError("DecayParams requires finite g, kappa >= 0 and t >= 0");
    }
}

cd b_coeff(const DecayParams &p, HalfInt mj, HalfInt mjp) {
    p.validate();
    if (p.kappa == 0.0) {
        return 0.0;
    }
    cd rate{p.kappa, 2.0 * p.g * (mj - mjp).value()};
    if (mj == mjp) {
        return -std::expm1(-p.kappa * p.t);
    }
    return p.kappa * (1.0 - std::exp(-rate * p.t)) / rate;
}

FockBlock FockBlock::outer(HalfInt mj, HalfInt mjp, cd c0, cd c1) {
    return {mj, mjp, c0 * std::conj(c0), c0 * std::conj(c1), c1 * std::conj(c0), c1 * std::conj(c1)};
}

FockBlock FockBlock::operator+(const FockBlock &o) const {
    return {mj, mjp, e00 + o.e00, e01 + o.e01, e10 + o.e10, e11 + o.e11};
}

FockBlock FockBlock::operator*(cd s) const {
    return {mj, mjp, e00 * s, e01 * s, e10 * s, e11 * s};
}

FockBlock evolve_fock_block(const FockBlock &block, const DecayParams &p) {
    p.validate();
    double m = block.mj.value();
    double mp = block.mjp.value();
    double k = p.kappa;
    double t = p.t;
    FockBlock out = block;
    out.e00 = block.e00 + b_coeff(p, block.mj, block.mjp) * block.e11;
    out.e01 = block.e01 * std::exp((I * 2.0 * p.g * mp - k / 2.0) * t);
    out.e10 = block.e10 * std::exp((-I * 2.0 * p.g * m - k / 2.0) * t);
    out.e11 = block.e11 * std::exp((-I * 2.0 * p.g * (m - mp) - k) * t);
    return out;
}

cd coherent_exponent(cd alpha, cd beta, const DecayParams &p, HalfInt mj, HalfInt mjp) {
    double loss = -std::expm1(-p.kappa * p.t);
    return alpha * std::conj(beta) * b_coeff(p, mj, mjp) - 0.5 * loss * (std::norm(alpha) + std::norm(beta));
}

cd characteristic_c(cd alpha, cd beta, const DecayParams &p, HalfInt mj, HalfInt mjp) {
    p.validate();
    double w = 2.0 * p.g * (mj - mjp).value();
    cd denom{p.kappa, w};
    if (std::abs(denom) == 0.0) {
        return 0.0;
    }
    double ekt = std::exp(-p.kappa * p.t);
    cd bracket = (ekt - 1.0) * I * w + p.kappa * ekt * (1.0 - std::exp(-I * w * p.t));
    return alpha * std::conj(beta) * bracket / denom;
}

CoherentPair coherent_weight(const CoherentPair &in, const DecayParams &p) {
    p.validate();
    CoherentPair out = in;
    out.weight = in.weight * std::exp(coherent_exponent(in.alpha, in.beta, p, in.mj, in.mjp));
    out.alpha = in.alpha * std::exp(-(I * 2.0 * p.g * in.mj.value() + p.kappa / 2.0) * p.t);
    out.beta = in.beta * std::exp(-(I * 2.0 * p.g * in.mjp.value() + p.kappa / 2.0) * p.t);
    return out;
}

}  // namespace cavity::lindblad
