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
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <tuple>

#include "cavity/compass.hpp"

namespace cavity::compass {

namespace {

constexpr int kMaxExhaustiveN = 3;

// Axis helpers: a plane perpendicular to `axis` at coordinate c.
std::size_t site(int n, int axis, int c, int u, int v) {
    switch (axis) {
        case 0:
            return PauliString::index(n, c, u, v);
        case 1:
            return PauliString::index(n, u, c, v);
        default:
            return PauliString::index(n, u, v, c);
    }
}

PauliString plane_op(int n, int axis, int c, bool x) {
    PauliString p(n);
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            auto q = site(n, axis, c, u, v);
            x ? p.set_x(q) : p.set_z(q);
        }
    }
    return p;
}

PauliString pair_op(int n, std::size_t a, std::size_t b, bool x) {
    PauliString p(n);
    if (x) {
        p.set_x(a);
        p.set_x(b);
    } else {
        p.set_z(a);
        p.set_z(b);
    }
    return p;
}

// Two-body generators along one lattice axis.
void add_pairs(int n, int axis, bool x, std::vector<PauliString> &out) {
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                int c[3] = {i, j, k};
                if (c[axis] + 1 >= n) continue;
                int d[3] = {i, j, k};
                ++d[axis];
                out.push_back(pair_op(n, PauliString::index(n, c[0], c[1], c[2]),
                                      PauliString::index(n, d[0], d[1], d[2]), x));
            }
        }
    }
}

PauliString product(const std::vector<PauliString> &ops, int n) {
    PauliString acc(n);
    for (const auto &o : ops) acc = acc * o;
    return acc;
}

BitVec pair_vec(const PauliString &a, const PauliString &b) {
    return a.symplectic().concat(b.symplectic());
}

}  // namespace

std::vector<PauliString> CodeSpec::stabilizers() const {
    std::vector<PauliString> s = vx;
    s.insert(s.end(), vz.begin(), vz.end());
    return s;
}

CodeSpec build_code(int n) {
    if (n < 3 || n % 2 == 0) {
        throw DomainError("compass code needs odd n >= 3 so that the logicals anticommute");
    }
    CodeSpec c;
    c.n = n;
    for (int i = 0; i + 1 < n; ++i) {
        c.vx.push_back(plane_op(n, 0, i, true) * plane_op(n, 0, i + 1, true));
        c.vz.push_back(plane_op(n, 2, i, false) * plane_op(n, 2, i + 1, false));
    }
    c.lx = plane_op(n, 0, 0, true);
    c.lz = plane_op(n, 2, 0, false);
    add_pairs(n, 0, true, c.gauge);
    add_pairs(n, 1, true, c.gauge);
    add_pairs(n, 1, false, c.gauge);
    add_pairs(n, 2, false, c.gauge);
    return c;
}

BitVec syndrome(const PauliString &error, const CodeSpec &code) {
    const auto h = static_cast<std::size_t>(code.n - 1);
    BitVec s(2 * h);
    for (std::size_t i = 0; i < h; ++i) {
        s.set(i, error.anticommutes(code.vx[i]));
        s.set(h + i, error.anticommutes(code.vz[i]));
    }
    return s;
}

std::vector<bool> decode_planes(const BitVec &half, int n) {
    std::vector<bool> e(static_cast<std::size_t>(n), false);
    for (int i = 0; i + 1 < n; ++i) {
        e[i + 1] = e[i] != half.get(static_cast<std::size_t>(i));
    }
    auto w = static_cast<int>(std::count(e.begin(), e.end(), true));
    // The complement is the only other consistent pattern; it starts with a 1, so it only wins
    // when strictly lighter.
    if (n - w < w) {
        e.flip();
    }
    return e;
}

PauliString decode(const BitVec &syndrome_bits, const CodeSpec &code) {
    const int n = code.n;
    const auto h = static_cast<std::size_t>(n - 1);
    auto zplanes = decode_planes(syndrome_bits.slice(0, h), n);
    auto xplanes = decode_planes(syndrome_bits.slice(h, h), n);
    PauliString c(n);
    for (int p = 0; p < n; ++p) {
        if (zplanes[p]) c.set_z(PauliString::index(n, p, 0, 0));
        if (xplanes[p]) c.set_x(PauliString::index(n, 0, 0, p));
    }
    return c;
}

HarmlessChecker::HarmlessChecker(const CodeSpec &code)
    : code_(&code), span_(2 * static_cast<std::size_t>(code.n) * code.n * code.n) {
    for (const auto &g : code.gauge) span_.add(g.symplectic());
    for (const auto &s : code.stabilizers()) span_.add(s.symplectic());
}

bool HarmlessChecker::operator()(const PauliString &residual) const {
    return residual.commutes(code_->lx) && residual.commutes(code_->lz) && in_span(residual);
}

bool is_harmless(const PauliString &residual, const CodeSpec &code) { return HarmlessChecker(code)(residual); }

std::optional<PauliString> find_logical_up_to_weight(const CodeSpec &code, int max_weight) {
    HarmlessChecker chk(code);
    const int nq = code.n * code.n * code.n;
    const auto stabs = code.stabilizers();
    PauliString cur(code.n);
    std::optional<PauliString> found;

    // Exact-weight depth-first walk over increasing qubit index; letters 1 = X, 2 = Z, 3 = XZ.
    std::function<bool(int, int)> walk = [&](int start, int left) -> bool {
        if (left == 0) {
            bool central =
                std::all_of(stabs.begin(), stabs.end(), [&](const PauliString &s) { return cur.commutes(s); });
            if (central && !chk.in_span(cur)) {
                found = cur;
                return true;
            }
            return false;
        }
        for (int q = start; q <= nq - left; ++q) {
            for (int letter = 1; letter <= 3; ++letter) {
                cur.set_x(q, letter & 1);
                cur.set_z(q, letter & 2);
                if (walk(q + 1, left - 1)) return true;
            }
            cur.set_x(q, false);
            cur.set_z(q, false);
        }
        return false;
    };
    // Increasing weight keeps the first hit minimal.
    for (int w = 1; w <= max_weight && !found; ++w) {
        walk(0, w);
    }
    return found;
}

int verify_distance(int n) {
    if (n > kMaxExhaustiveN) {
        throw CapabilityError("exhaustive distance search is limited to n = 3; use randomized_distance_search");
    }
    CodeSpec code = build_code(n);
    if (auto l = find_logical_up_to_weight(code, n * n * n)) {
        return static_cast<int>(l->weight());
    }
    throw std::logic_error("no logical operator found");
}

PauliString reduce_weight(const PauliString &p, const CodeSpec &code) {
    // In-plane ZZ gauge terms connect every x-plane, so the Z part reduces to one Z per odd x-plane;
    // likewise the X part reduces to one X per odd z-plane. Odd planes of both kinds are paired on a
    // shared qubit (i, 0, k).
    const int n = code.n;
    std::vector<int> zodd;
    std::vector<int> xodd;
    for (int c = 0; c < n; ++c) {
        bool zp = false;
        bool xp = false;
        for (int u = 0; u < n; ++u) {
            for (int v = 0; v < n; ++v) {
                zp ^= p.z().get(PauliString::index(n, c, u, v));
                xp ^= p.x().get(PauliString::index(n, u, v, c));
            }
        }
        if (zp) zodd.push_back(c);
        if (xp) xodd.push_back(c);
    }
    PauliString r(n);
    const std::size_t shared = std::min(zodd.size(), xodd.size());
    for (std::size_t t = 0; t < zodd.size(); ++t) {
        r.set_z(PauliString::index(n, zodd[t], 0, t < shared ? xodd[t] : 0));
    }
    for (std::size_t t = 0; t < xodd.size(); ++t) {
        r.set_x(PauliString::index(n, t < shared ? zodd[t] : 0, 0, xodd[t]));
    }
    return r;
}

DistanceEstimate randomized_distance_search(const CodeSpec &code, int samples, std::uint64_t seed) {
    const PauliString logicals[3] = {code.lx, code.lz, code.lx * code.lz};
    DistanceEstimate best{std::numeric_limits<int>::max(), code.lx};
    for (int s = 0; s < samples; ++s) {
        std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(s)));
        PauliString p = logicals[s % 3];
        std::bernoulli_distribution coin(0.5);
        for (const auto &g : code.gauge) {
            if (coin(rng)) p = p * g;
        }
        PauliString r = reduce_weight(p, code);
        auto w = static_cast<int>(r.weight());
        if (w < best.upper_bound) {
            best = {w, r};
        }
    }
    return best;
}

std::pair<PauliString, PauliString> transversal_cnot(const PauliString &a, const PauliString &b) {
    PauliString ca = a;
    PauliString cb = b;
    for (std::size_t q = 0; q < a.num_qubits(); ++q) {
        // X_c -> X_c X_t, Z_t -> Z_c Z_t
        if (a.x().get(q)) cb.set_x(q, !cb.x().get(q));
        if (b.z().get(q)) ca.set_z(q, !ca.z().get(q));
    }
    return {ca, cb};
}

bool transversal_cnot_check(int n) {
    CodeSpec code = build_code(n);
    const PauliString id(n);
    std::vector<PauliString> gens = code.gauge;
    auto stabs = code.stabilizers();
    gens.insert(gens.end(), stabs.begin(), stabs.end());

    Gf2Span joint(4 * static_cast<std::size_t>(n) * n * n);
    for (const auto &g : gens) {
        joint.add(pair_vec(g, id));
        joint.add(pair_vec(id, g));
    }
    auto maps_to = [&](const PauliString &a, const PauliString &b, const PauliString &ea, const PauliString &eb) {
        auto [ia, ib] = transversal_cnot(a, b);
        return joint.contains(pair_vec(ia, ib) ^ pair_vec(ea, eb));
    };
    for (const auto &g : gens) {
        auto [ga, gb] = transversal_cnot(g, id);
        auto [ha, hb] = transversal_cnot(id, g);
        if (!joint.contains(pair_vec(ga, gb)) || !joint.contains(pair_vec(ha, hb))) return false;
    }
    // Images of stabilizers must keep commuting with the images of every generator.
    for (const auto &s : stabs) {
        auto [sa, sb] = transversal_cnot(s, id);
        for (const auto &g : gens) {
            auto [ga, gb] = transversal_cnot(id, g);
            if (sa.anticommutes(ga) != sb.anticommutes(gb)) return false;
        }
    }
    return maps_to(code.lx, id, code.lx, code.lx) && maps_to(id, code.lx, id, code.lx) &&
           maps_to(code.lz, id, code.lz, id) && maps_to(id, code.lz, code.lz, code.lz);
}

bool k_identity_holds(int n) {
    CodeSpec code = build_code(n);
    PauliString k(n);
    for (std::size_t q = 0; q < k.num_qubits(); ++q) {
        k.set_x(q);
        k.set_z(q);
    }
    std::vector<PauliString> vz_even;
    std::vector<PauliString> vx_even;
    for (int i = 1; i < n - 1; i += 2) {
        vz_even.push_back(code.vz[i]);
        vx_even.push_back(code.vx[i]);
    }
    PauliString rhs = product(vz_even, n) * code.lz * product(vx_even, n) * code.lx;
    rhs.set_phase_exp(rhs.phase_exp() + 2);
    return rhs == k;
}

PauliString string_error(const CodeSpec &code, ErrorType type, int start, int length, int a, int b) {
    const int n = code.n;
    if (start < 0 || length < 0 || start + length > n || a < 0 || a >= n || b < 0 || b >= n) {
        throw DomainError("error string leaves the lattice");
    }
    PauliString e(n);
    for (int c = start; c < start + length; ++c) {
        if (type == ErrorType::Z) {
            e.set_z(PauliString::index(n, c, a, b));
        } else {
            e.set_x(PauliString::index(n, a, b, c));
        }
    }
    return e;
}

std::pair<double, double> wilson_interval(std::uint64_t failures, std::uint64_t trials, double z) {
    if (trials == 0) return {0.0, 1.0};
    const double nt = static_cast<double>(trials);
    const double ph = static_cast<double>(failures) / nt;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nt;
    const double centre = (ph + z2 / (2.0 * nt)) / denom;
    const double half = z * std::sqrt(ph * (1.0 - ph) / nt + z2 / (4.0 * nt * nt)) / denom;
    // The bounds are exactly 0 and 1 at the edges; the subtraction only gets there up to rounding.
    double lower = failures == 0 ? 0.0 : std::max(0.0, centre - half);
    double upper = failures == trials ? 1.0 : std::min(1.0, centre + half);
    return {lower, upper};
}

namespace {

bool trial_fails(const CodeSpec &code, const HarmlessChecker &chk, double px, double pz, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    PauliString e(code.n);
    for (std::size_t q = 0; q < e.num_qubits(); ++q) {
        if (u(rng) < px) e.set_x(q);
        if (u(rng) < pz) e.set_z(q);
    }
    PauliString residual = e * decode(syndrome(e, code), code);
    return !chk(residual);
}

LogicalRate finish(std::uint64_t failures, std::uint64_t trials) {
    LogicalRate r;
    r.trials = trials;
    r.failures = failures;
    r.rate = trials ? static_cast<double>(failures) / static_cast<double>(trials) : 0.0;
    std::tie(r.lower, r.upper) = wilson_interval(failures, trials);
    return r;
}

void check_rates(double px, double pz) {
    if (!(px >= 0.0 && px <= 1.0 && pz >= 0.0 && pz <= 1.0)) {
        throw DomainError("flip probabilities must lie in [0, 1]");
    }
}

}  // namespace

LogicalRate logical_error_rate(const CodeSpec &code, double px, double pz, std::uint64_t trials, std::uint64_t seed) {
    check_rates(px, pz);
    HarmlessChecker chk(code);
    std::uint64_t failures = 0;
    const auto count = static_cast<std::int64_t>(trials);
#pragma omp parallel for schedule(static) reduction(+ : failures)
    for (std::int64_t t = 0; t < count; ++t) {
        failures += trial_fails(code, chk, px, pz, derive_seed(seed, static_cast<std::uint64_t>(t))) ? 1 : 0;
    }
    return finish(failures, trials);
}

namespace serial {

LogicalRate logical_error_rate(const CodeSpec &code, double px, double pz, std::uint64_t trials, std::uint64_t seed) {
    check_rates(px, pz);
    HarmlessChecker chk(code);
    std::uint64_t failures = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        failures += trial_fails(code, chk, px, pz, derive_seed(seed, t)) ? 1 : 0;
    }
    return finish(failures, trials);
}

}  // namespace serial

}  // namespace cavity::compass
