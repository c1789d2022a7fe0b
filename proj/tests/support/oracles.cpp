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

#include "oracles.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <unsupported/Eigen/MatrixFunctions>

namespace cavity::oracle {

namespace {

constexpr cd I{0.0, 1.0};

Eigen::Matrix2cd pauli(char which) {
    Eigen::Matrix2cd p;
    switch (which) {
        case 'x':
            p << 0, 1, 1, 0;
            break;
        case 'y':
            p << 0, -I, I, 0;
            break;
        default:
            p << 1, 0, 0, -1;
            break;
    }
    return p;
}

}  // namespace

Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Eigen::MatrixXcd on_qubit(const Eigen::Matrix2cd &op, int q, int m) {
    // Qubit m-1 is the most significant factor, so bit q of the index addresses qubit q.
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
    for (int k = m - 1; k >= 0; --k) {
        Eigen::MatrixXcd f = k == q ? Eigen::MatrixXcd(op) : Eigen::MatrixXcd::Identity(2, 2);
        out = kron(out, f);
    }
    return out;
}

Spin collective(int m) {
    auto d = Eigen::Index{1} << m;
    Spin s{Eigen::MatrixXcd::Zero(d, d), Eigen::MatrixXcd::Zero(d, d), Eigen::MatrixXcd::Zero(d, d)};
    for (int q = 0; q < m; ++q) {
        s.jx += 0.5 * on_qubit(pauli('x'), q, m);
        s.jy += 0.5 * on_qubit(pauli('y'), q, m);
        s.jz += 0.5 * on_qubit(pauli('z'), q, m);
    }
    return s;
}

Eigen::MatrixXcd parity(int m) {
    auto d = Eigen::Index{1} << m;
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Identity(d, d);
    for (int q = 0; q < m; ++q) {
        p = p * on_qubit(pauli('z'), q, m);
    }
    return p;
}

std::map<int, int> j2_multiplicities(int m) {
    Spin s = collective(m);
    Eigen::MatrixXcd j2 = s.jx * s.jx + s.jy * s.jy + s.jz * s.jz;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(j2, Eigen::EigenvaluesOnly);
    std::map<int, int> degeneracy;
    for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i) {
        // J(J+1) = v  ->  2J = sqrt(4v + 1) - 1
        double v = eig.eigenvalues()(i);
        int twice_j = static_cast<int>(std::lround(std::sqrt(4.0 * v + 1.0) - 1.0));
        ++degeneracy[twice_j];
    }
    std::map<int, int> copies;
    for (auto [tj, count] : degeneracy) {
        copies[tj] = count / (tj + 1);
    }
    return copies;
}

Eigen::MatrixXcd exact_twirl(const Eigen::MatrixXcd &rho, int m) {
    Spin s = collective(m);
    const auto d = rho.rows();
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
    // vec(J X - X J) = (1 (x) J - J^T (x) 1) vec(X), column-major vec.
    Eigen::MatrixXcd gram = Eigen::MatrixXcd::Zero(d * d, d * d);
    for (const auto *j : {&s.jx, &s.jy, &s.jz}) {
        Eigen::MatrixXcd l = kron(id, *j) - kron(j->transpose(), id);
        gram += l.adjoint() * l;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(gram);
    Eigen::VectorXcd v = Eigen::Map<const Eigen::VectorXcd>(rho.data(), d * d);
    Eigen::VectorXcd proj = Eigen::VectorXcd::Zero(d * d);
    for (Eigen::Index k = 0; k < gram.rows(); ++k) {
        if (eig.eigenvalues()(k) < 1e-9) {
            auto u = eig.eigenvectors().col(k);
            proj += u * u.dot(v);
        }
    }
    return Eigen::Map<Eigen::MatrixXcd>(proj.data(), d, d);
}

Eigen::Matrix2cd haar_unitary(std::mt19937_64 &rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    Eigen::Matrix2cd z;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            z(i, j) = cd{n(rng), n(rng)} / std::sqrt(2.0);
        }
    }
    Eigen::HouseholderQR<Eigen::Matrix2cd> qr(z);
    Eigen::Matrix2cd q = qr.householderQ();
    Eigen::Matrix2cd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < 2; ++i) {
        cd ph = r(i, i) / std::abs(r(i, i));
        q.col(i) *= ph;
    }
    return q;
}

Eigen::MatrixXcd sampled_twirl(const Eigen::MatrixXcd &rho, int m, int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(rho.rows(), rho.cols());
    for (int s = 0; s < samples; ++s) {
        Eigen::Matrix2cd u = haar_unitary(rng);
        Eigen::MatrixXcd big = Eigen::MatrixXcd::Identity(1, 1);
        for (int q = 0; q < m; ++q) {
            big = kron(big, u);
        }
        acc += big * rho * big.adjoint();
    }
    return acc / static_cast<double>(samples);
}

Eigen::MatrixXcd random_density(int dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    Eigen::MatrixXcd g(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            g(i, j) = cd{n(rng), n(rng)};
        }
    }
    Eigen::MatrixXcd rho = g * g.adjoint();
    return rho / rho.trace();
}

Eigen::VectorXcd random_state(int dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    Eigen::VectorXcd v(dim);
    for (int i = 0; i < dim; ++i) {
        v(i) = cd{n(rng), n(rng)};
    }
    return v / v.norm();
}

Eigen::MatrixXcd annihilation(int nmax) {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(nmax + 1, nmax + 1);
    for (int n = 1; n <= nmax; ++n) {
        a(n - 1, n) = std::sqrt(static_cast<double>(n));
    }
    return a;
}

Eigen::MatrixXcd displacement(cd alpha, int nmax) {
    Eigen::MatrixXcd a = annihilation(nmax);
    Eigen::MatrixXcd gen = alpha * a.adjoint() - std::conj(alpha) * a;
    return gen.exp();
}

Eigen::VectorXcd run_field_sequence(const std::vector<geo_phase::FieldOp> &seq, double spin_x, double ancilla_x,
                                    const Eigen::VectorXcd &field0, int nmax) {
    using K = geo_phase::FieldOp::Kind;
    Eigen::VectorXcd v = field0;
    for (const auto &op : seq) {
        double x = op.coupler == geo_phase::Coupler::Spins ? spin_x : ancilla_x;
        switch (op.kind) {
            case K::Displacement:
                v = displacement(op.amplitude, nmax) * v;
                break;
            case K::Rotation:
                for (int n = 0; n <= nmax; ++n) v(n) *= std::exp(I * op.angle * static_cast<double>(n) * x);
                break;
            case K::Interaction:
                for (int n = 0; n <= nmax; ++n) {
                    v(n) *= std::exp(-I * static_cast<double>(op.sign) * op.duration * static_cast<double>(n) * x);
                }
                break;
        }
    }
    return v;
}

cd dense_sequence_coefficient(HalfInt mj, HalfInt mjp, const std::vector<geo_phase::FieldOp> &seq,
                              double kappa_over_g, int nmax, double step) {
    using K = geo_phase::FieldOp::Kind;
    auto base = lindblad::DispersiveSystem::sector_pair(mj, mjp, 1.0, kappa_over_g, nmax);
    const auto levels = base.levels.size();
    const auto dim = static_cast<Eigen::Index>(base.dim());
    const std::size_t bra = levels == 1 ? 0 : 1;
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
    rho(static_cast<Eigen::Index>(base.index(0, 0)), static_cast<Eigen::Index>(base.index(bra, 0))) = 1.0;
    for (const auto &op : seq) {
        switch (op.kind) {
            case K::Displacement: {
                Eigen::MatrixXcd u = kron(Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(levels),
                                                                     static_cast<Eigen::Index>(levels)),
                                          displacement(op.amplitude, nmax));
                rho = u * rho * u.adjoint();
                break;
            }
            case K::Rotation: {
                Eigen::VectorXcd ph(dim);
                for (std::size_t s = 0; s < levels; ++s) {
                    for (int n = 0; n <= nmax; ++n) {
                        ph(static_cast<Eigen::Index>(base.index(s, n))) =
                            std::exp(I * op.angle * static_cast<double>(n) * base.levels[s]);
                    }
                }
                rho = ph.asDiagonal() * rho * ph.conjugate().asDiagonal();
                break;
            }
            case K::Interaction: {
                auto sys = base;
                sys.g = static_cast<double>(op.sign);
                lindblad::IntegratorOptions opts;
                opts.step = step;
                rho = lindblad::integrate_master(rho, sys, op.duration, opts);
                break;
            }
        }
    }
    cd coeff = 0.0;
    for (int n = 0; n <= nmax; ++n) {
        coeff += rho(static_cast<Eigen::Index>(base.index(0, n)), static_cast<Eigen::Index>(base.index(bra, n)));
    }
    return coeff;
}

}  // namespace cavity::oracle
