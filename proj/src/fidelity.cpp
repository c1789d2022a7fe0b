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

#include "cavity/fidelity.hpp"

#include <algorithm>
#include <cmath>

#include "cavity/sectors.hpp"
#include "detail/kahan.hpp"

namespace cavity::fidelity {

CoefficientTable::CoefficientTable(int m) : m_(m) {
    if (m < 1) {
        throw DomainError("coefficient table needs m >= 1");
    }
    std::size_t n = static_cast<std::size_t>(m + 1);
    values_.assign(n * n, cd{0.0});
    filled_.assign(n * n, 0);
}

std::size_t CoefficientTable::slot(HalfInt mj, HalfInt mjp) const {
    int a = mj.twice() + m_;
    int b = mjp.twice() + m_;
    if (a < 0 || b < 0 || a > 2 * m_ || b > 2 * m_ || a % 2 != 0 || b % 2 != 0) {
        throw DomainError("projection pair (" + mj.str() + ", " + mjp.str() + ") outside m=" + std::to_string(m_));
    }
    return static_cast<std::size_t>(a / 2) * static_cast<std::size_t>(m_ + 1) + static_cast<std::size_t>(b / 2);
}

void CoefficientTable::set(HalfInt mj, HalfInt mjp, cd value) {
    std::size_t s = slot(mj, mjp);
    values_[s] = value;
    filled_[s] = 1;
}

cd CoefficientTable::at(HalfInt mj, HalfInt mjp) const {
    std::size_t s = slot(mj, mjp);
    if (!filled_[s]) {
        throw DomainError("coefficient (" + mj.str() + ", " + mjp.str() + ") not set");
    }
    return values_[s];
}

bool CoefficientTable::complete() const {
    return std::all_of(filled_.begin(), filled_.end(), [](char f) { return f != 0; });
}

namespace {

struct RowSum {
    double re = 0.0;
    double im = 0.0;
};

// Contribution of all J' for one J, with weights c_J / 2^m.
RowSum row_sum(const CoefficientTable &table, const std::vector<HalfInt> &spins, const std::vector<double> &w,
               std::size_t row) {
    detail::KahanSum re;
    detail::KahanSum im;
    HalfInt j = spins[row];
    for (std::size_t col = 0; col < spins.size(); ++col) {
        HalfInt jp = spins[col];
        double weight = w[row] * w[col];
        for (int a = -j.twice(); a <= j.twice(); a += 2) {
            for (int b = -jp.twice(); b <= jp.twice(); b += 2) {
                cd r = table.at(HalfInt::from_twice(a), HalfInt::from_twice(b));
                re.add(weight * r.real());
                im.add(weight * r.imag());
            }
        }
    }
    return {re.sum, im.sum};
}

double finish(const std::vector<RowSum> &rows) {
    detail::KahanSum re;
    detail::KahanSum im;
    for (const auto &r : rows) {
        re.add(r.re);
        im.add(r.im);
    }
    if (std::abs(im.sum) > 1e-12) {
        throw DomainError("coefficient table is not Hermitian: imaginary part " + std::to_string(im.sum));
    }
    return re.sum;
}

std::vector<double> scaled_weights(int m, const std::vector<HalfInt> &spins) {
    std::vector<double> w;
    double scale = std::ldexp(1.0, -m);
    for (HalfInt j : spins) {
        w.push_back(sectors::multiplicity_double(m, j) * scale);
    }
    return w;
}

void require_complete(const CoefficientTable &table) {
    if (!table.complete()) {
        throw DomainError("coefficient table is incomplete");
    }
}

}  // namespace

double process_fidelity(const CoefficientTable &table) {
    require_complete(table);
    auto spins = sectors::total_spins(table.m());
    auto w = scaled_weights(table.m(), spins);
    std::vector<RowSum> rows(spins.size());
    const auto n = static_cast<long>(spins.size());
#pragma omp parallel for schedule(dynamic)
    for (long r = 0; r < n; ++r) {
        rows[static_cast<std::size_t>(r)] = row_sum(table, spins, w, static_cast<std::size_t>(r));
    }
    return finish(rows);
}

namespace serial {

double process_fidelity(const CoefficientTable &table) {
    require_complete(table);
    auto spins = sectors::total_spins(table.m());
    auto w = scaled_weights(table.m(), spins);
    std::vector<RowSum> rows;
    for (std::size_t r = 0; r < spins.size(); ++r) {
        rows.push_back(row_sum(table, spins, w, r));
    }
    return finish(rows);
}

}  // namespace serial

double clamp_for_report(double f) {
    return std::clamp(f, 0.0, 1.0);
}

double average_fidelity(double f_pro, double dim) {
    if (dim < 2.0) {
        throw DomainError("average_fidelity needs D >= 2");
    }
    return (f_pro * dim + 1.0) / (dim + 1.0);
}

}  // namespace cavity::fidelity
