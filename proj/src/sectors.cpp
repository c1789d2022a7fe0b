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

#include "cavity/sectors.hpp"

namespace cavity {

std::string HalfInt::str() const {
    if (twice_ % 2 == 0) {
        return std::to_string(twice_ / 2);
    }
    return std::to_string(twice_) + "/2";
}

}  // namespace cavity

namespace cavity::sectors {

namespace {

BigCount binomial(int n, int k) {
    if (k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    BigCount r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

}  // namespace

bool is_valid_j(int m, HalfInt j) {
    return m >= 1 && j.twice() >= 0 && j.twice() <= m && (m - j.twice()) % 2 == 0;
}

void SectorLabel::validate() const {
    if (!is_valid_j(m, j)) {
        throw DomainError("invalid J=" + j.str() + " for m=" + std::to_string(m));
    }
    if ((j.twice() - mj.twice()) % 2 != 0 || mj.twice() < -j.twice() || mj.twice() > j.twice()) {
        throw DomainError("invalid M_J=" + mj.str() + " for J=" + j.str());
    }
}

BigCount multiplicity(int m, HalfInt j) {
    if (!is_valid_j(m, j)) {
        throw DomainError("invalid J=" + j.str() + " for m=" + std::to_string(m));
    }
    // c = (2J+1)/(m/2+J+1) * C(m, m/2-J); with k = m/2-J the denominator is m-k+1.
    int k = (m - j.twice()) / 2;
    BigCount num = binomial(m, k) * (j.twice() + 1);
    return num / (m - k + 1);
}

double multiplicity_double(int m, HalfInt j) {
    return multiplicity(m, j).convert_to<double>();
}

std::vector<HalfInt> total_spins(int m) {
    if (m < 1) {
        throw DomainError("m must be >= 1");
    }
    std::vector<HalfInt> out;
    for (int tj = m; tj >= 0; tj -= 2) {
        out.push_back(HalfInt::from_twice(tj));
    }
    return out;
}

std::vector<MultiplicityRow> enumerate_sectors(int m) {
    std::vector<MultiplicityRow> rows;
    for (HalfInt j : total_spins(m)) {
        rows.push_back({j, multiplicity(m, j)});
    }
    return rows;
}

std::vector<HalfInt> projections(HalfInt j) {
    std::vector<HalfInt> out;
    for (int t = -j.twice(); t <= j.twice(); t += 2) {
        out.push_back(HalfInt::from_twice(t));
    }
    return out;
}

std::vector<HalfInt> all_projections(int m) {
    return projections(HalfInt::from_twice(m));
}

}  // namespace cavity::sectors
