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

#ifndef CAVITY_FIDELITY_HPP
#define CAVITY_FIDELITY_HPP

#include <vector>

#include "cavity/common.hpp"

namespace cavity::fidelity {

/// Complex coefficients indexed by the projection pair (M_J, M'_J), M_J in [-m/2, m/2].
class CoefficientTable {
   public:
    explicit CoefficientTable(int m);

    int m() const {
        return m_;
    }
    void set(HalfInt mj, HalfInt mjp, cd value);
    /// Throws DomainError for an unset or out-of-range entry.
    cd at(HalfInt mj, HalfInt mjp) const;
    bool complete() const;

    /// Fills every pair from f(M_J, M'_J).
    template <typename F>
    static CoefficientTable build(int m, F &&f) {
        CoefficientTable t(m);
        for (int a = -m; a <= m; a += 2) {
            for (int b = -m; b <= m; b += 2) {
                HalfInt ma = HalfInt::from_twice(a);
                HalfInt mb = HalfInt::from_twice(b);
                t.set(ma, mb, f(ma, mb));
            }
        }
        return t;
    }

   private:
    std::size_t slot(HalfInt mj, HalfInt mjp) const;

    int m_;
    std::vector<cd> values_;
    std::vector<char> filled_;
};

/// Process fidelity 2^{-2m} sum_{J,J'} c_J c_J' sum_{M in J} sum_{M' in J'} Re R_{M,M'}.
/// Rows over J are summed in parallel; the raw (unclamped) value is returned.
double process_fidelity(const CoefficientTable &table);

/// Clamp to [0, 1] for display.
double clamp_for_report(double f);

/// (F_pro D + 1) / (D + 1).
double average_fidelity(double f_pro, double dim);

namespace serial {

double process_fidelity(const CoefficientTable &table);

}  // namespace serial

}  // namespace cavity::fidelity

#endif
