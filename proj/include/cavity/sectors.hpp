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

#ifndef CAVITY_SECTORS_HPP
#define CAVITY_SECTORS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "cavity/common.hpp"

namespace cavity::sectors {

using BigCount = boost::multiprecision::cpp_int;

/// Angular-momentum sector (J, M_J) of m spin-1/2 particles.
struct SectorLabel {
    int m = 1;
    HalfInt j;
    HalfInt mj;

    /// Throws DomainError unless J and M_J are admissible for m.
    void validate() const;
};

struct MultiplicityRow {
    HalfInt j;
    BigCount count;
};

/// True when J is one of m/2, m/2 - 1, ..., (m mod 2)/2.
bool is_valid_j(int m, HalfInt j);

/// Number c^m_J of copies of the spin-J irrep in (C^2)^{\otimes m}. Exact.
BigCount multiplicity(int m, HalfInt j);

/// c^m_J converted to double; exact while c^m_J < 2^53.
double multiplicity_double(int m, HalfInt j);

/// Rows in descending J.
std::vector<MultiplicityRow> enumerate_sectors(int m);

/// Allowed J values in descending order.
std::vector<HalfInt> total_spins(int m);

/// -J, -J+1, ..., J.
std::vector<HalfInt> projections(HalfInt j);

/// Distinct M_J values for m spins, ascending: -m/2, ..., m/2.
std::vector<HalfInt> all_projections(int m);

}  // namespace cavity::sectors

#endif
