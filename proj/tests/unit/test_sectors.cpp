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

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace cavity::sectors {
namespace {

HalfInt J(int twice) { return HalfInt::from_twice(twice); }

TEST(Multiplicity, SmallCases) {
    EXPECT_EQ(multiplicity(2, J(2)), 1);
    EXPECT_EQ(multiplicity(2, J(0)), 1);
    EXPECT_EQ(multiplicity(3, J(1)), 2);
    EXPECT_EQ(multiplicity(4, J(0)), 2);
    EXPECT_EQ(multiplicity(1, J(1)), 1);
}

TEST(Multiplicity, InvalidJThrows) {
    EXPECT_THROW(multiplicity(3, J(2)), DomainError);
    EXPECT_THROW(multiplicity(2, J(6)), DomainError);
    EXPECT_FALSE(is_valid_j(4, J(1)));
    EXPECT_TRUE(is_valid_j(4, J(0)));
}

TEST(Multiplicity, CompletenessUpTo20) {
    for (int m = 1; m <= 20; ++m) {
        BigCount total = 0;
        for (const auto &row : enumerate_sectors(m)) {
            total += row.count * (row.j.twice() + 1);
        }
        EXPECT_EQ(total, BigCount(1) << m) << "m=" << m;
    }
}

TEST(Multiplicity, TopSpinIsUnique) {
    for (int m = 1; m <= 40; ++m) {
        EXPECT_EQ(multiplicity(m, J(m)), 1);
    }
}

TEST(Multiplicity, PascalRecurrence) {
    for (int m = 2; m <= 20; ++m) {
        for (HalfInt j : total_spins(m)) {
            BigCount expect = 0;
            for (int d : {-1, 1}) {
                HalfInt jj = J(j.twice() + d);
                if (jj.twice() >= 0 && is_valid_j(m - 1, jj)) {
                    expect += multiplicity(m - 1, jj);
                }
            }
            EXPECT_EQ(multiplicity(m, j), expect) << "m=" << m << " J=" << j.str();
        }
    }
}

TEST(Multiplicity, MatchesDenseJ2Spectrum) {
    for (int m = 1; m <= 8; ++m) {
        auto dense = oracle::j2_multiplicities(m);
        auto rows = enumerate_sectors(m);
        ASSERT_EQ(dense.size(), rows.size()) << "m=" << m;
        for (const auto &row : rows) {
            EXPECT_EQ(BigCount(dense.at(row.j.twice())), row.count) << "m=" << m << " J=" << row.j.str();
        }
    }
}

TEST(Multiplicity, LargeMIsExact) {
    // Central binomial structure keeps c^200_0 well above 2^53.
    BigCount c = multiplicity(200, J(0));
    EXPECT_GT(c, BigCount(1) << 60);
    EXPECT_EQ(c % 1, 0);
}

TEST(Enumerate, Ordering) {
    auto rows = enumerate_sectors(2);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[0].j, J(2));
    EXPECT_EQ(rows[1].j, J(0));
    auto one = enumerate_sectors(1);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0].j, J(1));
    EXPECT_EQ(one[0].count, 1);
}

TEST(Enumerate, ParityOfLabels) {
    for (int m = 1; m <= 12; ++m) {
        for (HalfInt j : total_spins(m)) {
            EXPECT_EQ(j.is_integer(), m % 2 == 0);
            auto ms = projections(j);
            EXPECT_EQ(static_cast<int>(ms.size()), j.twice() + 1);
            EXPECT_EQ(ms.front(), -j);
            EXPECT_EQ(ms.back(), j);
        }
        auto all = all_projections(m);
        EXPECT_EQ(static_cast<int>(all.size()), m + 1);
    }
}

TEST(SectorLabel, Validate) {
    EXPECT_NO_THROW((SectorLabel{3, J(1), J(-1)}.validate()));
    EXPECT_THROW((SectorLabel{3, J(1), J(3)}.validate()), DomainError);
    EXPECT_THROW((SectorLabel{3, J(2), J(0)}.validate()), DomainError);
    EXPECT_THROW((SectorLabel{0, J(0), J(0)}.validate()), DomainError);
}

TEST(HalfIntLabel, Str) {
    EXPECT_EQ(J(3).str(), "3/2");
    EXPECT_EQ(J(-1).str(), "-1/2");
    EXPECT_EQ(J(4).str(), "2");
}

}  // namespace
}  // namespace cavity::sectors
