/*
   Copyright 2026 The fanodb Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include "fanodb/hilbert.hpp"
#include "fanodb/oracle.hpp"

namespace fanodb::oracle {
namespace {

const std::vector<std::array<int, 4>> kSevenSpaces = {{1, 1, 1, 1}, {1, 1, 1, 2}, {1, 1, 2, 3}, {1, 2, 3, 5},
                                                      {1, 3, 4, 5}, {2, 3, 5, 7}, {3, 4, 5, 7}};

TEST(WpsSeries, LeadingCounts) {
    EXPECT_EQ(wps_series({{1, 1, 1, 1}}, 3)[1], 35);
    EXPECT_EQ(wps_series({{1, 1, 4, 6}}, 3)[1], 39);
    EXPECT_EQ(wps_series({{1, 2, 3, 5}}, 3)[1], 24);
    EXPECT_THROW(wps_series({{2, 2, 2, 1}}, 3), Error);
}

TEST(WpsPair, Examples) {
    const auto a = wps_pair({{1, 2, 3, 5}});
    EXPECT_EQ(a.genus, 22);
    EXPECT_EQ(to_string(a.basket), "2,1;3,1;5,2");
    EXPECT_EQ(anticanonical_degree(a.genus, a.basket), make_rational(1331, 30));
    const auto b = wps_pair({{1, 1, 2, 3}});
    EXPECT_EQ(b.genus, 29);
    EXPECT_EQ(to_string(b.basket), "2,1;3,1");
    EXPECT_EQ(anticanonical_degree(b.genus, b.basket), make_rational(343, 6));
    const auto c = wps_pair({{3, 4, 5, 7}});
    EXPECT_EQ(c.genus, 7);
    EXPECT_EQ(to_string(c.basket), "3,1;4,1;5,2;7,2");
    EXPECT_EQ(anticanonical_degree(c.genus, c.basket), make_rational(6859, 420));
    EXPECT_THROW(wps_pair({{1, 2, 3, 4}}), NotIsolated);
}

TEST(WpsPair, DegreeMatchesVolumeOnSevenSpaces) {
    for (const auto& w : kSevenSpaces) {
        const auto p = wps_pair({w});
        EXPECT_EQ(anticanonical_degree(p.genus, p.basket), wps_degree({w}));
    }
}

TEST(WpsSeries, AgreesWithPlurigenusFormulaToOrder20) {
    for (const auto& w : kSevenSpaces) {
        const auto p = wps_pair({w});
        EXPECT_EQ(wps_series({w}, 20), expand(hilbert_series(p).closed_form, 20)) << w[0] << w[1] << w[2] << w[3];
    }
}

TEST(WciSeries, Examples) {
    EXPECT_EQ(expand(wci_series({{2, 3, 4, 5, 6, 7}, {12, 14}}), 2)[1], 0);
    EXPECT_EQ(expand(wci_series({{1, 1, 1, 1, 1}, {4}}), 2)[1], 5);
    EXPECT_THROW(wci_series({{1, 1, 1, 3}, {2, 6}}), NotAnticanonicalGrading);
    const auto curve = complete_intersection_series({{1, 1, 1, 3}, {2, 6}});
    EXPECT_EQ(hilbert_numerator(curve, {1, 1, 1, 3}).numerator, Polynomial({1, 0, -1, 0, 0, 0, -1, 0, 1}));
}

}  // namespace
}  // namespace fanodb::oracle
