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

#include <numeric>

#include "fanodb/singularity.hpp"

namespace fanodb {
namespace {

Basket B(std::string_view s) { return parse_basket(s); }

TEST(Canonicalize, Examples) {
    EXPECT_EQ(canonicalize(3, 2), (QuotientSingularity{3, 1}));
    EXPECT_EQ(canonicalize(5, 3), (QuotientSingularity{5, 2}));
    EXPECT_EQ(canonicalize(7, 12), (QuotientSingularity{7, 2}));
    EXPECT_THROW(canonicalize(4, 2), NotTerminalType);
    EXPECT_THROW(canonicalize(5, 10), NotTerminalType);
}

TEST(NormalizeWeights, Examples) {
    EXPECT_EQ(normalize_weights(5, {3, 4, 2}), (QuotientSingularity{5, 2}));
    EXPECT_EQ(normalize_weights(7, {3, 4, 5}), (QuotientSingularity{7, 2}));
    EXPECT_EQ(normalize_weights(2, {1, 1, 1}), (QuotientSingularity{2, 1}));
    EXPECT_THROW(normalize_weights(5, {1, 1, 1}), NotTerminalForm);
}

TEST(InverseB, Examples) {
    EXPECT_EQ(inverse_b({2, 1}), 1);
    EXPECT_EQ(inverse_b({5, 2}), 3);
    EXPECT_EQ(inverse_b({7, 2}), 4);
}

TEST(Basket, TextRoundTrip) {
    const Basket b = B("3,2;2,1;5,3");
    EXPECT_EQ(to_string(b), "2,1;3,1;5,2");
    EXPECT_EQ(parse_basket(to_string(b)), b);
    EXPECT_TRUE(parse_basket("").empty());
    EXPECT_THROW(parse_basket("2;3"), ParseError);
}

TEST(Basket, Contributions) {
    EXPECT_EQ(degree_contribution(Basket()), 0);
    EXPECT_EQ(degree_contribution(B("2,1;3,1")), make_rational(7, 6));
    EXPECT_EQ(degree_contribution(B("2,1;3,1;5,2")), make_rational(71, 30));
    EXPECT_EQ(c2_contribution(Basket()), 0);
    EXPECT_EQ(c2_contribution(B("2,1;2,1;2,1;2,1")), 6);
    EXPECT_EQ(c2_contribution(B("2,1;3,1")), make_rational(25, 6));
}

TEST(Basket, DegreeTermIgnoresRepresentative) {
    for (int r = 2; r <= 24; ++r)
        for (int a = 1; a < r; ++a) {
            if (std::gcd(a, r) != 1) continue;
            const int b = [&] { for (int x = 1; x < r; ++x) if (a * x % r == 1) return x; return 0; }();
            const int b2 = r - b;  // inverse of r - a
            EXPECT_EQ(b * (r - b), b2 * (r - b2));
        }
}

TEST(SingularitiesOfIndex, HalfTotient) {
    EXPECT_EQ(singularities_of_index(2).size(), 1u);
    for (int r = 3; r <= 24; ++r) {
        int phi = 0;
        for (int a = 1; a < r; ++a) phi += std::gcd(a, r) == 1;
        EXPECT_EQ(static_cast<int>(singularities_of_index(r).size()), phi / 2) << r;
    }
}

TEST(EnumerateBaskets, CountAndShape) {
    const auto all = enumerate_baskets();
    ASSERT_EQ(all.size(), 8314u);
    EXPECT_TRUE(all.front().empty());
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    EXPECT_TRUE(std::adjacent_find(all.begin(), all.end()) == all.end());
    for (const auto& b : all) {
        EXPECT_LT(c2_contribution(b), 24);
        EXPECT_LE(b.size(), 15u);
        for (const auto& s : b.elements()) EXPECT_LE(s.r, 24);
    }
}

TEST(EnumerateBaskets, BoundaryCasesExcluded) {
    const auto all = enumerate_baskets();
    std::string sixteen, five;
    for (int i = 0; i < 16; ++i) sixteen += (i ? ";" : "") + std::string("2,1");
    for (int i = 0; i < 5; ++i) five += (i ? ";" : "") + std::string("5,2");
    EXPECT_EQ(c2_contribution(B(sixteen)), 24);
    EXPECT_EQ(c2_contribution(B(five)), 24);
    EXPECT_FALSE(std::binary_search(all.begin(), all.end(), B(sixteen)));
    EXPECT_FALSE(std::binary_search(all.begin(), all.end(), B(five)));
    EXPECT_TRUE(std::binary_search(all.begin(), all.end(), B("2,1;3,1")));
}

}  // namespace
}  // namespace fanodb
