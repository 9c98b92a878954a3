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

#include <set>

#include "fanodb/bounds.hpp"

namespace fanodb {
namespace {

Basket B(std::string_view s) { return parse_basket(s); }

TEST(Degree, Examples) {
    EXPECT_EQ(anticanonical_degree(22, B("2,1;3,1;5,2")), make_rational(1331, 30));
    EXPECT_EQ(anticanonical_degree(29, B("2,1;3,1")), make_rational(343, 6));
    EXPECT_EQ(anticanonical_degree(2, Basket()), 2);
}

TEST(GenusBounds, Examples) {
    EXPECT_EQ(g_min(Basket()), 2);
    EXPECT_EQ(g_min(B("2,1;3,1")), 1);
    EXPECT_EQ(g_max(Basket(), KappaBound::Three), 37);
    EXPECT_EQ(g_max(Basket(), KappaBound::Four), 49);
    EXPECT_EQ(g_max(B("2,1;3,1"), KappaBound::Three), 30);
}

TEST(GenusBounds, ClampsAtMinusTwo) {
    // The clamp never binds inside the c2 budget; a larger basket shows it.
    std::string twenty;
    for (int i = 0; i < 20; ++i) twenty += (i ? ";" : "") + std::string("2,1");
    EXPECT_EQ(degree_contribution(B(twenty)), 10);
    EXPECT_EQ(g_min(B(twenty)), -2);
    for (const auto& b : enumerate_baskets()) {
        const Rational raw = (Rational(2) - degree_contribution(b)) / 2;
        EXPECT_EQ(g_min(b), std::max(-2L, to_long(floor(raw)) + 1));
    }
}

TEST(Kawamata, Boundary) {
    EXPECT_TRUE(kawamata_satisfied(37, Basket(), KappaBound::Three));
    EXPECT_FALSE(kawamata_satisfied(38, Basket(), KappaBound::Three));
    EXPECT_TRUE(kawamata_satisfied(2, B("2,1;3,1"), KappaBound::Three));
}

TEST(Kawamata, MatchesGmaxOnEveryBasket) {
    for (const auto& b : enumerate_baskets()) {
        for (auto k : {KappaBound::Three, KappaBound::Four}) {
            const int gm = g_max(b, k);
            EXPECT_TRUE(kawamata_satisfied(gm, b, k));
            EXPECT_FALSE(kawamata_satisfied(gm + 1, b, k));
        }
        EXPECT_GE(g_max(b, KappaBound::Four), g_max(b, KappaBound::Three));
    }
}

TEST(ViableBaskets, Tallies) {
    EXPECT_EQ(viable_baskets(KappaBound::Three).size(), 7492u);
    EXPECT_EQ(viable_baskets(KappaBound::Four).size(), 7683u);
    // The literal g_max >= -2 reading also counts baskets with an empty genus range.
    EXPECT_EQ(count_baskets_gmax_at_least_minus2(KappaBound::Three), 8287u);
    EXPECT_EQ(count_baskets_gmax_at_least_minus2(KappaBound::Four), 8289u);
}

TEST(EnumeratePairs, CountsAndInvariants) {
    const auto p3 = enumerate_pairs(KappaBound::Three);
    const auto p4 = enumerate_pairs(KappaBound::Four);
    EXPECT_EQ(p3.size(), 39558u);
    EXPECT_EQ(p4.size(), 52654u);
    std::set<std::pair<int, Basket>> s4;
    for (const auto& p : p4) {
        s4.emplace(p.genus, p.basket);
        EXPECT_GT(anticanonical_degree(p.genus, p.basket), 0);
        EXPECT_TRUE(kawamata_satisfied(p.genus, p.basket, KappaBound::Four));
        EXPECT_EQ(p.kappa_class == KappaClass::Semistable, kawamata_satisfied(p.genus, p.basket, KappaBound::Three));
    }
    for (const auto& p : p3) {
        EXPECT_TRUE(s4.count({p.genus, p.basket}));
        EXPECT_EQ(p.kappa_class, KappaClass::Semistable);
    }
}

}  // namespace
}  // namespace fanodb
