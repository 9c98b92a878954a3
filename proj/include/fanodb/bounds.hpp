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

#ifndef FANODB_BOUNDS_HPP
#define FANODB_BOUNDS_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "fanodb/arith.hpp"
#include "fanodb/singularity.hpp"

namespace fanodb {

/// chi(O_X) of a Fano 3-fold.
inline constexpr int kChiOX = 1;

/// Kawamata constant: 3 for semistable, 4 for a rank-2 maximal destabilising subsheaf.
enum class KappaBound { Three = 3, Four = 4 };

inline int value(KappaBound k) { return static_cast<int>(k); }

inline KappaBound kappa_from_int(int k) {
    if (k == 3) return KappaBound::Three;
    if (k == 4) return KappaBound::Four;
    throw Error("kappa must be 3 or 4, got " + std::to_string(k));
}

enum class KappaClass { Semistable, MFOnly };

inline std::string to_string(KappaClass c) { return c == KappaClass::Semistable ? "ss" : "mf"; }

struct GenusBasketPair {
    int genus = 0;
    Basket basket;
    KappaClass kappa_class = KappaClass::Semistable;

    friend bool operator==(const GenusBasketPair&, const GenusBasketPair&) = default;
};

/// -K^3 = 2g - 2 + sum b(r-b)/r
inline Rational anticanonical_degree(int g, const Basket& basket) {
    Rational d = degree_contribution(basket) + (2 * g - 2);
    d.canonicalize();
    return d;
}

/// Least genus with positive degree, clamped at -2.
inline int g_min(const Basket& basket) {
    Rational x = (Rational(2) - degree_contribution(basket)) / 2;
    return std::max(-2, static_cast<int>(to_long(floor(x))) + 1);
}

inline int g_max(const Basket& basket, KappaBound k) {
    Rational x = (Rational(2) - degree_contribution(basket) + value(k) * (24 * kChiOX - c2_contribution(basket))) / 2;
    return static_cast<int>(to_long(floor(x)));
}

/// -K^3 <= kappa (-K c2) with -K c2 = 24 - sum(r - 1/r).
inline bool kawamata_satisfied(int g, const Basket& basket, KappaBound k) {
    return anticanonical_degree(g, basket) <= value(k) * (24 * kChiOX - c2_contribution(basket));
}

/// Baskets admitting at least one genus, i.e. g_min(B) <= g_max(B, k).
inline std::vector<Basket> viable_baskets(KappaBound k) {
    std::vector<Basket> out;
    for (auto& b : enumerate_baskets())
        if (g_min(b) <= g_max(b, k)) out.push_back(std::move(b));
    return out;
}

/// Baskets with g_max(B, k) >= -2, counting those whose genus interval is empty.
inline std::size_t count_baskets_gmax_at_least_minus2(KappaBound k) {
    std::size_t n = 0;
    for (const auto& b : enumerate_baskets())
        if (g_max(b, k) >= -2) ++n;
    return n;
}

/**
 * Every (g, B) with g_min(B) <= g <= g_max(B, k), ordered by basket
 * enumeration order then genus. Pairs also satisfying the kappa = 3 bound are
 * classed Semistable.
 */
inline std::vector<GenusBasketPair> enumerate_pairs(KappaBound k) {
    std::vector<GenusBasketPair> out;
    for (const auto& b : enumerate_baskets()) {
        const int hi = g_max(b, k);
        if (hi < -2) continue;
        const int ss_hi = g_max(b, KappaBound::Three);
        for (int g = g_min(b); g <= hi; ++g)
            out.push_back({g, b, g <= ss_hi ? KappaClass::Semistable : KappaClass::MFOnly});
    }
    return out;
}

}  // namespace fanodb

#endif  // FANODB_BOUNDS_HPP
