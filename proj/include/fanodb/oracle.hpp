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

#ifndef FANODB_ORACLE_HPP
#define FANODB_ORACLE_HPP

#include <array>
#include <numeric>
#include <string>
#include <vector>

#include "fanodb/bounds.hpp"
#include "fanodb/errors.hpp"
#include "fanodb/polynomial.hpp"
#include "fanodb/power_series.hpp"
#include "fanodb/rational_function.hpp"
#include "fanodb/singularity.hpp"

// Brute-force ground truth for weighted projective spaces and weighted
// complete intersections. Nothing here calls the plurigenus formula.

namespace fanodb::oracle {

struct WpsDescription {
    std::array<int, 4> weights{1, 1, 1, 1};
};

struct WciDescription {
    std::vector<int> weights;
    std::vector<int> equation_degrees;
};

inline int weight_sum(const WpsDescription& w) { return std::accumulate(w.weights.begin(), w.weights.end(), 0); }

/// No three weights share a common factor.
inline bool well_formed(const WpsDescription& w) {
    for (int skip = 0; skip < 4; ++skip) {
        int g = 0;
        for (int i = 0; i < 4; ++i)
            if (i != skip) g = std::gcd(g, w.weights[i]);
        if (g != 1) return false;
    }
    return true;
}

/// Number of monomials x0^e0 x1^e1 x2^e2 x3^e3 of weighted degree d.
inline long count_monomials(const std::array<int, 4>& w, long d) {
    long count = 0;
    for (long e0 = 0; e0 * w[0] <= d; ++e0)
        for (long e1 = 0; e0 * w[0] + e1 * w[1] <= d; ++e1)
            for (long e2 = 0; e0 * w[0] + e1 * w[1] + e2 * w[2] <= d; ++e2) {
                const long rest = d - e0 * w[0] - e1 * w[1] - e2 * w[2];
                if (rest % w[3] == 0) ++count;
            }
    return count;
}

/// c_m = number of monomials of weighted degree m * sum(w), since -K = O(sum w).
inline SeriesPrefix wps_series(const WpsDescription& w, int order = 20) {
    if (!well_formed(w)) throw Error("weighted projective space is not well formed");
    SeriesPrefix out;
    const long s = weight_sum(w);
    for (int m = 0; m <= order; ++m) out.coefficients.emplace_back(count_monomials(w.weights, m * s));
    return out;
}

/**
 * Genus from the monomial count and basket from the coordinate charts: the
 * vertex with weight w_i > 1 is 1/w_i(other three weights).
 */
inline GenusBasketPair wps_pair(const WpsDescription& w) {
    if (!well_formed(w)) throw Error("weighted projective space is not well formed");
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (std::gcd(w.weights[i], w.weights[j]) != 1)
                throw NotIsolated("weights " + std::to_string(w.weights[i]) + " and " + std::to_string(w.weights[j]) +
                                  " share a factor");
    std::vector<QuotientSingularity> basket;
    for (int i = 0; i < 4; ++i) {
        if (w.weights[i] == 1) continue;
        std::array<long, 3> rest{};
        int k = 0;
        for (int j = 0; j < 4; ++j)
            if (j != i) rest[static_cast<std::size_t>(k++)] = w.weights[j];
        basket.push_back(normalize_weights(w.weights[i], rest));
    }
    const long h0 = count_monomials(w.weights, weight_sum(w));
    return {static_cast<int>(h0) - 2, Basket(std::move(basket)), KappaClass::Semistable};
}

/// (sum w)^3 / prod w
inline Rational wps_degree(const WpsDescription& w) {
    const long s = weight_sum(w);
    Rational d(s * s * s, static_cast<long>(w.weights[0]) * w.weights[1] * w.weights[2] * w.weights[3]);
    d.canonicalize();
    return d;
}

/// prod(1 - t^d) / prod(1 - t^a) in the ambient grading, with no condition on the degrees.
inline RationalFunction complete_intersection_series(const WciDescription& d) {
    Polynomial num(1);
    for (int e : d.equation_degrees) num *= Polynomial::one_minus_t_pow(e);
    Polynomial den(1);
    for (int a : d.weights) den *= Polynomial::one_minus_t_pow(a);
    return {num, den};
}

/// As above, for a complete intersection whose ambient grading is the anticanonical one.
inline RationalFunction wci_series(const WciDescription& d) {
    const int sa = std::accumulate(d.weights.begin(), d.weights.end(), 0);
    const int sd = std::accumulate(d.equation_degrees.begin(), d.equation_degrees.end(), 0);
    if (sa - sd != 1)
        throw NotAnticanonicalGrading("sum of weights minus sum of degrees is " + std::to_string(sa - sd) + ", not 1");
    return complete_intersection_series(d);
}

}  // namespace fanodb::oracle

#endif  // FANODB_ORACLE_HPP
