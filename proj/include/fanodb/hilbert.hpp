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

#ifndef FANODB_HILBERT_HPP
#define FANODB_HILBERT_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "fanodb/arith.hpp"
#include "fanodb/bounds.hpp"
#include "fanodb/errors.hpp"
#include "fanodb/polynomial.hpp"
#include "fanodb/power_series.hpp"
#include "fanodb/rational_function.hpp"
#include "fanodb/singularity.hpp"

namespace fanodb {

/// Hilbert series of the anticanonical ring of a genus-basket pair.
struct HilbertSeries {
    RationalFunction closed_form;
    GenusBasketPair source;
};

/**
 * Basket correction for one singularity:
 *   1/((1-t)(1-t^r)) * sum_{i=1}^{r-1} bi(r - bi) t^i / 2r,  bi = least residue of b*i mod r.
 */
inline RationalFunction orbifold_term(const QuotientSingularity& s) {
    const int b = inverse_b(s);
    std::vector<Integer> num(static_cast<std::size_t>(s.r));
    for (int i = 1; i < s.r; ++i) {
        const int bi = (b * i) % s.r;
        num[static_cast<std::size_t>(i)] = bi * (s.r - bi);
    }
    Polynomial denom = Polynomial::one_minus_t_pow(1) * Polynomial::one_minus_t_pow(s.r) * Integer(2 * s.r);
    return {Polynomial(std::move(num)), denom};
}

/// Orbifold Riemann-Roch for anticanonical plurigenera of a Fano 3-fold with chi(O_X) = 1.
inline HilbertSeries hilbert_series(const GenusBasketPair& pair) {
    const auto indices = pair.basket.indices_descending();
    Integer lcm = 1;
    for (int r : indices) mpz_lcm_ui(lcm.get_mpz_t(), lcm.get_mpz_t(), static_cast<unsigned long>(r));
    const Integer scale = 2 * lcm;

    Polynomial ring_part(1);  // prod over distinct indices of (1 - t^r)
    for (int r : indices) ring_part *= Polynomial::one_minus_t_pow(r);
    const Polynomial one_minus_t = Polynomial::one_minus_t_pow(1);
    const Polynomial one_plus_t{1, 1};

    // Everything below is over the common denominator (1-t)^4 prod(1-t^r), scaled by `scale`.
    Polynomial total = one_plus_t * one_minus_t * one_minus_t * ring_part * scale;

    const Rational degree = anticanonical_degree(pair.genus, pair.basket);
    Rational half_degree_scaled = degree * Rational(scale) / 2;
    half_degree_scaled.canonicalize();
    total += Polynomial{0, 1, 1} * ring_part * Integer(half_degree_scaled.get_num());

    const Polynomial cube = one_minus_t * one_minus_t * one_minus_t;
    for (int r : indices) {
        std::vector<Integer> inner(static_cast<std::size_t>(r));
        for (const auto& s : pair.basket.elements()) {
            if (s.r != r) continue;
            const int b = inverse_b(s);
            for (int i = 1; i < r; ++i) {
                const int bi = (b * i) % r;
                inner[static_cast<std::size_t>(i)] += bi * (r - bi);
            }
        }
        Polynomial others(1);
        for (int r2 : indices)
            if (r2 != r) others *= Polynomial::one_minus_t_pow(r2);
        Integer factor = scale / (2 * r);
        total -= Polynomial(std::move(inner)) * cube * others * factor;
    }

    std::vector<Integer> coeffs = total.coefficients();
    for (auto& c : coeffs) {
        if (!mpz_divisible_p(c.get_mpz_t(), scale.get_mpz_t()))
            throw Error("plurigenus numerator is not integral for genus " + std::to_string(pair.genus));
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), scale.get_mpz_t());
    }
    Polynomial denom = one_minus_t * one_minus_t * one_minus_t * one_minus_t * ring_part;
    return {RationalFunction(Polynomial(std::move(coeffs)), std::move(denom)), pair};
}

/// P(1/t) = t P(t), checked as a polynomial identity after clearing denominators.
inline bool functional_equation_holds(const RationalFunction& f) {
    const Polynomial& n = f.numer();
    const Polynomial& q = f.denom();
    if (n.is_zero()) return true;
    const Polynomial rn = reverse(n, n.degree());
    const Polynomial rq = reverse(q, q.degree());
    const int e = q.degree() - n.degree() - 1;
    if (e >= 0) return (rn * q).shifted(e) == n * rq;
    return rn * q == (n * rq).shifted(-e);
}

/**
 * Length n of the run c_1 = ... = c_n = 1 when it is followed by c_{n+1} = 0,
 * the shape of a series that no reduced scheme can have. Empty otherwise.
 */
inline std::optional<int> nonreduced_run(const HilbertSeries& h, int depth = 10) {
    const SeriesPrefix s = expand(h.closed_form, depth + 1);
    if (s[1] != 1) return std::nullopt;
    int n = 1;
    while (n + 1 <= depth && s[n + 1] == 1) ++n;
    if (n >= depth) return std::nullopt;
    if (s[n + 1] == 0) return n;
    return std::nullopt;
}

/// True keeps the series.
inline bool reduced_filter(const HilbertSeries& h, int depth = 10) { return !nonreduced_run(h, depth).has_value(); }

/// Expansion order used when none is given: 2 * sum(weights) + 10.
inline int default_order(const std::vector<int>& weights) {
    return 2 * std::accumulate(weights.begin(), weights.end(), 0) + 10;
}

/// P * prod(1 - t^a), exact when it is a polynomial and truncated otherwise.
struct HilbertNumerator {
    std::vector<int> weights;
    bool exact = false;
    Polynomial numerator;   // set when exact
    SeriesPrefix truncated;  // set when not exact
};

inline Polynomial weight_product(const std::vector<int>& weights) {
    Polynomial p(1);
    for (int a : weights) p *= Polynomial::one_minus_t_pow(a);
    return p;
}

inline HilbertNumerator hilbert_numerator(const RationalFunction& series, std::vector<int> weights) {
    std::sort(weights.begin(), weights.end());
    HilbertNumerator out;
    out.weights = weights;
    const Polynomial lifted = series.numer() * weight_product(weights);
    try {
        out.numerator = exact_divide(lifted, series.denom());
        out.exact = true;
    } catch (const NotDivisible&) {
        out.truncated = expand(lifted, series.denom(), default_order(weights));
    }
    return out;
}

inline HilbertNumerator hilbert_numerator(const HilbertSeries& h, std::vector<int> weights) {
    return hilbert_numerator(h.closed_form, std::move(weights));
}

namespace detail {

inline RationalFunction increment_with_shift(int a, int b, int shift) {
    if (a < 1 || b < 1) throw Error("increment needs positive a, b");
    if (std::gcd(a, b) != 1) throw NotCoprime(std::to_string(a) + " and " + std::to_string(b));
    Polynomial denom = Polynomial::one_minus_t_pow(1) * Polynomial::one_minus_t_pow(a) * Polynomial::one_minus_t_pow(b) *
                       Polynomial::one_minus_t_pow(a + b);
    return {Polynomial::monomial(a + b + shift), denom};
}

}  // namespace detail

/// t^(a+b+1) / ((1-t)(1-t^a)(1-t^b)(1-t^(a+b))), the Type I increment in its published form.
inline RationalFunction typeI_increment(int a, int b) { return detail::increment_with_shift(a, b, 1); }

/**
 * t^r / ((1-t)(1-t^a)(1-t^b)(1-t^r)), r = a + b: the difference P_Y - P_X
 * that the plurigenus formula actually gives across a basket relation of
 * equal genus. It starts in degree r, the degree of the adjoined variable.
 */
inline RationalFunction unprojection_increment(int a, int b) { return detail::increment_with_shift(a, b, 0); }

}  // namespace fanodb

#endif  // FANODB_HILBERT_HPP
