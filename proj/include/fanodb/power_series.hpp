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

#ifndef FANODB_POWER_SERIES_HPP
#define FANODB_POWER_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <vector>

#include "fanodb/arith.hpp"
#include "fanodb/errors.hpp"
#include "fanodb/polynomial.hpp"
#include "fanodb/rational_function.hpp"

namespace fanodb {

/// Exact Taylor coefficients c_0..c_order of a series at t = 0.
struct SeriesPrefix {
    std::vector<Integer> coefficients;

    int order() const { return static_cast<int>(coefficients.size()) - 1; }
    Integer operator[](int i) const {
        if (i < 0 || i > order()) return 0;
        return coefficients[static_cast<std::size_t>(i)];
    }
    SeriesPrefix truncated(int order) const {
        SeriesPrefix out = *this;
        out.coefficients.resize(static_cast<std::size_t>(std::min(order, this->order()) + 1));
        return out;
    }
    Polynomial as_polynomial() const { return Polynomial(coefficients); }

    friend bool operator==(const SeriesPrefix&, const SeriesPrefix&) = default;
};

/// Taylor coefficients of numer/denom up to degree `order`, requiring integral results.
inline SeriesPrefix expand(const Polynomial& numer, const Polynomial& denom, int order) {
    if (denom.constant_term() == 0) throw NotExpandable("denominator vanishes at t = 0");
    SeriesPrefix out;
    out.coefficients.resize(static_cast<std::size_t>(order) + 1);
    const Integer d0 = denom.constant_term();
    const int dd = denom.degree();
    Integer acc, r;
    for (int i = 0; i <= order; ++i) {
        acc = numer[i];
        for (int j = 1; j <= std::min(i, dd); ++j) {
            const Integer& dj = denom.coefficients()[static_cast<std::size_t>(j)];
            if (dj == 0) continue;
            mpz_submul(acc.get_mpz_t(), dj.get_mpz_t(), out.coefficients[static_cast<std::size_t>(i - j)].get_mpz_t());
        }
        auto& ci = out.coefficients[static_cast<std::size_t>(i)];
        mpz_fdiv_qr(ci.get_mpz_t(), r.get_mpz_t(), acc.get_mpz_t(), d0.get_mpz_t());
        if (r != 0) throw NotExpandable("expansion has a non-integral coefficient at degree " + std::to_string(i));
    }
    return out;
}

inline SeriesPrefix expand(const RationalFunction& f, int order) { return expand(f.numer(), f.denom(), order); }

/// Truncated product of a prefix with a polynomial; the result has the prefix's order.
inline SeriesPrefix multiply(const SeriesPrefix& s, const Polynomial& p) {
    SeriesPrefix out;
    out.coefficients.assign(s.coefficients.size(), Integer(0));
    const int n = s.order();
    for (int j = 0; j <= std::min(p.degree(), n); ++j) {
        const Integer& pj = p.coefficients()[static_cast<std::size_t>(j)];
        if (pj == 0) continue;
        for (int i = 0; i + j <= n; ++i)
            mpz_addmul(out.coefficients[static_cast<std::size_t>(i + j)].get_mpz_t(), pj.get_mpz_t(),
                       s.coefficients[static_cast<std::size_t>(i)].get_mpz_t());
    }
    return out;
}

}  // namespace fanodb

#endif  // FANODB_POWER_SERIES_HPP
