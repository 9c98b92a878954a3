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

#ifndef FANODB_ARITH_HPP
#define FANODB_ARITH_HPP

#include <gmpxx.h>

#include <numeric>
#include <string>
#include <string_view>

#include "fanodb/errors.hpp"

namespace fanodb {

using Integer = mpz_class;
/// Canonical fraction: gcd(|num|, den) = 1 and den > 0 (mpq_class keeps this after every operation).
using Rational = mpq_class;

inline Rational make_rational(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// "p/q", or "p" when q = 1.
inline std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline Integer parse_integer(std::string_view text) {
    Integer z;
    if (text.empty() || z.set_str(std::string(text), 10) != 0)
        throw ParseError("bad integer '" + std::string(text) + "'");
    return z;
}

inline Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den <= 0) throw ParseError("non-positive denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Largest integer not exceeding q.
inline Integer floor(const Rational& q) {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

inline long to_long(const Integer& z) { return z.get_si(); }

}  // namespace fanodb

#endif  // FANODB_ARITH_HPP
