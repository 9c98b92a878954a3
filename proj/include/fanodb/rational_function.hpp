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

#ifndef FANODB_RATIONAL_FUNCTION_HPP
#define FANODB_RATIONAL_FUNCTION_HPP

#include <string>
#include <utility>
#include <vector>

#include "fanodb/arith.hpp"
#include "fanodb/errors.hpp"
#include "fanodb/polynomial.hpp"

namespace fanodb {

/**
 * Quotient numer/denom of integer polynomials in t, kept in lowest terms.
 *
 * Normal form: the polynomial gcd is divided out, the joint content of
 * numerator and denominator is 1, and the lowest nonzero coefficient of the
 * denominator is positive. For every series built from products of (1 - t^e)
 * this leaves denom(0) = 1. Two normalized values are equal iff their fields
 * are equal.
 */
class RationalFunction {
   public:
    RationalFunction() : denom_(1) {}
    RationalFunction(const Polynomial& p) : numer_(p), denom_(1) {}
    RationalFunction(Polynomial numer, Polynomial denom) : numer_(std::move(numer)), denom_(std::move(denom)) {
        if (denom_.is_zero()) throw ZeroDenominator("rational function with zero denominator");
        normalize();
    }

    const Polynomial& numer() const { return numer_; }
    const Polynomial& denom() const { return denom_; }
    bool is_zero() const { return numer_.is_zero(); }

    friend RationalFunction operator+(const RationalFunction& f, const RationalFunction& g) {
        if (f.denom_ == g.denom_) return {f.numer_ + g.numer_, f.denom_};
        return {f.numer_ * g.denom_ + g.numer_ * f.denom_, f.denom_ * g.denom_};
    }
    friend RationalFunction operator-(const RationalFunction& f) {
        RationalFunction out = f;
        out.numer_ = -out.numer_;
        return out;
    }
    friend RationalFunction operator-(const RationalFunction& f, const RationalFunction& g) { return f + (-g); }
    friend RationalFunction operator*(const RationalFunction& f, const RationalFunction& g) {
        return {f.numer_ * g.numer_, f.denom_ * g.denom_};
    }
    friend RationalFunction operator*(const Rational& c, const RationalFunction& f) {
        return {f.numer_ * Integer(c.get_num()), f.denom_ * Integer(c.get_den())};
    }
    friend bool operator==(const RationalFunction& f, const RationalFunction& g) {
        return f.numer_ == g.numer_ && f.denom_ == g.denom_;
    }

   private:
    void normalize() {
        if (numer_.is_zero()) {
            denom_ = Polynomial(1);
            return;
        }
        Polynomial g = gcd(numer_, denom_);
        if (g.degree() > 0) {
            numer_ = exact_divide(numer_, g);
            denom_ = exact_divide(denom_, g);
        }
        Integer c;
        mpz_gcd(c.get_mpz_t(), numer_.content().get_mpz_t(), denom_.content().get_mpz_t());
        if (denom_[denom_.valuation()] < 0) c = -c;
        if (c != 1) {
            numer_ = numer_.divided_exactly(c);
            denom_ = denom_.divided_exactly(c);
        }
    }

    Polynomial numer_;
    Polynomial denom_;
};

inline RationalFunction rf_add(const RationalFunction& f, const RationalFunction& g) { return f + g; }
inline RationalFunction rf_sub(const RationalFunction& f, const RationalFunction& g) { return f - g; }
inline RationalFunction rf_mul(const RationalFunction& f, const RationalFunction& g) { return f * g; }

/// Equality decided by the cross-multiplied polynomial identity, independent of normal form.
inline bool rf_eq(const RationalFunction& f, const RationalFunction& g) {
    return f.numer() * g.denom() == g.numer() * f.denom();
}

/// 1 / prod (1 - t^e)
inline RationalFunction inverse_product(const std::vector<int>& exponents) {
    Polynomial d(1);
    for (int e : exponents) d *= Polynomial::one_minus_t_pow(e);
    return {Polynomial(1), d};
}

inline std::string to_display_string(const RationalFunction& f) {
    if (f.denom() == Polynomial(1)) return to_display_string(f.numer());
    return "(" + to_display_string(f.numer()) + ")/(" + to_display_string(f.denom()) + ")";
}

}  // namespace fanodb

#endif  // FANODB_RATIONAL_FUNCTION_HPP
