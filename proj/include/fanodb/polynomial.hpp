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

#ifndef FANODB_POLYNOMIAL_HPP
#define FANODB_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fanodb/arith.hpp"
#include "fanodb/errors.hpp"

namespace fanodb {

/**
 * Univariate polynomial in t with arbitrary-precision integer coefficients.
 *
 * Stored densely by degree with the trailing zeros trimmed, so the zero
 * polynomial is the empty vector and has degree -1 (standing in for -infinity).
 */
class Polynomial {
   public:
    Polynomial() = default;
    Polynomial(long c) : Polynomial(Integer(c)) {}
    Polynomial(const Integer& c) {
        if (c != 0) coeffs_.push_back(c);
    }
    explicit Polynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<long> coeffs) {
        coeffs_.reserve(coeffs.size());
        for (long c : coeffs) coeffs_.emplace_back(c);
        trim();
    }

    static Polynomial monomial(int degree, const Integer& c = 1) {
        if (c == 0) return {};
        std::vector<Integer> v(static_cast<std::size_t>(degree) + 1);
        v.back() = c;
        return Polynomial(std::move(v));
    }

    /// 1 - t^e
    static Polynomial one_minus_t_pow(int e) {
        if (e == 0) return {};
        std::vector<Integer> v(static_cast<std::size_t>(e) + 1);
        v.front() = 1;
        v.back() -= 1;
        return Polynomial(std::move(v));
    }

    /// Builds from [degree, coefficient] pairs; repeated degrees accumulate.
    static Polynomial from_terms(const std::vector<std::pair<int, Integer>>& terms) {
        int top = -1;
        for (const auto& [d, c] : terms) {
            if (d < 0) throw ParseError("negative degree in polynomial term");
            top = std::max(top, d);
        }
        std::vector<Integer> v(static_cast<std::size_t>(top + 1));
        for (const auto& [d, c] : terms) v[static_cast<std::size_t>(d)] += c;
        return Polynomial(std::move(v));
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Integer>& coefficients() const { return coeffs_; }

    Integer operator[](int i) const {
        if (i < 0 || i > degree()) return 0;
        return coeffs_[static_cast<std::size_t>(i)];
    }
    const Integer& leading() const { return coeffs_.back(); }
    Integer constant_term() const { return (*this)[0]; }

    /// Nonzero terms as (degree, coefficient), degree ascending.
    std::vector<std::pair<int, Integer>> terms() const {
        std::vector<std::pair<int, Integer>> out;
        for (int i = 0; i <= degree(); ++i)
            if (coeffs_[static_cast<std::size_t>(i)] != 0) out.emplace_back(i, coeffs_[static_cast<std::size_t>(i)]);
        return out;
    }

    /// Lowest degree carrying a nonzero coefficient; -1 for zero.
    int valuation() const {
        for (int i = 0; i <= degree(); ++i)
            if (coeffs_[static_cast<std::size_t>(i)] != 0) return i;
        return -1;
    }

    Polynomial& operator+=(const Polynomial& rhs) {
        if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& rhs) {
        if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const Integer& c) {
        if (c == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& x : coeffs_) x *= c;
        return *this;
    }
    Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator-(Polynomial p) {
        for (auto& x : p.coeffs_) x = -x;
        return p;
    }
    friend Polynomial operator*(Polynomial p, const Integer& c) { return p *= c; }
    friend Polynomial operator*(const Integer& c, Polynomial p) { return p *= c; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
        if (lhs.is_zero() || rhs.is_zero()) return {};
        std::vector<Integer> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
        for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
            if (lhs.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
                if (rhs.coeffs_[j] == 0) continue;
                mpz_addmul(out[i + j].get_mpz_t(), lhs.coeffs_[i].get_mpz_t(), rhs.coeffs_[j].get_mpz_t());
            }
        }
        return Polynomial(std::move(out));
    }
    friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

    /// Multiplies by t^k.
    Polynomial shifted(int k) const {
        if (is_zero() || k == 0) return *this;
        std::vector<Integer> v(static_cast<std::size_t>(k));
        v.insert(v.end(), coeffs_.begin(), coeffs_.end());
        return Polynomial(std::move(v));
    }

    /// Keeps only the terms of degree <= order.
    Polynomial truncated(int order) const {
        if (order < 0) return {};
        if (degree() <= order) return *this;
        return Polynomial(std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + order + 1));
    }

    /// Nonnegative gcd of the coefficients (0 for the zero polynomial).
    Integer content() const {
        Integer g = 0;
        for (const auto& c : coeffs_) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
            if (g == 1) break;
        }
        return g;
    }

    /// Divides every coefficient by c, which must divide them all.
    Polynomial divided_exactly(const Integer& c) const {
        Polynomial out = *this;
        for (auto& x : out.coeffs_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
        return out;
    }

    /// Content-free with positive leading coefficient.
    Polynomial primitive_part() const {
        if (is_zero()) return {};
        Integer c = content();
        if (leading() < 0) c = -c;
        return divided_exactly(c);
    }

   private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Integer> coeffs_;
};

/// Quotient q with n = q * d, all over the integers.
inline Polynomial exact_divide(const Polynomial& n, const Polynomial& d) {
    if (d.is_zero()) throw ZeroDenominator("division by the zero polynomial");
    if (n.is_zero()) return {};
    if (n.degree() < d.degree()) throw NotDivisible("nonzero remainder");
    std::vector<Integer> rem = n.coefficients();
    const int dd = d.degree();
    const auto& dc = d.coefficients();
    std::vector<Integer> q(static_cast<std::size_t>(n.degree() - dd + 1));
    Integer r;
    for (int k = n.degree() - dd; k >= 0; --k) {
        Integer& top = rem[static_cast<std::size_t>(k + dd)];
        if (top == 0) continue;
        mpz_fdiv_qr(q[static_cast<std::size_t>(k)].get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), d.leading().get_mpz_t());
        if (r != 0) throw NotDivisible("quotient is not integral");
        const Integer& qk = q[static_cast<std::size_t>(k)];
        for (int j = 0; j <= dd; ++j)
            mpz_submul(rem[static_cast<std::size_t>(k + j)].get_mpz_t(), qk.get_mpz_t(), dc[static_cast<std::size_t>(j)].get_mpz_t());
    }
    for (int i = 0; i < dd; ++i)
        if (rem[static_cast<std::size_t>(i)] != 0) throw NotDivisible("nonzero remainder");
    return Polynomial(std::move(q));
}

/// Whether d divides n exactly over the integers.
inline bool divides(const Polynomial& d, const Polynomial& n) {
    try {
        (void)exact_divide(n, d);
        return true;
    } catch (const NotDivisible&) {
        return false;
    }
}

/// A nonzero constant multiple of the pseudo-remainder of a by b.
inline Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw ZeroDenominator("pseudo-remainder by zero");
    std::vector<Integer> r = a.coefficients();
    const int db = b.degree();
    const auto& bc = b.coefficients();
    const Integer& lb = b.leading();
    int dr = static_cast<int>(r.size()) - 1;
    while (dr >= db) {
        const Integer lr = r[static_cast<std::size_t>(dr)];
        for (auto& x : r) x *= lb;
        for (int j = 0; j <= db; ++j)
            mpz_submul(r[static_cast<std::size_t>(dr - db + j)].get_mpz_t(), lr.get_mpz_t(), bc[static_cast<std::size_t>(j)].get_mpz_t());
        while (dr >= 0 && r[static_cast<std::size_t>(dr)] == 0) --dr;
        r.resize(static_cast<std::size_t>(dr + 1));
        Polynomial tmp(r);
        Integer c = tmp.content();
        if (c > 1) r = tmp.divided_exactly(c).coefficients();
    }
    return Polynomial(std::move(r));
}

/// Primitive gcd (positive leading coefficient) via the primitive remainder sequence.
inline Polynomial gcd(const Polynomial& x, const Polynomial& y) {
    Polynomial a = x.primitive_part();
    Polynomial b = y.primitive_part();
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        if (b.degree() == 0) return Polynomial(1);
        Polynomial r = pseudo_remainder(a, b);
        a = std::move(b);
        b = r.primitive_part();
    }
    return a;
}

/// t^k * q(1/t): the coefficient of degree i moves to degree k - i.
inline Polynomial reverse(const Polynomial& q, int k) {
    if (q.degree() > k) throw DegreeOverflow("degree " + std::to_string(q.degree()) + " exceeds " + std::to_string(k));
    if (q.is_zero()) return {};
    std::vector<Integer> v(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i <= q.degree(); ++i) v[static_cast<std::size_t>(k - i)] = q[i];
    return Polynomial(std::move(v));
}

/// Sparse textual form: [[degree, coefficient], ...] with degree ascending.
inline std::string to_sparse_string(const Polynomial& p) {
    std::ostringstream os;
    os << '[';
    bool first = true;
    for (const auto& [d, c] : p.terms()) {
        if (!first) os << ',';
        first = false;
        os << '[' << d << ',' << c.get_str() << ']';
    }
    os << ']';
    return os.str();
}

/// Human-readable form such as "1 - t^3 - 3t^4 + 3t^6".
inline std::string to_display_string(const Polynomial& p, const std::string& var = "t") {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [d, c] : p.terms()) {
        Integer mag = abs(c);
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        if (d == 0) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) out += mag.get_str();
        out += var;
        if (d != 1) out += "^" + std::to_string(d);
    }
    return out;
}

}  // namespace fanodb

#endif  // FANODB_POLYNOMIAL_HPP
