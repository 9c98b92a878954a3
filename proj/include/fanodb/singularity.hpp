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

#ifndef FANODB_SINGULARITY_HPP
#define FANODB_SINGULARITY_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "fanodb/arith.hpp"
#include "fanodb/errors.hpp"

namespace fanodb {

/**
 * Terminal cyclic quotient singularity 1/r(1,a,-a), stored in the canonical
 * form 1 <= a <= r/2 with gcd(a, r) = 1. The types 1/r(1,a,-a) and
 * 1/r(1,r-a,a) are the same point and share this representative.
 */
struct QuotientSingularity {
    int r = 2;
    int a = 1;

    friend auto operator<=>(const QuotientSingularity&, const QuotientSingularity&) = default;
};

inline QuotientSingularity canonicalize(int r, int a) {
    if (r < 2) throw NotTerminalType("index " + std::to_string(r) + " < 2");
    a = ((a % r) + r) % r;
    if (a == 0 || std::gcd(a, r) != 1)
        throw NotTerminalType("1/" + std::to_string(r) + "(1," + std::to_string(a) + ",-" + std::to_string(a) + ")");
    if (2 * a > r) a = r - a;
    return {r, a};
}

/**
 * Identifies 1/r(w1,w2,w3) with a terminal type by trying every unit u mod r
 * and checking whether u*w reduces to {1, a, r-a}.
 */
inline QuotientSingularity normalize_weights(int r, std::array<long, 3> w) {
    if (r < 2) throw NotTerminalForm("index " + std::to_string(r) + " < 2");
    for (int u = 1; u < r; ++u) {
        if (std::gcd(u, r) != 1) continue;
        std::array<long, 3> v{};
        for (int i = 0; i < 3; ++i) v[i] = ((u * w[i]) % r + r) % r;
        std::sort(v.begin(), v.end());
        for (int i = 0; i < 3; ++i) {
            if (v[i] != 1) continue;
            const long x = v[(i + 1) % 3];
            const long y = v[(i + 2) % 3];
            if (x != 0 && y != 0 && (x + y) % r == 0 && std::gcd(x, static_cast<long>(r)) == 1)
                return canonicalize(r, static_cast<int>(x));
        }
    }
    throw NotTerminalForm("1/" + std::to_string(r) + "(" + std::to_string(w[0]) + "," + std::to_string(w[1]) + "," +
                          std::to_string(w[2]) + ")");
}

/// The unique b in [1, r-1] with a*b = 1 mod r.
inline int inverse_b(const QuotientSingularity& s) {
    if (s.r == 2) return 1;
    for (int b = 1; b < s.r; ++b)
        if ((static_cast<long>(s.a) * b) % s.r == 1) return b;
    throw NotTerminalType("no inverse of " + std::to_string(s.a) + " mod " + std::to_string(s.r));
}

inline std::string to_string(const QuotientSingularity& s) {
    return "1/" + std::to_string(s.r) + "(1," + std::to_string(s.a) + "," + std::to_string(s.r - s.a) + ")";
}

/// Multiset of singularities, kept sorted by (r, a).
class Basket {
   public:
    Basket() = default;
    explicit Basket(std::vector<QuotientSingularity> elements) : elements_(std::move(elements)) {
        std::sort(elements_.begin(), elements_.end());
    }

    const std::vector<QuotientSingularity>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }

    void insert(const QuotientSingularity& s) { elements_.insert(std::upper_bound(elements_.begin(), elements_.end(), s), s); }
    /// Removes one copy; returns false when absent.
    bool erase_one(const QuotientSingularity& s) {
        auto it = std::lower_bound(elements_.begin(), elements_.end(), s);
        if (it == elements_.end() || *it != s) return false;
        elements_.erase(it);
        return true;
    }
    bool contains(const QuotientSingularity& s) const { return std::binary_search(elements_.begin(), elements_.end(), s); }
    bool contains_index(int r) const {
        return std::any_of(elements_.begin(), elements_.end(), [r](const auto& s) { return s.r == r; });
    }
    /// Distinct indices, descending.
    std::vector<int> indices_descending() const {
        std::vector<int> out;
        for (const auto& s : elements_) out.push_back(s.r);
        std::sort(out.begin(), out.end(), std::greater<>());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    friend auto operator<=>(const Basket&, const Basket&) = default;
    friend bool operator==(const Basket&, const Basket&) = default;

   private:
    std::vector<QuotientSingularity> elements_;
};

/// "r,a;r,a;..." in canonical order; the empty basket is "".
inline std::string to_string(const Basket& b) {
    std::string out;
    for (const auto& s : b.elements()) {
        if (!out.empty()) out += ';';
        out += std::to_string(s.r) + "," + std::to_string(s.a);
    }
    return out;
}

/// Accepts any representative "r,a" and canonicalizes it.
inline Basket parse_basket(std::string_view text) {
    std::vector<QuotientSingularity> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find(';', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view item = text.substr(pos, end - pos);
        const auto comma = item.find(',');
        if (comma == std::string_view::npos) throw ParseError("basket element '" + std::string(item) + "' is not r,a");
        out.push_back(canonicalize(to_long(parse_integer(item.substr(0, comma))), to_long(parse_integer(item.substr(comma + 1)))));
        pos = end + 1;
    }
    return Basket(std::move(out));
}

/// Sum of b(r-b)/r over the basket.
inline Rational degree_contribution(const Basket& basket) {
    Rational sum = 0;
    for (const auto& s : basket.elements()) {
        const int b = inverse_b(s);
        sum += Rational(b * (s.r - b), s.r);
    }
    sum.canonicalize();
    return sum;
}

/// Sum of r - 1/r over the basket.
inline Rational c2_contribution(const Basket& basket) {
    Rational sum = 0;
    for (const auto& s : basket.elements()) sum += Rational(s.r * s.r - 1, s.r);
    sum.canonicalize();
    return sum;
}

/// Every canonical singularity of index r, a ascending.
inline std::vector<QuotientSingularity> singularities_of_index(int r) {
    std::vector<QuotientSingularity> out;
    for (int a = 1; 2 * a <= r; ++a)
        if (std::gcd(a, r) == 1) out.push_back({r, a});
    return out;
}

namespace detail {

inline void extend_baskets(const std::vector<QuotientSingularity>& pool, std::size_t first, const Rational& budget,
                           std::vector<QuotientSingularity>& current, std::vector<Basket>& out) {
    out.emplace_back(current);
    for (std::size_t i = first; i < pool.size(); ++i) {
        const auto& s = pool[i];
        Rational cost(s.r * s.r - 1, s.r);
        if (cost >= budget) continue;
        current.push_back(s);
        extend_baskets(pool, i, budget - cost, current, out);
        current.pop_back();
    }
}

}  // namespace detail

/**
 * All baskets with sum(r - 1/r) < 24, in lexicographic order of their
 * sorted element lists. The empty basket comes first.
 */
inline std::vector<Basket> enumerate_baskets() {
    std::vector<QuotientSingularity> pool;
    for (int r = 2; Rational(r * r - 1, r) < 24; ++r)
        for (const auto& s : singularities_of_index(r)) pool.push_back(s);
    std::vector<Basket> out;
    std::vector<QuotientSingularity> current;
    detail::extend_baskets(pool, 0, Rational(24), current, out);
    return out;
}

}  // namespace fanodb

#endif  // FANODB_SINGULARITY_HPP
