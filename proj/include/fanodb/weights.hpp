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

#ifndef FANODB_WEIGHTS_HPP
#define FANODB_WEIGHTS_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fanodb/bounds.hpp"
#include "fanodb/errors.hpp"
#include "fanodb/hilbert.hpp"
#include "fanodb/polynomial.hpp"
#include "fanodb/power_series.hpp"
#include "fanodb/rational_function.hpp"
#include "fanodb/singularity.hpp"

namespace fanodb {

enum class Provenance { Game, GamePlusPolarise, TypeIAnsatz, TypeIIAnsatz };

inline std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::Game: return "game";
        case Provenance::GamePlusPolarise: return "game+polarise";
        case Provenance::TypeIAnsatz: return "typeI";
        case Provenance::TypeIIAnsatz: return "typeII";
    }
    return "?";
}

inline Provenance provenance_from_string(const std::string& s) {
    if (s == "game") return Provenance::Game;
    if (s == "game+polarise") return Provenance::GamePlusPolarise;
    if (s == "typeI") return Provenance::TypeIAnsatz;
    if (s == "typeII") return Provenance::TypeIIAnsatz;
    throw ParseError("unknown provenance '" + s + "'");
}

/**
 * Estimated ambient weights of an anticanonical embedding.
 *
 * `stop_degree` is the first degree at which the graded ring game met a
 * negative coefficient (a forced relation), or -1 when it never did.
 * `typeII_n` is set only for TypeIIAnsatz.
 */
struct WeightAssignment {
    std::vector<int> weights;
    Provenance provenance = Provenance::Game;
    int stop_degree = -1;
    int typeII_n = 0;

    friend bool operator==(const WeightAssignment&, const WeightAssignment&) = default;
};

/// Number of ambient weights minus 4.
inline int codimension(const std::vector<int>& weights) {
    if (weights.size() < 4) throw Underdetermined(std::to_string(weights.size()) + " weights cannot carry a 3-fold");
    return static_cast<int>(weights.size()) - 4;
}
inline int codimension(const WeightAssignment& w) { return codimension(w.weights); }

/// Whether `sub` is a sub-multiset of `weights`; both sorted ascending.
inline bool contains_submultiset(const std::vector<int>& weights, std::vector<int> sub) {
    std::sort(sub.begin(), sub.end());
    return std::includes(weights.begin(), weights.end(), sub.begin(), sub.end());
}

namespace detail {

struct GameRun {
    std::vector<int> weights;
    SeriesPrefix running;  // series times prod(1 - t^w) over the weights found
    int stop_degree = -1;
};

inline GameRun play(const SeriesPrefix& series) {
    if (series[0] != 1) throw NotUnital("constant coefficient is " + series[0].get_str());
    GameRun run{{}, series, -1};
    for (int i = 1; i <= series.order(); ++i) {
        const Integer c = run.running[i];
        if (c < 0) {
            run.stop_degree = i;
            break;
        }
        if (c == 0) continue;
        const long m = c.get_si();
        Polynomial factor(1);
        for (long k = 0; k < m; ++k) {
            factor *= Polynomial::one_minus_t_pow(i);
            run.weights.push_back(i);
        }
        run.running = multiply(run.running, factor);
    }
    return run;
}

/// Degree of the first positive coefficient above `from`, or -1.
inline int next_positive(const SeriesPrefix& s, int from) {
    for (int d = std::max(from + 1, 1); d <= s.order(); ++d)
        if (s[d] > 0) return d;
    return -1;
}

/// A prefix looks polynomial when its top half vanishes.
inline bool prefix_looks_polynomial(const SeriesPrefix& s) {
    for (int d = s.order() / 2 + 1; d <= s.order(); ++d)
        if (s[d] != 0) return false;
    return true;
}

inline bool exact_numerator(const RationalFunction& f, const std::vector<int>& weights) {
    return divides(f.denom(), f.numer() * weight_product(weights));
}

}  // namespace detail

inline constexpr std::size_t kMinWeights = 4;

/**
 * Graded ring game on a series prefix: adjoin c_i generators of degree i
 * while the running coefficient c_i is nonnegative, stopping at the first
 * negative one. If fewer than four weights emerge, one speculative weight is
 * tried at the next degree with a positive coefficient and kept when it
 * leaves a polynomial numerator.
 */
inline WeightAssignment graded_ring_game(const SeriesPrefix& series) {
    detail::GameRun run = detail::play(series);
    if (run.weights.size() < kMinWeights) {
        const int d = detail::next_positive(run.running, run.stop_degree);
        if (d > 0) {
            SeriesPrefix trial = multiply(run.running, Polynomial::one_minus_t_pow(d));
            if (detail::prefix_looks_polynomial(trial)) run.weights.push_back(d);
        }
    }
    std::sort(run.weights.begin(), run.weights.end());
    return {run.weights, Provenance::Game, run.stop_degree, 0};
}

/// As above on a closed form; the expansion order grows until the game halts.
inline WeightAssignment graded_ring_game(const RationalFunction& series, int initial_order = 64) {
    constexpr int kMaxOrder = 4096;
    for (int order = initial_order;; order *= 2) {
        const SeriesPrefix prefix = expand(series, order);
        detail::GameRun run = detail::play(prefix);
        const bool halted = run.stop_degree > 0;
        const bool finished = !halted && detail::exact_numerator(series, run.weights);
        if (!halted && !finished && order < kMaxOrder) continue;
        if (run.weights.size() < kMinWeights) {
            const int d = detail::next_positive(run.running, run.stop_degree);
            if (d > 0) {
                auto trial = run.weights;
                trial.push_back(d);
                if (detail::exact_numerator(series, trial)) run.weights = std::move(trial);
            }
        }
        std::sort(run.weights.begin(), run.weights.end());
        return {run.weights, Provenance::Game, run.stop_degree, 0};
    }
}

/**
 * Ensures each basket index r divides some weight, so the ambient space has a
 * stratum with stabiliser containing Z/r. Indices are handled from largest to
 * smallest, since a new weight may also cover smaller indices.
 */
inline WeightAssignment polarise(WeightAssignment w, const Basket& basket) {
    for (int r : basket.indices_descending()) {
        const bool covered = std::any_of(w.weights.begin(), w.weights.end(), [r](int a) { return a % r == 0; });
        if (covered) continue;
        w.weights.push_back(r);
        w.provenance = Provenance::GamePlusPolarise;
    }
    std::sort(w.weights.begin(), w.weights.end());
    return w;
}

/// Game followed by polarisation.
inline WeightAssignment estimate_weights(const HilbertSeries& h) {
    return polarise(graded_ring_game(h.closed_form), h.source.basket);
}

// ---------------------------------------------------------------------------
// Projections

struct PairKey {
    int genus = 0;
    Basket basket;

    friend auto operator<=>(const PairKey&, const PairKey&) = default;
    friend bool operator==(const PairKey&, const PairKey&) = default;
};

inline PairKey key_of(const GenusBasketPair& p) { return {p.genus, p.basket}; }

/// Lookup from (genus, basket) to a position in some list of pairs.
class PairIndex {
   public:
    PairIndex() = default;
    explicit PairIndex(std::span<const GenusBasketPair> pairs) {
        for (std::size_t i = 0; i < pairs.size(); ++i) positions_.emplace(key_of(pairs[i]), i);
    }
    std::optional<std::size_t> find(const PairKey& key) const {
        auto it = positions_.find(key);
        if (it == positions_.end()) return std::nullopt;
        return it->second;
    }
    std::size_t size() const { return positions_.size(); }

   private:
    std::map<PairKey, std::size_t> positions_;
};

enum class EdgeKind { TypeI, TypeII };

/**
 * Projection from the point 1/r(1,a,b), r = a + b, of the source Y to the
 * target X. For TypeII, `n` is the level and `missing` the polarising weight
 * c in {1, a, b} replaced by (n+1)c among the weights of X.
 */
struct ProjectionEdge {
    EdgeKind kind = EdgeKind::TypeI;
    int n = 0;
    int missing = 0;
    QuotientSingularity center;
    int a = 1;
    int b = 1;
    PairKey source;
    PairKey target;

    int r() const { return center.r; }
    friend bool operator==(const ProjectionEdge&, const ProjectionEdge&) = default;
};

/// B_X = B_Y - {1/r(1,a,b)} + {1/a(1,b,-b) if a > 1} + {1/b(1,a,-a) if b > 1}.
inline Basket projected_basket(const Basket& source, const QuotientSingularity& center) {
    Basket out = source;
    if (!out.erase_one(center)) throw Error("center " + to_string(center) + " is not in the basket");
    const int a = center.a;
    const int b = center.r - center.a;
    if (a > 1) out.insert(canonicalize(a, b));
    if (b > 1) out.insert(canonicalize(b, a));
    return out;
}

/**
 * Projections of `pair` allowed by the basket relation alone: one per
 * distinct singularity of the basket whose projected pair (same genus) is in
 * `index`. All are reported with kind TypeI; weights are not consulted.
 */
inline std::vector<ProjectionEdge> typeI_edges(const GenusBasketPair& pair, const PairIndex& index) {
    std::vector<ProjectionEdge> out;
    const auto& elems = pair.basket.elements();
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (i > 0 && elems[i] == elems[i - 1]) continue;
        const auto& s = elems[i];
        PairKey target{pair.genus, projected_basket(pair.basket, s)};
        if (!index.find(target)) continue;
        out.push_back({EdgeKind::TypeI, 0, 0, s, s.a, s.r - s.a, key_of(pair), std::move(target)});
    }
    return out;
}

/// Kind of a numerical projection once the target's weights are known.
struct EdgeClass {
    EdgeKind kind = EdgeKind::TypeI;
    int n = 0;
    int missing = 0;
};

/**
 * TypeI when {1, a, b} is a sub-multiset of the target weights. Otherwise
 * TypeII(n) for the least n >= 1 such that, for some c in {1, a, b}, the
 * other two polarising weights together with (n+1)c form a sub-multiset.
 */
inline std::optional<EdgeClass> classify(int a, int b, const std::vector<int>& target_weights) {
    if (contains_submultiset(target_weights, {1, a, b})) return EdgeClass{EdgeKind::TypeI, 0, 0};
    if (target_weights.empty()) return std::nullopt;
    const int top = target_weights.back();
    std::optional<EdgeClass> best;
    const int polar[3] = {1, a, b};
    for (int ci = 0; ci < 3; ++ci) {
        const int c = polar[ci];
        std::vector<int> others;
        for (int j = 0; j < 3; ++j)
            if (j != ci) others.push_back(polar[j]);
        if (!contains_submultiset(target_weights, others)) continue;
        for (int n = 1; (n + 1) * c <= top; ++n) {
            if (best && n >= best->n) break;
            auto sub = others;
            sub.push_back((n + 1) * c);
            if (contains_submultiset(target_weights, sub)) {
                best = EdgeClass{EdgeKind::TypeII, n, c};
                break;
            }
        }
    }
    return best;
}

inline ProjectionEdge with_class(ProjectionEdge e, const EdgeClass& c) {
    e.kind = c.kind;
    e.n = c.n;
    e.missing = c.missing;
    return e;
}

/// Weights of Y predicted from X: + {r} for TypeI, + {r, r+c, ..., r+nc} for TypeII(n).
inline std::vector<int> unprojected_weights(const std::vector<int>& target_weights, const ProjectionEdge& e) {
    std::vector<int> w = target_weights;
    if (e.kind == EdgeKind::TypeI) {
        w.push_back(e.r());
    } else {
        for (int j = 0; j <= e.n; ++j) w.push_back(e.r() + j * e.missing);
    }
    std::sort(w.begin(), w.end());
    return w;
}

/// Numerical projections of `pair` that are TypeII(n) against the given target weights.
inline std::vector<ProjectionEdge> typeII_edges(const GenusBasketPair& pair, const PairIndex& index,
                                                std::span<const WeightAssignment> weights, int n) {
    std::vector<ProjectionEdge> out;
    for (auto& e : typeI_edges(pair, index)) {
        const auto pos = index.find(e.target);
        const auto cls = classify(e.a, e.b, weights[*pos].weights);
        if (cls && cls->kind == EdgeKind::TypeII && cls->n == n) out.push_back(with_class(e, *cls));
    }
    return out;
}

/// Agreement of weights derived along different projections.
struct ConsistencyReport {
    std::size_t typeI_assigned = 0;
    std::size_t typeI_multiply_derived = 0;
    std::size_t typeI_disagreements = 0;
    std::size_t typeII_assigned = 0;
    std::size_t typeII_multiply_derived = 0;
    std::size_t typeII_disagreements = 0;
    std::size_t base = 0;
    std::size_t fallback = 0;
    std::vector<std::size_t> flagged;  // positions with disagreeing derivations

    bool all_consistent() const { return typeI_disagreements == 0 && typeII_disagreements == 0; }
};

struct PropagationResult {
    std::vector<WeightAssignment> weights;
    ConsistencyReport report;
};

/// Pairs whose game-and-polarise estimate has codimension at most this are taken as given.
inline constexpr int kBaseCodimension = 2;

/**
 * Assigns weights to every pair. Pairs whose estimate lies in codimension
 * <= 2 keep it. Every other pair Y takes the weights of a TypeI projection
 * target X plus {r}; failing that, the least-level TypeII projection; failing
 * that, its own estimate. Targets always have a strictly smaller
 * sum(r - 1/r), so pairs are visited in increasing order of that sum.
 */
inline PropagationResult propagate(std::span<const GenusBasketPair> pairs, std::span<const WeightAssignment> estimates,
                                   const PairIndex& index) {
    const std::size_t n = pairs.size();
    PropagationResult out;
    out.weights.resize(n);
    std::vector<char> assigned(n, 0);

    std::vector<Rational> c2(n);
    for (std::size_t i = 0; i < n; ++i) c2[i] = c2_contribution(pairs[i].basket);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return c2[x] < c2[y]; });

    auto& rep = out.report;
    for (std::size_t i : order) {
        const auto& est = estimates[i];
        if (est.weights.size() >= kMinWeights && codimension(est) <= kBaseCodimension) {
            out.weights[i] = est;
            assigned[i] = 1;
            ++rep.base;
            continue;
        }
        std::vector<std::vector<int>> typeI;
        std::vector<std::pair<int, std::vector<int>>> typeII;
        for (const auto& e : typeI_edges(pairs[i], index)) {
            const std::size_t t = *index.find(e.target);
            if (!assigned[t]) throw CycleDetected("target of a projection from " + to_string(e.center) + " is unassigned");
            const auto& tw = out.weights[t].weights;
            const auto cls = classify(e.a, e.b, tw);
            if (!cls) continue;
            const auto w = unprojected_weights(tw, with_class(e, *cls));
            if (cls->kind == EdgeKind::TypeI)
                typeI.push_back(w);
            else
                typeII.emplace_back(cls->n, w);
        }
        WeightAssignment chosen;
        chosen.stop_degree = est.stop_degree;
        if (!typeI.empty()) {
            ++rep.typeI_assigned;
            if (typeI.size() > 1) ++rep.typeI_multiply_derived;
            const bool agree = std::all_of(typeI.begin(), typeI.end(), [&](const auto& w) { return w == typeI.front(); });
            if (!agree) {
                ++rep.typeI_disagreements;
                rep.flagged.push_back(i);
            }
            chosen.weights = typeI.front();
            chosen.provenance = Provenance::TypeIAnsatz;
        } else if (!typeII.empty()) {
            int level = typeII.front().first;
            for (const auto& [lv, w] : typeII) level = std::min(level, lv);
            const std::vector<int>* first = nullptr;
            std::size_t count = 0;
            bool agree = true;
            for (const auto& [lv, w] : typeII) {
                if (lv != level) continue;
                ++count;
                if (!first)
                    first = &w;
                else if (w != *first)
                    agree = false;
            }
            ++rep.typeII_assigned;
            if (count > 1) ++rep.typeII_multiply_derived;
            if (!agree) {
                ++rep.typeII_disagreements;
                rep.flagged.push_back(i);
            }
            chosen.weights = *first;
            chosen.provenance = Provenance::TypeIIAnsatz;
            chosen.typeII_n = level;
        } else {
            chosen = est;
            ++rep.fallback;
        }
        out.weights[i] = std::move(chosen);
        assigned[i] = 1;
    }
    return out;
}

}  // namespace fanodb

#endif  // FANODB_WEIGHTS_HPP
