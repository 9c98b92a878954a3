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

#ifndef FANODB_VERIFY_HPP
#define FANODB_VERIFY_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "fanodb/bounds.hpp"
#include "fanodb/database.hpp"
#include "fanodb/fixtures.hpp"
#include "fanodb/hilbert.hpp"
#include "fanodb/oracle.hpp"
#include "fanodb/parallel.hpp"
#include "fanodb/weights.hpp"

namespace fanodb {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Least-level projection counts over records with no Type I projection.
struct ProjectionTallies {
    std::size_t low_codim = 0;           // codim <= 2
    std::size_t no_typeI_weights = 0;    // no edge classified Type I against target weights
    std::size_t no_typeI_numerics = 0;   // no basket-related pair in the list at all
    std::map<int, std::size_t> typeII;   // least level among records with no Type I edge
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    std::vector<CellDiff> geography_diff;
    std::vector<DiscardedSeries> discarded;
    ProjectionTallies tallies_ss;
    std::optional<ProjectionTallies> tallies_mf;  // whole kappa = 4 list, when present
    ConsistencyReport consistency;

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
    }
};

inline bool is_base(const CandidateRecord& rec) {
    return rec.codim <= kBaseCodimension &&
           (rec.weights.provenance == Provenance::Game || rec.weights.provenance == Provenance::GamePlusPolarise);
}

/// Tallies over records passing `keep`; numerical edges are looked up among all of `db`.
template <class Keep>
ProjectionTallies projection_tallies(const Database& db, Keep keep) {
    std::vector<GenusBasketPair> pairs;
    for (const auto& rec : db) pairs.push_back(rec.pair);
    const PairIndex index(pairs);
    ProjectionTallies t;
    for (const auto& rec : db) {
        if (!keep(rec)) continue;
        if (rec.codim <= kBaseCodimension) ++t.low_codim;
        bool typeI = false;
        int least = 0;
        for (const auto& e : rec.edges) {
            if (e.projection.kind == EdgeKind::TypeI)
                typeI = true;
            else if (least == 0 || e.projection.n < least)
                least = e.projection.n;
        }
        if (!typeI && least > 0) ++t.typeII[least];
        if (is_base(rec)) continue;
        if (!typeI) ++t.no_typeI_weights;
        if (typeI_edges(rec.pair, index).empty()) ++t.no_typeI_numerics;
    }
    return t;
}

/// Re-derives, for every propagated record, the weights implied by each Type I edge.
inline ConsistencyReport consistency_of(const Database& db) {
    std::map<int, const CandidateRecord*> by_key;
    for (const auto& rec : db) by_key[rec.key] = &rec;
    ConsistencyReport rep;
    for (std::size_t i = 0; i < db.size(); ++i) {
        const auto& rec = db[i];
        if (is_base(rec)) {
            ++rep.base;
            continue;
        }
        std::set<std::vector<int>> derived;
        std::size_t count = 0;
        for (const auto& e : rec.edges) {
            if (e.projection.kind != EdgeKind::TypeI) continue;
            derived.insert(unprojected_weights(by_key.at(e.target_key)->weights.weights, e.projection));
            ++count;
        }
        if (count == 0) continue;
        ++rep.typeI_assigned;
        if (count > 1) ++rep.typeI_multiply_derived;
        if (derived.size() > 1) {
            ++rep.typeI_disagreements;
            rep.flagged.push_back(i);
        }
    }
    return rep;
}

namespace detail {

inline std::string count_detail(long got, long want) { return std::to_string(got) + " (expected " + std::to_string(want) + ")"; }

}  // namespace detail

/**
 * Runs every check that can be made from a generated file plus the
 * reference fixtures. A kappa = 3 file skips the checks that need the
 * kappa = 4 records.
 */
inline VerificationReport verify(const Database& db, const ReferenceTable& ref, unsigned threads = default_threads()) {
    VerificationReport rep;
    auto check = [&](std::string name, bool ok, std::string detail) {
        rep.checks.push_back({std::move(name), ok, std::move(detail)});
    };
    using detail::count_detail;
    const bool full = std::any_of(db.begin(), db.end(), [](const auto& r) { return r.pair.kappa_class == KappaClass::MFOnly; });
    const long n_ss = std::count_if(db.begin(), db.end(), [](const auto& r) { return r.pair.kappa_class == KappaClass::Semistable; });

    // Baskets and pairs.
    const long baskets = static_cast<long>(enumerate_baskets().size());
    check("basket_count", baskets == ref.constant("basket_count"), count_detail(baskets, ref.constant("basket_count")));
    const long v3 = static_cast<long>(viable_baskets(KappaBound::Three).size());
    const long v4 = static_cast<long>(viable_baskets(KappaBound::Four).size());
    check("viable_baskets", v3 == ref.constant("viable_baskets_k3") && v4 == ref.constant("viable_baskets_k4"),
          "kappa 3: " + count_detail(v3, ref.constant("viable_baskets_k3")) + "; kappa 4: " +
              count_detail(v4, ref.constant("viable_baskets_k4")) + "; g_max >= -2 literally: " +
              std::to_string(count_baskets_gmax_at_least_minus2(KappaBound::Three)) + " / " +
              std::to_string(count_baskets_gmax_at_least_minus2(KappaBound::Four)));

    const auto pairs4 = enumerate_pairs(KappaBound::Four);
    const long p4 = static_cast<long>(pairs4.size());
    const long p3 = std::count_if(pairs4.begin(), pairs4.end(), [](const auto& p) { return p.kappa_class == KappaClass::Semistable; });
    std::vector<std::optional<int>> runs(pairs4.size());
    parallel_for(pairs4.size(), threads, [&](std::size_t i) { runs[i] = nonreduced_run(hilbert_series(pairs4[i])); });
    for (std::size_t i = 0; i < pairs4.size(); ++i)
        if (runs[i]) rep.discarded.push_back({pairs4[i], *runs[i]});
    const bool discarded_ok =
        static_cast<long>(rep.discarded.size()) == ref.constant("discarded") &&
        std::all_of(rep.discarded.begin(), rep.discarded.end(), [](const DiscardedSeries& d) {
            return d.pair.kappa_class == KappaClass::Semistable && (d.run == 2 || d.run == 4);
        });
    check("pair_counts", p3 == ref.constant("pairs_k3") && p4 == ref.constant("pairs_k4"),
          "kappa 3: " + count_detail(p3, ref.constant("pairs_k3")) + "; kappa 4: " + count_detail(p4, ref.constant("pairs_k4")));
    check("discarded_series", discarded_ok, std::to_string(rep.discarded.size()) + " discarded, all semistable with run 2 or 4");
    check("semistable_records", n_ss == ref.constant("series_ss"), count_detail(n_ss, ref.constant("series_ss")));
    if (full)
        check("kappa4_records", static_cast<long>(db.size()) == ref.constant("series_mf"),
              count_detail(static_cast<long>(db.size()), ref.constant("series_mf")));

    // Record-level invariants.
    std::vector<char> fe(db.size()), rec_ok(db.size());
    parallel_for(db.size(), threads, [&](std::size_t i) {
        const auto& r = db[i];
        fe[i] = functional_equation_holds(r.series.closed_form);
        bool ok = r.degree == anticanonical_degree(r.pair.genus, r.pair.basket) && r.codim == codimension(r.weights) &&
                  r.numerator.exact;
        if (ok) ok = r.numerator.numerator == hilbert_numerator(r.series, r.weights.weights).numerator;
        rec_ok[i] = ok;
    });
    const long fe_fail = std::count(fe.begin(), fe.end(), 0);
    const long rec_fail = std::count(rec_ok.begin(), rec_ok.end(), 0);
    check("functional_equation", fe_fail == 0, std::to_string(db.size() - fe_fail) + " of " + std::to_string(db.size()) + " hold");
    check("record_invariants", rec_fail == 0, std::to_string(rec_fail) + " records with a bad degree, codim or numerator");
    {
        std::set<std::pair<std::string, std::string>> seen;
        for (const auto& r : db)
            seen.emplace(to_sparse_string(r.series.closed_form.numer()), to_sparse_string(r.series.closed_form.denom()));
        check("distinct_series", seen.size() == db.size(), std::to_string(seen.size()) + " distinct of " + std::to_string(db.size()));
    }

    // Published numerators.
    {
        GenusBasketPair p{2, parse_basket("2,1;3,1"), KappaClass::Semistable};
        const auto h = hilbert_series(p);
        const auto exact = hilbert_numerator(h, {1, 1, 1, 1, 2, 2, 3});
        const auto trunc = hilbert_numerator(h, {1, 1, 1, 1, 2, 2});
        const std::string e = exact.exact ? to_display_string(exact.numerator) : "";
        const std::string t = trunc.exact ? "" : to_display_string(trunc.truncated.truncated(10).as_polynomial());
        check("published_numerators",
              e == "1 - t^3 - 3t^4 + 3t^6 + t^7 - t^10" && t == "1 - 3t^4 + 3t^6 - 2t^7 + 3t^9 - 3t^10", e + " | " + t);
    }

    // Weighted projective spaces.
    std::map<std::pair<int, std::string>, const CandidateRecord*> by_pair;
    for (const auto& r : db) by_pair[{r.pair.genus, to_string(r.pair.basket)}] = &r;
    {
        bool deg_ok = true, oracle_ok = true, w_ok = true;
        std::string bad;
        for (const auto& row : ref.wps) {
            const oracle::WpsDescription w{row.weights};
            const auto p = oracle::wps_pair(w);
            const Rational d = anticanonical_degree(p.genus, p.basket);
            if (d != row.degree || d != oracle::wps_degree(w) || p.genus != row.genus) deg_ok = false;
            if (!(oracle::wps_series(w, 20) == expand(hilbert_series(p).closed_form, 20))) oracle_ok = false;
            auto it = by_pair.find({p.genus, to_string(p.basket)});
            if (it == by_pair.end() || it->second->weights.weights != row.ambient || it->second->codim != row.codim) {
                w_ok = false;
                bad += " " + compress_multiset(std::vector<int>(row.weights.begin(), row.weights.end()));
            }
        }
        check("wps_degrees", deg_ok, "seven rows against the fixture and (sum w)^3 / prod w");
        check("wps_oracle_series", oracle_ok, "monomial counts against the plurigenus formula to order 20");
        check("wps_weights", w_ok, w_ok ? "seven rows match" : "mismatch:" + bad);
    }

    // Geography.
    const auto geo = geography(db);
    rep.geography_diff = diff(geo, ref.figure1);
    {
        long low = 0, total = 0;
        for (const auto& c : rep.geography_diff) {
            const long d = std::abs(c.generated - c.reference);
            total += d;
            if (c.codim <= 3) low += d;
        }
        check("geography_rows_1_3", low == 0 && geo.row_sum(1) == ref.constant("codim1") && geo.row_sum(2) == ref.constant("codim2") &&
                                         geo.row_sum(3) == ref.constant("codim3"),
              "row sums " + std::to_string(geo.row_sum(1)) + "/" + std::to_string(geo.row_sum(2)) + "/" +
                  std::to_string(geo.row_sum(3)) + "; whole-table diff " + std::to_string(total) + " in " +
                  std::to_string(rep.geography_diff.size()) + " cells (reported, not enforced)");
        bool corner_ok = true;
        for (const auto& c : ref.corner) corner_ok = corner_ok && geo.at(c.codim, c.genus) == c.count;
        for (int c = 31; c <= kCodimMax; ++c)
            for (int g = 33; g <= kGenusMax; ++g) {
                const bool listed = std::any_of(ref.corner.begin(), ref.corner.end(),
                                                [&](const CornerCell& x) { return x.codim == c && x.genus == g; });
                if (!listed && geo.at(c, g) != 0) corner_ok = false;
            }
        check("corner_cells", corner_ok, "seven cells of the high-genus corner");
    }

    // Projections.
    const auto is_ss = [](const CandidateRecord& r) { return r.pair.kappa_class == KappaClass::Semistable; };
    rep.tallies_ss = projection_tallies(db, is_ss);
    if (full) rep.tallies_mf = projection_tallies(db, [](const CandidateRecord&) { return true; });
    {
        const auto& t = rep.tallies_ss;
        auto at = [&](int n) { return static_cast<long>(t.typeII.count(n) ? t.typeII.at(n) : 0); };
        const bool ok = static_cast<long>(t.low_codim) == ref.constant("codim_le2") &&
                        (static_cast<long>(t.no_typeI_weights) == ref.constant("no_typeI") ||
                         static_cast<long>(t.no_typeI_numerics) == ref.constant("no_typeI")) &&
                        at(1) == ref.constant("typeII_1") && at(2) == ref.constant("typeII_2") &&
                        at(3) == ref.constant("typeII_3") && at(4) == ref.constant("typeII_4");
        check("projection_tallies", ok,
              "codim<=2 " + std::to_string(t.low_codim) + "; no Type I: " + std::to_string(t.no_typeI_weights) +
                  " (weights) / " + std::to_string(t.no_typeI_numerics) + " (basket numerics); Type II 1..4: " +
                  std::to_string(at(1)) + "/" + std::to_string(at(2)) + "/" + std::to_string(at(3)) + "/" + std::to_string(at(4)));
    }
    rep.consistency = consistency_of(db);
    check("typeI_consistency", rep.consistency.all_consistent(),
          std::to_string(rep.consistency.typeI_multiply_derived) + " multiply derived, " +
              std::to_string(rep.consistency.typeI_disagreements) + " disagreements");
    {
        std::map<int, const CandidateRecord*> by_key;
        for (const auto& r : db) by_key[r.key] = &r;
        std::vector<const RecordEdge*> edges;
        std::vector<const CandidateRecord*> sources;
        for (const auto& r : db)
            for (const auto& e : r.edges)
                if (e.projection.kind == EdgeKind::TypeI) edges.push_back(&e), sources.push_back(&r);
        std::vector<char> literal(edges.size()), shifted(edges.size());
        parallel_for(edges.size(), threads, [&](std::size_t i) {
            const auto& e = edges[i]->projection;
            const auto lhs = sources[i]->series.closed_form - by_key.at(edges[i]->target_key)->series.closed_form;
            literal[i] = rf_eq(lhs, typeI_increment(e.a, e.b));
            shifted[i] = rf_eq(lhs, unprojection_increment(e.a, e.b));
        });
        const auto n = static_cast<long>(edges.size());
        const long lit = std::count(literal.begin(), literal.end(), 1);
        const long sh = std::count(shifted.begin(), shifted.end(), 1);
        check("typeI_increment", lit == n,
              std::to_string(lit) + " of " + std::to_string(n) + " Type I edges give t^(r+1)/(...); " + std::to_string(sh) +
                  " give t^r/(...)");
        check("unprojection_increment", sh == n,
              "P_Y - P_X = t^r/((1-t)(1-t^a)(1-t^b)(1-t^r)) on " + std::to_string(sh) + " of " + std::to_string(n) + " Type I edges");
    }

    // Index 2.
    {
        QueryFilter f;
        f.only_index = 2;
        f.kappa_class = KappaClass::Semistable;
        const long ss = static_cast<long>(query(db, f).size());
        f.genus_min = 2;
        const long ss2 = static_cast<long>(query(db, f).size());
        bool ok = ss == ref.constant("index2_ss_pairs") && ss2 == ref.constant("index2_ss_g2");
        std::string detail = "semistable " + std::to_string(ss) + ", genus >= 2 " + std::to_string(ss2);
        if (full) {
            QueryFilter m;
            m.only_index = 2;
            const long all = static_cast<long>(query(db, m).size());
            m.genus_min = 2;
            const long all2 = static_cast<long>(query(db, m).size());
            ok = ok && all == ref.constant("index2_mf_pairs") && all2 == ref.constant("index2_mf_g2");
            detail += "; kappa 4 " + std::to_string(all) + ", genus >= 2 " + std::to_string(all2);
        }
        check("index2_query", ok, detail);
    }
    return rep;
}

inline nlohmann::ordered_json to_json(const ProjectionTallies& t) {
    nlohmann::ordered_json j;
    j["codim_le2"] = t.low_codim;
    j["no_typeI_weight_sublist"] = t.no_typeI_weights;
    j["no_typeI_basket_numerics"] = t.no_typeI_numerics;
    nlohmann::ordered_json levels;
    for (const auto& [n, c] : t.typeII) levels[std::to_string(n)] = c;
    j["least_typeII_level"] = levels;
    return j;
}

inline nlohmann::ordered_json to_json(const VerificationReport& rep) {
    nlohmann::ordered_json j;
    j["passed"] = rep.passed();
    auto checks = nlohmann::ordered_json::array();
    for (const auto& c : rep.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    j["checks"] = checks;
    auto cells = nlohmann::ordered_json::array();
    for (const auto& c : rep.geography_diff)
        cells.push_back({{"codim", c.codim}, {"genus", c.genus}, {"generated", c.generated}, {"reference", c.reference}});
    j["geography_diff"] = cells;
    auto disc = nlohmann::ordered_json::array();
    for (const auto& d : rep.discarded)
        disc.push_back({{"genus", d.pair.genus},
                        {"basket", to_string(d.pair.basket)},
                        {"kappa_class", to_string(d.pair.kappa_class)},
                        {"run", d.run},
                        {"series", to_display_string(hilbert_series(d.pair).closed_form)}});
    j["discarded"] = disc;
    j["tallies_ss"] = to_json(rep.tallies_ss);
    if (rep.tallies_mf) j["tallies_kappa4"] = to_json(*rep.tallies_mf);
    j["typeI_consistency"] = {{"assigned", rep.consistency.typeI_assigned},
                              {"multiply_derived", rep.consistency.typeI_multiply_derived},
                              {"disagreements", rep.consistency.typeI_disagreements}};
    return j;
}

}  // namespace fanodb

#endif  // FANODB_VERIFY_HPP
