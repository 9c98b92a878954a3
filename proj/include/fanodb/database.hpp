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

#ifndef FANODB_DATABASE_HPP
#define FANODB_DATABASE_HPP

#include <algorithm>
#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fanodb/bounds.hpp"
#include "fanodb/errors.hpp"
#include "fanodb/hilbert.hpp"
#include "fanodb/parallel.hpp"
#include "fanodb/singularity.hpp"
#include "fanodb/weights.hpp"

namespace fanodb {

/// A projection as stored with its source record.
struct RecordEdge {
    ProjectionEdge projection;
    int target_key = 0;

    friend bool operator==(const RecordEdge&, const RecordEdge&) = default;
};

inline std::string edge_kind_string(const ProjectionEdge& e) {
    return e.kind == EdgeKind::TypeI ? "I" : "II:" + std::to_string(e.n);
}

struct CandidateRecord {
    int key = 0;
    GenusBasketPair pair;
    Rational degree;
    HilbertSeries series;
    WeightAssignment weights;
    int codim = 0;
    HilbertNumerator numerator;
    std::vector<RecordEdge> edges;
};

/// Records in canonical order: (genus, basket string) ascending.
using Database = std::vector<CandidateRecord>;

inline bool canonical_less(const GenusBasketPair& x, const GenusBasketPair& y) {
    if (x.genus != y.genus) return x.genus < y.genus;
    return to_string(x.basket) < to_string(y.basket);
}

/// Series discarded by the reduced filter, with the length of their run of ones.
struct DiscardedSeries {
    GenusBasketPair pair;
    int run = 0;
};

struct GenerationResult {
    Database records;
    std::vector<DiscardedSeries> discarded;
    ConsistencyReport consistency;
    std::size_t pairs_before_filter = 0;
};

namespace detail {

/// Weights and edges for a list already in canonical order with keys assigned.
inline ConsistencyReport assign_weights(Database& db, unsigned threads) {
    const std::size_t n = db.size();
    std::vector<GenusBasketPair> pairs(n);
    std::vector<WeightAssignment> estimates(n);
    for (std::size_t i = 0; i < n; ++i) pairs[i] = db[i].pair;
    parallel_for(n, threads, [&](std::size_t i) { estimates[i] = estimate_weights(db[i].series); });

    const PairIndex index(pairs);
    PropagationResult prop = propagate(pairs, estimates, index);

    for (std::size_t i = 0; i < n; ++i) {
        db[i].weights = std::move(prop.weights[i]);
        db[i].codim = codimension(db[i].weights);
    }
    parallel_for(n, threads, [&](std::size_t i) {
        auto& rec = db[i];
        rec.numerator = hilbert_numerator(rec.series, rec.weights.weights);
        for (const auto& e : typeI_edges(rec.pair, index)) {
            const std::size_t t = *index.find(e.target);
            const auto cls = classify(e.a, e.b, db[t].weights.weights);
            if (cls) rec.edges.push_back({with_class(e, *cls), db[t].key});
        }
    });
    return prop.report;
}

}  // namespace detail

/**
 * Full pipeline. Keys are positions in the kappa = 4 list, so a kappa = 3
 * run still computes every kappa = 4 series before restricting.
 */
inline GenerationResult generate(KappaBound k, unsigned threads = default_threads()) {
    const auto pairs = enumerate_pairs(KappaBound::Four);
    std::vector<HilbertSeries> series(pairs.size());
    std::vector<std::optional<int>> runs(pairs.size());
    parallel_for(pairs.size(), threads, [&](std::size_t i) {
        series[i] = hilbert_series(pairs[i]);
        runs[i] = nonreduced_run(series[i]);
    });

    GenerationResult out;
    Database all;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const bool in_list = k == KappaBound::Four || pairs[i].kappa_class == KappaClass::Semistable;
        if (in_list) ++out.pairs_before_filter;
        if (runs[i]) {
            if (in_list) out.discarded.push_back({pairs[i], *runs[i]});
            continue;
        }
        CandidateRecord rec;
        rec.pair = pairs[i];
        rec.degree = anticanonical_degree(pairs[i].genus, pairs[i].basket);
        rec.series = std::move(series[i]);
        all.push_back(std::move(rec));
    }
    std::stable_sort(all.begin(), all.end(),
                     [](const CandidateRecord& x, const CandidateRecord& y) { return canonical_less(x.pair, y.pair); });
    for (std::size_t i = 0; i < all.size(); ++i) all[i].key = static_cast<int>(i + 1);

    if (k == KappaBound::Four) {
        out.records = std::move(all);
    } else {
        for (auto& rec : all)
            if (rec.pair.kappa_class == KappaClass::Semistable) out.records.push_back(std::move(rec));
    }
    out.consistency = detail::assign_weights(out.records, threads);
    return out;
}

// ---------------------------------------------------------------------------
// JSONL

inline std::string provenance_string(const WeightAssignment& w) {
    if (w.provenance == Provenance::TypeIIAnsatz) return "typeII:" + std::to_string(w.typeII_n);
    return to_string(w.provenance);
}

inline nlohmann::ordered_json to_json(const CandidateRecord& rec) {
    nlohmann::ordered_json j;
    j["key"] = rec.key;
    j["genus"] = rec.pair.genus;
    j["basket"] = to_string(rec.pair.basket);
    j["degree"] = to_string(rec.degree);
    j["kappa_class"] = to_string(rec.pair.kappa_class);
    j["weights"] = rec.weights.weights;
    j["codim"] = rec.codim;
    auto terms = nlohmann::ordered_json::array();
    const Polynomial p = rec.numerator.exact ? rec.numerator.numerator : rec.numerator.truncated.as_polynomial();
    for (const auto& [d, c] : p.terms()) terms.push_back({d, c.get_str()});
    j["numerator"] = std::move(terms);
    auto edges = nlohmann::ordered_json::array();
    for (const auto& e : rec.edges) {
        nlohmann::ordered_json ej;
        ej["kind"] = edge_kind_string(e.projection);
        ej["r"] = e.projection.r();
        ej["a"] = e.projection.a;
        ej["b"] = e.projection.b;
        ej["target_key"] = e.target_key;
        edges.push_back(std::move(ej));
    }
    j["edges"] = std::move(edges);
    j["numerator_exact"] = rec.numerator.exact;
    j["provenance"] = provenance_string(rec.weights);
    j["stop_degree"] = rec.weights.stop_degree;
    return j;
}

inline void write_jsonl(std::ostream& os, const Database& db) {
    for (const auto& rec : db) os << to_json(rec).dump() << '\n';
}

inline std::string to_jsonl(const Database& db) {
    std::ostringstream os;
    write_jsonl(os, db);
    return os.str();
}

namespace detail {

template <class T>
T field(const nlohmann::json& j, const char* name) {
    if (!j.contains(name)) throw ParseError(std::string("missing field '") + name + "'");
    try {
        return j.at(name).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("field '") + name + "': " + e.what());
    }
}

inline KappaClass kappa_class_from_string(const std::string& s) {
    if (s == "ss") return KappaClass::Semistable;
    if (s == "mf") return KappaClass::MFOnly;
    throw ParseError("unknown kappa_class '" + s + "'");
}

inline EdgeClass edge_class_from_string(const std::string& s) {
    if (s == "I") return {EdgeKind::TypeI, 0, 0};
    if (s.rfind("II:", 0) == 0) return {EdgeKind::TypeII, std::stoi(s.substr(3)), 0};
    throw ParseError("unknown edge kind '" + s + "'");
}

inline void set_provenance(WeightAssignment& w, const std::string& s) {
    if (s.rfind("typeII:", 0) == 0) {
        w.provenance = Provenance::TypeIIAnsatz;
        w.typeII_n = std::stoi(s.substr(7));
        return;
    }
    w.provenance = provenance_from_string(s);
}

}  // namespace detail

/**
 * Reads one record. Fields absent from the line (series, the missing
 * polarising weight of a Type II edge) are recomputed; the target of an edge
 * is rebuilt from its center.
 */
inline CandidateRecord parse_record(const std::string& line) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    using detail::field;
    CandidateRecord rec;
    rec.key = field<int>(j, "key");
    rec.pair.genus = field<int>(j, "genus");
    rec.pair.basket = parse_basket(field<std::string>(j, "basket"));
    rec.pair.kappa_class = detail::kappa_class_from_string(field<std::string>(j, "kappa_class"));
    rec.degree = parse_rational(field<std::string>(j, "degree"));
    if (rec.degree != anticanonical_degree(rec.pair.genus, rec.pair.basket))
        throw ParseError("degree does not match genus and basket at key " + std::to_string(rec.key));
    rec.series = hilbert_series(rec.pair);
    rec.weights.weights = field<std::vector<int>>(j, "weights");
    rec.codim = field<int>(j, "codim");
    if (j.contains("provenance")) detail::set_provenance(rec.weights, field<std::string>(j, "provenance"));
    if (j.contains("stop_degree")) rec.weights.stop_degree = field<int>(j, "stop_degree");

    std::vector<std::pair<int, Integer>> terms;
    for (const auto& t : field<nlohmann::json>(j, "numerator")) {
        if (!t.is_array() || t.size() != 2) throw ParseError("numerator term must be [deg, \"coeff\"]");
        terms.emplace_back(t[0].get<int>(), parse_integer(t[1].get<std::string>()));
    }
    rec.numerator.weights = rec.weights.weights;
    rec.numerator.exact = j.contains("numerator_exact") ? field<bool>(j, "numerator_exact") : true;
    if (rec.numerator.exact) {
        rec.numerator.numerator = Polynomial::from_terms(terms);
    } else {
        rec.numerator.truncated = hilbert_numerator(rec.series, rec.weights.weights).truncated;
    }

    for (const auto& ej : field<nlohmann::json>(j, "edges")) {
        const auto cls = detail::edge_class_from_string(field<std::string>(ej, "kind"));
        const int r = field<int>(ej, "r");
        const int a = field<int>(ej, "a");
        const int b = field<int>(ej, "b");
        if (a + b != r) throw ParseError("edge with a + b != r");
        ProjectionEdge e;
        e.center = canonicalize(r, a);
        e.a = a;
        e.b = b;
        e.source = key_of(rec.pair);
        e.target = {rec.pair.genus, projected_basket(rec.pair.basket, e.center)};
        e.kind = cls.kind;
        e.n = cls.n;
        rec.edges.push_back({e, field<int>(ej, "target_key")});
    }
    return rec;
}

/// Parses a JSONL stream and restores the missing polarising weight on Type II edges.
inline Database read_jsonl(std::istream& in) {
    Database db;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            db.push_back(parse_record(line));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    std::map<int, std::size_t> by_key;
    for (std::size_t i = 0; i < db.size(); ++i) {
        if (i > 0 && db[i].key <= db[i - 1].key) throw ParseError("keys are not ascending");
        by_key[db[i].key] = i;
    }
    for (auto& rec : db) {
        for (auto& e : rec.edges) {
            auto it = by_key.find(e.target_key);
            if (it == by_key.end()) throw ParseError("edge target " + std::to_string(e.target_key) + " not present");
            const auto cls = classify(e.projection.a, e.projection.b, db[it->second].weights.weights);
            if (cls) e.projection.missing = cls->missing;
        }
    }
    return db;
}

inline Database parse_jsonl(const std::string& text) {
    std::istringstream in(text);
    return read_jsonl(in);
}

// ---------------------------------------------------------------------------
// CSV

inline void write_csv(std::ostream& os, const Database& db) {
    os << "key,genus,basket,degree,codim,weights\n";
    for (const auto& rec : db) {
        os << rec.key << ',' << rec.pair.genus << ",\"" << to_string(rec.pair.basket) << "\"," << to_string(rec.degree)
           << ',' << rec.codim << ',';
        for (std::size_t i = 0; i < rec.weights.weights.size(); ++i) os << (i ? " " : "") << rec.weights.weights[i];
        os << '\n';
    }
}

// ---------------------------------------------------------------------------
// Geography

inline constexpr int kGenusMin = -2;
inline constexpr int kGenusMax = 37;
inline constexpr int kCodimMin = 1;
inline constexpr int kCodimMax = 35;

/// Counts of semistable records by (codimension, genus).
struct GeographyTable {
    std::map<std::pair<int, int>, long> cells;

    long at(int codim, int genus) const {
        auto it = cells.find({codim, genus});
        return it == cells.end() ? 0 : it->second;
    }
    long row_sum(int codim) const {
        long s = 0;
        for (int g = kGenusMin; g <= kGenusMax; ++g) s += at(codim, g);
        return s;
    }
    long total() const {
        long s = 0;
        for (const auto& [k, v] : cells) s += v;
        return s;
    }
    friend bool operator==(const GeographyTable&, const GeographyTable&) = default;
};

inline GeographyTable geography(const Database& db) {
    GeographyTable t;
    for (const auto& rec : db)
        if (rec.pair.kappa_class == KappaClass::Semistable) ++t.cells[{rec.codim, rec.pair.genus}];
    return t;
}

inline std::string to_tsv(const GeographyTable& t) {
    std::ostringstream os;
    os << "codim";
    for (int g = kGenusMin; g <= kGenusMax; ++g) os << '\t' << g;
    os << '\n';
    for (int c = kCodimMin; c <= kCodimMax; ++c) {
        os << c;
        for (int g = kGenusMin; g <= kGenusMax; ++g) os << '\t' << t.at(c, g);
        os << '\n';
    }
    return os.str();
}

/// Aligned grid, zero cells blank, with row sums on the right.
inline std::string to_ascii(const GeographyTable& t) {
    constexpr int w = 4;
    std::ostringstream os;
    auto cell = [&](const std::string& s) { os << std::string(w - std::min<int>(w - 1, static_cast<int>(s.size())), ' ') << s; };
    os << "cod\\g";
    for (int g = kGenusMin; g <= kGenusMax; ++g) cell(std::to_string(g));
    os << "   sum\n";
    for (int c = kCodimMin; c <= kCodimMax; ++c) {
        std::string label = std::to_string(c);
        os << std::string(5 - label.size(), ' ') << label;
        for (int g = kGenusMin; g <= kGenusMax; ++g) {
            const long v = t.at(c, g);
            cell(v ? std::to_string(v) : "");
        }
        const std::string s = std::to_string(t.row_sum(c));
        os << std::string(6 - std::min<std::size_t>(5, s.size()), ' ') << s << '\n';
    }
    os << "total " << t.total() << '\n';
    return os.str();
}

inline GeographyTable parse_geography_tsv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty geography table");
    std::vector<int> genera;
    {
        std::istringstream hs(line);
        std::string tok;
        std::getline(hs, tok, '\t');
        if (tok != "codim") throw ParseError("geography header must start with 'codim'");
        while (std::getline(hs, tok, '\t')) genera.push_back(std::stoi(tok));
    }
    GeographyTable t;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream rs(line);
        std::string tok;
        std::getline(rs, tok, '\t');
        const int codim = std::stoi(tok);
        std::size_t col = 0;
        while (std::getline(rs, tok, '\t')) {
            if (col >= genera.size()) throw ParseError("geography row " + std::to_string(codim) + " is too long");
            const long v = tok.empty() ? 0 : std::stol(tok);
            if (v) t.cells[{codim, genera[col]}] = v;
            ++col;
        }
    }
    return t;
}

struct CellDiff {
    int codim = 0;
    int genus = 0;
    long generated = 0;
    long reference = 0;
};

inline std::vector<CellDiff> diff(const GeographyTable& generated, const GeographyTable& reference) {
    std::set<std::pair<int, int>> cells;
    for (const auto& [k, v] : generated.cells) cells.insert(k);
    for (const auto& [k, v] : reference.cells) cells.insert(k);
    std::vector<CellDiff> out;
    for (const auto& [c, g] : cells) {
        const long x = generated.at(c, g), y = reference.at(c, g);
        if (x != y) out.push_back({c, g, x, y});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Query

struct QueryFilter {
    std::optional<int> genus;
    std::optional<int> genus_min;
    std::optional<int> genus_max;
    std::optional<int> codim_min;
    std::optional<int> codim_max;
    std::optional<Rational> degree_min;
    std::optional<Rational> degree_max;
    bool gorenstein = false;
    std::optional<QuotientSingularity> basket_contains;
    std::optional<int> contains_index;
    std::optional<int> only_index;  // nonempty basket, every element of this index
    std::optional<KappaClass> kappa_class;
};

inline void validate(const QueryFilter& f) {
    if (f.codim_min && f.codim_max && *f.codim_min > *f.codim_max) throw FilterError("codim-min exceeds codim-max");
    if (f.genus_min && f.genus_max && *f.genus_min > *f.genus_max) throw FilterError("genus-min exceeds genus-max");
    if (f.degree_min && f.degree_max && *f.degree_min > *f.degree_max) throw FilterError("degree-min exceeds degree-max");
    if (f.contains_index && *f.contains_index < 2) throw FilterError("index must be at least 2");
    if (f.only_index && *f.only_index < 2) throw FilterError("index must be at least 2");
    if (f.gorenstein && (f.basket_contains || f.contains_index || f.only_index))
        throw FilterError("gorenstein excludes basket conditions");
}

inline bool matches(const CandidateRecord& rec, const QueryFilter& f) {
    const auto& p = rec.pair;
    if (f.genus && p.genus != *f.genus) return false;
    if (f.genus_min && p.genus < *f.genus_min) return false;
    if (f.genus_max && p.genus > *f.genus_max) return false;
    if (f.codim_min && rec.codim < *f.codim_min) return false;
    if (f.codim_max && rec.codim > *f.codim_max) return false;
    if (f.degree_min && rec.degree < *f.degree_min) return false;
    if (f.degree_max && rec.degree > *f.degree_max) return false;
    if (f.gorenstein && !p.basket.empty()) return false;
    if (f.basket_contains && !p.basket.contains(*f.basket_contains)) return false;
    if (f.contains_index && !p.basket.contains_index(*f.contains_index)) return false;
    if (f.only_index) {
        if (p.basket.empty()) return false;
        for (const auto& s : p.basket.elements())
            if (s.r != *f.only_index) return false;
    }
    if (f.kappa_class && p.kappa_class != *f.kappa_class) return false;
    return true;
}

/// Matching records, in canonical order. Throws FilterError on an inconsistent filter.
inline std::vector<const CandidateRecord*> query(const Database& db, const QueryFilter& f) {
    validate(f);
    std::vector<const CandidateRecord*> out;
    for (const auto& rec : db)
        if (matches(rec, f)) out.push_back(&rec);
    return out;
}

/// "r,a" as a basket element, canonicalized.
inline QuotientSingularity parse_singularity_filter(const std::string& text) {
    try {
        const Basket b = parse_basket(text);
        if (b.size() != 1) throw FilterError("expected a single singularity 'r,a', got '" + text + "'");
        return b.elements().front();
    } catch (const ParseError& e) {
        throw FilterError(e.what());
    } catch (const NotTerminalType& e) {
        throw FilterError(e.what());
    }
}

}  // namespace fanodb

#endif  // FANODB_DATABASE_HPP
