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

#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <sstream>

#include "fanodb/database.hpp"
#include "fanodb/fixtures.hpp"

namespace fanodb {
namespace {

// Generation takes several seconds, so both lists are built once per binary.
const GenerationResult& full() {
    static const GenerationResult r = generate(KappaBound::Four);
    return r;
}
const GenerationResult& semistable() {
    static const GenerationResult r = generate(KappaBound::Three);
    return r;
}

std::size_t count(const Database& db, const QueryFilter& f) { return query(db, f).size(); }

TEST(Generate, Sizes) {
    EXPECT_EQ(full().records.size(), 52646u);
    EXPECT_EQ(semistable().records.size(), 39550u);
    EXPECT_EQ(full().pairs_before_filter, 52654u);
    EXPECT_EQ(semistable().pairs_before_filter, 39558u);
    EXPECT_EQ(full().discarded.size(), 8u);
    EXPECT_EQ(semistable().discarded.size(), 8u);
}

TEST(Generate, CanonicalKeys) {
    const auto& db = full().records;
    for (std::size_t i = 0; i < db.size(); ++i) {
        EXPECT_EQ(db[i].key, static_cast<int>(i + 1));
        if (i) EXPECT_TRUE(canonical_less(db[i - 1].pair, db[i].pair));
    }
}

TEST(Generate, SemistableRecordsUnchangedInFullList) {
    std::map<int, std::string> lines;
    for (const auto& r : full().records) lines[r.key] = to_json(r).dump();
    for (const auto& r : semistable().records) {
        ASSERT_EQ(r.pair.kappa_class, KappaClass::Semistable);
        EXPECT_EQ(to_json(r).dump(), lines.at(r.key));
    }
}

TEST(Generate, PropagationIsConsistent) {
    const auto& c = full().consistency;
    EXPECT_TRUE(c.all_consistent());
    EXPECT_GT(c.typeI_multiply_derived, 0u);
    EXPECT_EQ(c.base, 180u);
}

TEST(Generate, RecordInvariants) {
    for (const auto& r : full().records) {
        EXPECT_EQ(r.degree, anticanonical_degree(r.pair.genus, r.pair.basket));
        EXPECT_EQ(r.codim, static_cast<int>(r.weights.weights.size()) - 4);
        EXPECT_TRUE(std::is_sorted(r.weights.weights.begin(), r.weights.weights.end()));
        ASSERT_TRUE(r.numerator.exact) << r.key;
        const int top = std::accumulate(r.weights.weights.begin(), r.weights.weights.end(), 0) - 1;
        EXPECT_EQ(r.numerator.numerator.degree(), top);
        const Polynomial rev = reverse(r.numerator.numerator, top);
        EXPECT_EQ(r.weights.weights.size() % 2 == 0 ? rev : Polynomial() - rev, r.numerator.numerator);
    }
}

TEST(Generate, EdgesRespectBasketRelation) {
    const auto& db = full().records;
    for (const auto& r : db)
        for (const auto& e : r.edges) {
            const auto& t = db[static_cast<std::size_t>(e.target_key - 1)];
            EXPECT_EQ(t.pair.genus, r.pair.genus);
            EXPECT_EQ(projected_basket(r.pair.basket, e.projection.center), t.pair.basket);
            EXPECT_EQ(e.projection.a + e.projection.b, e.projection.r());
        }
}

TEST(Jsonl, RoundTrip) {
    const auto& db = full().records;
    const std::string text = to_jsonl(db);
    const Database back = parse_jsonl(text);
    ASSERT_EQ(back.size(), db.size());
    EXPECT_EQ(to_jsonl(back), text);
    for (std::size_t i = 0; i < db.size(); i += 997) {
        EXPECT_EQ(back[i].weights, db[i].weights);
        EXPECT_EQ(back[i].edges, db[i].edges);
        EXPECT_EQ(back[i].numerator.numerator, db[i].numerator.numerator);
        EXPECT_EQ(back[i].series.closed_form, db[i].series.closed_form);
    }
}

TEST(Jsonl, LineShape) {
    const std::string line = to_json(full().records.front()).dump();
    for (const char* field : {"\"key\":", "\"genus\":", "\"basket\":", "\"degree\":", "\"kappa_class\":", "\"weights\":",
                              "\"codim\":", "\"numerator\":", "\"edges\":"})
        EXPECT_NE(line.find(field), std::string::npos) << field;
    EXPECT_EQ(line.find('\n'), std::string::npos);
}

TEST(Jsonl, RejectsBadInput) {
    EXPECT_THROW(parse_record("{"), ParseError);
    EXPECT_THROW(parse_record("{\"key\":1}"), ParseError);
    std::string line = to_json(full().records.front()).dump();
    line.replace(line.find("\"degree\":\""), 10, "\"degree\":\"9");
    EXPECT_THROW(parse_record(line), ParseError);
}

TEST(Query, Examples) {
    const auto& db = full().records;
    QueryFilter top;
    top.genus = 37;
    top.kappa_class = KappaClass::Semistable;
    const auto hit = query(db, top);
    ASSERT_EQ(hit.size(), 1u);
    EXPECT_TRUE(hit[0]->pair.basket.empty());
    EXPECT_EQ(hit[0]->codim, 35);

    QueryFilter index2;
    index2.only_index = 2;
    index2.kappa_class = KappaClass::Semistable;
    EXPECT_EQ(count(db, index2), 272u);
    index2.genus_min = 2;
    EXPECT_EQ(count(db, index2), 238u);
    index2.kappa_class.reset();
    EXPECT_EQ(count(db, index2), 325u);
    index2.genus_min.reset();
    EXPECT_EQ(count(db, index2), 360u);

    QueryFilter gor;
    gor.gorenstein = true;
    gor.kappa_class = KappaClass::Semistable;
    const auto g = query(db, gor);
    ASSERT_FALSE(g.empty());
    EXPECT_EQ(g.front()->pair.genus, 2);
    EXPECT_EQ(g.back()->pair.genus, 37);
    EXPECT_EQ(g.size(), 36u);
}

TEST(Query, MoreFilters) {
    const auto& db = full().records;
    QueryFilter f;
    f.codim_min = 1;
    f.codim_max = 1;
    f.kappa_class = KappaClass::Semistable;
    EXPECT_EQ(count(db, f), 95u);
    QueryFilter d;
    d.degree_max = make_rational(1, 100);
    for (const auto* r : query(db, d)) EXPECT_LE(r->degree, make_rational(1, 100));
    QueryFilter c;
    c.basket_contains = parse_singularity_filter("7,3");
    for (const auto* r : query(db, c)) EXPECT_TRUE(r->pair.basket.contains({7, 3}));
    EXPECT_GT(count(db, c), 0u);
}

TEST(Query, MalformedFilters) {
    QueryFilter f;
    f.codim_min = 5;
    f.codim_max = 2;
    EXPECT_THROW(query(full().records, f), FilterError);
    QueryFilter g;
    g.gorenstein = true;
    g.contains_index = 2;
    EXPECT_THROW(validate(g), FilterError);
    EXPECT_THROW(parse_singularity_filter("4,2"), FilterError);
    EXPECT_THROW(parse_singularity_filter("2,1;3,1"), FilterError);
    EXPECT_THROW(parse_singularity_filter("x"), FilterError);
}

TEST(Geography, RowsOneToThreeAndCorner) {
    const auto ref = load_reference(FANODB_REFERENCE_DIR);
    const auto geo = geography(full().records);
    EXPECT_EQ(geo, geography(semistable().records));
    EXPECT_EQ(geo.total(), 39550);
    for (int c = 1; c <= 3; ++c)
        for (int g = kGenusMin; g <= kGenusMax; ++g) EXPECT_EQ(geo.at(c, g), ref.figure1.at(c, g)) << c << "," << g;
    EXPECT_EQ(geo.at(1, -1), 54);
    EXPECT_EQ(geo.at(1, 0), 32);
    EXPECT_EQ(geo.at(1, 1), 6);
    EXPECT_EQ(geo.at(1, 2), 2);
    EXPECT_EQ(geo.at(1, 3), 1);
    for (const auto& c : ref.corner) EXPECT_EQ(geo.at(c.codim, c.genus), c.count);
}

TEST(Geography, TsvRoundTripAndAscii) {
    const auto geo = geography(full().records);
    std::istringstream in(to_tsv(geo));
    EXPECT_EQ(parse_geography_tsv(in), geo);
    const std::string ascii = to_ascii(geo);
    EXPECT_NE(ascii.find("total 39550"), std::string::npos);
}

TEST(Csv, Shape) {
    std::ostringstream os;
    write_csv(os, full().records);
    const std::string s = os.str();
    EXPECT_EQ(s.substr(0, s.find('\n')), "key,genus,basket,degree,codim,weights");
    EXPECT_EQ(static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')), full().records.size() + 1);
}

TEST(Generate, ThreadCountDoesNotMatter) {
    const auto again = generate(KappaBound::Three, 3);
    EXPECT_EQ(to_jsonl(again.records), to_jsonl(semistable().records));
}

}  // namespace
}  // namespace fanodb
