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

#ifndef FANODB_FIXTURES_HPP
#define FANODB_FIXTURES_HPP

#include <array>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fanodb/arith.hpp"
#include "fanodb/database.hpp"
#include "fanodb/errors.hpp"

namespace fanodb {

struct CornerCell {
    int codim = 0;
    int genus = 0;
    long count = 0;
};

struct WpsRow {
    std::array<int, 4> weights{};
    Rational degree;
    int genus = 0;
    int codim = 0;
    std::vector<int> ambient;  // expanded W multiset, ascending
};

struct ReferenceTable {
    GeographyTable figure1;
    std::vector<CornerCell> corner;
    std::vector<WpsRow> wps;
    std::map<std::string, long> constants;

    long constant(const std::string& name) const {
        auto it = constants.find(name);
        if (it == constants.end()) throw CorruptFixture("no constant '" + name + "'");
        return it->second;
    }
};

/// "1^24,2^4,3^2,5" -> 24 ones, 4 twos, 2 threes, one 5.
inline std::vector<int> expand_multiset(const std::string& text) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        const auto hat = tok.find('^');
        const int w = std::stoi(tok.substr(0, hat));
        const int m = hat == std::string::npos ? 1 : std::stoi(tok.substr(hat + 1));
        out.insert(out.end(), static_cast<std::size_t>(m), w);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::string compress_multiset(const std::vector<int>& sorted) {
    std::string out;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        if (!out.empty()) out += ',';
        out += std::to_string(sorted[i]);
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

namespace detail {

inline std::ifstream open_fixture(const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in) throw CorruptFixture("cannot open " + p.string());
    return in;
}

inline std::vector<std::vector<std::string>> read_tsv_rows(std::istream& in) {
    std::vector<std::vector<std::string>> rows;
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cols;
        std::istringstream ls(line);
        std::string tok;
        while (std::getline(ls, tok, '\t')) cols.push_back(tok);
        rows.push_back(std::move(cols));
    }
    return rows;
}

inline void require(bool ok, const std::string& what) {
    if (!ok) throw CorruptFixture(what);
}

}  // namespace detail

inline const std::vector<std::string>& required_constants() {
    static const std::vector<std::string> names = {
        "basket_count", "viable_baskets_k3", "viable_baskets_k4", "pairs_k3",        "pairs_k4",     "series_ss",
        "series_mf",    "discarded",         "codim1",            "codim2",          "codim3",       "codim_le2",
        "no_typeI",     "typeII_1",          "typeII_2",          "typeII_3",        "typeII_4",     "index2_ss_pairs",
        "index2_ss_g2", "index2_mf_pairs",   "index2_mf_g2",      "figure1_total"};
    return names;
}

/**
 * Loads figure1.tsv, corner.tsv, wps.tsv and constants.json from `dir` and
 * checks them against each other. Any mismatch is CorruptFixture.
 */
inline ReferenceTable load_reference(const std::filesystem::path& dir) {
    using detail::require;
    ReferenceTable ref;
    try {
        {
            auto in = detail::open_fixture(dir / "constants.json");
            const auto j = nlohmann::json::parse(in);
            for (const auto& [name, entry] : j.items()) ref.constants[name] = entry.at("value").get<long>();
        }
        for (const auto& name : required_constants()) require(ref.constants.count(name) == 1, "constant '" + name + "' missing");

        {
            auto in = detail::open_fixture(dir / "figure1.tsv");
            ref.figure1 = parse_geography_tsv(in);
        }
        require(ref.figure1.total() == ref.constant("figure1_total"), "figure1 grand total is " + std::to_string(ref.figure1.total()));
        require(ref.figure1.row_sum(1) == ref.constant("codim1"), "figure1 row 1 sum");
        require(ref.figure1.row_sum(2) == ref.constant("codim2"), "figure1 row 2 sum");
        require(ref.figure1.row_sum(3) == ref.constant("codim3"), "figure1 row 3 sum");
        for (const auto& [cell, v] : ref.figure1.cells) {
            require(cell.first >= kCodimMin && cell.first <= kCodimMax, "figure1 codimension out of range");
            require(cell.second >= kGenusMin && cell.second <= kGenusMax, "figure1 genus out of range");
        }

        {
            auto in = detail::open_fixture(dir / "corner.tsv");
            for (const auto& row : detail::read_tsv_rows(in)) {
                require(row.size() == 3, "corner.tsv needs 3 columns");
                ref.corner.push_back({std::stoi(row[0]), std::stoi(row[1]), std::stol(row[2])});
            }
        }
        require(ref.corner.size() == 7, "corner.tsv needs 7 cells");
        for (const auto& c : ref.corner)
            require(ref.figure1.at(c.codim, c.genus) == c.count, "corner cell disagrees with figure1");

        {
            auto in = detail::open_fixture(dir / "wps.tsv");
            for (const auto& row : detail::read_tsv_rows(in)) {
                require(row.size() == 5, "wps.tsv needs 5 columns");
                WpsRow w;
                const auto ws = expand_multiset(row[0]);
                require(ws.size() == 4, "wps weights need 4 entries");
                std::copy(ws.begin(), ws.end(), w.weights.begin());
                w.degree = parse_rational(row[1]);
                w.genus = std::stoi(row[2]);
                w.codim = std::stoi(row[3]);
                w.ambient = expand_multiset(row[4]);
                long sum = 0, prod = 1;
                for (int a : w.weights) sum += a, prod *= a;
                require(w.degree == make_rational(sum * sum * sum, prod), "wps degree of " + row[0]);
                require(static_cast<int>(w.ambient.size()) - 4 == w.codim, "wps codim of " + row[0]);
                ref.wps.push_back(std::move(w));
            }
        }
        require(ref.wps.size() == 7, "wps.tsv needs 7 rows");
    } catch (const CorruptFixture&) {
        throw;
    } catch (const std::exception& e) {
        throw CorruptFixture(e.what());
    }
    return ref;
}

}  // namespace fanodb

#endif  // FANODB_FIXTURES_HPP
