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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "fanodb/fanodb.hpp"

namespace {

using namespace fanodb;

struct Criterion {
    int id;
    std::string title;
    std::vector<std::string> checks;  // names from the verification report
};

const std::vector<Criterion> kCriteria = {
    {1, "basket count", {"basket_count"}},
    {2, "basket genus-viability tallies", {"viable_baskets"}},
    {3, "pair counts and discarded series", {"pair_counts", "discarded_series", "semistable_records", "kappa4_records"}},
    {4, "functional equation", {"functional_equation"}},
    {5, "published numerator strings", {"published_numerators"}},
    {6, "degree spot checks", {"wps_degrees"}},
    {7, "oracle equivalence", {"wps_oracle_series"}},
    {8, "weight pipeline on weighted projective spaces", {"wps_weights"}},
    {9, "geography rows 1-3", {"geography_rows_1_3"}},
    {10, "corner cells", {"corner_cells"}},
    {11, "projection tallies", {"projection_tallies"}},
    {12, "Type I consistency", {"typeI_consistency"}},
    {13, "Type I increment identity", {"typeI_increment"}},
    {14, "index-2 query", {"index2_query"}},
    {15, "distinctness", {"distinct_series"}},
};

}  // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    const auto ref = load_reference(FANODB_REFERENCE_DIR);
    const auto one = generate(KappaBound::Four, 1);
    const auto four = generate(KappaBound::Four, 4);
    const std::string text = to_jsonl(one.records);
    const auto report = verify(parse_jsonl(text), ref);

    std::map<std::string, const CheckResult*> by_name;
    for (const auto& c : report.checks) by_name[c.name] = &c;

    bool all = true;
    for (const auto& crit : kCriteria) {
        bool ok = true;
        std::string detail;
        for (const auto& name : crit.checks) {
            auto it = by_name.find(name);
            if (it == by_name.end()) {
                ok = false;
                detail += (detail.empty() ? "" : "; ") + name + " missing";
                continue;
            }
            ok = ok && it->second->passed;
            detail += (detail.empty() ? "" : "; ") + it->second->detail;
        }
        all = all && ok;
        std::cout << (ok ? "PASS" : "FAIL") << " [" << crit.id << "] " << crit.title << ": " << detail << '\n';
    }
    const bool same = to_jsonl(four.records) == text;
    all = all && same;
    std::cout << (same ? "PASS" : "FAIL") << " [16] determinism: JSONL from 1 and 4 threads is "
              << (same ? "byte-identical" : "different") << " (" << text.size() << " bytes)\n";

    if (report.tallies_mf) {
        const auto& t = *report.tallies_mf;
        std::cout << "note: kappa 4 list, least Type II level with no Type I:";
        for (const auto& [n, c] : t.typeII) std::cout << ' ' << n << ':' << c;
        std::cout << '\n';
    }
    long diff_total = 0;
    for (const auto& c : report.geography_diff) diff_total += std::abs(c.generated - c.reference);
    std::cout << "note: whole-table geography diff " << diff_total << " over " << report.geography_diff.size() << " cells\n";
    for (const auto& c : report.geography_diff)
        std::cout << "  codim " << c.codim << ", genus " << c.genus << ": " << c.generated << " generated, " << c.reference
                  << " reference\n";
    std::cout << "elapsed " << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << " s\n";
    return all ? 0 : 1;
}
