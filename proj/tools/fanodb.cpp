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

// Command-line front end: generate, verify, inspect and query the candidate list.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fanodb/fanodb.hpp"

#ifndef FANODB_REFERENCE_DIR
#define FANODB_REFERENCE_DIR "data/reference/v1"
#endif

namespace {

using namespace fanodb;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw ParseError("bad integer '" + tok + "' in list '" + text + "'");
        }
    }
    return out;
}

Database load_database(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_jsonl(in);
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    return out;
}

void print_prefix(const SeriesPrefix& s) {
    for (int i = 0; i <= s.order(); ++i) std::cout << (i ? " " : "") << s[i].get_str();
    std::cout << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fanodb: candidate Hilbert series of Fano 3-folds"};
    app.require_subcommand(1);
    unsigned threads = default_threads();
    app.add_option("--threads", threads, "worker threads")->check(CLI::Range(1u, 256u));

    // generate
    auto* gen = app.add_subcommand("generate", "build the candidate list and write JSONL");
    int kappa = 3;
    std::string out_path, csv_path;
    gen->add_option("--kappa", kappa, "Kawamata constant")->check(CLI::IsMember({3, 4}))->required();
    gen->add_option("--out", out_path, "JSONL output")->required();
    gen->add_option("--csv", csv_path, "also write CSV");

    // verify
    auto* ver = app.add_subcommand("verify", "run the verification checks on a JSONL file");
    std::string db_path, ref_dir = FANODB_REFERENCE_DIR, report_path;
    ver->add_option("path", db_path, "JSONL database")->required()->check(CLI::ExistingFile);
    ver->add_option("--reference", ref_dir, "fixture directory")->check(CLI::ExistingDirectory);
    ver->add_option("--report", report_path, "JSON report output");

    // geography
    auto* geo = app.add_subcommand("geography", "genus by codimension counts of semistable records");
    std::string geo_format = "ascii";
    geo->add_option("path", db_path, "JSONL database")->required()->check(CLI::ExistingFile);
    geo->add_option("--format", geo_format)->check(CLI::IsMember({"ascii", "tsv"}));

    // query
    auto* qry = app.add_subcommand("query", "filter records");
    std::optional<int> q_genus, q_genus_min, q_genus_max, q_codim_min, q_codim_max, q_contains_index, q_only_index;
    std::optional<std::string> q_deg_min, q_deg_max, q_basket_contains, q_kappa_class;
    bool q_gorenstein = false;
    std::string q_format = "jsonl";
    qry->add_option("path", db_path, "JSONL database")->required()->check(CLI::ExistingFile);
    qry->add_option("--genus", q_genus);
    qry->add_option("--genus-min", q_genus_min);
    qry->add_option("--genus-max", q_genus_max);
    qry->add_option("--codim-min", q_codim_min);
    qry->add_option("--codim-max", q_codim_max);
    qry->add_option("--degree-min", q_deg_min, "rational p/q");
    qry->add_option("--degree-max", q_deg_max, "rational p/q");
    qry->add_flag("--gorenstein", q_gorenstein, "empty basket");
    qry->add_option("--basket-contains", q_basket_contains, "singularity r,a");
    qry->add_option("--contains-index", q_contains_index);
    qry->add_option("--only-index", q_only_index, "nonempty basket of this index only");
    qry->add_option("--kappa-class", q_kappa_class)->check(CLI::IsMember({"ss", "mf"}));
    qry->add_option("--format", q_format)->check(CLI::IsMember({"jsonl", "csv", "count"}));

    // series
    auto* ser = app.add_subcommand("series", "closed form and expansion of one Hilbert series");
    int genus = 0, order = 20;
    std::string basket_text;
    ser->add_option("--genus", genus)->required();
    ser->add_option("--basket", basket_text, "r,a;r,a;...");
    ser->add_option("--order", order)->check(CLI::Range(0, 100000));

    // numerator
    auto* num = app.add_subcommand("numerator", "Hilbert numerator against given weights");
    std::string weights_text;
    num->add_option("--genus", genus)->required();
    num->add_option("--basket", basket_text, "r,a;r,a;...");
    num->add_option("--weights", weights_text, "w1,w2,...")->required();

    // oracle wps
    auto* orc = app.add_subcommand("oracle", "brute-force reference series");
    orc->require_subcommand(1);
    auto* wps = orc->add_subcommand("wps", "weighted projective space by monomial counting");
    wps->add_option("--weights", weights_text, "a,b,c,d")->required();
    wps->add_option("--order", order)->check(CLI::Range(0, 200));

    // export
    auto* exp = app.add_subcommand("export", "CSV export of a JSONL file");
    exp->add_option("path", db_path, "JSONL database")->required()->check(CLI::ExistingFile);
    exp->add_option("--out", out_path, "CSV output (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*gen) {
            const auto result = generate(kappa_from_int(kappa), threads);
            auto out = open_out(out_path);
            write_jsonl(out, result.records);
            if (!csv_path.empty()) {
                auto csv = open_out(csv_path);
                write_csv(csv, result.records);
            }
            std::cerr << result.records.size() << " records, " << result.discarded.size() << " discarded\n";
            return kExitOk;
        }
        if (*ver) {
            const auto ref = load_reference(ref_dir);
            const auto db = load_database(db_path);
            const auto rep = verify(db, ref, threads);
            for (const auto& c : rep.checks) std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
            if (!report_path.empty()) open_out(report_path) << to_json(rep).dump(2) << '\n';
            return rep.passed() ? kExitOk : kExitVerifyFailed;
        }
        if (*geo) {
            const auto table = geography(load_database(db_path));
            std::cout << (geo_format == "tsv" ? to_tsv(table) : to_ascii(table));
            return kExitOk;
        }
        if (*qry) {
            QueryFilter f;
            f.genus = q_genus;
            f.genus_min = q_genus_min;
            f.genus_max = q_genus_max;
            f.codim_min = q_codim_min;
            f.codim_max = q_codim_max;
            f.gorenstein = q_gorenstein;
            f.contains_index = q_contains_index;
            f.only_index = q_only_index;
            try {
                if (q_deg_min) f.degree_min = parse_rational(*q_deg_min);
                if (q_deg_max) f.degree_max = parse_rational(*q_deg_max);
            } catch (const ParseError& e) {
                throw FilterError(e.what());
            }
            if (q_basket_contains) f.basket_contains = parse_singularity_filter(*q_basket_contains);
            if (q_kappa_class) f.kappa_class = *q_kappa_class == "ss" ? KappaClass::Semistable : KappaClass::MFOnly;
            validate(f);
            const auto db = load_database(db_path);
            const auto hits = query(db, f);
            if (q_format == "count") {
                std::cout << hits.size() << '\n';
            } else if (q_format == "csv") {
                Database sel;
                for (const auto* r : hits) sel.push_back(*r);
                write_csv(std::cout, sel);
            } else {
                for (const auto* r : hits) std::cout << to_json(*r).dump() << '\n';
            }
            return kExitOk;
        }
        if (*ser) {
            const GenusBasketPair p{genus, parse_basket(basket_text), KappaClass::Semistable};
            const auto h = hilbert_series(p);
            std::cout << "degree " << to_string(anticanonical_degree(genus, p.basket)) << '\n';
            std::cout << "series " << to_display_string(h.closed_form) << '\n';
            std::cout << "coefficients ";
            print_prefix(expand(h.closed_form, order));
            return kExitOk;
        }
        if (*num) {
            const GenusBasketPair p{genus, parse_basket(basket_text), KappaClass::Semistable};
            const auto n = hilbert_numerator(hilbert_series(p), parse_int_list(weights_text));
            if (n.exact)
                std::cout << to_display_string(n.numerator) << '\n';
            else
                std::cout << to_display_string(n.truncated.as_polynomial()) << " + ...\n";
            return kExitOk;
        }
        if (*wps) {
            const auto w = parse_int_list(weights_text);
            if (w.size() != 4) throw ParseError("expected 4 weights");
            const oracle::WpsDescription d{{w[0], w[1], w[2], w[3]}};
            print_prefix(oracle::wps_series(d, order));
            return kExitOk;
        }
        if (*exp) {
            const auto db = load_database(db_path);
            if (out_path.empty()) {
                write_csv(std::cout, db);
            } else {
                auto out = open_out(out_path);
                write_csv(out, db);
            }
            return kExitOk;
        }
    } catch (const CorruptFixture& e) {
        std::cerr << e.what() << '\n';
        return kExitVerifyFailed;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
