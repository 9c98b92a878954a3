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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fanodb/fixtures.hpp"

namespace fanodb {
namespace {

namespace fs = std::filesystem;

const fs::path kRef = FANODB_REFERENCE_DIR;

TEST(Fixtures, LoadsAndSelfChecks) {
    const auto ref = load_reference(kRef);
    EXPECT_EQ(ref.figure1.total(), 39550);
    EXPECT_EQ(ref.figure1.row_sum(1), 95);
    EXPECT_EQ(ref.figure1.row_sum(2), 85);
    EXPECT_EQ(ref.figure1.row_sum(3), 70);
    EXPECT_EQ(ref.figure1.at(1, -1), 54);
    EXPECT_EQ(ref.figure1.at(1, 0), 32);
    EXPECT_EQ(ref.figure1.at(1, 3), 1);
    EXPECT_EQ(ref.wps.size(), 7u);
    EXPECT_EQ(ref.corner.size(), 7u);
    EXPECT_EQ(ref.constant("index2_ss_pairs"), 272);
    EXPECT_EQ(ref.constant("basket_count"), 8314);
    EXPECT_THROW(ref.constant("nonsense"), CorruptFixture);
}

TEST(Fixtures, MultisetNotation) {
    EXPECT_EQ(expand_multiset("1^3,2,5^2"), (std::vector<int>{1, 1, 1, 2, 5, 5}));
    EXPECT_EQ(compress_multiset({1, 1, 1, 2, 5, 5}), "1^3,2,5^2");
}

class CorruptCopy : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("fanodb_fixture_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::remove_all(dir_);
        fs::create_directories(dir_);
        for (const auto& e : fs::directory_iterator(kRef)) fs::copy_file(e.path(), dir_ / e.path().filename());
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string read(const std::string& name) {
        std::ifstream in(dir_ / name);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    void write(const std::string& name, const std::string& text) { std::ofstream(dir_ / name) << text; }

    fs::path dir_;
};

TEST_F(CorruptCopy, IntactCopyLoads) { EXPECT_NO_THROW(load_reference(dir_)); }

TEST_F(CorruptCopy, AlteredGeographyCell) {
    std::string t = read("figure1.tsv");
    const auto row = t.find("\n1\t");
    ASSERT_NE(row, std::string::npos);
    t.replace(t.find("54", row), 2, "55");
    write("figure1.tsv", t);
    EXPECT_THROW(load_reference(dir_), CorruptFixture);
}

TEST_F(CorruptCopy, MissingWpsRow) {
    std::string t = read("wps.tsv");
    t.erase(t.rfind("3,4,5,7"));
    write("wps.tsv", t);
    EXPECT_THROW(load_reference(dir_), CorruptFixture);
}

TEST_F(CorruptCopy, WrongWpsDegree) {
    std::string t = read("wps.tsv");
    t.replace(t.find("1331/30"), 7, "1331/31");
    write("wps.tsv", t);
    EXPECT_THROW(load_reference(dir_), CorruptFixture);
}

TEST_F(CorruptCopy, MissingFile) {
    fs::remove(dir_ / "corner.tsv");
    EXPECT_THROW(load_reference(dir_), CorruptFixture);
}

TEST_F(CorruptCopy, MalformedConstants) {
    write("constants.json", "{ not json");
    EXPECT_THROW(load_reference(dir_), CorruptFixture);
}

}  // namespace
}  // namespace fanodb
