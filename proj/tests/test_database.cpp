#include <catch_amalgamated.hpp>

#include <algorithm>

#include "hyperspace/database.hpp"
#include "hyperspace/random.hpp"

using namespace hyperspace;

namespace {

AssocArray sets(std::vector<Triple> t) { return build(std::move(t), union_intersect); }

const char* const colors = "id\tcolor\tsize\nr1\tred\ts\nr2\tblue\t\n";

/// Random table text with integer row ids and up to four values per column.
std::string random_table(Generator& gen, std::size_t& cells) {
    static const char* values[] = {"red", "blue", "green", "7"};
    const std::size_t ncols = 1 + gen.below(6), nrows = gen.below(51);
    std::string text = "id";
    for (std::size_t c = 0; c < ncols; ++c) text += "\tc" + std::to_string(c);
    text += '\n';
    cells = 0;
    for (std::size_t r = 0; r < nrows; ++r) {
        text += "row" + std::to_string(r);
        for (std::size_t c = 0; c < ncols; ++c) {
            text += '\t';
            if (gen.chance(0.7)) {
                text += values[gen.below(4)];
                ++cells;
            }
        }
        text += '\n';
    }
    return text;
}

}  // namespace

TEST_CASE("ingest turns cells into singleton sets", "[database][ingest]") {
    CHECK(ingest_tsv_text("id\tcolor\nr1\tred\n").array == sets({{"r1", "color", StringSet{"red"}}}));
    auto t = ingest_tsv_text(colors);
    CHECK(t.array == sets({{"r1", "color", StringSet{"red"}},
                           {"r1", "size", StringSet{"s"}},
                           {"r2", "color", StringSet{"blue"}}}));
    CHECK(t.array.at("r2", "size") == Value(StringSet{}));
}

TEST_CASE("tables without an id column are numbered from 1", "[database][ingest]") {
    auto t = ingest_tsv_text("color\tsize\nred\ts\n\nblue\tm\n");
    CHECK(row_keys(t.array) == KeyVector{1, 2});
    CHECK(t.array.at(2, "size") == Value(StringSet{"m"}));
    CHECK(ingest_tsv_text("").array.empty());
    CHECK(ingest_tsv_text("a\tb\n").array.empty());
}

TEST_CASE("nnz equals the count of nonempty cells", "[database][ingest]") {
    Generator gen(89);
    for (int i = 0; i < 50; ++i) {
        std::size_t cells = 0;
        const std::string text = random_table(gen, cells);
        CHECK(ingest_tsv_text(text).array.nnz() == cells);
    }
}

TEST_CASE("a ragged row reports its line", "[database][ingest][errors]") {
    try {
        ingest_tsv_text("id\tcolor\nr1\tred\nr2\n");
        FAIL("expected FormatError");
    } catch (const FormatError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(ingest_tsv_text("id\tcolor\nr1\tred\textra\n"), FormatError);
}

TEST_CASE("select by direct indexing", "[database][select]") {
    auto t = ingest_tsv_text(colors);
    CHECK(select_direct(t, {"size"}, "color", StringSet{"red"}) == sets({{"r1", "size", StringSet{"s"}}}));
    CHECK(select_direct(t, {"size"}, "color", StringSet{"mauve"}).empty());
    CHECK(select_direct(t, {"size"}, "shape", StringSet{"red"}).empty());
    CHECK(select_direct(t, {"color", "size"}, "color", Value("blue")) == sets({{"r2", "color", StringSet{"blue"}}}));
}

TEST_CASE("select through semilink algebra agrees with direct indexing", "[database][select]") {
    auto t = ingest_tsv_text(colors);
    CHECK(select_semilink(t, {"size"}, "color", StringSet{"red"}) == select_direct(t, {"size"}, "color", StringSet{"red"}));
    CHECK(select_semilink(t, {"size"}, "shape", StringSet{"red"}).empty());
    CHECK(select_semilink(t, {"size"}, "color", StringSet{}).empty());
    CHECK(select_semilink(t, {"color", "size"}, "color", StringSet{"red", "blue"}) ==
          index(t.array, all_keys, KeyVector{"color", "size"}));
}

TEST_CASE("set-valued cells match on intersection", "[database][select]") {
    TableArray t{sets({{1, "color", StringSet{"red", "blue"}}, {1, "size", StringSet{"l"}}})};
    CHECK(select_direct(t, {"size"}, "color", StringSet{"red"}) == sets({{1, "size", StringSet{"l"}}}));
    CHECK(select_semilink(t, {"size"}, "color", StringSet{"red"}) == sets({{1, "size", StringSet{"l"}}}));
}

TEST_CASE("both selects agree with a row scan on random tables", "[database][select][property]") {
    Generator gen(97);
    static const char* values[] = {"red", "blue", "green", "7", "absent"};
    for (int i = 0; i < 100; ++i) {
        std::size_t cells = 0;
        const TableArray t = ingest_tsv_text(random_table(gen, cells));
        const KeyVector all_cols = col_keys(t.array);
        const Key cond = all_cols.empty() ? Key("c0") : all_cols[gen.below(all_cols.size())];
        KeyVector cols;
        for (const auto& c : all_cols) {
            if (gen.chance(0.6)) cols.push_back(c);
        }
        const Value v(StringSet{values[gen.below(5)]});

        std::vector<Triple> expect;
        for (const auto& r : row_keys(t.array)) {
            const Value cell = t.array.at(r, cond);
            if (set_intersection(cell.set(), v.set()).empty()) continue;
            for (const auto& e : t.array.row(r)) {
                if (std::find(cols.begin(), cols.end(), e.col) != cols.end()) expect.push_back(e);
            }
        }
        const AssocArray direct = select_direct(t, cols, cond, v);
        REQUIRE(direct == build(expect, union_intersect));
        REQUIRE(select_semilink(t, cols, cond, v) == direct);
    }
}
