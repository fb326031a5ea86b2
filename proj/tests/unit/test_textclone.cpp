#include <doctest.h>

#include <random>

#include "ifclone/textclone/textclone.hpp"
#include "support/oracle_textclone.hpp"
#include "support/random_gen.hpp"

using namespace ifclone::textclone;
using namespace testsupport;

TEST_CASE("normalize trims, drops blanks and maps back to original lines") {
    NormalizedUnit unit = normalize_lines("  a;\n\n b;");
    REQUIRE(unit.lines.size() == 2);
    CHECK(unit.lines[0] == "a;");
    CHECK(unit.lines[1] == "b;");
    CHECK(unit.original_lines == std::vector<int>{0, 2});

    CHECK(normalize_lines("").lines.empty());
    CHECK(normalize_lines(" \n\t\n   \n").lines.empty());
}

TEST_CASE("normalize applies a first-line offset") {
    NormalizedUnit unit = normalize_lines("x\n\ny\n", 10);
    CHECK(unit.original_lines == std::vector<int>{10, 12});
}

TEST_CASE("an identical six-line block is one single-chunk pair") {
    std::vector<std::string> block = {"a", "b", "c", "d", "e", "f"};
    auto a = unit_of(block, "a");
    auto b = unit_of(block, "b");
    auto pairs = detect_clones(a, b, CloneParams{});
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].matched_lines == 6);
    REQUIRE(pairs[0].chunks.size() == 1);
    CHECK(pairs[0].chunks[0].length == 6);
    CHECK(pairs[0].fragment_a.start_line == 0);
    CHECK(pairs[0].fragment_a.end_line == 5);
}

TEST_CASE("five matching lines stay below the minimum clone length") {
    std::vector<std::string> block = {"a", "b", "c", "d", "e"};
    auto pairs = detect_clones(unit_of(block, "a"), unit_of(block, "b"), CloneParams{});
    CHECK(pairs.empty());
}

TEST_CASE("two 3-line chunks over a 2-line gap merge into one pair") {
    std::vector<std::string> a = {"a", "b", "c", "x1", "x2", "d", "e", "f"};
    std::vector<std::string> b = {"a", "b", "c", "y1", "y2", "d", "e", "f"};
    auto pairs = detect_clones(unit_of(a, "a"), unit_of(b, "b"), CloneParams{});
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].matched_lines == 6);
    CHECK(pairs[0].chunks.size() == 2);
    CHECK(pairs[0].fragment_a.start_line == 0);
    CHECK(pairs[0].fragment_a.end_line == 7);
}

TEST_CASE("a gap wider than the bias keeps the chunks apart") {
    std::vector<std::string> a = {"a", "b", "c", "x1", "x2", "x3", "d", "e", "f"};
    std::vector<std::string> b = {"a", "b", "c", "y1", "y2", "y3", "d", "e", "f"};
    CloneParams params; // bias 2, but the gap is 3
    CHECK(detect_clones(unit_of(a, "a"), unit_of(b, "b"), params).empty());

    params.max_line_bias = 3;
    auto pairs = detect_clones(unit_of(a, "a"), unit_of(b, "b"), params);
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].matched_lines == 6);
}

TEST_CASE("chunks below the minimum size are gap filler, not matches") {
    // 3 match, 1 diff, 1 match, 1 diff, 3 match: the middle single line is
    // below min_chunk_size, so it neither matches nor breaks the chain
    std::vector<std::string> a = {"a", "b", "c", "p", "k", "q", "d", "e", "f"};
    std::vector<std::string> b = {"a", "b", "c", "r", "k", "s", "d", "e", "f"};
    CloneParams params;
    params.max_line_bias = 3;
    auto pairs = detect_clones(unit_of(a, "a"), unit_of(b, "b"), params);
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].matched_lines == 6);
    CHECK(pairs[0].chunks.size() == 2);
}

TEST_CASE("self comparison is skipped unless enabled") {
    std::vector<std::string> block = {"a", "b", "c", "d", "e", "f"};
    auto u = unit_of(block, "same");
    CHECK(detect_clones(u, u, CloneParams{}).empty());
    auto pairs = detect_clones(u, u, CloneParams{}, /*allow_self=*/true);
    REQUIRE_FALSE(pairs.empty());
    CHECK(pairs[0].matched_lines == 6); // the full-length self match
}

TEST_CASE("identical content under different origins is a real clone") {
    std::vector<std::string> block = {"a", "b", "c", "d", "e", "f"};
    CHECK(detect_clones(unit_of(block, "one"), unit_of(block, "two"), CloneParams{}).size() == 1);
}

TEST_CASE("results are mirrored when the units swap") {
    std::mt19937 rng(424242);
    for (int round = 0; round < 30; ++round) {
        auto a = unit_of(random_lines(rng, 80), "a");
        auto b = unit_of(random_lines(rng, 80), "b");
        CloneParams params;
        params.min_clone_length = 4;
        params.min_chunk_size = 2;
        auto ab = detect_clones(a, b, params);
        auto ba = detect_clones(b, a, params);
        REQUIRE(ab.size() == ba.size());
        // mirror ba and compare as sets of chunk tuples
        auto key = [](const ClonePair& p, bool swap) {
            std::vector<std::tuple<int, int, int>> chunks;
            for (const auto& c : p.chunks) {
                chunks.emplace_back(swap ? c.b_start : c.a_start,
                                    swap ? c.a_start : c.b_start, c.length);
            }
            return chunks;
        };
        std::vector<std::vector<std::tuple<int, int, int>>> lhs, rhs;
        for (const auto& p : ab) lhs.push_back(key(p, false));
        for (const auto& p : ba) rhs.push_back(key(p, true));
        std::sort(lhs.begin(), lhs.end());
        std::sort(rhs.begin(), rhs.end());
        CHECK(lhs == rhs);
    }
}

TEST_CASE("random units match the naive dynamic-programming oracle") {
    std::mt19937 rng(1905);
    CloneParams params;
    for (int round = 0; round < 60; ++round) {
        auto a_lines = random_lines(rng, 120);
        auto b_lines = random_lines(rng, 120);
        auto pairs =
            detect_clones(unit_of(a_lines, "a"), unit_of(b_lines, "b"), params);
        auto expected = oracle_detect(a_lines, b_lines, params);
        CHECK(project_pairs(pairs) == expected);
    }
}

TEST_CASE("random parameters still match the oracle") {
    std::mt19937 rng(77);
    for (int round = 0; round < 40; ++round) {
        CloneParams params;
        params.min_chunk_size = std::uniform_int_distribution<int>(1, 5)(rng);
        params.min_clone_length =
            params.min_chunk_size + std::uniform_int_distribution<int>(0, 6)(rng);
        params.max_line_bias = std::uniform_int_distribution<int>(0, 4)(rng);
        auto a_lines = random_lines(rng, 100);
        auto b_lines = random_lines(rng, 100);
        auto pairs =
            detect_clones(unit_of(a_lines, "a"), unit_of(b_lines, "b"), params);
        CHECK(project_pairs(pairs) == oracle_detect(a_lines, b_lines, params));
    }
}

TEST_CASE("raising the minimum length only filters pairs") {
    std::mt19937 rng(140);
    for (int round = 0; round < 20; ++round) {
        auto a = unit_of(random_lines(rng, 150), "a");
        auto b = unit_of(random_lines(rng, 150), "b");
        CloneParams base;
        base.min_chunk_size = std::uniform_int_distribution<int>(1, 4)(rng);
        base.min_clone_length =
            base.min_chunk_size + std::uniform_int_distribution<int>(0, 6)(rng);
        base.max_line_bias = std::uniform_int_distribution<int>(0, 4)(rng);
        size_t cc = detect_clones(a, b, base).size();
        CloneParams longer = base;
        longer.min_clone_length += 2;
        CHECK(detect_clones(a, b, longer).size() <= cc);
    }
}

TEST_CASE("widening the bias merges adjacent pairs instead of dropping content") {
    // two six-line chains separated by a 3-line gap: at bias 2 they are two
    // pairs; at bias 3 they merge into one pair carrying all twelve lines
    std::vector<std::string> a = {"a", "b", "c", "d", "e", "f", "x1", "x2", "x3",
                                  "g", "h", "i", "j", "k", "l"};
    std::vector<std::string> b = {"a", "b", "c", "d", "e", "f", "y1", "y2", "y3",
                                  "g", "h", "i", "j", "k", "l"};
    CloneParams narrow; // bias 2
    auto split = detect_clones(unit_of(a, "a"), unit_of(b, "b"), narrow);
    REQUIRE(split.size() == 2);
    CHECK(split[0].matched_lines == 6);
    CHECK(split[1].matched_lines == 6);

    CloneParams wide;
    wide.max_line_bias = 3;
    auto merged = detect_clones(unit_of(a, "a"), unit_of(b, "b"), wide);
    REQUIRE(merged.size() == 1);
    CHECK(merged[0].matched_lines == 12);
    CHECK(merged[0].chunks.size() == 2);
}

TEST_CASE("widening the bias never loses matched lines") {
    std::mt19937 rng(4311);
    for (int round = 0; round < 20; ++round) {
        auto a = unit_of(random_lines(rng, 150), "a");
        auto b = unit_of(random_lines(rng, 150), "b");
        CloneParams base;
        base.min_chunk_size = std::uniform_int_distribution<int>(1, 4)(rng);
        base.min_clone_length =
            base.min_chunk_size + std::uniform_int_distribution<int>(0, 6)(rng);
        base.max_line_bias = std::uniform_int_distribution<int>(0, 4)(rng);
        auto total = [&](const CloneParams& p) {
            long sum = 0;
            for (const auto& pair : detect_clones(a, b, p)) sum += pair.matched_lines;
            return sum;
        };
        long base_total = total(base);
        CloneParams wider = base;
        wider.max_line_bias += 1;
        CHECK(total(wider) >= base_total);
    }
}

TEST_CASE("invalid parameters yield no clones") {
    CloneParams bad;
    bad.min_chunk_size = 9;
    bad.min_clone_length = 3; // chunk larger than clone minimum
    CHECK_FALSE(bad.valid());
    std::vector<std::string> block = {"a", "b", "c", "d", "e", "f"};
    CHECK(detect_clones(unit_of(block, "a"), unit_of(block, "b"), bad).empty());
}

TEST_CASE("fragments map through the normalization index") {
    // blank and indented lines shift the original coordinates
    std::string text_a = "\n  a\nb\n\nc\nd\ne\nf\n";
    std::string text_b = "a\nb\nc\n\n\nd\ne\nf\n";
    NormalizedUnit a = normalize_lines(text_a);
    a.origin = "a";
    NormalizedUnit b = normalize_lines(text_b);
    b.origin = "b";
    auto pairs = detect_clones(a, b, CloneParams{});
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].fragment_a.start_line == 1); // "a" sits on original line 1
    CHECK(pairs[0].fragment_a.end_line == 7);
    CHECK(pairs[0].fragment_b.start_line == 0);
    CHECK(pairs[0].fragment_b.end_line == 7);
    for (const auto& chunk : pairs[0].chunks) {
        CHECK(chunk.a_first_line >= 0);
        CHECK(chunk.a_last_line < 9);
    }
}
