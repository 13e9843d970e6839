#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "aprime/constructions.hpp"
#include "aprime/error.hpp"
#include "aprime/ring_io.hpp"

using namespace aprime;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
    const auto dir = fs::temp_directory_path() / ("aprime-io-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                                  "-" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir);
    return dir;
}

ErrorCode code_of(std::string_view text) {
    try {
        parse_ring_text(text);
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected a failure";
    return ErrorCode::IoError;
}

} // namespace

TEST(RingFile, ShippedExample) {
    const auto r = parse_ring_file(fs::path(APRIME_DATA_DIR) / "ex-2-1-ii.json");
    EXPECT_EQ(r->labels(), (std::vector<std::string>{"0", "a", "b", "c"}));
    EXPECT_TRUE(r->same_tables(*builtin_example("ex-2-1-ii")));
    EXPECT_FALSE(r->commutative());
    EXPECT_FALSE(r->has_identity());
}

TEST(RingFile, ShapeMismatch) {
    EXPECT_EQ(code_of(R"({"name": "bad", "order": 2,
        "add": [[0,1,2],[1,2,0],[2,0,1]], "mul": [[0,0,0],[0,1,2],[0,2,1]]})"),
              ErrorCode::BadTableShape);
}

TEST(RingFile, SyntaxErrorHasLineAndColumn) {
    try {
        parse_ring_text("{\n  \"name\": \"x\",\n  \"order\": ,\n}");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ParseError);
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
        EXPECT_NE(std::string(e.what()).find("column"), std::string::npos);
    }
}

TEST(RingFile, SchemaErrors) {
    EXPECT_EQ(code_of(R"([1,2])"), ErrorCode::ParseError);
    EXPECT_EQ(code_of(R"({"order": 1, "add": [[0]], "mul": [[0]]})"), ErrorCode::ParseError);
    EXPECT_EQ(code_of(R"({"name": "x", "order": 1, "add": [[0]]})"), ErrorCode::ParseError);
    EXPECT_EQ(code_of(R"({"name": "x", "order": 1, "add": [["0"]], "mul": [[0]]})"), ErrorCode::ParseError);
    EXPECT_EQ(code_of(R"({"name": "x", "order": 1, "add": [[0]], "mul": [[0]], "labels": [1]})"), ErrorCode::ParseError);
    EXPECT_EQ(code_of(R"({"name": "x", "order": 2, "add": [[0,1],[1,0]], "mul": [[0,0],[0,0]], "labels": ["z"]})"),
              ErrorCode::BadTableShape);
}

TEST(RingFile, ValidationErrorsAreDelegated) {
    EXPECT_EQ(code_of(R"({"name": "z4bad", "order": 4,
        "add": [[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]],
        "mul": [[0,0,0,0],[0,1,2,3],[0,2,0,1],[0,3,2,1]]})"),
              ErrorCode::NotDistributive);
}

TEST(RingFile, RoundTripIsByteStable) {
    const auto dir = temp_dir();
    for (const char* spec : {"zmod:6", "matrix:2:2", "paper:ex-2-1-ii", "product:zmod:2,zmod:3"}) {
        const auto r = generate(spec).ring;
        const auto path = dir / "ring.json";
        write_ring_file(*r, path);
        const auto back = parse_ring_file(path);
        EXPECT_TRUE(back->same_tables(*r)) << spec;
        EXPECT_EQ(back->labels(), r->labels());
        EXPECT_EQ(back->name(), r->name());
        EXPECT_EQ(ring_to_text(*back), ring_to_text(*r));
    }
    fs::remove_all(dir);
}

TEST(RingFile, CanonicalLayout) {
    const auto text = ring_to_text(*zmod(2));
    EXPECT_EQ(text, "{\n  \"name\": \"zmod:2\",\n  \"order\": 2,\n  \"add\": [\n    [0, 1],\n    [1, 0]\n  ],\n"
                    "  \"mul\": [\n    [0, 0],\n    [0, 1]\n  ]\n}\n");
}

TEST(RingFile, MissingFileIsIoError) {
    try {
        parse_ring_file("/nonexistent/ring.json");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::IoError);
    }
}

TEST(Generate, Specs) {
    EXPECT_EQ(generate("zmod:12").ring->order(), 12u);
    EXPECT_EQ(generate("matrix:2:2").ring->order(), 16u);
    EXPECT_EQ(generate("tri:3:2").ring->order(), 27u);
    EXPECT_EQ(generate("paper:ex-2-1-iv-zp(3)").ring->order(), 27u);
    const auto p = generate("product:zmod:4,zmod:9");
    EXPECT_EQ(p.name, "product:zmod:4,zmod:9");
    ASSERT_TRUE(p.product);
    EXPECT_EQ(p.product->left->order(), 4u);
    EXPECT_EQ(p.product->right->order(), 9u);
    for (const char* bad : {"zmod", "zmod:x", "zmod:", "matrix:2", "foo:1", "product:zmod:2", "paper:nope"}) {
        try {
            generate(bad);
            ADD_FAILURE() << bad;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::UnknownName) << bad;
        }
    }
    try {
        generate("zmod:65");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::OrderTooLarge);
    }
    EXPECT_EQ(generate("zmod:65", 100).ring->order(), 65u);
}

TEST(Corpus, DefaultAndDirectory) {
    const auto& specs = default_corpus_specs();
    EXPECT_EQ(specs.size(), 23u);
    EXPECT_EQ(specs.front(), "zmod:2");
    EXPECT_EQ(specs.back(), "product:zmod:4,zmod:9");

    const auto dir = temp_dir();
    write_ring_file(*zmod(3), dir / "b.json");
    write_ring_file(*zmod(2), dir / "a.json");
    std::ofstream(dir / "notes.txt") << "ignored";
    const auto corpus = load_corpus(dir.string());
    ASSERT_EQ(corpus.size(), 2u);
    EXPECT_EQ(corpus[0].name, "a.json");
    EXPECT_EQ(corpus[1].ring->order(), 3u);
    EXPECT_THROW(load_corpus((dir / "missing").string()), Error);
    fs::remove_all(dir);
}

TEST(HomFile, ParsesAndValidates) {
    const auto dir = temp_dir();
    write_ring_file(*zmod(4), dir / "z4.json");
    {
        std::ofstream(dir / "f.json") << R"({"domain": "z4.json", "codomain": "zmod:2", "map": [0, 1, 0, 1]})";
        std::ofstream(dir / "g.json") << R"({"domain": "zmod:4", "codomain": "zmod:4", "map": [0, 2, 0, 2]})";
    }
    const auto f = parse_hom_file(dir / "f.json");
    EXPECT_TRUE(f.surjective);
    EXPECT_EQ(kernel(f).subset.to_string(), "{0,2}");
    try {
        parse_hom_file(dir / "g.json");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotMultiplicative);
    }
    fs::remove_all(dir);
}
