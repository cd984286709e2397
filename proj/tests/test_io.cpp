#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "wit/analysis.hpp"
#include "wit/constructions.hpp"
#include "wit/io.hpp"
#include "wit/solver.hpp"

using namespace wit;
using nlohmann::json;

namespace {

std::string write_code_string(const Code& code) {
    std::ostringstream os;
    write_code_file(os, code);
    return os.str();
}

std::string write_block_string(const SetFamily& family) {
    std::ostringstream os;
    write_block_file(os, family);
    return os.str();
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("wit-test-" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("code file round-trip is byte-identical") {
    Code code = sphere(5, 2);
    std::string first = write_code_string(code);
    std::istringstream in(first);
    CodeFileContents parsed = read_code_file(in);
    CHECK(parsed.code() == code);
    CHECK(write_code_string(parsed.code()) == first);
}

TEST_CASE("code file parsing") {
    std::istringstream ok("# comment\nn 3\n101\n# another\n010\n");
    CodeFileContents c = read_code_file(ok);
    CHECK(c.n == 3);
    REQUIRE(c.words.size() == 2);
    CHECK(c.words[0].str() == "101");  // file order preserved
    CHECK(c.words[1].str() == "010");

    std::istringstream empty_code("n 4\n");
    CHECK(read_code_file(empty_code).words.empty());

    std::istringstream dup("n 3\n101\n101\n");
    CHECK_THROWS_AS(read_code_file(dup), ParseError);
    std::istringstream bad_len("n 3\n1011\n");
    CHECK_THROWS_AS(read_code_file(bad_len), ParseError);
    std::istringstream bad_char("n 3\n1x1\n");
    CHECK_THROWS_AS(read_code_file(bad_char), ParseError);
    std::istringstream bad_n("n 65\n");
    CHECK_THROWS_AS(read_code_file(bad_n), ParseError);
    std::istringstream no_header("101\n");
    CHECK_THROWS_AS(read_code_file(no_header), ParseError);
}

TEST_CASE("block file round-trip is byte-identical") {
    SetFamily family = steiner_3_4_8();
    std::string first = write_block_string(family);
    std::istringstream in(first);
    SetFamily parsed = read_block_file(in);
    REQUIRE(parsed.size() == family.size());
    for (std::size_t i = 0; i < family.size(); ++i) CHECK(parsed.blocks()[i] == family.blocks()[i]);
    CHECK(write_block_string(parsed) == first);
}

TEST_CASE("block file parsing") {
    std::istringstream ok("n 6\n1 3 5\n2 4\n");
    SetFamily f = read_block_file(ok);
    CHECK(f.length() == 6);
    REQUIRE(f.size() == 2);
    CHECK(f.blocks()[0] == CoordSet::of(6, {1, 3, 5}));

    std::istringstream dup("n 4\n1 2\n1 2\n");
    CHECK_THROWS_AS(read_block_file(dup), ParseError);
    std::istringstream unsorted("n 4\n2 1\n");
    CHECK_THROWS_AS(read_block_file(unsorted), ParseError);
    std::istringstream out_of_range("n 4\n1 5\n");
    CHECK_THROWS_AS(read_block_file(out_of_range), ParseError);
    std::istringstream junk("n 4\n1 two\n");
    CHECK_THROWS_AS(read_block_file(junk), ParseError);
}

TEST_CASE("rational and report JSON") {
    json r = to_json(Rational(10, 3));
    CHECK(r["num"] == "10");
    CHECK(r["den"] == "3");

    BoundReport report = bounds_report(4, 2);
    json j = to_json(report);
    CHECK(j["n"] == 4);
    CHECK(j["best_lower"] == "6");
    CHECK(j["best_upper"] == "16");
    CHECK(j["lower"].is_array());

    MeanStats stats = mean_stats(sphere(4, 2), 2);
    json s = to_json(stats);
    CHECK(s["gamma"]["num"] == "2");
    CHECK(s["gamma"]["den"] == "1");
    CHECK(s["witness_counts"]["1100"] == 2);
    CHECK(s["window_counts"]["{1,2}"] == 2);

    SolverResult result = f_exact(3, 1);
    json sr = to_json(result);
    CHECK(sr["value"] == "3");
    CHECK(sr["status"] == "exact");
    CHECK(sr["deterministic"] == true);
    CHECK(sr["certificate"].size() == 3);

    json pr = to_json(open_problem_probe(1));
    CHECK(pr["matches_sphere"] == true);
    CHECK(pr["implied"].is_array());

    json wp = to_json(witness_profile(sphere(4, 2)));
    CHECK(wp["parameter"] == 2);
}

TEST_CASE("cache JSON round-trip") {
    ExactValueCache cache;
    cache.insert(CacheKey{4, 2, std::nullopt},
                 CacheEntry{BigInt(8), CacheStatus::Exact, "solver:enumeration",
                            std::string(kToolVersion), "2025-06-07T00:00:00Z"});
    cache.insert(CacheKey{5, 2, 2},
                 CacheEntry{BigInt(10), CacheStatus::Exact, "solver:branch-and-bound",
                            std::string(kToolVersion), "2025-06-07T00:00:01Z"});
    cache.insert(CacheKey{6, 3, std::nullopt},
                 CacheEntry{BigInt(21), CacheStatus::LowerBound, "probe", "", ""});

    json j = cache_to_json(cache);
    CHECK(j["entries"].contains("4,2"));
    CHECK(j["entries"].contains("5,2,2"));
    CHECK(j["entries"]["4,2"]["status"] == "exact");

    ExactValueCache back = cache_from_json(j);
    REQUIRE(back.size() == 3);
    const CacheEntry* e = back.find(CacheKey{5, 2, 2});
    REQUIRE(e != nullptr);
    CHECK(e->value == 10);
    CHECK(e->status == CacheStatus::Exact);
    CHECK(cache_to_json(back) == j);
}

TEST_CASE("cache persistence") {
    TempDir dir;
    const auto path = dir.path / "cache.json";

    CHECK(load_cache(path).size() == 0);  // missing file is an empty cache

    ExactValueCache cache;
    cache.insert(CacheKey{2, 1, std::nullopt},
                 CacheEntry{BigInt(2), CacheStatus::Exact, "solver", "0.1.0", iso8601_now()});
    save_cache(path, cache);
    CHECK(std::filesystem::exists(path));
    CHECK(!std::filesystem::exists(dir.path / "cache.json.tmp"));

    ExactValueCache loaded = load_cache(path);
    REQUIRE(loaded.size() == 1);
    CHECK(loaded.find(CacheKey{2, 1, std::nullopt})->value == 2);

    // merge keeps the strongest status
    ExactValueCache weaker;
    weaker.insert(CacheKey{2, 1, std::nullopt},
                  CacheEntry{BigInt(1), CacheStatus::LowerBound, "probe", "", iso8601_now()});
    loaded.merge(weaker);
    CHECK(loaded.find(CacheKey{2, 1, std::nullopt})->status == CacheStatus::Exact);

    std::ofstream bad(path);
    bad << "{ not json";
    bad.close();
    CHECK_THROWS_AS(load_cache(path), ParseError);
}

TEST_CASE("iso8601_now shape") {
    std::string t = iso8601_now();
    REQUIRE(t.size() == 20);
    CHECK(t[4] == '-');
    CHECK(t[10] == 'T');
    CHECK(t.back() == 'Z');
}
