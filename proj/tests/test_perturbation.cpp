#include "ptcubic/errors.hpp"
#include "ptcubic/perturbation.hpp"
#include "ptcubic/reference_values.hpp"

#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

using namespace ptcubic;
namespace fs = std::filesystem;

namespace {

// Fresh scratch directory per test case, removed on scope exit.
struct TempDir {
    fs::path path;
    TempDir() {
        static std::mt19937_64 rng{std::random_device{}()};
        path = fs::temp_directory_path() /
               ("ptcubic-test-" + std::to_string(rng()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spit(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

} // namespace

TEST_SUITE_BEGIN("perturbation");

TEST_CASE("the first twenty coefficients are exact") {
    const PerturbationSeries series = compute_coefficients(20);
    REQUIRE(series.max_order == 20);
    for (int n = 1; n <= 20; ++n)
        CHECK(series.b(n).str() == reference::kCoefficients[static_cast<size_t>(n) - 1]);
    CHECK(series.e0 == Rat(1, 2));
    CHECK(series.hamiltonian_tag == kHamiltonianTag);
}

TEST_CASE("small and empty series") {
    const PerturbationSeries two = compute_coefficients(2);
    REQUIRE(two.max_order == 2);
    CHECK(two.b(1) == 11);
    CHECK(two.b(2) == -930);

    const PerturbationSeries empty = compute_coefficients(0);
    CHECK(empty.max_order == 0);
    CHECK(empty.coefficients.empty());
    CHECK(empty.e0 == Rat(1, 2));
}

TEST_CASE("odd-order energy corrections vanish") {
    RecursionState state;
    CHECK(state.energy.at(0) == Rat(1, 2));
    while (state.order < 24) advance_order(state);
    for (int k = 1; k <= 24; k += 2) CHECK(state.energy.at(static_cast<size_t>(k)) == 0);
    // and the even ones reproduce the coefficients: b_n = (-1)^n E_{2n}
    const PerturbationSeries series = compute_coefficients(12);
    for (int n = 1; n <= 12; ++n) {
        const Rat expected = (n % 2 == 0 ? Rat(1) : Rat(-1)) *
                             state.energy.at(static_cast<size_t>(2 * n));
        CHECK(Rat(series.b(n)) == expected);
    }
}

TEST_CASE("recursion polynomials carry the expected shape") {
    RecursionState state;
    while (state.order < 6) advance_order(state);
    for (int k = 0; k <= 6; ++k) {
        const auto& poly = state.poly.at(static_cast<size_t>(k));
        REQUIRE(static_cast<int>(poly.size()) == 3 * k + 1);
        if (k > 0) {
            CHECK(poly.at(0) == 0); // P_k(0) = 0
            CHECK(poly.back() != 0); // degree exactly 3k
            // P_k only holds powers of the same parity as 3k
            for (int m = 3 * k - 1; m >= 0; m -= 2)
                CHECK(poly.at(static_cast<size_t>(m)) == 0);
        }
    }
}

TEST_CASE("signs alternate strictly") {
    const PerturbationSeries series = compute_coefficients(30);
    for (int n = 1; n <= 30; ++n) {
        if (n % 2 == 1)
            CHECK(series.b(n) > 0);
        else
            CHECK(series.b(n) < 0);
    }
}

TEST_CASE("order ceiling guards runaway requests") {
    CHECK_THROWS_AS(compute_coefficients(kDefaultOrderCeiling + 1), ResourceError);
    CHECK_THROWS_AS(compute_coefficients(10, 5), ResourceError);
    CHECK_NOTHROW(compute_coefficients(5, 5));
}

TEST_CASE("cache roundtrip is byte-exact") {
    TempDir tmp;
    const fs::path file = tmp.path / "bn_cache.txt";
    const PerturbationSeries series = compute_coefficients(46);
    write_cache(series, file);

    const std::string first = slurp(file);
    CHECK(first.substr(0, std::string(kCacheHeaderPrefix).size() +
                              series.hamiltonian_tag.size() + 1) ==
          std::string(kCacheHeaderPrefix) + series.hamiltonian_tag + "\n");
    CHECK(first.back() == '\n');

    const PerturbationSeries back = read_cache(file);
    CHECK(back.max_order == 46);
    CHECK(back.hamiltonian_tag == series.hamiltonian_tag);
    for (int n = 1; n <= 46; ++n) CHECK(back.b(n) == series.b(n));

    write_cache(back, file); // rewrite from the parsed copy
    CHECK(slurp(file) == first);
}

TEST_CASE("header-only cache reads as an empty series") {
    TempDir tmp;
    const fs::path file = tmp.path / "bn_cache.txt";
    spit(file, std::string(kCacheHeaderPrefix) + kHamiltonianTag + "\n");
    const PerturbationSeries series = read_cache(file);
    CHECK(series.max_order == 0);
    CHECK(series.hamiltonian_tag == kHamiltonianTag);
}

TEST_CASE("tampered cache sign is caught by validation only") {
    TempDir tmp;
    const fs::path file = tmp.path / "bn_cache.txt";
    write_cache(compute_coefficients(6), file);

    std::string text = slurp(file);
    const auto pos = text.find("-930");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 4, "930"); // flip the sign of b_2
    spit(file, text);

    CHECK_THROWS_WITH_AS(read_cache(file),
                         doctest::Contains("n = 2"), CacheError);
    const PerturbationSeries lax = read_cache_unvalidated(file);
    CHECK(lax.b(2) == 930);
}

TEST_CASE("cache format violations name the line") {
    TempDir tmp;
    const fs::path file = tmp.path / "bn_cache.txt";
    const std::string header = std::string(kCacheHeaderPrefix) + kHamiltonianTag + "\n";

    SUBCASE("wrong header") {
        spit(file, "bncache v2 something\n1\t11\n");
        CHECK_THROWS_WITH_AS(read_cache(file), doctest::Contains("line 1"), CacheError);
    }
    SUBCASE("missing trailing newline") {
        spit(file, header + "1\t11");
        CHECK_THROWS_AS(read_cache(file), CacheError);
    }
    SUBCASE("non-contiguous index") {
        spit(file, header + "1\t11\n3\t158836\n");
        CHECK_THROWS_WITH_AS(read_cache(file), doctest::Contains("line 3"), CacheError);
    }
    SUBCASE("junk row") {
        spit(file, header + "1\t11\n2 -930\n");
        CHECK_THROWS_WITH_AS(read_cache(file), doctest::Contains("line 3"), CacheError);
    }
    SUBCASE("missing file") {
        CHECK_THROWS_AS(read_cache(tmp.path / "absent.txt"), CacheError);
    }
    SUBCASE("leading zeros in a value stay decimal") {
        spit(file, header + "1\t011\n");
        CHECK(read_cache_unvalidated(file).b(1) == 11);
    }
}

TEST_CASE("write_cache refuses a foreign cache file") {
    TempDir tmp;
    const fs::path file = tmp.path / "bn_cache.txt";
    spit(file, std::string(kCacheHeaderPrefix) + "some+other+hamiltonian\n1\t5\n");
    CHECK_THROWS_AS(write_cache(compute_coefficients(3), file), CacheError);
    // but an unreadable non-cache path is still an error, not an overwrite
    CHECK(slurp(file).find("some+other") != std::string::npos);
}

TEST_SUITE_END();
