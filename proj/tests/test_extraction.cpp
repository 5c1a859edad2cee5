#include "deltastar/error.hpp"
#include "deltastar/extraction.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace deltastar;

namespace {

using Vec = std::vector<std::uint64_t>;

IntegerSet random_set(std::mt19937_64& rng, std::size_t size, std::uint64_t bound) {
    std::set<std::uint64_t> s;
    while (s.size() < size) s.insert(rng() % bound);
    return IntegerSet::from_sorted(Vec(s.begin(), s.end()));
}

bool covers_every_class(const IntegerSet& set, std::uint64_t p) {
    std::set<std::uint64_t> classes;
    for (std::uint64_t v : set) classes.insert(v % p);
    return classes.size() == p;
}

}  // namespace

TEST_SUITE("extraction") {

TEST_CASE("required cardinality") {
    CHECK(required_cardinality(1) == 1);
    CHECK(required_cardinality(2) == 4);
    CHECK(required_cardinality(3) == 9);
    CHECK(required_cardinality(5) == 19);
    CHECK(required_cardinality(50) == 361);
    for (std::uint64_t k = 1; k <= 120; ++k) {
        const auto expected = oracle::ceil(oracle::Rational(k) * oracle::euler_product(k));
        REQUIRE(required_cardinality(k) == expected.convert_to<std::uint64_t>());
    }
    CHECK_THROWS_AS(required_cardinality(0), Error);
}

TEST_CASE("min_count_residue") {
    const IntegerSet nine = IntegerSet::range(0, 8);
    auto r = min_count_residue(nine, 2);
    CHECK(r.residue == 1);
    CHECK(r.count == 4);

    r = min_count_residue(IntegerSet::from_sorted({0, 2, 4, 6, 8}), 3);
    CHECK(r.residue == 1);
    CHECK(r.count == 1);

    r = min_count_residue(IntegerSet::from_sorted({5}), 2);
    CHECK(r.residue == 0);
    CHECK(r.count == 0);

    // Large-p path: p > |A| finds the smallest empty class without a table.
    r = min_count_residue(IntegerSet::from_sorted({0, 1, 3}), 1'000'003);
    CHECK(r.residue == 2);
    CHECK(r.count == 0);

    CHECK_THROWS_AS(min_count_residue(IntegerSet{}, 2), Error);
    CHECK_THROWS_AS(min_count_residue(nine, 9), Error);
}

TEST_CASE("min_count_residue ties go to the smallest class") {
    // residues mod 3: 0 -> {3}, 1 -> {1}, 2 -> {2, 5}
    const auto r = min_count_residue(IntegerSet::from_sorted({1, 2, 3, 5}), 3);
    CHECK(r.residue == 0);
    CHECK(r.count == 1);
}

TEST_CASE("refine_once") {
    const IntegerSet nine = IntegerSet::range(0, 8);
    auto [out, step] = refine_once(nine, 2, RefineMode::strict);
    CHECK(out == IntegerSet::from_sorted({0, 2, 4, 6, 8}));
    CHECK(step == RemovalStep{2, 1, 4, 5, false});

    const IntegerSet small = IntegerSet::from_sorted({0, 2, 4});
    auto [opt, opt_step] = refine_once(small, 5, RefineMode::optimized);
    CHECK(opt == small);
    CHECK(opt_step.skipped);
    CHECK(opt_step.removed == 0);

    auto [strict, strict_step] = refine_once(small, 5, RefineMode::strict);
    CHECK(strict == small);
    CHECK(strict_step == RemovalStep{5, 1, 0, 3, false});

    CHECK_THROWS_AS(refine_once(IntegerSet{}, 2, RefineMode::strict), Error);
}

TEST_CASE("extraction on 0..8 with k = 3") {
    const ExtractionResult r = extract_admissible_set(IntegerSet::range(0, 8), 3);
    CHECK(r.survivors == IntegerSet::from_sorted({0, 2, 6, 8}));
    REQUIRE(r.trace.size() == 2);
    CHECK(r.trace[0] == RemovalStep{2, 1, 4, 5, false});
    CHECK(r.trace[1] == RemovalStep{3, 1, 1, 4, false});
    CHECK(r.tuple == KTuple(Vec{0, 2, 6}));
    CHECK(is_admissible(r.tuple).admissible);
}

TEST_CASE("k = 1 has an empty trace") {
    const ExtractionResult r = extract_admissible_set(IntegerSet::range(0, 8), 1);
    CHECK(r.trace.empty());
    CHECK(r.tuple.size() == 1);
}

TEST_CASE("insufficient cardinality and forced failure") {
    const IntegerSet eight = IntegerSet::range(0, 7);
    try {
        (void)extract_admissible_set(eight, 3);
        FAIL("expected insufficient_cardinality");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::insufficient_cardinality);
    }

    // Forcing works when the set happens to be good enough.
    const auto forced = extract_admissible_set(eight, 3, {RefineMode::strict, true});
    CHECK(forced.survivors.size() >= 3);

    // {0, 1, 2} loses a class at p = 2 and another at p = 3.
    try {
        (void)extract_admissible_set(IntegerSet::range(0, 2), 3, {RefineMode::strict, true});
        FAIL("expected extraction_failed");
    } catch (const ExtractionFailed& e) {
        CHECK(e.code() == ErrorCode::extraction_failed);
        CHECK(e.trace().size() == 2);
        CHECK(e.survivors().size() < 3);
    }
}

TEST_CASE("any 361-element set yields an admissible 50-tuple") {
    std::mt19937_64 rng(50);
    for (int trial = 0; trial < 20; ++trial) {
        const IntegerSet a = random_set(rng, 361, 100'000);
        const ExtractionResult r = extract_admissible_set(a, 50);
        REQUIRE(r.tuple.size() == 50);
        const Vec h(r.tuple.begin(), r.tuple.end());
        REQUIRE(is_admissible(r.tuple).admissible);
        for (std::uint64_t p : oracle::primes_to(50)) REQUIRE_FALSE(oracle::covers_all_roots(h, p));
    }
    const ExtractionResult full = extract_admissible_set(IntegerSet::range(0, 720), 50);
    CHECK(is_admissible(full.tuple).admissible);
}

TEST_CASE("per-step and cumulative bounds, coverage, sufficiency") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::uint64_t k = 1 + rng() % 20;
        const std::size_t size = required_cardinality(k) + rng() % 5;
        const IntegerSet a = random_set(rng, size, 1'000'000);
        const RefineMode mode = trial % 2 ? RefineMode::strict : RefineMode::optimized;
        const ExtractionResult r = extract_admissible_set(a, k, {mode, false});

        const auto primes = oracle::primes_to(k);
        REQUIRE(r.trace.size() == primes.size());
        std::uint64_t before = a.size();
        for (std::size_t i = 0; i < r.trace.size(); ++i) {
            const RemovalStep& s = r.trace[i];
            REQUIRE(s.p == primes[i]);
            REQUIRE(s.removed <= before / s.p);
            REQUIRE(s.remaining == before - s.removed);
            before = s.remaining;
        }

        oracle::Rational floor_bound = oracle::Rational(a.size());
        for (std::uint64_t p : primes) floor_bound *= oracle::Rational(p - 1, p);
        REQUIRE(oracle::Rational(r.survivors.size()) >= floor_bound);
        REQUIRE(r.survivors.size() >= k);
        REQUIRE(r.survivors.is_subset_of(a));
        for (std::uint64_t p : primes) REQUIRE_FALSE(covers_every_class(r.survivors, p));
        REQUIRE(is_admissible(r.tuple).admissible);
    }
}

TEST_CASE("optimized keeps everything strict keeps") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        const std::uint64_t k = 2 + rng() % 25;
        const IntegerSet a = random_set(rng, required_cardinality(k) + rng() % 40, 2000);
        const auto strict = extract_admissible_set(a, k, {RefineMode::strict, false});
        const auto optimized = extract_admissible_set(a, k, {RefineMode::optimized, false});
        REQUIRE(strict.survivors.is_subset_of(optimized.survivors));
    }
}

TEST_CASE("mode parsing") {
    CHECK(parse_refine_mode("strict") == RefineMode::strict);
    CHECK(parse_refine_mode("optimized") == RefineMode::optimized);
    CHECK_THROWS_AS(parse_refine_mode("greedy"), Error);
}

}
