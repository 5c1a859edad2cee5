#include "deltastar/diffsets.hpp"
#include "deltastar/error.hpp"
#include "deltastar/witness.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace deltastar;

namespace {

using Vec = std::vector<std::uint64_t>;

Vec hit_positions(const std::vector<TupleScanHit>& hits) {
    Vec out;
    for (const auto& h : hits) out.push_back(h.n);
    return out;
}

}  // namespace

TEST_SUITE("witness") {

TEST_CASE("twin tuple hits") {
    const auto hits = scan_tuple_witnesses(KTuple(Vec{0, 2}), 10, 100);
    REQUIRE(hits.size() == 2);
    CHECK(hits[0] == TupleScanHit{3, {0, 1}, {3, 5}});
    CHECK(hits[1] == TupleScanHit{5, {0, 1}, {5, 7}});
}

TEST_CASE("admissible six-tuple has a full hit at n = 7") {
    const KTuple six(Vec{0, 4, 6, 10, 12, 16});
    const auto hits = scan_tuple_witnesses(six, 10, 100);
    CHECK(hit_positions(hits) == oracle::hits(Vec(six.begin(), six.end()), 10));
    const auto seven = std::find_if(hits.begin(), hits.end(), [](const auto& h) { return h.n == 7; });
    REQUIRE(seven != hits.end());
    CHECK(seven->primes == Vec{7, 11, 13, 17, 19, 23});
    CHECK(seven->offsets.size() == 6);
}

TEST_CASE("admissibility is not required") {
    const auto hits = scan_tuple_witnesses(KTuple(Vec{0, 1}), 3, 100);
    REQUIRE(hits.size() == 1);
    CHECK(hits[0] == TupleScanHit{2, {0, 1}, {2, 3}});
}

TEST_CASE("max hits stops the scan and parallel blocks keep order") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        std::set<std::uint64_t> s;
        const std::size_t k = 2 + rng() % 6;
        while (s.size() < k) s.insert(rng() % 60);
        const KTuple tuple(Vec(s.begin(), s.end()));
        const Vec expected = oracle::hits(Vec(s.begin(), s.end()), 3000);

        TupleScanOptions o;
        o.threads = 3;
        o.block = 1 + rng() % 500;
        REQUIRE(hit_positions(scan_tuple_witnesses(tuple, 3000, 1'000'000, o)) == expected);

        const std::uint64_t cap = 1 + rng() % 10;
        const auto capped = scan_tuple_witnesses(tuple, 3000, cap, o);
        REQUIRE(capped.size() == std::min<std::size_t>(cap, expected.size()));
        for (std::size_t i = 0; i < capped.size(); ++i) {
            REQUIRE(capped[i].n == expected[i]);
            REQUIRE(capped[i].primes.size() >= 2);
            for (std::uint64_t p : capped[i].primes) REQUIRE(oracle::trial_division(p));
        }

        TupleScanOptions no_table;
        no_table.sieve.memory_budget_bytes = 0;
        REQUIRE(hit_positions(scan_tuple_witnesses(tuple, 3000, 1'000'000, no_table)) == expected);
    }
}

TEST_CASE("scan argument errors") {
    CHECK_THROWS_AS(scan_tuple_witnesses(KTuple(Vec{0, 2}), 10, 0), Error);
    CHECK_THROWS_AS(scan_tuple_witnesses(KTuple(Vec{0, 2}), ~std::uint64_t{0}, 1), Error);
    CHECK(scan_tuple_witnesses(KTuple(Vec{0, 1}), 1, 5).empty());
}

TEST_CASE("demo on 0..8 with C = 3") {
    const IntegerSet s = IntegerSet::range(0, 8);
    const DeltaDemoReport r = delta_r_star_demo(s, 3, 100);
    CHECK(r.input_size == 9);
    CHECK(r.k == 3);
    CHECK(r.tuple == KTuple(Vec{0, 2, 6}));
    // n = 1 gives 1, 3, 7: the first n with two primes.
    CHECK(r.hit.n == oracle::hits({0, 2, 6}, 100).front());
    CHECK(r.hit.n == 1);
    CHECK(r.witness_pair == std::pair<std::uint64_t, std::uint64_t>{3, 7});
    CHECK(r.realized_difference == 4);
    CHECK(difference_set(s).contains(r.realized_difference));
}

TEST_CASE("demo on 0..18 with C = 5") {
    const IntegerSet s = IntegerSet::range(0, 18);
    const DeltaDemoReport r = delta_r_star_demo(s, 5, 10'000);
    CHECK(r.tuple == KTuple(Vec{2, 6, 8, 12, 14}));
    CHECK(r.hit.n == 1);
    CHECK(r.hit.primes == Vec{3, 7, 13});
    CHECK(r.realized_difference == 4);
    CHECK(difference_set(s).contains(r.realized_difference));
}

TEST_CASE("demo invariants on random sets") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const std::uint64_t c = 2 + rng() % 12;
        std::set<std::uint64_t> values;
        while (values.size() < required_cardinality(c)) values.insert(rng() % 5000);
        const IntegerSet s = IntegerSet::from_sorted(Vec(values.begin(), values.end()));
        const DeltaDemoReport r = delta_r_star_demo(s, c, 100'000);
        REQUIRE(difference_set(s).contains(r.realized_difference));
        REQUIRE(oracle::trial_division(r.witness_pair.first));
        REQUIRE(oracle::trial_division(r.witness_pair.second));
        REQUIRE(r.witness_pair.second - r.witness_pair.first == r.realized_difference);
        REQUIRE(is_admissible(r.tuple).admissible);
        const DeltaDemoReport again = delta_r_star_demo(s, c, 100'000);
        REQUIRE(again.hit == r.hit);
        REQUIRE(again.tuple == r.tuple);
    }
}

TEST_CASE("demo errors") {
    try {
        (void)delta_r_star_demo(IntegerSet::range(0, 7), 3, 100);
        FAIL("expected insufficient_cardinality");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::insufficient_cardinality);
    }
    // Tuple {0, 2, 6}: n = 0 gives only the prime 2.
    try {
        (void)delta_r_star_demo(IntegerSet::range(0, 8), 3, 0);
        FAIL("expected no_witness");
    } catch (const NoWitness& e) {
        CHECK(e.code() == ErrorCode::no_witness);
        CHECK(e.tuple() == KTuple(Vec{0, 2, 6}));
    }
}

}
