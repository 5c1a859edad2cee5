#pragma once

#include "deltastar/integer_set.hpp"
#include "deltastar/primes.hpp"

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace deltastar {

// {b - a : a, b in set, b > a}
IntegerSet difference_set(const IntegerSet& set);

// Whether d is a positive difference of two members, in O(|set| log |set|).
bool has_difference(const IntegerSet& set, std::uint64_t d);

struct ScanOptions {
    // Listed pairs are truncated here; WitnessReport::count stays exact.
    std::size_t max_pairs = 1000;
    // 0 = hardware concurrency.
    unsigned threads = 1;
    SieveOptions sieve;
};

// Prime pairs (q, q + d) with q + d <= N. Finite evidence only: a pair below N
// says nothing about whether d has infinitely many representations.
struct WitnessReport {
    std::uint64_t d = 0;
    std::uint64_t scan_bound = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    std::uint64_t count = 0;

    bool truncated() const noexcept { return count > pairs.size(); }
};

// Odd d is allowed; the only candidate pair is then (2, 2 + d).
WitnessReport prime_pairs_with_difference(std::uint64_t d, std::uint64_t scan_bound,
                                          const ScanOptions& options = {});

// {d <= max_d : some primes q < q' <= N have q' - q = d}
IntegerSet realized_differences(std::uint64_t scan_bound, std::uint64_t max_d, const ScanOptions& options = {});

// Largest gap between consecutive members of set + {0}, counting the tail
// gap up to range_end.
std::uint64_t max_gap(const IntegerSet& set, std::uint64_t range_end);

}  // namespace deltastar
