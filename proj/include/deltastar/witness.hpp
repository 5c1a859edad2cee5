#pragma once

#include "deltastar/diffsets.hpp"
#include "deltastar/extraction.hpp"
#include "deltastar/integer_set.hpp"
#include "deltastar/tuples.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace deltastar {

// n such that at least two of n + h_i are prime.
struct TupleScanHit {
    std::uint64_t n = 0;
    std::vector<std::size_t> offsets;  // indices i with n + h_i prime
    std::vector<std::uint64_t> primes;

    friend bool operator==(const TupleScanHit&, const TupleScanHit&) = default;
};

struct TupleScanOptions {
    unsigned threads = 1;  // 0 = hardware concurrency
    std::uint64_t block = 1 << 16;
    SieveOptions sieve;
};

// Hits with 0 <= n <= scan_bound in increasing n, stopping once max_hits are
// found. Admissibility is not required. An empty result only means no hit
// below the bound.
std::vector<TupleScanHit> scan_tuple_witnesses(const KTuple& tuple, std::uint64_t scan_bound,
                                               std::uint64_t max_hits, const TupleScanOptions& options = {});

struct DeltaDemoReport {
    std::uint64_t input_size = 0;
    std::uint64_t k = 0;
    KTuple tuple;
    TupleScanHit hit;
    std::uint64_t realized_difference = 0;
    std::pair<std::uint64_t, std::uint64_t> witness_pair;
};

class NoWitness : public Error {
public:
    NoWitness(const std::string& message, KTuple tuple)
        : Error(ErrorCode::no_witness, message), tuple_(std::move(tuple)) {}
    const KTuple& tuple() const noexcept { return tuple_; }

private:
    KTuple tuple_;
};

// Extracts an admissible C-tuple from set (strict mode), finds the first n
// giving two primes n + h_i < n + h_j, and reports h_j - h_i together with
// that prime pair. Throws insufficient_cardinality or NoWitness.
DeltaDemoReport delta_r_star_demo(const IntegerSet& set, std::uint64_t c, std::uint64_t scan_bound,
                                  const TupleScanOptions& options = {});

}  // namespace deltastar
