#include "deltastar/witness.hpp"

#include "deltastar/error.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

namespace deltastar {

namespace {

struct BlockResult {
    std::vector<TupleScanHit> hits;
};

}  // namespace

std::vector<TupleScanHit> scan_tuple_witnesses(const KTuple& tuple, std::uint64_t scan_bound,
                                               std::uint64_t max_hits, const TupleScanOptions& options) {
    if (max_hits == 0) throw Error(ErrorCode::invalid_argument, "hit count must be positive");
    if (scan_bound > std::numeric_limits<std::uint64_t>::max() - tuple.back()) {
        throw Error(ErrorCode::overflow, "scan bound plus tuple diameter exceeds 64 bits");
    }

    const std::uint64_t top = scan_bound + tuple.back();
    const bool use_table = top / 64 + 1 <= options.sieve.memory_budget_bytes / 8;
    const PrimeTable table = use_table ? sieve_primes(top, options.sieve) : PrimeTable{};
    auto prime = [&](std::uint64_t v) { return use_table ? table.contains(v) : is_prime(v); };

    const std::uint64_t block = std::max<std::uint64_t>(1, options.block);
    const std::uint64_t blocks = scan_bound / block + 1;
    const unsigned threads = options.threads == 0 ? std::max(1U, std::thread::hardware_concurrency())
                                                  : options.threads;

    auto scan_block = [&](std::uint64_t b, BlockResult& out) {
        const std::uint64_t lo = b * block;
        const std::uint64_t hi = std::min(scan_bound, lo + block - 1);
        TupleScanHit candidate;
        for (std::uint64_t n = lo; n <= hi; ++n) {
            candidate.offsets.clear();
            candidate.primes.clear();
            for (std::size_t i = 0; i < tuple.size(); ++i) {
                if (prime(n + tuple[i])) {
                    candidate.offsets.push_back(i);
                    candidate.primes.push_back(n + tuple[i]);
                }
            }
            if (candidate.offsets.size() >= 2) {
                candidate.n = n;
                out.hits.push_back(candidate);
                if (out.hits.size() >= max_hits) return;
            }
            if (n == hi) break;
        }
    };

    // Blocks are scanned in rounds; results are merged in block order so the
    // output matches a sequential scan.
    std::vector<TupleScanHit> hits;
    for (std::uint64_t first = 0; first < blocks && hits.size() < max_hits; first += threads) {
        const std::uint64_t round = std::min<std::uint64_t>(threads, blocks - first);
        std::vector<BlockResult> results(round);
        if (round == 1) {
            scan_block(first, results[0]);
        } else {
            std::vector<std::jthread> pool;
            for (std::uint64_t r = 0; r < round; ++r) {
                pool.emplace_back([&, r] { scan_block(first + r, results[r]); });
            }
        }
        for (auto& result : results) {
            for (auto& hit : result.hits) {
                if (hits.size() >= max_hits) break;
                hits.push_back(std::move(hit));
            }
        }
    }
    return hits;
}

DeltaDemoReport delta_r_star_demo(const IntegerSet& set, std::uint64_t c, std::uint64_t scan_bound,
                                  const TupleScanOptions& options) {
    ExtractionResult extraction = extract_admissible_set(set, c);
    auto hits = scan_tuple_witnesses(extraction.tuple, scan_bound, 1, options);
    if (hits.empty()) {
        throw NoWitness("no n <= " + std::to_string(scan_bound) + " gives two primes for the extracted tuple",
                        extraction.tuple);
    }

    TupleScanHit hit = std::move(hits.front());
    const std::uint64_t q = hit.primes[0];
    const std::uint64_t q2 = hit.primes[1];
    const std::uint64_t difference = q2 - q;
    if (!has_difference(set, difference)) {
        throw std::logic_error("realized difference " + std::to_string(difference) + " is not in the difference set");
    }
    return DeltaDemoReport{set.size(), c, std::move(extraction.tuple), std::move(hit), difference, {q, q2}};
}

}  // namespace deltastar
