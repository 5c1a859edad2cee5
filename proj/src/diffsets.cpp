#include "deltastar/diffsets.hpp"

#include "deltastar/error.hpp"

#include <algorithm>
#include <string>
#include <thread>

namespace deltastar {

namespace {

constexpr std::uint64_t kBitmapSpan = std::uint64_t{1} << 26;

unsigned resolve_threads(unsigned requested) {
    return requested == 0 ? std::max(1U, std::thread::hardware_concurrency()) : requested;
}

bool table_fits(std::uint64_t limit, const SieveOptions& sieve) {
    return limit / 64 + 1 <= sieve.memory_budget_bytes / 8;
}

template <typename Fn>
void parallel_for(unsigned threads, std::uint64_t tasks, Fn&& fn) {
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, tasks));
    if (threads <= 1) {
        for (std::uint64_t t = 0; t < tasks; ++t) fn(t);
        return;
    }
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            for (std::uint64_t t = w; t < tasks; t += threads) fn(t);
        });
    }
}

struct Chunk {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    std::uint64_t count = 0;
};

}  // namespace

IntegerSet difference_set(const IntegerSet& set) {
    if (set.size() < 2) return {};
    const std::uint64_t span = set.max() - set.min();
    std::vector<std::uint64_t> diffs;
    if (span <= kBitmapSpan) {
        std::vector<bool> seen(span + 1, false);
        const auto values = set.values();
        for (std::size_t j = 1; j < values.size(); ++j) {
            for (std::size_t i = 0; i < j; ++i) seen[values[j] - values[i]] = true;
        }
        for (std::uint64_t d = 1; d <= span; ++d) {
            if (seen[d]) diffs.push_back(d);
        }
    } else {
        const auto values = set.values();
        diffs.reserve(values.size() * (values.size() - 1) / 2);
        for (std::size_t j = 1; j < values.size(); ++j) {
            for (std::size_t i = 0; i < j; ++i) diffs.push_back(values[j] - values[i]);
        }
        std::sort(diffs.begin(), diffs.end());
        diffs.erase(std::unique(diffs.begin(), diffs.end()), diffs.end());
    }
    return IntegerSet::from_sorted(std::move(diffs));
}

bool has_difference(const IntegerSet& set, std::uint64_t d) {
    if (d == 0) return false;
    for (std::uint64_t a : set) {
        if (a > set.max() - d) break;
        if (set.contains(a + d)) return true;
    }
    return false;
}

WitnessReport prime_pairs_with_difference(std::uint64_t d, std::uint64_t scan_bound, const ScanOptions& options) {
    if (d == 0) throw Error(ErrorCode::invalid_argument, "difference d must be positive");
    WitnessReport report{d, scan_bound, {}, 0};
    if (scan_bound < 2 || d > scan_bound - 2) return report;

    if (d % 2 == 1) {
        if (is_prime(2 + d)) {
            report.pairs.emplace_back(2, 2 + d);
            report.count = 1;
        }
        if (options.max_pairs == 0) report.pairs.clear();
        return report;
    }

    // Odd q only: q = 2 would need the even number 2 + d to be prime.
    const std::uint64_t last_q = scan_bound - d;
    const bool use_table = table_fits(scan_bound, options.sieve);
    const PrimeTable table = use_table ? sieve_primes(scan_bound, options.sieve) : PrimeTable{};

    const unsigned threads = resolve_threads(options.threads);
    const std::uint64_t chunk_count = std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads * 4ULL, last_q / 4096 + 1));
    const std::uint64_t chunk_len = (last_q - 2) / chunk_count + 1;
    std::vector<Chunk> chunks(chunk_count);

    parallel_for(threads, chunk_count, [&](std::uint64_t c) {
        const std::uint64_t lo = 3 + c * chunk_len;
        const std::uint64_t hi = std::min(last_q, lo + chunk_len - 1);
        Chunk& out = chunks[c];
        for (std::uint64_t q = lo | 1U; q <= hi && q >= lo; q += 2) {
            const bool both = use_table ? table.contains(q) && table.contains(q + d) : is_prime(q) && is_prime(q + d);
            if (!both) continue;
            ++out.count;
            if (out.pairs.size() < options.max_pairs) out.pairs.emplace_back(q, q + d);
        }
    });

    for (auto& chunk : chunks) {
        report.count += chunk.count;
        for (const auto& pair : chunk.pairs) {
            if (report.pairs.size() >= options.max_pairs) break;
            report.pairs.push_back(pair);
        }
    }
    return report;
}

IntegerSet realized_differences(std::uint64_t scan_bound, std::uint64_t max_d, const ScanOptions& options) {
    if (scan_bound < 2 || max_d == 0) return {};
    const PrimeTable table = sieve_primes(scan_bound, options.sieve);
    const std::vector<std::uint64_t> primes = table.primes();

    std::vector<char> hit(max_d + 1, 0);
    parallel_for(resolve_threads(options.threads), max_d, [&](std::uint64_t task) {
        const std::uint64_t d = task + 1;
        if (d > scan_bound - 2) return;
        if (d % 2 == 1) {
            hit[d] = table.contains(2 + d);
            return;
        }
        for (std::size_t i = 1; i < primes.size() && primes[i] <= scan_bound - d; ++i) {
            if (table.contains(primes[i] + d)) {
                hit[d] = 1;
                return;
            }
        }
    });

    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 1; d <= max_d; ++d) {
        if (hit[d]) out.push_back(d);
    }
    return IntegerSet::from_sorted(std::move(out));
}

std::uint64_t max_gap(const IntegerSet& set, std::uint64_t range_end) {
    if (set.empty()) throw Error(ErrorCode::empty_set, "max_gap of an empty set");
    if (set.max() > range_end) {
        throw Error(ErrorCode::invalid_argument,
                    "element " + std::to_string(set.max()) + " exceeds range end " + std::to_string(range_end));
    }
    std::uint64_t previous = 0;
    std::uint64_t widest = 0;
    for (std::uint64_t v : set) {
        widest = std::max(widest, v - previous);
        previous = v;
    }
    return std::max(widest, range_end - previous);
}

}  // namespace deltastar
