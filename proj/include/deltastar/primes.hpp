#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace deltastar {

struct SieveOptions {
    // Bytes of membership bits processed per segment. Rounded up to a whole
    // number of 64-bit words. Correctness does not depend on it.
    std::size_t segment_bytes = 32 * 1024;
    // Upper bound on the membership array size; exceeding it is a
    // resource_exhausted error.
    std::uint64_t memory_budget_bytes = std::uint64_t{2} << 30;
    // 0 = std::thread::hardware_concurrency().
    unsigned threads = 1;
};

// Immutable bit table of primality for every integer in [0, limit].
class PrimeTable {
public:
    PrimeTable() = default;

    std::uint64_t limit() const noexcept { return limit_; }

    // Precondition: n <= limit(). Out-of-range queries throw.
    bool contains(std::uint64_t n) const;

    // pi(x) for x <= limit().
    std::uint64_t count_up_to(std::uint64_t x) const;
    std::uint64_t count() const { return count_up_to(limit_); }

    std::vector<std::uint64_t> primes() const { return primes_in(0, limit_); }
    // Primes in [lo, hi], hi clamped to limit().
    std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) const;

    // Smallest prime >= n, or 0 if none is <= limit().
    std::uint64_t next_prime(std::uint64_t n) const;

    const std::vector<std::uint64_t>& words() const noexcept { return bits_; }

private:
    friend PrimeTable sieve_primes(std::uint64_t, const SieveOptions&);

    std::uint64_t limit_ = 0;
    std::vector<std::uint64_t> bits_{0};
};

PrimeTable sieve_primes(std::uint64_t limit, const SieveOptions& options = {});

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit, const SieveOptions& options = {});

// Deterministic Miller-Rabin with the first twelve primes as bases, which is
// exact for every n < 3.3e24 and therefore for all 64-bit inputs.
bool is_prime(std::uint64_t n) noexcept;

// Table lookup when n <= table.limit(), Miller-Rabin otherwise.
bool is_prime(std::uint64_t n, const PrimeTable& table) noexcept;

}  // namespace deltastar
