#include "deltastar/primes.hpp"

#include "deltastar/error.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <string>
#include <thread>

namespace deltastar {

namespace {

constexpr std::uint64_t kWordBits = 64;

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

std::vector<std::uint64_t> small_primes(std::uint64_t limit) {
    std::vector<char> composite(limit + 1, 0);
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
    }
    return out;
}

// Sieves the numbers [lo, hi) into words starting at bits[lo / 64].
// lo is a multiple of 64.
void sieve_segment(std::vector<std::uint64_t>& bits, std::uint64_t lo, std::uint64_t hi,
                   const std::vector<std::uint64_t>& base) {
    const std::uint64_t first_word = lo / kWordBits;
    const std::uint64_t last_word = (hi - 1) / kWordBits;
    std::fill(bits.begin() + static_cast<std::ptrdiff_t>(first_word),
              bits.begin() + static_cast<std::ptrdiff_t>(last_word + 1), ~std::uint64_t{0});

    for (std::uint64_t p : base) {
        if (p * p >= hi) break;
        std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
        for (std::uint64_t m = start; m < hi; m += p) {
            bits[m / kWordBits] &= ~(std::uint64_t{1} << (m % kWordBits));
        }
    }
    if (lo == 0) bits[0] &= ~std::uint64_t{3};
}

}  // namespace

bool PrimeTable::contains(std::uint64_t n) const {
    if (n > limit_) {
        throw Error(ErrorCode::invalid_argument,
                    "prime table query " + std::to_string(n) + " exceeds limit " +
                        std::to_string(limit_));
    }
    return (bits_[n / kWordBits] >> (n % kWordBits)) & 1U;
}

std::uint64_t PrimeTable::count_up_to(std::uint64_t x) const {
    x = std::min(x, limit_);
    const std::uint64_t full = (x + 1) / kWordBits;
    std::uint64_t total = 0;
    for (std::uint64_t w = 0; w < full; ++w) total += std::popcount(bits_[w]);
    const std::uint64_t rem = (x + 1) % kWordBits;
    if (rem != 0) total += std::popcount(bits_[full] & ((std::uint64_t{1} << rem) - 1));
    return total;
}

std::vector<std::uint64_t> PrimeTable::primes_in(std::uint64_t lo, std::uint64_t hi) const {
    std::vector<std::uint64_t> out;
    hi = std::min(hi, limit_);
    if (lo > hi) return out;
    for (std::uint64_t w = lo / kWordBits; w <= hi / kWordBits; ++w) {
        std::uint64_t word = bits_[w];
        while (word != 0) {
            const std::uint64_t n = w * kWordBits + static_cast<std::uint64_t>(std::countr_zero(word));
            word &= word - 1;
            if (n < lo) continue;
            if (n > hi) return out;
            out.push_back(n);
        }
    }
    return out;
}

std::uint64_t PrimeTable::next_prime(std::uint64_t n) const {
    if (n > limit_) return 0;
    std::uint64_t w = n / kWordBits;
    std::uint64_t word = bits_[w] & (~std::uint64_t{0} << (n % kWordBits));
    const std::uint64_t last = limit_ / kWordBits;
    while (true) {
        if (word != 0) {
            const std::uint64_t p = w * kWordBits + static_cast<std::uint64_t>(std::countr_zero(word));
            return p <= limit_ ? p : 0;
        }
        if (++w > last) return 0;
        word = bits_[w];
    }
}

PrimeTable sieve_primes(std::uint64_t limit, const SieveOptions& options) {
    if (limit / kWordBits + 1 > options.memory_budget_bytes / 8) {
        throw Error(ErrorCode::resource_exhausted,
                    "sieve limit " + std::to_string(limit) + " exceeds memory budget of " +
                        std::to_string(options.memory_budget_bytes) + " bytes");
    }

    PrimeTable table;
    table.limit_ = limit;
    const std::uint64_t words = limit / kWordBits + 1;
    table.bits_.assign(words, 0);

    const auto base = small_primes(isqrt(limit));
    const std::uint64_t end = words * kWordBits;  // exclusive, word aligned
    const std::uint64_t segment_bits =
        std::max<std::uint64_t>(kWordBits, (options.segment_bytes * 8 + kWordBits - 1) / kWordBits * kWordBits);
    const std::uint64_t segments = (end + segment_bits - 1) / segment_bits;

    auto run = [&](std::uint64_t first, std::uint64_t stride) {
        for (std::uint64_t s = first; s < segments; s += stride) {
            const std::uint64_t lo = s * segment_bits;
            sieve_segment(table.bits_, lo, std::min(end, lo + segment_bits), base);
        }
    };

    unsigned threads = options.threads == 0 ? std::max(1U, std::thread::hardware_concurrency())
                                            : options.threads;
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, segments));
    if (threads <= 1) {
        run(0, 1);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(run, t, threads);
    }

    const std::uint64_t tail = (limit + 1) % kWordBits;
    if (tail != 0) table.bits_.back() &= (std::uint64_t{1} << tail) - 1;
    return table;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit, const SieveOptions& options) {
    return sieve_primes(limit, options).primes();
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1;
    base %= m;
    while (exp != 0) {
        if (exp & 1U) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

constexpr std::array<std::uint64_t, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t p : kWitnesses) {
        if (n % p == 0) return n == p;
    }
    if (n < 41 * 41) return true;

    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1U) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : kWitnesses) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

bool is_prime(std::uint64_t n, const PrimeTable& table) noexcept {
    if (n <= table.limit()) return table.contains(n);
    return is_prime(n);
}

}  // namespace deltastar
