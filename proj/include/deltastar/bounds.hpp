#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace deltastar {

struct BoundOptions {
    // Largest primorial numerator, in decimal digits, computed exactly.
    std::size_t digit_budget = 20000;
    // Working precision of the directed-rounding enclosure used beyond it.
    unsigned enclosure_bits = 256;
};

// r >= C * prod_{p <= C} p / (p - 1), with r_min the least such integer.
//
// When the product fits the digit budget it is exact and
// threshold_lower == threshold_upper. Otherwise the thresholds are a rigorous
// enclosure and r_min is reported only because both ends share a ceiling.
struct BoundReport {
    std::uint64_t c = 0;
    std::vector<std::uint64_t> primes;
    std::optional<mpq_class> product;
    mpq_class threshold_lower;
    mpq_class threshold_upper;
    mpz_class r_min;

    bool exact() const { return product.has_value(); }
};

// Exact prod_{p <= c} p / (p - 1) in lowest terms; 1 for c < 2.
// Throws resource_exhausted when the numerator would exceed the digit budget.
mpq_class mertens_product(std::uint64_t c, const BoundOptions& options = {});

// Throws invalid_argument for c == 0, indeterminate when the enclosure is too
// wide to pin the ceiling.
BoundReport delta_r_bound(std::uint64_t c, const BoundOptions& options = {});

// Least integer >= q.
mpz_class ceil(const mpq_class& q);

// Non-negative q rounded half-up to `places` decimals, e.g. "720.96".
std::string to_decimal(const mpq_class& q, unsigned places);

// Decimal rendering of the threshold; throws indeterminate if the enclosure
// ends disagree at this many places.
std::string threshold_decimal(const BoundReport& report, unsigned places = 2);

}  // namespace deltastar
