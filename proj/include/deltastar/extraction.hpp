#pragma once

#include "deltastar/error.hpp"
#include "deltastar/integer_set.hpp"
#include "deltastar/tuples.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace deltastar {

// strict removes the sparsest class at every prime even when it is empty;
// optimized skips primes that already have an unoccupied class.
enum class RefineMode { strict, optimized };

std::string_view to_string(RefineMode mode) noexcept;
// Throws invalid_argument for anything but "strict" / "optimized".
RefineMode parse_refine_mode(std::string_view text);

struct RemovalStep {
    std::uint64_t p = 0;
    std::uint64_t residue = 0;
    std::uint64_t removed = 0;
    std::uint64_t remaining = 0;
    bool skipped = false;

    friend bool operator==(const RemovalStep&, const RemovalStep&) = default;
};

// One step per prime p <= k, in increasing p.
using SieveTrace = std::vector<RemovalStep>;

struct ExtractionResult {
    RefineMode mode = RefineMode::strict;
    std::uint64_t k = 0;
    IntegerSet survivors;
    SieveTrace trace;
    KTuple tuple;  // the k smallest survivors
};

struct ResidueCount {
    std::uint64_t residue = 0;
    std::uint64_t count = 0;
};

class ExtractionFailed : public Error {
public:
    ExtractionFailed(const std::string& message, SieveTrace trace, IntegerSet survivors)
        : Error(ErrorCode::extraction_failed, message),
          trace_(std::move(trace)),
          survivors_(std::move(survivors)) {}

    const SieveTrace& trace() const noexcept { return trace_; }
    const IntegerSet& survivors() const noexcept { return survivors_; }

private:
    SieveTrace trace_;
    IntegerSet survivors_;
};

// Least r with r >= k * prod_{p <= k} p / (p - 1). Throws overflow above 64 bits.
std::uint64_t required_cardinality(std::uint64_t k);

// Residue class mod p with the fewest members of set; ties go to the smallest
// residue. By pigeonhole count <= floor(|set| / p).
ResidueCount min_count_residue(const IntegerSet& set, std::uint64_t p);

std::pair<IntegerSet, RemovalStep> refine_once(const IntegerSet& set, std::uint64_t p, RefineMode mode);

struct ExtractOptions {
    RefineMode mode = RefineMode::strict;
    // Skip the cardinality precondition. Failure then surfaces as
    // ExtractionFailed instead of insufficient_cardinality.
    bool force = false;
};

ExtractionResult extract_admissible_set(const IntegerSet& set, std::uint64_t k,
                                        const ExtractOptions& options = {});

}  // namespace deltastar
