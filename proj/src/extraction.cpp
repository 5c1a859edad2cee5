#include "deltastar/extraction.hpp"

#include "deltastar/bounds.hpp"
#include "deltastar/primes.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace deltastar {

std::string_view to_string(RefineMode mode) noexcept {
    return mode == RefineMode::strict ? "strict" : "optimized";
}

RefineMode parse_refine_mode(std::string_view text) {
    if (text == "strict") return RefineMode::strict;
    if (text == "optimized") return RefineMode::optimized;
    throw Error(ErrorCode::invalid_argument, "unknown mode '" + std::string(text) + "'");
}

std::uint64_t required_cardinality(std::uint64_t k) {
    if (k == 0) throw Error(ErrorCode::invalid_argument, "k must be positive");
    const mpz_class r = delta_r_bound(k).r_min;
    if (!r.fits_ulong_p() || sizeof(unsigned long) < sizeof(std::uint64_t)) {
        throw Error(ErrorCode::overflow,
                    "required cardinality for k=" + std::to_string(k) + " exceeds 64 bits");
    }
    return r.get_ui();
}

ResidueCount min_count_residue(const IntegerSet& set, std::uint64_t p) {
    if (set.empty()) throw Error(ErrorCode::empty_set, "residue count of an empty set");
    if (!is_prime(p)) throw Error(ErrorCode::not_prime, std::to_string(p) + " is not prime");

    if (p > set.size()) {
        // Some class is empty; find the smallest one without a length-p table.
        std::vector<std::uint64_t> residues;
        residues.reserve(set.size());
        for (std::uint64_t v : set) residues.push_back(v % p);
        std::sort(residues.begin(), residues.end());
        residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
        std::uint64_t b = 0;
        while (b < residues.size() && residues[b] == b) ++b;
        return {b, 0};
    }

    std::vector<std::uint64_t> counts(p, 0);
    for (std::uint64_t v : set) ++counts[v % p];
    const auto it = std::min_element(counts.begin(), counts.end());
    return {static_cast<std::uint64_t>(it - counts.begin()), *it};
}

std::pair<IntegerSet, RemovalStep> refine_once(const IntegerSet& set, std::uint64_t p, RefineMode mode) {
    const ResidueCount sparse = min_count_residue(set, p);
    RemovalStep step{p, sparse.residue, 0, set.size(), false};
    if (sparse.count == 0) {
        step.skipped = mode == RefineMode::optimized;
        return {set, step};
    }

    std::vector<std::uint64_t> kept;
    kept.reserve(set.size() - sparse.count);
    for (std::uint64_t v : set) {
        if (v % p != sparse.residue) kept.push_back(v);
    }
    step.removed = sparse.count;
    step.remaining = kept.size();
    return {IntegerSet::from_sorted(std::move(kept)), step};
}

ExtractionResult extract_admissible_set(const IntegerSet& set, std::uint64_t k, const ExtractOptions& options) {
    if (k == 0) throw Error(ErrorCode::invalid_argument, "k must be positive");
    if (!options.force) {
        const std::uint64_t required = required_cardinality(k);
        if (set.size() < required) {
            throw Error(ErrorCode::insufficient_cardinality,
                        "set has " + std::to_string(set.size()) + " elements; k=" + std::to_string(k) +
                            " needs at least " + std::to_string(required));
        }
    }

    SieveTrace trace;
    IntegerSet current = set;
    for (std::uint64_t p : primes_up_to(k)) {
        if (current.empty()) {
            throw ExtractionFailed("set exhausted before prime " + std::to_string(p), std::move(trace),
                                   std::move(current));
        }
        auto [next, step] = refine_once(current, p, options.mode);
        current = std::move(next);
        trace.push_back(step);
    }

    if (current.size() < k) {
        throw ExtractionFailed("only " + std::to_string(current.size()) + " survivors for k=" + std::to_string(k),
                               std::move(trace), std::move(current));
    }

    std::vector<std::uint64_t> smallest(current.begin(), current.begin() + static_cast<std::ptrdiff_t>(k));
    return ExtractionResult{options.mode, k, std::move(current), std::move(trace), KTuple(std::move(smallest))};
}

}  // namespace deltastar
