#include "deltastar/tuples.hpp"

#include "deltastar/error.hpp"
#include "deltastar/primes.hpp"

#include <algorithm>
#include <string>

namespace deltastar {

KTuple::KTuple(std::vector<std::uint64_t> elements) : elements_(std::move(elements)) {
    if (elements_.empty()) throw Error(ErrorCode::invalid_argument, "tuple must have at least one element");
    for (std::size_t i = 1; i < elements_.size(); ++i) {
        if (elements_[i] <= elements_[i - 1]) {
            throw Error(ErrorCode::invalid_argument,
                        "tuple must be strictly increasing (" + std::to_string(elements_[i - 1]) +
                            " followed by " + std::to_string(elements_[i]) + ")");
        }
    }
}

namespace {

// Number of distinct classes h mod p; stops early once all p are covered.
std::size_t count_residues(const KTuple& tuple, std::uint64_t p, std::vector<char>& seen) {
    seen.assign(p, 0);
    std::size_t distinct = 0;
    for (std::uint64_t h : tuple) {
        char& slot = seen[h % p];
        if (!slot) {
            slot = 1;
            if (++distinct == p) break;
        }
    }
    return distinct;
}

}  // namespace

std::vector<std::uint64_t> occupied_residues(const KTuple& tuple, std::uint64_t p) {
    if (!is_prime(p)) throw Error(ErrorCode::not_prime, std::to_string(p) + " is not prime");
    std::vector<std::uint64_t> residues;
    residues.reserve(std::min<std::uint64_t>(tuple.size(), p));
    for (std::uint64_t h : tuple) residues.push_back(h % p);
    std::sort(residues.begin(), residues.end());
    residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
    return residues;
}

AdmissibilityVerdict is_admissible(const KTuple& tuple) {
    std::vector<char> seen;
    for (std::uint64_t p : primes_up_to(tuple.size())) {
        if (count_residues(tuple, p, seen) == p) return {false, p};
    }
    return {};
}

}  // namespace deltastar
