#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace deltastar {

// Strictly increasing tuple h_1 < h_2 < ... < h_k with k >= 1.
class KTuple {
public:
    // Throws invalid_argument if elements is empty or not strictly increasing.
    explicit KTuple(std::vector<std::uint64_t> elements);

    std::size_t size() const noexcept { return elements_.size(); }
    std::span<const std::uint64_t> elements() const noexcept { return elements_; }
    std::uint64_t operator[](std::size_t i) const { return elements_[i]; }
    std::uint64_t front() const { return elements_.front(); }
    std::uint64_t back() const { return elements_.back(); }
    std::uint64_t diameter() const { return back() - front(); }

    auto begin() const noexcept { return elements_.begin(); }
    auto end() const noexcept { return elements_.end(); }

    friend bool operator==(const KTuple&, const KTuple&) = default;

private:
    std::vector<std::uint64_t> elements_;
};

struct AdmissibilityVerdict {
    bool admissible = true;
    // Smallest prime p whose residues are all hit by the tuple; set iff not
    // admissible, and always <= k.
    std::optional<std::uint64_t> obstruction;
};

// The sorted residues {h_i mod p}.
//
// The roots of prod (n + h_i) mod p are {-h_i mod p}. Negation is a
// permutation of Z/pZ, so {-h_i} covers every class iff {h_i} does, and the
// two sets always have the same size.
//
// Throws not_prime if p is not prime.
std::vector<std::uint64_t> occupied_residues(const KTuple& tuple, std::uint64_t p);

// A prime p > k cannot be covered by k residues, so only p <= k are checked.
AdmissibilityVerdict is_admissible(const KTuple& tuple);

}  // namespace deltastar
