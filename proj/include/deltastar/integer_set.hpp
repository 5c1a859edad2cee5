#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace deltastar {

// Sorted set of distinct non-negative integers.
class IntegerSet {
public:
    IntegerSet() = default;

    // Sorts; throws duplicate_element naming the first repeated value.
    static IntegerSet from_unsorted(std::vector<std::uint64_t> values);
    // Throws invalid_argument unless strictly increasing.
    static IntegerSet from_sorted(std::vector<std::uint64_t> values);
    // {lo, lo+1, ..., hi}
    static IntegerSet range(std::uint64_t lo, std::uint64_t hi);

    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    bool contains(std::uint64_t v) const;
    std::span<const std::uint64_t> values() const noexcept { return values_; }
    std::uint64_t operator[](std::size_t i) const { return values_[i]; }
    std::uint64_t min() const { return values_.front(); }
    std::uint64_t max() const { return values_.back(); }

    auto begin() const noexcept { return values_.begin(); }
    auto end() const noexcept { return values_.end(); }

    bool is_subset_of(const IntegerSet& other) const;

    friend bool operator==(const IntegerSet&, const IntegerSet&) = default;

private:
    std::vector<std::uint64_t> values_;
};

}  // namespace deltastar
