#include "deltastar/integer_set.hpp"

#include "deltastar/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace deltastar {

IntegerSet IntegerSet::from_unsorted(std::vector<std::uint64_t> values) {
    std::sort(values.begin(), values.end());
    auto dup = std::adjacent_find(values.begin(), values.end());
    if (dup != values.end()) {
        throw Error(ErrorCode::duplicate_element, "duplicate element " + std::to_string(*dup));
    }
    IntegerSet set;
    set.values_ = std::move(values);
    return set;
}

IntegerSet IntegerSet::from_sorted(std::vector<std::uint64_t> values) {
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] <= values[i - 1]) {
            throw Error(ErrorCode::invalid_argument, "set elements must be strictly increasing");
        }
    }
    IntegerSet set;
    set.values_ = std::move(values);
    return set;
}

IntegerSet IntegerSet::range(std::uint64_t lo, std::uint64_t hi) {
    IntegerSet set;
    if (hi < lo) return set;
    set.values_.resize(hi - lo + 1);
    std::iota(set.values_.begin(), set.values_.end(), lo);
    return set;
}

bool IntegerSet::contains(std::uint64_t v) const {
    return std::binary_search(values_.begin(), values_.end(), v);
}

bool IntegerSet::is_subset_of(const IntegerSet& other) const {
    return std::includes(other.values_.begin(), other.values_.end(), values_.begin(), values_.end());
}

}  // namespace deltastar
