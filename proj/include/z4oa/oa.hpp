#pragma once

#include <optional>
#include <vector>

#include "z4oa/common.hpp"

namespace z4oa {

// Dense tally tables are capped at 2^20 cells (alphabet^t per column subset).
inline constexpr std::uint64_t kMaxTallyCells = 1u << 20;

// An N x k array over the alphabet {0, .., f-1}. Rows form a multiset.
struct OaArray {
    int rows = 0;
    int cols = 0;
    int alphabet = 0;
    std::vector<Symbol> cells;  // row-major, rows*cols entries

    Symbol at(int r, int c) const {
        return cells[static_cast<std::size_t>(r) * cols + c];
    }
};

OaArray make_array(const std::vector<Word>& rows, int alphabet);

// Why a t-column projection is not uniform: the lexicographically least
// failing column subset, and within it the tuple of minimum count
// (ties broken toward the lexicographically least tuple).
struct OaFailure {
    std::vector<int> columns;
    Word tuple;
    long long count = 0;
};

struct OaCheck {
    std::optional<long long> index;   // lambda, set on success
    std::optional<OaFailure> failure; // set on failure
    bool ok() const { return index.has_value(); }
};

// Checks whether every N x t subarray contains each t-tuple equally often.
// t = 0 always succeeds with lambda = N.
OaCheck is_oa_at(const OaArray& a, int t);

struct OaReport {
    int strength = 0;
    long long index = 0;                // lambda at `strength`
    std::optional<OaFailure> failure;   // witness for strength+1; absent when strength = cols
};

// Largest t for which is_oa_at succeeds. Searches upward from t = 0 and
// stops at the first failure (strength is downward closed).
OaReport strength(const OaArray& a);

// f^{t-s} * lambda_t, cross-checked against the directly counted index at s.
long long index_at(const OaArray& a, int s, int t, long long lambda_t);

// Re-validates a recorded failure witness against the array.
bool failure_matches(const OaArray& a, const OaFailure& f);

}  // namespace z4oa
