#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace z4oa {

// A symbol is a small alphabet letter: a ring element id, a Z4 digit, or a bit.
using Symbol = std::uint8_t;

// A word is a fixed-length tuple of symbols.
using Word = std::vector<Symbol>;

// Words are also kept packed base-|alphabet| into a u64 with coordinate 0 in
// the most significant digit, so integer order equals lexicographic order.
using PackedWord = std::uint64_t;

// Thrown when an operation would exceed its enumeration budget.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// base^exp with overflow detection; throws BudgetError when the result
// would exceed `limit`.
std::uint64_t checked_pow(std::uint64_t base, int exp, std::uint64_t limit,
                          const std::string& context);

PackedWord pack_word(const Word& w, int alphabet);
Word unpack_word(PackedWord p, int n, int alphabet);

// splitmix64 step; used to derive per-instance seeds deterministically.
std::uint64_t mix64(std::uint64_t x);

std::string word_to_string(const Word& w);

}  // namespace z4oa
