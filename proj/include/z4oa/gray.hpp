#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "z4oa/common.hpp"
#include "z4oa/oa.hpp"
#include "z4oa/z4.hpp"

namespace z4oa {

// A set of binary words of length m, packed one bit per coordinate with
// coordinate 0 in the most significant bit.
struct BinaryCode {
    int m = 0;
    std::vector<PackedWord> words;  // sorted
    std::optional<bool> linear;     // cached by is_linear_binary
};

// Coordinatewise Gray map Z4 -> Z2^2: 0 -> 00, 1 -> 01, 2 -> 11, 3 -> 10.
Word gray(const Word& w);

// Packed form: Z4 lane (hi,lo) maps to the bit pair (hi, hi XOR lo), which
// lands exactly on the same two bit positions.  Sends Lee weight to Hamming
// weight lane by lane.
PackedWord gray_packed(PackedWord p);

// Image of every codeword; the Gray map is injective, so |image| = |C|.
BinaryCode gray_image(const Z4Code& c);

BinaryCode binary_code_from_words(const std::vector<Word>& rows, int m);

// Is the set closed under XOR (and non-empty, containing 0)?
bool is_linear_binary(BinaryCode& c);

int binary_weight(PackedWord w);
int min_hamming_weight(const BinaryCode& c);

std::vector<Word> unpacked_words(const BinaryCode& c);
OaArray to_array(const BinaryCode& c);

}  // namespace z4oa
