#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "z4oa/common.hpp"
#include "z4oa/oa.hpp"

namespace z4oa {

// z4_dual scans Z4^n; 4^12 is the advisory ceiling (n <= 12).
inline constexpr std::uint64_t kMaxZ4Scan = 1ull << 24;

// --- packed Z4 words -------------------------------------------------------
//
// A length-n Z4 word packs into 2-bit lanes of a u64, coordinate 0 in the
// most significant lane, so integer order equals lexicographic order.
// Lane arithmetic is carry-free SWAR on the lane masks below.

inline std::uint64_t z4_lo_mask(int n) {
    return 0x5555555555555555ull >> (64 - 2 * n);
}

inline PackedWord z4_add(PackedWord a, PackedWord b, std::uint64_t lo) {
    return a ^ b ^ ((a & b & lo) << 1);
}

inline PackedWord z4_neg(PackedWord a, std::uint64_t lo) {
    return a ^ ((a & lo) << 1);
}

inline PackedWord z4_scale(PackedWord a, int s, std::uint64_t lo) {
    switch (s & 3) {
        case 0: return 0;
        case 1: return a;
        case 2: return (a & lo) << 1;
        default: return z4_neg(a, lo);
    }
}

inline int z4_hamming_weight(PackedWord a, std::uint64_t lo) {
    return __builtin_popcountll((a | (a >> 1)) & lo);
}

// Per-symbol Lee weights are 0,1,2,1; summed they are the popcount of the
// packed Gray image (see gray.hpp).
inline int z4_lee_weight(PackedWord a, std::uint64_t lo) {
    return __builtin_popcountll(a & (lo << 1)) +
           __builtin_popcountll(((a >> 1) ^ a) & lo);
}

PackedWord z4_pack(const Word& w);
Word z4_unpack(PackedWord p, int n);

// --- symbol-level Lee metric ------------------------------------------------

int lee_weight(Symbol s);
int lee_weight(const Word& w);
int lee_distance(const Word& u, const Word& v);

// --- Z4-linear codes ---------------------------------------------------------

struct Z4Code {
    int n = 0;
    std::vector<Word> generators;
    std::vector<PackedWord> words;  // sorted, packed
    // (k1, k2) for codes built in standard form; |words| = 4^k1 * 2^k2.
    std::optional<std::pair<int, int>> type_exponents;
};

// Span of the rows of G inside Z4^n.
Z4Code z4_code_from_matrix(const std::vector<Word>& rows, int n);

// Brute-force orthogonality scan over Z4^n; asserts |C| * |C_dual| = 4^n.
Z4Code z4_dual(const Z4Code& c, std::uint64_t scan_budget = kMaxZ4Scan);

// Minimum Lee weight over non-zero codewords; 2n+1 for the zero code.
int min_lee_weight(const Z4Code& c);
int min_hamming_weight(const Z4Code& c);

// (k1, k2) with |C| = 4^k1 * 2^k2, via k1 = log2 |2C|.
std::pair<int, int> z4_type(const Z4Code& c);

// Greedy minimal-ish generating set, deterministic over the sorted words.
std::vector<Word> z4_generating_set(const std::vector<PackedWord>& words, int n);

// --- standard form -----------------------------------------------------------
//
// G = [ I_k1  A  B ]     A: k1 x k2 over Z4,  B: k1 x k3 over Z4,
//     [ 0   2I  2C ]     C: k2 x k3 over Z2,  k3 = n - k1 - k2.

struct Z4StandardForm {
    int n = 0, k1 = 0, k2 = 0;
    std::vector<Word> a;  // k1 rows of length k2
    std::vector<Word> b;  // k1 rows of length k3
    std::vector<Word> c;  // k2 rows of length k3

    int k3() const { return n - k1 - k2; }
};

Z4StandardForm random_standard_form(int n, int k1, int k2, std::uint64_t seed);
std::vector<Word> standard_form_matrix(const Z4StandardForm& sf);
Z4Code standard_form_code(const Z4StandardForm& sf);

// Dual via the closed-form parity-check matrix
// H = [ -(B^T + C^T A^T)  C^T  I_k3 ; 2A^T  2I_k2  0 ].
Z4Code standard_form_dual(const Z4StandardForm& sf);

Z4Code random_z4_code(int n, int k1, int k2, std::uint64_t seed);

std::vector<Word> unpacked_words(const Z4Code& c);
OaArray to_array(const Z4Code& c);

}  // namespace z4oa
