#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "z4oa/common.hpp"
#include "z4oa/gray.hpp"
#include "z4oa/oa.hpp"
#include "z4oa/ring.hpp"
#include "z4oa/z4.hpp"

namespace z4oa {

using BigInt = boost::multiprecision::cpp_int;

enum class Metric { hamming, lee };

// Coefficient vector with a common denominator: entry i is
// coefficients[i] / scale.  Weight enumerators use scale 1; distance
// enumerators store N*B_i with scale N.  All arithmetic is exact.
struct Enumerator {
    std::vector<BigInt> coefficients;
    BigInt scale = 1;

    int max_index() const { return static_cast<int>(coefficients.size()) - 1; }
    BigInt total() const;          // sum of coefficients (unscaled)
    Enumerator normalized() const; // divide everything by the common gcd
};

// Value-level equality (compares the rationals, not the raw storage).
bool enumerators_equal(const Enumerator& a, const Enumerator& b);

std::string enumerator_to_string(const Enumerator& e);

BigInt binomial(int n, int k);

// K_k(x; n, q) = sum_j (-1)^j (q-1)^{k-j} C(x, j) C(n-x, k-j).
BigInt krawtchouk(int k, int x, int n, int q);

// Coefficient i = #{w : w_H(w) = i}, scale 1.
Enumerator hamming_weight_enumerator(const std::vector<Word>& words, int n);
Enumerator hamming_weight_enumerator(const Z4Code& c);
Enumerator hamming_weight_enumerator(const BinaryCode& c);
Enumerator hamming_weight_enumerator(const RingCode& c);

// Coefficient i = #{w in C : w_L(w) = i}, 0 <= i <= 2n; cross-checked against
// the Hamming enumerator of the Gray image.
Enumerator lee_weight_enumerator(const Z4Code& c);

// Average distance distribution B_i = (1/N) #{ordered (u,v) : d(u,v) = i},
// stored as N*B_i with scale N.
Enumerator distance_enumerator(const std::vector<Word>& words, int n,
                               Metric metric = Metric::hamming);
Enumerator distance_enumerator(const BinaryCode& c);
Enumerator distance_enumerator(const Z4Code& c, Metric metric);
Enumerator distance_enumerator(const OaArray& a, Metric metric = Metric::hamming);

// B'_k = (1/N) sum_i B_i K_k(i; n, q), exact; result is gcd-normalized.
Enumerator macwilliams_transform(const Enumerator& b, int n, int q,
                                 const BigInt& n_words);

// True iff every codeword sees the same multiset of distances to the code.
bool is_distance_invariant(const std::vector<Word>& words, int n, Metric metric);
bool is_distance_invariant(const BinaryCode& c);
bool is_distance_invariant(const Z4Code& c, Metric metric);

// Smallest k >= 1 with a non-vanishing MacWilliams-transform coefficient;
// m+1 when all of B'_1..B'_m vanish.  Requires distance invariance.
int dual_distance(const BinaryCode& c);

// Verifies LWE_{C_dual}(x, y) = (1/|C|) LWE_C(x+y, x-y) by full expansion of
// both sides as homogeneous degree-2n polynomials.
bool check_lee_macwilliams(const Z4Code& c, std::string* detail = nullptr);

}  // namespace z4oa
