#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "z4oa/enumerators.hpp"
#include "z4oa/gray.hpp"
#include "z4oa/oa.hpp"
#include "z4oa/ring.hpp"
#include "z4oa/z4.hpp"

namespace z4oa {

enum class Verdict { pass, fail, hypothesis_not_met };

std::string verdict_name(Verdict v);

// One verified identity on one instance.  `lhs`/`rhs` are the two sides of
// the identity (for corollary_bounds: t and t'); `detail` carries the
// witness or cross-check trail.
struct TheoremReport {
    std::string theorem;
    std::string instance;
    long long lhs = 0;
    long long rhs = 0;
    Verdict verdict = Verdict::fail;
    std::string detail;
};

// Str(C) = w_H(C_dual) - 1 over a finite commutative ring with property (+).
TheoremReport verify_delsarte_ring(const RingCode& c);

// Str(C') = w_L(C_dual) - 1 for the Gray image C' of a Z4 code; also
// cross-checks the MacWilliams route dual_distance(C') - 1.
TheoremReport verify_gray_strength(const Z4Code& c);

// t <= Str(C') <= 2t+1 for t = Str(C), plus the underlying chain
// t+1 <= w_L(C_dual) <= 2t+2.
TheoremReport verify_corollary_bounds(const Z4Code& c);

// |C_dual| = |R|^n / |C|, contingent on |ann(I)| = |R|/|I| for every ideal.
// When the ring hypothesis fails the verdict is hypothesis_not_met and the
// detail records whether the size identity happens to fail for this code.
TheoremReport verify_dual_size(const RingCode& c);

// Lee MacWilliams identity as a theorem report (wraps check_lee_macwilliams).
TheoremReport verify_lee_macwilliams(const Z4Code& c);

// --- sweeps -----------------------------------------------------------------

struct SweepResult {
    std::uint64_t codes_checked = 0;
    std::vector<TheoremReport> reports;  // non-pass reports only

    int failures() const;  // verdict == fail (hypothesis_not_met excluded)
};

// Every distinct code spanned by at most gen_max generators in R^n, n up to
// n_max, run through all applicable verifiers.
SweepResult exhaustive_small_sweep(const FiniteRing& r, int n_max, int gen_max);

// Every submodule of R^n: cyclic modules closed under pairwise sums.
std::vector<std::vector<PackedWord>> enumerate_all_codes(const FiniteRing& r,
                                                         int n);
SweepResult sweep_all_codes(const FiniteRing& r, int n_max);

// `count` random standard-form Z4 codes with 1 <= n <= n_max, deterministic
// in seed, run through the Gray-strength and corollary verifiers.
SweepResult random_z4_sweep(int count, int n_max, std::uint64_t seed);

// --- strength-pair search -----------------------------------------------------

struct PairWitness {
    int n = 0, k1 = 0, k2 = 0;
    std::uint64_t seed = 0;  // 0 for exhaustively enumerated witnesses
    std::vector<Word> generators;
    int t = 0, t_prime = 0;
};

struct PairTable {
    int n_max = 0;
    int samples_per_shape = 0;
    std::uint64_t seed = 0;
    int exhaustive_n = 0;
    std::uint64_t codes_examined = 0;
    std::map<std::pair<int, int>, PairWitness> pairs;
    std::vector<std::string> bound_violations;  // expected empty
};

// Iterates standard-form shapes (n, k1, k2) in ascending order: first every
// matrix exhaustively for n <= exhaustive_n (smallest-n witnesses), then
// samples_per_shape seeded draws per shape up to n_max.  Records the first
// witness per (Str(C), Str(C')) pair.
PairTable search_pairs(int n_max, int samples_per_shape, std::uint64_t seed,
                       int exhaustive_n = 0);

// Rebuilds the witness code from its generators and recomputes both strengths.
bool revalidate(const PairWitness& w);

// --- Z4 <-> generic-ring bridging ---------------------------------------------

bool is_z4(const FiniteRing& r);
Z4Code to_z4_code(const RingCode& c);           // requires is_z4(c.ring)
RingCode to_ring_code(const Z4Code& c);

std::string describe_ring_code(const RingCode& c);
std::string describe_z4_code(const Z4Code& c);

}  // namespace z4oa
