#pragma once

#include <optional>
#include <string>
#include <vector>

#include "z4oa/common.hpp"
#include "z4oa/oa.hpp"

namespace z4oa {

// Duals and code enumerations scan the ambient module R^n; reject beyond this.
inline constexpr std::uint64_t kMaxAmbientScan = 100'000'000ull;
// Exhaustive coefficient scans (linear independence) are capped separately.
inline constexpr std::uint64_t kMaxCoefficientScan = 10'000'000ull;

// A finite commutative ring with identity, as explicit element tables.
// Element ids are 0..size-1 in a canonical order fixed by the constructor:
// residues for Z_n, lexicographic pairs for products, (x, y) lexicographic
// for R8 where id (x, y) encodes x + y*a.
struct FiniteRing {
    std::string name;
    int size = 0;
    std::vector<Symbol> add_table;  // size*size, row-major
    std::vector<Symbol> mul_table;
    std::vector<Symbol> neg_table;  // additive inverses
    Symbol zero = 0;
    Symbol one = 0;
    std::vector<std::string> element_names;

    Symbol add(Symbol a, Symbol b) const {
        return add_table[static_cast<std::size_t>(a) * size + b];
    }
    Symbol mul(Symbol a, Symbol b) const {
        return mul_table[static_cast<std::size_t>(a) * size + b];
    }
    Symbol neg(Symbol a) const { return neg_table[a]; }
    bool same_as(const FiniteRing& o) const {
        return size == o.size && zero == o.zero && one == o.one &&
               add_table == o.add_table && mul_table == o.mul_table;
    }
};

FiniteRing make_zn(int n);                                          // 2 <= n <= 16
FiniteRing make_product(const FiniteRing& r1, const FiniteRing& r2);  // |R1||R2| <= 64
// Z4 extended by an element a with 2a = a^2 = 0; eight elements.
FiniteRing make_r8();

// Exhaustively checks the ring axioms; throws std::logic_error on violation.
void validate_ring(const FiniteRing& r);

struct Ideal {
    std::vector<Symbol> members;  // sorted
};

bool is_ideal(const FiniteRing& r, const std::vector<Symbol>& members);
Ideal principal_ideal(const FiniteRing& r, Symbol a);

// All ideals of R: principal ideals closed under pairwise sums.
// Sorted by size, then lexicographically by members.
std::vector<Ideal> enumerate_ideals(const FiniteRing& r);

// {r in R : r*x = 0 for all x in I}. Requires I to be an ideal.
Ideal annihilator(const FiniteRing& r, const Ideal& ideal);

struct PropertyPlusResult {
    bool holds = false;
    std::optional<Ideal> violating;  // proper ideal with zero annihilator
};

// Every proper ideal has a non-zero annihilator.
PropertyPlusResult has_property_plus(const FiniteRing& r);

using RingMatrix = std::vector<Word>;  // rows of equal length

// No non-trivial coefficient vector c with A*c = 0 (exhaustive over R^t).
bool columns_independent(const FiniteRing& r, const RingMatrix& a);

// A submodule of R^n given by generators, with its full enumeration.
// Words are packed base-|R| with coordinate 0 most significant, sorted.
struct RingCode {
    FiniteRing ring;
    int n = 0;
    std::vector<Word> generators;
    std::vector<PackedWord> words;
};

RingCode row_space(const FiniteRing& r, const RingMatrix& a);
RingCode ring_code_from_generators(const FiniteRing& r, int n,
                                   const std::vector<Word>& gens);

// |row_space(A)| = |R|^t for an independent-column A. Dependent columns are
// a precondition violation (std::invalid_argument), not a property failure.
bool check_property_star(const FiniteRing& r, const RingMatrix& a);

// All x in R^n orthogonal to every codeword; exhaustive scan over R^n.
RingCode dual_code(const RingCode& c);

// Greedy generating set for a submodule given as sorted packed words,
// deterministic: scans ascending, keeps words outside the running span.
std::vector<Word> generating_set(const FiniteRing& r, int n,
                                 const std::vector<PackedWord>& words);

// Minimum Hamming weight over non-zero codewords; n+1 for the zero code.
int min_hamming_weight(const RingCode& c);

std::vector<Word> unpacked_words(const RingCode& c);
OaArray to_array(const RingCode& c);

}  // namespace z4oa
