// Shadow decomposition and neighbor constructions for singly even self-dual codes.
#pragma once

#include <utility>

#include "sdcodes/codes.hpp"
#include "sdcodes/weights.hpp"

namespace sdc {

/// C0^perp = C0 u C1 u C2 u C3 with C = C0 u C2 and shadow S = C1 u C3.
/// Representatives are canonical: reduced modulo C0 (zero on C0's pivots).
struct ShadowDecomposition {
    Code c0;
    BitWord t1;
    BitWord t2;
    BitWord t3;
};

/// Codewords of weight 0 mod 4. Throws DomainError when the input is not an
/// even self-orthogonal code, or when it is already doubly even.
Code even_subcode(const Code& c);

/// Requires a singly even self-dual code. C1 and C3 are ordered so that
/// t1 < t3 lexicographically.
ShadowDecomposition shadow_decompose(const Code& c);

/// Shadow weight distribution by enumerating S = t1 + C (k <= cap).
WeightDistribution shadow_distribution_bruteforce(const Code& c, std::size_t cap = kDefaultBruteForceCap);

/// C0 u C1 and C0 u C3, ordered by lexicographically smaller standard form.
/// Requires a singly even self-dual code with 8 | n.
std::pair<Code, Code> doubly_even_neighbors(const Code& c);

/// The code spanned by {c in C : c.x = 0} and x. Returns C unchanged when x is
/// already a codeword. Throws DomainError for odd-weight x or a length mismatch.
Code neighbor_via_vector(const Code& c, const BitWord& x);

/// dim(C n C') == n/2 - 1.
bool is_neighbor(const Code& a, const Code& b);

std::size_t intersection_dimension(const Code& a, const Code& b);

}  // namespace sdc
