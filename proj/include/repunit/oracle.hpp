// Brute-force cross-checks that share no code path with the resolution
// builder: squarefree divisor complexes and their reduced homology over
// a small prime field, a truncated Hilbert series identity, and generic
// rank tests for the differentials.
#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "repunit/complex.hpp"
#include "repunit/semigroup.hpp"
#include "repunit/types.hpp"

namespace repunit {

/// Abstract simplicial complex on vertices {1..nverts}, faces stored as
/// bitmasks (bit i-1 = vertex i). Mask 0 is the empty face; a complex
/// with no faces at all (not even the empty one) is the void complex.
struct SimplicialComplex {
    int nverts = 0;
    std::set<std::uint32_t> faces;

    bool is_void() const { return faces.empty(); }
};

/// The squarefree divisor complex of s: faces are the subsets F of the
/// generator indices with s - sum_{i in F} a_i still in the semigroup.
/// Void when s itself is not in the semigroup.
SimplicialComplex divisor_complex(const RepunitSemigroup& s, const Int& degree);

/// Dimensions of the reduced homology over F_prime, indexed d+1 for
/// d = -1 .. nverts-1. The void complex has zero homology everywhere;
/// the complex {empty face} has one dimension in degree -1.
std::vector<int> reduced_homology_dims(const SimplicialComplex& complex,
                                       std::uint32_t prime);

/// Graded Betti numbers beta_{j,s} for j = 1..max_level and s up to
/// bound, computed as dim H~_{j-1}(divisor complex of s) over F_prime.
/// Returned in the same shape as betti_table(): degree s appears in
/// level j with multiplicity beta_{j,s}.
BettiTable graded_betti_oracle(const RepunitSemigroup& s, int max_level,
                               const Int& bound, std::uint32_t prime);

/// Largest shift appearing anywhere in the complex.
Int max_claimed_shift(const GradedComplex& gc);

/// Compares the claimed shift multisets against graded_betti_oracle,
/// scanning to max claimed shift + margin. Any homology the oracle
/// finds beyond a level's claimed shifts fails the check.
CheckReport betti_oracle_check(const GradedComplex& gc, const Int& margin,
                               std::uint32_t prime);

/// Checks the alternating sum of t^shift over all levels (level 0
/// contributes t^0), divided by prod_i (1 - t^{a_i}) as a power series,
/// reproduces the semigroup's membership indicator up to frobenius +
/// max shift + 1.
CheckReport hilbert_check(const RepunitSemigroup& s, const GradedComplex& gc);

/// Evaluates every differential at random points of F_prime^n with all
/// coordinates nonzero and takes the max rank over the trials. Passes
/// when rank delta_1 = 1 and rank delta_j + rank delta_{j+1} = beta_j
/// for every level (delta_n = 0), the rank criterion for exactness of
/// a finite free complex.
CheckReport generic_rank_check(const GradedComplex& gc, std::uint32_t prime,
                               int trials, std::uint64_t seed);

/// Rank of a dense matrix over F_prime (row echelon form).
std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> m,
                       std::uint32_t prime);

}  // namespace repunit
