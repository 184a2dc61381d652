// The explicit graded free resolution of the semigroup algebra: free
// module bases indexed by exterior/symmetric data, the differential
// matrices, the shift of every basis element, and structural verifiers.
//
// Conventions fixed here (matrices are reproducible bit for bit):
//   - level-j basis: all (subset, u1) with subset a strictly increasing
//     (j+1)-subset of {1..n}, ordered subset-lex ascending, then u1
//     descending from j-1 to 0 (u2 = j-1-u1);
//   - signs follow the literal alternating expansion, so a displayed
//     matrix from another source may differ by a per-row/column sign
//     and a basis permutation (compare with signed_permutation_equal).
#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "repunit/polynomial.hpp"
#include "repunit/semigroup.hpp"
#include "repunit/types.hpp"

namespace repunit {

/// Basis vector of the level-j free module: e_{i_1} ^ ... ^ e_{i_{j+1}}
/// tensor y1^u1 y2^u2 with u1 + u2 = j - 1 (u1 = u2 = 0 at level 1).
struct ENBasisElement {
    std::vector<int> indices;  // strictly increasing, 1-based, size j+1
    std::int64_t u1 = 0;
    std::int64_t u2 = 0;

    bool operator==(const ENBasisElement& other) const = default;
};

/// S-shift of a basis element: (u1 + 1) * c + sum_l a_{i_l + 1}, using
/// the extended generator for i_l = n. Positive for every valid
/// semigroup, which is asserted where shifts are collected.
Int basis_shift(const ENBasisElement& e, const RepunitSemigroup& s);

/// Rank of the level-j free module: j * C(n, j+1). Throws ParamError
/// for j outside [1, n-1].
Int betti_number(int n, int j);

/// Ordered basis of level j (see the ordering convention above).
std::vector<ENBasisElement> en_basis(const RepunitSemigroup& s, int j);

/// Shift multiset of level j, collected from the basis elements.
std::multiset<Int> level_shifts(const RepunitSemigroup& s, int j);

/// The same multiset by the direct enumeration
///   { k*c + a_{i_1} + ... + a_{i_{j+1}} : 1 <= k <= j,
///     1 < i_1 < ... < i_{j+1} <= n+1 }.
/// Kept as an independent code path from level_shifts.
std::multiset<Int> level_shifts_direct(const RepunitSemigroup& s, int j);

/// The 2 x n matrix whose maximal minors generate the toric ideal:
/// row 1 = (x_1^b, ..., x_n^b), row 2 = (x_2, ..., x_n, x_1^(a+1)).
/// The single place where these entries are defined.
PolyMatrix matrix_x(const RepunitSemigroup& s);

/// First differential as a 1 x beta_1 matrix; the column of pair
/// (i, k) holds the minor x_{1i} x_{2k} - x_{2i} x_{1k}.
PolyMatrix d1_matrix(const RepunitSemigroup& s);

/// Level-j differential, j in [2, n-1]: the column of (indices, u1, u2)
/// has, for each k with u_k > 0 and each position l, the entry
/// (-1)^(l+1) x_{k i_l} in the row of (indices \ {i_l}, u - e_k).
PolyMatrix dj_matrix(const RepunitSemigroup& s, int j);

/// The minimal generators of the toric ideal: the d1 entries. Verifies
/// each is a binomial with +-1 coefficients whose two monomials share
/// one S-degree; throws CheckError otherwise.
std::vector<SparsePolynomial> toric_minors(const RepunitSemigroup& s);

struct ResolutionLevel {
    int j = 0;
    std::vector<ENBasisElement> basis;
    std::vector<Int> shifts;  // parallel to basis (= matrix columns)
    PolyMatrix delta;         // beta_{j-1} x beta_j; level 1 is 1 x beta_1
};

/// The full chain delta_1, ..., delta_{n-1} with bases and shifts.
struct GradedComplex {
    RepunitSemigroup semigroup;
    std::vector<ResolutionLevel> levels;  // levels[i] has j = i+1
};

GradedComplex build_resolution(const RepunitSemigroup& s);

/// Checks delta_{j-1} * delta_j == 0 exactly for all consecutive pairs
/// (including delta_1 * delta_2). Vacuous for n = 2.
CheckReport verify_complex(const GradedComplex& gc);

/// Checks every nonzero entry at (r, q) of delta_j is S-homogeneous of
/// degree shift_j[q] - shift_{j-1}[r] (level-0 shift is 0).
CheckReport verify_homogeneity(const GradedComplex& gc);

/// Checks no differential entry has a nonzero constant term.
CheckReport verify_minimality(const GradedComplex& gc);

/// Shift multisets per homological level, from a built complex.
using BettiTable = std::map<int, std::multiset<Int>>;
BettiTable betti_table(const GradedComplex& gc);

/// Test-support mutations: each kind breaks exactly the property its
/// verifier is supposed to notice.
enum class FaultKind {
    sign,      // flip one sign in a differential entry
    constant,  // add 1 to a differential entry
    shift,     // perturb one shift by 1
    zero,      // zero out one whole differential
    claim,     // raise CheckError immediately
};

FaultKind parse_fault_kind(const std::string& name);
void inject_fault(GradedComplex& gc, FaultKind kind);

/// True iff b can be turned into a by permuting rows/columns and
/// flipping per-row/per-column signs. Cost is factorial in the
/// dimensions; intended for the small displayed matrices.
bool signed_permutation_equal(const PolyMatrix& a, const PolyMatrix& b);

/// Simultaneous version for a consecutive pair: one row permutation and
/// sign vector is shared between d1's columns and d2's rows, so the
/// pair is equivalent as a complex, not just entrywise.
bool signed_permutation_equal_pair(const PolyMatrix& d1a, const PolyMatrix& d2a,
                                   const PolyMatrix& d1b, const PolyMatrix& d2b);

}  // namespace repunit
